# %% [markdown]
# # Reading a transliterated corpus
#
# Words are separated by `:` and texts by a `XXXX` sentinel line.  The bundled
# rule table splits common bound morphemes into their own tokens.

# %%
from distsim import apply_rules, load_rule_table, parse_corpus
from distsim.data import toy_corpus_path

raw = "amnp:telowi:qor:XXXX:mk:lebkwi:atomhe:abr"
corpus = parse_corpus(raw)
print(corpus.surface_texts())

# %%
rules = load_rule_table()
for rule in rules.rules:
    print(f"{rule.match:>8} -> {' + '.join(rule.replacement)}")

# %%
split = apply_rules(corpus, rules)
print(split.surface_texts())

# %% [markdown]
# Generic suffix stripping is off by default.  With it on, unlisted compounds
# lose any of the declared morphemes from their right edge.

# %%
print(apply_rules(parse_corpus("amnptelo:sebli"), rules, strip_suffixes=True).surface_texts())

# %%
toy = apply_rules(parse_corpus(toy_corpus_path().read_text()), rules)
print(len(toy), "texts,", toy.n_words, "words,", len(toy.vocab), "distinct")

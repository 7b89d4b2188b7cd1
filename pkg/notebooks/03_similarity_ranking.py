# %% [markdown]
# # Ranking similar word pairs
#
# The toy corpus plants two words, `kdi` and `abr`, in identical contexts.
# Their association profiles match exactly, so their similarity is 1.

# %%
from distsim import (apply_rules, blend, load_lexicon, load_rule_table, mutual_information,
                     pair_frequencies, parse_corpus, rank_pairs, similarity, word_frequencies)
from distsim.data import toy_corpus_path
from distsim.similarity import format_report_tsv

corpus = apply_rules(parse_corpus(toy_corpus_path().read_text()), load_rule_table())
freq = word_frequencies(corpus)
m1 = mutual_information(freq, pair_frequencies(corpus, 1))
m2 = mutual_information(freq, pair_frequencies(corpus, 2))
blended = blend(m1, m2, 0.75)
print(similarity(blended, "kdi", "abr"), similarity(blended, "mk", "seb"))

# %%
records = rank_pairs(blended, freq, min_count=3, cutoff=0.95, lexicon=load_lexicon())
print(format_report_tsv(records))

# %% [markdown]
# Lowering the cutoff shows the rest of the distribution.

# %%
for r in rank_pairs(blended, freq, cutoff=0.0)[:8]:
    print(f"{r.word1:>8} {r.word2:<8} {r.s:.3f}")

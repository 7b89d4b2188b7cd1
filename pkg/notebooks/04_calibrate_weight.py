# %% [markdown]
# # Choosing the distance-2 weight from anchor pairs
#
# Given word pairs believed to mean similar things, each candidate weight is
# scored by the mean similarity of those pairs.

# %%
from distsim import (apply_rules, calibrate, load_anchors, load_rule_table, pair_frequencies,
                     parse_corpus, word_frequencies)
from distsim.data import toy_anchors_path, toy_corpus_path
from distsim.similarity import parse_grid

corpus = apply_rules(parse_corpus(toy_corpus_path().read_text()), load_rule_table())
freq = word_frequencies(corpus)
d1, d2 = pair_frequencies(corpus, 1), pair_frequencies(corpus, 2)
anchors = load_anchors(toy_anchors_path())
print(anchors.pairs)

# %%
report = calibrate(freq, d1, d2, anchors, parse_grid("0:1:0.1"))
for w, score in report.grid:
    print(f"{w:.1f} {'#' * int(40 * score)} {score:.3f}")
print("chosen:", report.chosen_w)

# %% [markdown]
# The rank-based objective rewards weights that push anchors towards the
# top of the full ranking instead.

# %%
print(calibrate(freq, d1, d2, anchors, parse_grid("0:1:0.25"), objective="mean-rank").grid)

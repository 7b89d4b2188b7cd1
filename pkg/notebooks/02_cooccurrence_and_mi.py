# %% [markdown]
# # Co-occurrence tables and mutual information
#
# Distance-1 pairs are neighbours, distance-2 pairs skip one word.  Both are
# pooled as unordered pairs and never cross a text boundary.

# %%
from distsim import (blend, mutual_information, pair_frequencies, parse_corpus,
                     word_frequencies)

corpus = parse_corpus("a:b:a:b")
freq = word_frequencies(corpus)
d1 = pair_frequencies(corpus, 1)
d2 = pair_frequencies(corpus, 2)
print("p(a) =", freq.p("a"), " q1{a,b} =", d1.q("a", "b"), " q2{a,a} =", d2.q("a", "a"))

# %%
m1 = mutual_information(freq, d1)
m2 = mutual_information(freq, d2)
print("I1(a,b) =", m1.get("a", "b"), "bits")
print("I2(a,a) =", m2.get("a", "a"), "bits")

# %% [markdown]
# The blended value is `sqrt(I1**2 + (w * I2)**2)`; `w = 0` keeps only the
# distance-1 information.

# %%
for w in (0.0, 0.5, 0.75, 1.0):
    b = blend(m1, m2, w)
    print(w, round(b.get("a", "b"), 4), round(b.get("a", "a"), 4))

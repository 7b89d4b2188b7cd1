# %% [markdown]
# # Rank-frequency check
#
# Word frequencies in natural text fall off roughly as `C / rank**alpha`.
# A straight-line fit in log-log space recovers both constants.

# %%
import numpy as np

from distsim import fit_zipf, parse_corpus, rank_frequency, word_frequencies
from distsim.data import toy_corpus_path

ranks = np.arange(1, 201)
print(fit_zipf(list(zip(ranks, 0.1 / ranks))))

# %%
rng = np.random.default_rng(0)
noisy = 0.1 / ranks ** 1.2 * np.exp(0.2 * rng.standard_normal(ranks.size))
print(fit_zipf(list(zip(ranks, noisy))))

# %%
freq = word_frequencies(parse_corpus(toy_corpus_path().read_text()))
ranked = rank_frequency(freq)
print(ranked[:5])
print("all ranks:", fit_zipf(ranked))
print("top 10:   ", fit_zipf(ranked, max_rank=10))

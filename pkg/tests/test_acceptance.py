"""Exit criteria for the package, one test per criterion.

Run ``pytest tests/test_acceptance.py -rA`` to see the per-criterion
PASS/FAIL summary at the end of the session.
"""
import math
import random
import statistics
import time

import numpy as np
import pytest

from distsim.cooccur import pair_frequencies, word_frequencies
from distsim.corpus import Corpus, apply_rules, load_rule_table, read_corpus
from distsim.graph import gower_distance, minimum_spanning_tree
from distsim.infotheory import blend_values, mutual_information
from distsim.pipeline import PipelineConfig, resolve_config, run_pipeline
from distsim.similarity import REPORT_COLUMNS, calibrate, rank_pairs, similarity
from distsim.zipf import fit_zipf

from conftest import DATA, FIXTURES
import oracle
from test_graph import random_connected, spanning_trees
from test_pipeline import data_rows, snapshot
from test_similarity import corpus_tables, counts_for, random_matrix

criterion = pytest.mark.criterion


@criterion("Bound-morpheme table fidelity")
def test_morpheme_table_fidelity():
    c = apply_rules(read_corpus([FIXTURES / "morpheme_words.txt"]), load_rule_table())
    assert c.surface_texts() == [
        ["qo", "lw", "ato", "mhe", "lo", "te", "lo", "wi", "te", "li", "qo", "wi"],
        ["lo", "wi", "at", "mhe", "lebk", "wi", "li"],
    ]


@criterion("Per-pair MI oracle (100 random corpora)")
def test_mi_oracle():
    rng = random.Random(2)
    start = time.perf_counter()
    checked = 0
    for _ in range(100):
        n_texts = rng.randint(1, 4)
        sizes = [rng.randint(3, 50 // n_texts) for _ in range(n_texts)]
        ts = [[rng.choice("abcdefghij") for _ in range(k)] for k in sizes]
        assert sum(sizes) <= 50
        c = Corpus.from_surfaces(ts)
        f = word_frequencies(c)
        for d in (1, 2):
            m = mutual_information(f, pair_frequencies(c, d))
            expect = oracle.mi(ts, d)
            got = {(c.vocab.surface(i), c.vocab.surface(j)): v for (i, j), v in m.values.items()}
            assert got.keys() == expect.keys()
            for k, e in expect.items():
                assert math.isclose(got[k], e, rel_tol=1e-12, abs_tol=0.0)
                checked += 1
    assert time.perf_counter() - start < 5.0
    assert checked > 0


@criterion("Blend analytic cases")
def test_blend_analytic():
    assert blend_values(3.0, 4.0, 1.0) == 5.0
    rng = random.Random(3)
    for _ in range(1000):
        x = rng.uniform(-10, 10)
        assert blend_values(x, rng.uniform(-10, 10), 0.0) == abs(x)
    for _ in range(1000):
        i1 = rng.uniform(-5, 5)
        i2 = rng.choice([-1, 1]) * rng.uniform(0.05, 5)
        w1, w2 = sorted(rng.uniform(0, 1) for _ in range(2))
        if w2 - w1 < 1e-6:
            w2 = min(1.0, w1 + 1e-3)
        assert blend_values(i1, i2, w1) < blend_values(i1, i2, w2)


@criterion("Similarity properties (symmetry, range, identity, scale)")
def test_similarity_properties():
    rng = random.Random(4)
    for _ in range(100):
        m, a, words = random_matrix(rng)
        for i, x in enumerate(words):
            for j, y in enumerate(words):
                if i >= j:
                    continue
                s = similarity(m, x, y)
                assert s == similarity(m, y, x)
                assert 0.0 <= s <= 1.0
                mask = np.ones(len(words), bool)
                mask[[i, j]] = False
                support = (a[i, mask] != 0) | (a[j, mask] != 0)
                identical = support.any() and np.array_equal(a[i, mask], a[j, mask])
                assert (s == 1.0) == identical
    for c in (0.5, 2.0, 10.0):
        for seed in range(20):
            r = random.Random(seed)
            m, _, words = random_matrix(r)
            freq = counts_for(words, r)
            base = rank_pairs(m, freq, 1, 0.0)
            scaled = rank_pairs(m.scaled(c), freq, 1, 0.0)
            assert [(p.word1, p.word2) for p in base] == [(p.word1, p.word2) for p in scaled]
            assert all(math.isclose(p.s, q.s, rel_tol=1e-12, abs_tol=1e-15)
                       for p, q in zip(base, scaled))


@criterion("Ranked-output oracle (dense brute force, vocab <= 20)")
def test_ranked_output_oracle():
    rng = random.Random(5)
    for _ in range(100):
        m, a, words = random_matrix(rng, n=rng.randint(3, 20))
        freq = counts_for(words, rng)
        counts = dict(zip(freq.vocab, freq.counts))
        for min_count, cutoff in ((1, 0.0), (3, 0.95), (2, 0.5)):
            got = [(r.word1, r.word2, r.s) for r in rank_pairs(m, freq, min_count, cutoff)]
            assert got == oracle.dense_rank(a, words, counts, min_count, cutoff)


@criterion("Defaults check (W, cutoff, min-count, report columns)")
def test_defaults():
    cfg = resolve_config(environ={})
    assert (cfg.weight, cfg.cutoff, cfg.min_count) == (0.75, 0.95, 3)
    assert REPORT_COLUMNS == ("rank", "word1", "word2", "gloss1", "gloss2",
                              "similarity", "count1", "count2")


@criterion("Gower distance and MST (exhaustive spanning trees)")
def test_gower_and_mst():
    assert gower_distance(1.0) == 0.0
    assert abs(gower_distance(0.98) - 0.2) <= 1e-12
    for seed in range(50):
        rng = random.Random(1000 + seed)
        nodes, recs = random_connected(rng, rng.randint(2, 6))
        edges = [(r.word1, r.word2, gower_distance(r.s)) for r in recs]
        best = min(math.fsum(d for *_, d in t) for t in spanning_trees(sorted(nodes), edges))
        assert minimum_spanning_tree(recs).total_weight == best


@criterion("Zipf fit (exact and 20% noise data)")
def test_zipf_fit():
    z = np.arange(1, 101)
    for C in (0.1, 1.0):
        for alpha in (0.7, 1.0, 1.3):
            fit = fit_zipf(list(zip(z, C / z ** alpha)))
            assert abs(fit.alpha - alpha) <= 1e-9
            assert fit.r_squared >= 1 - 1e-12
    rng = np.random.default_rng(8)
    for alpha in (0.7, 1.0, 1.3):
        estimates = []
        for _ in range(100):
            noise = 1 + 0.2 * rng.uniform(-1, 1, z.size)
            estimates.append(fit_zipf(list(zip(z, 0.1 / z ** alpha * noise))).alpha)
        assert abs(statistics.median(estimates) - alpha) <= 0.05


@criterion("End-to-end determinism and planted pair at rank 1")
def test_end_to_end(tmp_path):
    dirs = []
    for name in ("first", "second"):
        cfg = PipelineConfig(corpus_paths=(str(DATA / "toy_corpus.txt"),),
                             output_dir=str(tmp_path / name),
                             anchors=str(DATA / "toy_anchors.tsv"))
        assert run_pipeline(cfg) == 0
        dirs.append(snapshot(tmp_path / name))
    assert dirs[0] == dirs[1]
    golden = data_rows(FIXTURES / "toy_golden_similarity.tsv")
    assert golden[1].split("\t")[:3] == ["1", "abr", "kdi"]
    assert data_rows(tmp_path / "first" / "similarity.tsv") == golden


@criterion("Calibration (interior peak at 0.5, single-point grid)")
def test_calibration():
    raw = (FIXTURES / "calibration_corpus.txt").read_text()
    tables = corpus_tables(raw)
    anchors = [("ba", "da")]
    grid = [0.0, 0.25, 0.5, 0.75, 1.0]
    exhaustive = [oracle.mean_anchor_similarity(raw, anchors, w) for w in grid]
    assert grid[int(np.argmax(exhaustive))] == 0.5
    assert calibrate(*tables, anchors, grid).chosen_w == 0.5
    assert calibrate(*tables, anchors, [0.75]).chosen_w == 0.75

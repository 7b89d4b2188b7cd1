import itertools
import math
import random

import pytest
from hypothesis import given, strategies as st

from distsim.errors import EmptyGraphError
from distsim.graph import (ForestWarning, export_graph, gower_distance,
                           minimum_spanning_tree)
from distsim.lexicon import Entry, Lexicon
from distsim.similarity import SimilarityRecord


def rec(a, b, s):
    a, b = sorted((a, b))
    return SimilarityRecord(a, b, s, 3, 3)


def with_distance(a, b, d):
    return rec(a, b, 1 - d * d / 2)


def spanning_trees(nodes, edges):
    """Every spanning tree of the graph, by brute force over edge subsets."""
    for subset in itertools.combinations(edges, len(nodes) - 1):
        adj = {n: [] for n in nodes}
        for a, b, _ in subset:
            adj[a].append(b)
            adj[b].append(a)
        seen, stack = {nodes[0]}, [nodes[0]]
        while stack:
            for m in adj[stack.pop()]:
                if m not in seen:
                    seen.add(m)
                    stack.append(m)
        if len(seen) == len(nodes):
            yield subset


def random_connected(rng, n):
    nodes = [f"n{k}" for k in range(n)]
    pairs = list(itertools.combinations(nodes, 2))
    order = nodes[:]
    rng.shuffle(order)
    chosen = {tuple(sorted((order[k], order[rng.randrange(k)]))) for k in range(1, n)}
    chosen |= {p for p in pairs if rng.random() < 0.5}
    records = [rec(a, b, rng.choice([rng.random(), 0.5, 0.25])) for a, b in sorted(chosen)]
    return nodes, records


class TestGower:
    def test_values(self):
        assert gower_distance(1.0) == 0.0
        assert gower_distance(0.98) == pytest.approx(0.2, abs=1e-12)
        assert gower_distance(0.0) == math.sqrt(2)

    @pytest.mark.parametrize("s", [-0.01, 1.01, math.nan])
    def test_domain(self, s):
        with pytest.raises(ValueError):
            gower_distance(s)

    @given(st.floats(0, 1), st.floats(0, 1))
    def test_strictly_decreasing(self, s, t):
        if t - s > 1e-12:
            assert gower_distance(s) > gower_distance(t)
        assert (gower_distance(s) == 0) == (s == 1)


class TestMST:
    def test_triangle(self):
        tree = minimum_spanning_tree([with_distance("a", "b", 1.0), with_distance("b", "c", 0.5),
                                      with_distance("a", "c", 0.75)])
        assert {(e.word1, e.word2) for e in tree.edges} == {("b", "c"), ("a", "c")}
        assert tree.total_weight == pytest.approx(1.25)

    def test_triangle_integer_distances(self):
        tree = minimum_spanning_tree([SimilarityRecord("a", "b", 0.5, 1, 1),
                                      SimilarityRecord("b", "c", 0.0, 1, 1),
                                      SimilarityRecord("a", "c", 1.0, 1, 1)])
        assert [e.d for e in tree.edges] == [0.0, 1.0]

    def test_star(self):
        recs = [rec("hub", w, s) for w, s in zip("abcd", [0.1, 0.9, 0.5, 0.3])]
        tree = minimum_spanning_tree(recs)
        assert len(tree.edges) == 4 and all("hub" in e[:2] for e in tree.edges)

    def test_tie_break(self):
        recs = [rec("a", "b", 0.5), rec("b", "c", 0.5), rec("a", "c", 0.5)]
        tree = minimum_spanning_tree(recs)
        assert [(e.word1, e.word2) for e in tree.edges] == [("a", "b"), ("a", "c")]

    def test_forest(self):
        with pytest.warns(ForestWarning):
            tree = minimum_spanning_tree([rec("a", "b", 1.0), rec("c", "d", 0.9)])
        assert tree.is_forest and tree.n_components == 2 and len(tree.edges) == 2

    def test_empty(self):
        with pytest.raises(EmptyGraphError):
            minimum_spanning_tree([])

    @pytest.mark.parametrize("seed", range(50))
    def test_exhaustive(self, seed):
        rng = random.Random(seed)
        nodes, recs = random_connected(rng, rng.randint(2, 6))
        edges = [(r.word1, r.word2, gower_distance(r.s)) for r in recs]
        tree = minimum_spanning_tree(recs)
        assert len(tree.edges) == len(nodes) - 1 and not tree.is_forest
        best = min(math.fsum(d for *_, d in t) for t in spanning_trees(sorted(nodes), edges))
        assert tree.total_weight == best

    @pytest.mark.parametrize("seed", range(10))
    def test_cut_property(self, seed):
        rng = random.Random(100 + seed)
        nodes, recs = random_connected(rng, 6)
        tree = minimum_spanning_tree(recs)
        tree_edges = {(e.word1, e.word2) for e in tree.edges}
        for removed in tree.edges:
            rest = [e for e in tree.edges if e != removed]
            for r in recs:
                if (r.word1, r.word2) in tree_edges:
                    continue
                candidate = rest + [(r.word1, r.word2, gower_distance(r.s))]
                if list(spanning_trees(sorted(nodes), candidate)):
                    assert math.fsum(e[2] for e in candidate) >= tree.total_weight

    def test_cayley_count(self):
        nodes = list("abcde")
        edges = [(a, b, 1.0) for a, b in itertools.combinations(nodes, 2)]
        assert len(list(spanning_trees(nodes, edges))) == 5 ** 3


class TestExport:
    lex = Lexicon({"kdi": Entry("woman", "known"), "abr": Entry("man", "known")})

    def test_two_nodes(self):
        tree = minimum_spanning_tree([rec("kdi", "abr", 1.0)])
        out = export_graph(tree, self.lex)
        assert out == ('graph mst {\n'
                       '  "abr" [label="abr (man)"];\n'
                       '  "kdi" [label="kdi (woman)"];\n'
                       '  "abr" -- "kdi" [label="0.000", len="0.000000"];\n'
                       '}\n')

    def test_deterministic(self):
        recs = random_connected(random.Random(1), 6)[1]
        assert export_graph(minimum_spanning_tree(recs)) == \
            export_graph(minimum_spanning_tree(list(reversed(recs))))

    def test_tsv(self):
        tree = minimum_spanning_tree([rec("a", "b", 0.98)])
        assert export_graph(tree, fmt="tsv") == "word1\tword2\tdistance\na\tb\t0.200000\n"

    def test_quoting(self):
        tree = minimum_spanning_tree([rec('a"b', "c", 1.0)])
        assert '"a\\"b"' in export_graph(tree)

"""Similarity-to-distance conversion and minimum spanning trees."""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import EmptyGraphError
from .lexicon import Lexicon


def gower_distance(s: float) -> float:
    """Metric distance ``sqrt(2 (1 - s))`` for a similarity ``s`` in [0, 1]."""
    if not 0.0 <= s <= 1.0:
        raise ValueError(f"similarity must lie in [0, 1], got {s}")
    return math.sqrt(2.0 * (1.0 - s))


class DistanceEdge(NamedTuple):
    word1: str
    word2: str
    d: float


class _DisjointSet:
    def __init__(self, items: Iterable):
        self.parent = {x: x for x in items}
        self.rank = dict.fromkeys(self.parent, 0)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


class ForestWarning(UserWarning):
    """The similarity graph is disconnected; a spanning forest was built."""


@dataclass(frozen=True)
class SpanningTree:
    nodes: tuple[str, ...]
    edges: tuple[DistanceEdge, ...]
    n_components: int = 1

    @property
    def is_forest(self) -> bool:
        return self.n_components > 1

    @property
    def total_weight(self) -> float:
        return math.fsum(e.d for e in self.edges)


def minimum_spanning_tree(records: Sequence) -> SpanningTree:
    """Kruskal's algorithm over the Gower distances of ranked word pairs.

    ``records`` need ``word1``, ``word2`` and ``s`` attributes.  Equal
    distances are broken by the lexicographic word pair.  A disconnected
    input produces a spanning forest and a :class:`ForestWarning`.
    """
    if not records:
        raise EmptyGraphError("no similarity records to build a tree from")
    best: dict[tuple[str, str], float] = {}
    for r in records:
        a, b = (r.word1, r.word2) if r.word1 < r.word2 else (r.word2, r.word1)
        if a == b:
            continue
        d = gower_distance(min(max(r.s, 0.0), 1.0))
        if d < best.get((a, b), math.inf):
            best[(a, b)] = d
    nodes = sorted({w for pair in best for w in pair})
    if not nodes:
        raise EmptyGraphError("records contain no distinct word pairs")
    dsu = _DisjointSet(nodes)
    edges = []
    for (a, b), d in sorted(best.items(), key=lambda kv: (kv[1], kv[0])):
        if dsu.union(a, b):
            edges.append(DistanceEdge(a, b, d))
            if len(edges) == len(nodes) - 1:
                break
    components = len(nodes) - len(edges)
    if components > 1:
        warnings.warn(f"similarity graph has {components} components; "
                      "returning a spanning forest", ForestWarning, stacklevel=2)
    return SpanningTree(tuple(nodes), tuple(edges), components)


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _label(word: str, lexicon: Lexicon | None) -> str:
    if lexicon is not None and word in lexicon:
        return f"{word} ({lexicon.gloss(word)})"
    return word


def export_dot(tree: SpanningTree, lexicon: Lexicon | None = None, name: str = "mst") -> str:
    lines = [f"graph {name} {{"]
    if tree.is_forest:
        lines.append(f"  // spanning forest: {tree.n_components} components")
    for w in tree.nodes:
        lines.append(f"  {_dot_quote(w)} [label={_dot_quote(_label(w, lexicon))}];")
    for e in tree.edges:
        lines.append(f"  {_dot_quote(e.word1)} -- {_dot_quote(e.word2)} "
                     f"[label=\"{e.d:.3f}\", len=\"{e.d:.6f}\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_tsv(tree: SpanningTree, lexicon: Lexicon | None = None) -> str:
    lines = ["word1\tword2\tdistance"]
    lines += [f"{e.word1}\t{e.word2}\t{e.d:.6f}" for e in tree.edges]
    return "\n".join(lines) + "\n"


def export_graph(tree: SpanningTree, lexicon: Lexicon | None = None, fmt: str = "dot") -> str:
    """Serialize a tree as DOT (``fmt="dot"``) or an edge-list TSV."""
    if fmt == "dot":
        return export_dot(tree, lexicon)
    if fmt == "tsv":
        return export_tsv(tree, lexicon)
    raise ValueError(f"unknown graph format {fmt!r}")

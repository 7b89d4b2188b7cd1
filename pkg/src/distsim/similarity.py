"""Profile similarity between words and ranking of the most similar pairs.

Two words are compared through their blended association with every other
word ``z``.  Each ``z`` where at least one of the two values is nonzero
contributes ``2ab / (a^2 + b^2)``, which is 1 exactly when ``a == b`` and 0
when one side is missing.  The score is the mean contribution, so identical
profiles score 1 and disjoint ones 0.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .cooccur import FrequencyTable, PairTable
from .errors import SelfPairError, VocabularyError
from .infotheory import WEIGHTED, MIMatrix, blend, check_weight, mutual_information
from .lexicon import MISSING_GLOSS, AnchorSet, Lexicon

DEFAULT_MIN_COUNT = 3
DEFAULT_CUTOFF = 0.95
REPORT_COLUMNS = ("rank", "word1", "word2", "gloss1", "gloss2",
                  "similarity", "count1", "count2")
MEAN_SIMILARITY = "mean-similarity"
MEAN_RANK = "mean-rank"


@dataclass(frozen=True)
class SimilarityRecord:
    word1: str
    word2: str
    s: float
    count1: int
    count2: int
    gloss1: str | None = None
    gloss2: str | None = None

    def __post_init__(self):
        if not self.word1 < self.word2:
            raise ValueError(f"record pair must be in canonical order: "
                             f"({self.word1!r}, {self.word2!r})")


def _score(px: dict, py: dict, x: int, y: int, normalize: bool) -> float:
    support = (px.keys() | py.keys()) - {x, y}
    if not support:
        return 0.0
    if len(px) > len(py):
        px, py = py, px
    terms = []
    for z, a in px.items():
        b = py.get(z)
        if b is not None and z != x and z != y:
            terms.append(2.0 * a * b / (a * a + b * b))
    total = math.fsum(terms)
    return total / len(support) if normalize else total


def similarity(blended: MIMatrix, x: str, y: str, normalize: bool = True) -> float:
    """Similarity of the association profiles of words ``x`` and ``y``.

    ``normalize=False`` returns the raw sum of contributions instead of
    their mean.
    """
    if x == y:
        raise SelfPairError(f"similarity of {x!r} with itself is undefined")
    missing = [w for w in (x, y) if w not in blended.vocab]
    if missing:
        raise VocabularyError(missing)
    i, j = blended.vocab.id(x), blended.vocab.id(y)
    prof = blended.profiles()
    return _score(prof[i], prof[j], i, j, normalize)


def _check_cutoff(cutoff: float) -> float:
    cutoff = float(cutoff)
    if not 0.0 <= cutoff <= 1.0:
        raise ValueError(f"cutoff must lie in [0, 1], got {cutoff}")
    return cutoff


def score_pairs(blended: MIMatrix, words: Sequence[str], normalize: bool = True):
    """Yield ``(word1, word2, s)`` for every pair of ``words`` in sorted order."""
    words = sorted(set(words))
    prof = blended.profiles()
    ids = [blended.vocab.get(w) for w in words]
    empty: dict = {}
    for a in range(len(words)):
        ia = ids[a]
        pa = empty if ia is None else prof[ia]
        for b in range(a + 1, len(words)):
            ib = ids[b]
            pb = empty if ib is None else prof[ib]
            yield words[a], words[b], _score(pa, pb, ia, ib, normalize)


def rank_pairs(blended: MIMatrix, freq: FrequencyTable, min_count: int = DEFAULT_MIN_COUNT,
               cutoff: float = DEFAULT_CUTOFF, lexicon: Lexicon | None = None,
               normalize: bool = True) -> list[SimilarityRecord]:
    """All pairs of sufficiently frequent words scoring at least ``cutoff``.

    Sorted by descending score, ties by the canonical word pair.
    """
    if min_count < 1:
        raise ValueError("min_count must be at least 1")
    cutoff = _check_cutoff(cutoff)
    words = [w for w, c in zip(freq.vocab, freq.counts) if c >= min_count]
    records = []
    for w1, w2, s in score_pairs(blended, words, normalize):
        if s >= cutoff:
            g1 = g2 = None
            if lexicon is not None:
                g1, g2 = lexicon.gloss(w1), lexicon.gloss(w2)
            records.append(SimilarityRecord(w1, w2, s, freq.count(w1), freq.count(w2), g1, g2))
    records.sort(key=lambda r: (-r.s, r.word1, r.word2))
    return records


# -- calibration ---------------------------------------------------------------

@dataclass(frozen=True)
class CalibrationReport:
    grid: tuple[tuple[float, float], ...]
    chosen_w: float
    anchor_pairs: tuple[tuple[str, str], ...]
    objective: str = MEAN_SIMILARITY

    def to_json(self, meta=None) -> str:
        doc = {"config": dict(meta or {}),
               "objective": self.objective,
               "anchors": [list(p) for p in self.anchor_pairs],
               "grid": [{"weight": w, "score": round(s, 6)} for w, s in self.grid],
               "chosen_weight": self.chosen_w}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def parse_grid(spec: str) -> list[float]:
    """Inclusive ``start:stop:step`` grid, e.g. ``"0:1:0.25"``, or a comma list."""
    if ":" not in spec:
        return [check_weight(v) for v in spec.split(",")]
    start, stop, step = (float(v) for v in spec.split(":"))
    if step <= 0 or stop < start:
        raise ValueError(f"bad grid {spec!r}")
    n = int(math.floor((stop - start) / step + 1e-9))
    return [check_weight(round(start + k * step, 12)) for k in range(n + 1)]


def _anchor_ranks(blended, freq, anchors, min_count, normalize):
    words = {w for w, c in zip(freq.vocab, freq.counts) if c >= min_count} | anchors.words()
    scored = sorted(score_pairs(blended, words, normalize), key=lambda t: (-t[2], t[0], t[1]))
    position = {(a, b): k for k, (a, b, _) in enumerate(scored, 1)}
    return [position[p] for p in anchors]


def calibrate(freq: FrequencyTable, pairs1: PairTable, pairs2: PairTable,
              anchors: AnchorSet | Iterable[tuple[str, str]], grid: Iterable[float],
              objective: str = MEAN_SIMILARITY, mode: str = WEIGHTED,
              clamp_negative: bool = False, normalize: bool = True,
              min_count: int = DEFAULT_MIN_COUNT) -> CalibrationReport:
    """Pick the blend weight under which the anchor pairs look most similar.

    The default objective is the mean anchor similarity.  ``"mean-rank"``
    scores each weight by the negated mean rank of the anchors among all
    pairs of frequent words.  Ties go to the smaller weight.
    """
    if not isinstance(anchors, AnchorSet):
        anchors = AnchorSet(tuple(anchors))
    if not len(anchors):
        raise ValueError("calibration needs at least one anchor pair")
    grid = [check_weight(w) for w in grid]
    if not grid:
        raise ValueError("calibration grid is empty")
    if objective not in (MEAN_SIMILARITY, MEAN_RANK):
        raise ValueError(f"unknown objective {objective!r}")
    missing = [w for w in anchors.words() if w not in freq.vocab]
    if missing:
        raise VocabularyError(missing)

    m1 = mutual_information(freq, pairs1, mode, clamp_negative)
    m2 = mutual_information(freq, pairs2, mode, clamp_negative)
    results = []
    for w in grid:
        blended = blend(m1, m2, w)
        if objective == MEAN_SIMILARITY:
            prof = blended.profiles()
            scores = []
            for a, b in anchors:
                i, j = blended.vocab.id(a), blended.vocab.id(b)
                scores.append(_score(prof[i], prof[j], i, j, normalize))
            value = math.fsum(scores) / len(scores)
        else:
            ranks = _anchor_ranks(blended, freq, anchors, min_count, normalize)
            value = -sum(ranks) / len(ranks)
        results.append((w, value))
    chosen = max(results, key=lambda t: (t[1], -t[0]))[0]
    return CalibrationReport(tuple(results), chosen, anchors.pairs, objective)


# -- report files ----------------------------------------------------------------

def _gloss(g: str | None) -> str:
    return MISSING_GLOSS if g is None else g


def format_report_tsv(records: Sequence[SimilarityRecord], meta=None) -> str:
    lines = [f"# {k}={v}" for k, v in (meta or {}).items()]
    lines.append("\t".join(REPORT_COLUMNS))
    for rank, r in enumerate(records, 1):
        lines.append(f"{rank}\t{r.word1}\t{r.word2}\t{_gloss(r.gloss1)}\t{_gloss(r.gloss2)}"
                     f"\t{r.s:.6f}\t{r.count1}\t{r.count2}")
    return "\n".join(lines) + "\n"


def format_report_json(records: Sequence[SimilarityRecord], meta=None) -> str:
    rows = []
    for rank, r in enumerate(records, 1):
        rows.append({"rank": rank, "word1": r.word1, "word2": r.word2,
                     "gloss1": _gloss(r.gloss1), "gloss2": _gloss(r.gloss2),
                     "similarity": round(r.s, 6), "count1": r.count1, "count2": r.count2})
    return json.dumps({"config": dict(meta or {}), "columns": list(REPORT_COLUMNS),
                       "rows": rows}, indent=2, sort_keys=True) + "\n"


def read_report_tsv(path: str | Path) -> list[SimilarityRecord]:
    """Parse a report written by :func:`format_report_tsv`."""
    records = []
    header = None
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t")
            if header is None:
                header = tuple(fields)
                if header != REPORT_COLUMNS:
                    raise ValueError(f"{path}: unexpected report header {header}")
                continue
            row = dict(zip(header, fields))
            records.append(SimilarityRecord(
                row["word1"], row["word2"], float(row["similarity"]),
                int(row["count1"]), int(row["count2"]), row["gloss1"], row["gloss2"]))
    return records

"""Per-pair mutual information and the distance-blended combination."""
from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Mapping

from .cooccur import FrequencyTable, PairTable, pair_key
from .corpus import Vocabulary
from .errors import InconsistentTablesError, TagError

BLENDED = "blended"
WEIGHTED = "weighted"
PMI = "pmi"
DEFAULT_WEIGHT = 0.75


@dataclass(frozen=True)
class MIMatrix:
    """Symmetric sparse association values in bits.

    ``tag`` is 1, 2 or ``"blended"``.  Absent pairs read as exactly 0.
    """

    tag: object
    vocab: Vocabulary
    values: Mapping[tuple[int, int], float]

    def get(self, x: str, y: str) -> float:
        return self.values.get(pair_key(self.vocab.id(x), self.vocab.id(y)), 0.0)

    def items(self) -> Iterator[tuple[tuple[int, int], float]]:
        for key in sorted(self.values):
            yield key, self.values[key]

    def profiles(self) -> list[dict[int, float]]:
        """Nonzero neighbours of every word: ``profiles()[x][z] = value(x, z)``."""
        prof: list[dict[int, float]] = [{} for _ in range(len(self.vocab))]
        for (i, j), v in self.values.items():
            if v != 0.0:
                prof[i][j] = v
                prof[j][i] = v
        return prof

    def scaled(self, c: float) -> "MIMatrix":
        return MIMatrix(self.tag, self.vocab, {k: c * v for k, v in self.values.items()})

    def __len__(self) -> int:
        return len(self.values)


def check_weight(w: float) -> float:
    w = float(w)
    if not 0.0 <= w <= 1.0:
        raise ValueError(f"blend weight must lie in [0, 1], got {w}")
    return w


def mutual_information(freq: FrequencyTable, pairs: PairTable, mode: str = WEIGHTED,
                       clamp_negative: bool = False) -> MIMatrix:
    """Association of every co-occurring pair.

    With ``mode="weighted"`` each value is ``q * log2(q / (p_x * p_y))``,
    the pair's contribution to the mutual information of the two word
    distributions.  ``mode="pmi"`` drops the leading ``q``.  Negative values
    are kept unless ``clamp_negative`` is set.
    """
    if mode not in (WEIGHTED, PMI):
        raise ValueError(f"unknown MI mode {mode!r}")
    if pairs.vocab == freq.vocab:
        remap = None
    else:
        missing = [w for w in pairs.vocab if w not in freq.vocab]
        if missing:
            raise InconsistentTablesError(
                "pair words missing from frequency table: " + ", ".join(missing))
        remap = [freq.vocab.id(w) for w in pairs.vocab]

    p = freq.frequencies
    n = pairs.total_pairs
    values = {}
    for (i, j), c in pairs.counts.items():
        if c == 0:
            continue
        if remap is not None:
            i, j = pair_key(remap[i], remap[j])
        q = c / n
        v = math.log2(q / (p[i] * p[j]))
        if mode == WEIGHTED:
            v = q * v
        if clamp_negative and v < 0.0:
            continue
        values[(i, j)] = v
    return MIMatrix(pairs.distance, freq.vocab, values)


def blend(m1: MIMatrix, m2: MIMatrix, w: float = DEFAULT_WEIGHT) -> MIMatrix:
    """Combine distance-1 and distance-2 values as ``hypot(I1, w * I2)``."""
    if m1.tag != 1 or m2.tag != 2:
        raise TagError(f"blend expects tags (1, 2), got ({m1.tag!r}, {m2.tag!r})")
    w = check_weight(w)
    if m1.vocab == m2.vocab:
        vocab = m1.vocab
        v1, v2 = m1.values, m2.values
    else:
        vocab = Vocabulary(list(m1.vocab) + list(m2.vocab))
        v1 = _reindex(m1, vocab)
        v2 = _reindex(m2, vocab)
    out = {}
    for key in v1.keys() | v2.keys():
        out[key] = math.hypot(v1.get(key, 0.0), w * v2.get(key, 0.0))
    return MIMatrix(BLENDED, vocab, out)


def blend_values(i1: float, i2: float, w: float) -> float:
    return math.hypot(i1, check_weight(w) * i2)


def _reindex(m: MIMatrix, vocab: Vocabulary) -> dict:
    ids = [vocab.id(s) for s in m.vocab]
    return {pair_key(ids[i], ids[j]): v for (i, j), v in m.values.items()}


def format_mi_tsv(m: MIMatrix, meta=None) -> str:
    s = m.vocab.surfaces
    lines = [f"# {k}={v}" for k, v in (meta or {}).items()]
    lines.append("word1\tword2\tdistance\tvalue_bits")
    for (i, j), v in m.items():
        lines.append(f"{s[i]}\t{s[j]}\t{m.tag}\t{v:.6f}")
    return "\n".join(lines) + "\n"


def write_mi_tsv(m: MIMatrix, path: str | Path, meta=None) -> None:
    Path(path).write_text(format_mi_tsv(m, meta), encoding="utf-8")

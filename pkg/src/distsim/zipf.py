"""Rank-frequency tables and log-log power-law fits ``f = C / rank**alpha``."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Sequence

import numpy as np

from .cooccur import FrequencyTable
from .errors import EmptyCorpusError, InsufficientDataError


@dataclass(frozen=True)
class ZipfFit:
    C: float
    alpha: float
    r_squared: float
    n_ranks: int

    def to_json(self, meta=None) -> str:
        doc = {"config": dict(meta or {}), **asdict(self)}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def rank_table(freq: FrequencyTable) -> list[tuple[int, str, float]]:
    """``(rank, word, frequency)`` by descending frequency, ties by word."""
    if len(freq) == 0:
        raise EmptyCorpusError("empty frequency table")
    order = sorted(zip(freq.vocab, freq.counts), key=lambda wc: (-wc[1], wc[0]))
    n = freq.total_words
    return [(k, w, c / n) for k, (w, c) in enumerate(order, 1)]


def rank_frequency(freq: FrequencyTable) -> list[tuple[int, float]]:
    return [(k, f) for k, _, f in rank_table(freq)]


def fit_zipf(ranked: Sequence[tuple], max_rank: int | None = None) -> ZipfFit:
    """Least-squares line through ``(log rank, log frequency)``.

    ``ranked`` holds ``(rank, frequency)`` pairs (extra trailing fields are
    ignored).  ``max_rank`` truncates the fit to the top ranks.
    """
    pts = [(r[0], r[-1]) for r in ranked if max_rank is None or r[0] <= max_rank]
    if len(pts) < 3:
        raise InsufficientDataError(f"need at least 3 ranks to fit, got {len(pts)}")
    z, f = np.array(pts, dtype=float).T
    if np.any(f <= 0) or np.any(z <= 0):
        raise ValueError("ranks and frequencies must be positive")
    x, y = np.log(z), np.log(f)
    xm, ym = x.mean(), y.mean()
    dx, dy = x - xm, y - ym
    sxx = float(dx @ dx)
    if sxx == 0.0:
        raise InsufficientDataError("all ranks are equal")
    slope = float(dx @ dy) / sxx
    intercept = ym - slope * xm
    resid = y - (intercept + slope * x)
    ss_res = float(resid @ resid)
    ss_tot = float(dy @ dy)
    # a flat series is fit exactly by the zero-slope line
    r2 = 1.0 if ss_tot == 0.0 else max(0.0, 1.0 - ss_res / ss_tot)
    return ZipfFit(float(np.exp(intercept)), -slope, r2, len(pts))


def format_rank_tsv(freq: FrequencyTable, meta=None) -> str:
    lines = [f"# {k}={v}" for k, v in (meta or {}).items()]
    lines.append("rank\tword\tfrequency")
    lines += [f"{k}\t{w}\t{f:.6f}" for k, w, f in rank_table(freq)]
    return "\n".join(lines) + "\n"

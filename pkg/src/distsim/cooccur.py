"""Word and distance-d word-pair frequency tables.

Counts are accumulated as integers and divided once, so every frequency is
the correctly rounded value of the exact ratio ``count / total``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping

from .corpus import Corpus, Vocabulary
from .errors import EmptyCorpusError, InconsistentTablesError, NoPairsError

DISTANCES = (1, 2)


def pair_key(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i <= j else (j, i)


@dataclass(frozen=True)
class FrequencyTable:
    """Relative frequency of every word; ``counts`` is indexed by word id."""

    vocab: Vocabulary
    counts: tuple[int, ...]
    total_words: int

    @classmethod
    def from_counts(cls, counts: Mapping[str, int]) -> "FrequencyTable":
        vocab = Vocabulary(counts)
        c = tuple(int(counts[s]) for s in vocab)
        if any(n <= 0 for n in c):
            raise ValueError("word counts must be positive")
        return cls(vocab, c, sum(c))

    def count(self, word: str) -> int:
        return self.counts[self.vocab.id(word)]

    def p(self, word: str) -> float:
        return self.counts[self.vocab.id(word)] / self.total_words

    @property
    def frequencies(self) -> tuple[float, ...]:
        n = self.total_words
        return tuple(c / n for c in self.counts)

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.vocab, self.frequencies))

    def __len__(self) -> int:
        return len(self.counts)


@dataclass(frozen=True)
class PairTable:
    """Unordered word-pair counts at a fixed window distance.

    Keys are ``(i, j)`` with ``i <= j``; self pairs occur when a word recurs
    at exactly the table's distance.
    """

    distance: int
    vocab: Vocabulary
    counts: Mapping[tuple[int, int], int]
    total_pairs: int

    def count(self, x: str, y: str) -> int:
        return self.counts.get(pair_key(self.vocab.id(x), self.vocab.id(y)), 0)

    def q(self, x: str, y: str) -> float:
        return self.count(x, y) / self.total_pairs

    def items(self):
        """Yield ``((i, j), count, frequency)`` in key order."""
        n = self.total_pairs
        for key in sorted(self.counts):
            c = self.counts[key]
            yield key, c, c / n

    def __len__(self) -> int:
        return len(self.counts)


def word_frequencies(corpus: Corpus) -> FrequencyTable:
    if corpus.n_words == 0:
        raise EmptyCorpusError("cannot compute frequencies of an empty corpus")
    counts = [0] * len(corpus.vocab)
    for text in corpus.texts:
        for w in text:
            counts[w] += 1
    return FrequencyTable(corpus.vocab, tuple(counts), sum(counts))


def pair_frequencies(corpus: Corpus, distance: int) -> PairTable:
    """Count words that stand exactly ``distance`` positions apart in a text.

    A text of length n contributes ``max(n - distance, 0)`` windows.
    """
    if distance not in DISTANCES:
        raise ValueError(f"distance must be one of {DISTANCES}, got {distance}")
    if corpus.n_words == 0:
        raise EmptyCorpusError("cannot count pairs in an empty corpus")
    counts: Counter = Counter()
    for text in corpus.texts:
        counts.update(pair_key(a, b) for a, b in zip(text, text[distance:]))
    total = sum(counts.values())
    if total == 0:
        raise NoPairsError(f"no text is longer than {distance} word(s)")
    return PairTable(distance, corpus.vocab, dict(counts), total)


# -- TSV dumps ----------------------------------------------------------------

def _comment_lines(meta: Mapping[str, object] | None) -> list[str]:
    if not meta:
        return []
    return [f"# {k}={v}" for k, v in meta.items()]


def _data_rows(path: str | Path) -> Iterable[list[str]]:
    with open(path, encoding="utf-8") as fh:
        header_seen = False
        for line in fh:
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            if not header_seen:
                header_seen = True
                continue
            yield line.split("\t")


def format_frequency_tsv(freq: FrequencyTable, meta=None) -> str:
    lines = _comment_lines(meta) + ["word\tcount\tfrequency"]
    for w, c, p in zip(freq.vocab, freq.counts, freq.frequencies):
        lines.append(f"{w}\t{c}\t{p:.6f}")
    return "\n".join(lines) + "\n"


def format_pair_tsv(pairs: PairTable, meta=None) -> str:
    s = pairs.vocab.surfaces
    lines = _comment_lines(meta) + ["word1\tword2\tdistance\tcount\tfrequency"]
    for (i, j), c, q in pairs.items():
        lines.append(f"{s[i]}\t{s[j]}\t{pairs.distance}\t{c}\t{q:.6f}")
    return "\n".join(lines) + "\n"


def read_frequency_tsv(path: str | Path) -> FrequencyTable:
    """Rebuild an exact table from the integer counts of a frequency dump."""
    counts = {}
    for row in _data_rows(path):
        counts[row[0]] = int(row[1])
    if not counts:
        raise EmptyCorpusError(f"{path}: no word rows")
    return FrequencyTable.from_counts(counts)


def read_pair_tsv(path: str | Path, vocab: Vocabulary) -> PairTable:
    counts: dict[tuple[int, int], int] = {}
    distance = None
    for w1, w2, d, c, _ in _data_rows(path):
        if w1 not in vocab or w2 not in vocab:
            raise InconsistentTablesError(f"{path}: pair ({w1}, {w2}) not in vocabulary")
        d = int(d)
        if distance is None:
            distance = d
        elif d != distance:
            raise InconsistentTablesError(f"{path}: mixed distances {distance} and {d}")
        counts[pair_key(vocab.id(w1), vocab.id(w2))] = int(c)
    if distance is None:
        raise NoPairsError(f"{path}: no pair rows")
    return PairTable(distance, vocab, counts, sum(counts.values()))

"""Known-word glosses and calibration anchor pairs."""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping, NamedTuple

from .errors import LexiconParseError

KNOWN = "known"
TENTATIVE = "tentative"
UNKNOWN = "unknown"
CONFIDENCE_LEVELS = (KNOWN, TENTATIVE, UNKNOWN)
MISSING_GLOSS = "?"


class Entry(NamedTuple):
    gloss: str
    confidence: str


def confidence_from_gloss(gloss: str) -> str:
    """Map trailing question marks on a gloss to a confidence level.

    ``"king"`` is known, ``"in the king?"`` tentative, ``"divinity??"``
    unknown.
    """
    if gloss.endswith("??"):
        return UNKNOWN
    if gloss.endswith("?"):
        return TENTATIVE
    return KNOWN


def _check_surface(surface: str, separator: str = ":") -> None:
    if not surface or separator in surface or surface != surface.strip():
        raise ValueError(f"malformed surface {surface!r}")


@dataclass(frozen=True)
class Lexicon:
    entries: Mapping[str, Entry] = dataclasses.field(default_factory=dict)

    def __post_init__(self):
        for s, e in self.entries.items():
            _check_surface(s)
            if e.confidence not in CONFIDENCE_LEVELS:
                raise ValueError(f"bad confidence {e.confidence!r} for {s!r}")

    def __contains__(self, surface) -> bool:
        return surface in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def gloss(self, surface: str, default: str = MISSING_GLOSS) -> str:
        e = self.entries.get(surface)
        return default if e is None else e.gloss

    def dumps(self) -> str:
        return "".join(f"{s}\t{e.gloss}\t{e.confidence}\n"
                       for s, e in sorted(self.entries.items()))

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")


def _rows(text: str):
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        yield lineno, line.split("\t")


def parse_lexicon(text: str, source: str = "<lexicon>") -> Lexicon:
    entries = {}
    for lineno, fields in _rows(text):
        if len(fields) != 3:
            raise LexiconParseError(source, lineno, f"expected 3 fields, got {len(fields)}")
        surface, gloss, confidence = fields
        try:
            _check_surface(surface)
        except ValueError as e:
            raise LexiconParseError(source, lineno, str(e)) from None
        if confidence not in CONFIDENCE_LEVELS:
            raise LexiconParseError(source, lineno, f"unknown confidence {confidence!r}")
        if surface in entries:
            raise LexiconParseError(source, lineno, f"duplicate surface {surface!r}")
        entries[surface] = Entry(gloss, confidence)
    return Lexicon(entries)


def load_lexicon(path: str | Path | None = None) -> Lexicon:
    """Load a ``surface<TAB>gloss<TAB>confidence`` file; ``None`` loads the bundled one."""
    if path is None:
        text = resources.files("distsim.data").joinpath("lexicon.tsv").read_text("utf-8")
        return parse_lexicon(text, "lexicon.tsv")
    return parse_lexicon(Path(path).read_text(encoding="utf-8"), str(path))


def annotate(records: Iterable, lex: Lexicon) -> list:
    """Fill gloss fields of similarity records, ``"?"`` where unknown."""
    return [dataclasses.replace(r, gloss1=lex.gloss(r.word1), gloss2=lex.gloss(r.word2))
            for r in records]


# -- anchors -----------------------------------------------------------------

@dataclass(frozen=True)
class AnchorSet:
    pairs: tuple[tuple[str, str], ...]

    def __post_init__(self):
        canon = []
        for a, b in self.pairs:
            _check_surface(a)
            _check_surface(b)
            if a == b:
                raise ValueError(f"anchor self-pair {a!r}")
            canon.append((a, b) if a < b else (b, a))
        object.__setattr__(self, "pairs", tuple(canon))

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def words(self) -> set[str]:
        return {w for p in self.pairs for w in p}


def parse_anchors(text: str, source: str = "<anchors>") -> AnchorSet:
    pairs = []
    for lineno, fields in _rows(text):
        if len(fields) != 2:
            raise LexiconParseError(source, lineno, f"expected 2 fields, got {len(fields)}")
        try:
            pairs.append(AnchorSet(((fields[0], fields[1]),)).pairs[0])
        except ValueError as e:
            raise LexiconParseError(source, lineno, str(e)) from None
    return AnchorSet(tuple(pairs))


def load_anchors(path: str | Path) -> AnchorSet:
    return parse_anchors(Path(path).read_text(encoding="utf-8"), str(path))

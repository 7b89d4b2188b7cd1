"""Corpus ingestion and bound-morpheme splitting.

A corpus is a sequence of texts, each a sequence of words.  Texts are
concatenated in the source files and delimited by a sentinel token (``XXXX``
by default) so that no co-occurrence window ever spans two texts.  The
sentinel is structural: it never becomes a word.

Word surfaces are interned into a :class:`Vocabulary` whose ids follow the
lexicographic order of the surfaces, so sorting by id and sorting by surface
agree everywhere downstream.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import EmptyCorpusError, InvalidRuleError, MalformedInputError

DEFAULT_SEPARATOR = ":"
DEFAULT_SENTINEL = "XXXX"


class Word(NamedTuple):
    id: int
    surface: str


class Vocabulary:
    """Bijective surface <-> id map with ids in lexicographic surface order."""

    __slots__ = ("_surfaces", "_ids")

    def __init__(self, surfaces: Iterable[str]):
        self._surfaces = tuple(sorted(set(surfaces)))
        if any(not s for s in self._surfaces):
            raise MalformedInputError("empty word surface")
        self._ids = {s: i for i, s in enumerate(self._surfaces)}

    def __len__(self) -> int:
        return len(self._surfaces)

    def __iter__(self) -> Iterator[str]:
        return iter(self._surfaces)

    def __contains__(self, surface) -> bool:
        return surface in self._ids

    def __eq__(self, other) -> bool:
        return isinstance(other, Vocabulary) and self._surfaces == other._surfaces

    def __hash__(self) -> int:
        return hash(self._surfaces)

    def __repr__(self) -> str:
        return f"Vocabulary({len(self)} words)"

    @property
    def surfaces(self) -> tuple[str, ...]:
        return self._surfaces

    def id(self, surface: str) -> int:
        return self._ids[surface]

    def surface(self, word_id: int) -> str:
        return self._surfaces[word_id]

    def word(self, surface: str) -> Word:
        return Word(self._ids[surface], surface)

    def get(self, surface: str, default=None):
        return self._ids.get(surface, default)


@dataclass(frozen=True)
class Corpus:
    """Ordered texts of interned words.

    ``texts`` holds word ids; use :meth:`surface_texts` for strings.
    """

    texts: tuple[tuple[int, ...], ...]
    vocab: Vocabulary

    @classmethod
    def from_surfaces(cls, texts: Iterable[Sequence[str]]) -> "Corpus":
        texts = [tuple(t) for t in texts]
        if any(not t for t in texts):
            raise MalformedInputError("corpus texts must be nonempty")
        vocab = Vocabulary(w for t in texts for w in t)
        return cls(tuple(tuple(vocab.id(w) for w in t) for t in texts), vocab)

    def surface_texts(self) -> list[list[str]]:
        s = self.vocab.surfaces
        return [[s[i] for i in t] for t in self.texts]

    @property
    def n_words(self) -> int:
        return sum(len(t) for t in self.texts)

    def __len__(self) -> int:
        return len(self.texts)

    def dumps(self, separator: str = DEFAULT_SEPARATOR,
              sentinel: str = DEFAULT_SENTINEL) -> str:
        """Serialize as one text per line with sentinel lines in between.

        The output parses back to an equal corpus with :func:`parse_corpus`.
        """
        lines = [separator.join(t) for t in self.surface_texts()]
        return f"\n{sentinel}\n".join(lines) + "\n"


def _check_delimiters(separator: str, sentinel: str) -> None:
    if len(separator) != 1:
        raise ValueError(f"separator must be a single character, got {separator!r}")
    if not sentinel or sentinel.strip() != sentinel:
        raise ValueError(f"invalid sentinel {sentinel!r}")
    if separator in sentinel or separator == "\n":
        raise ValueError("separator must not occur in the sentinel")


def parse_corpus(raw: str, separator: str = DEFAULT_SEPARATOR,
                 sentinel: str = DEFAULT_SENTINEL) -> Corpus:
    """Split a raw transliteration stream into texts of words.

    Newlines act as additional separators.  Empty tokens produced by doubled
    separators are dropped, as are texts left empty by leading, trailing or
    repeated sentinels.

    >>> parse_corpus("a:b:XXXX:c:d").surface_texts()
    [['a', 'b'], ['c', 'd']]
    """
    _check_delimiters(separator, sentinel)
    texts: list[list[str]] = [[]]
    for line in raw.splitlines():
        for token in line.split(separator):
            token = token.strip()
            if not token:
                continue
            if token == sentinel:
                texts.append([])
            elif sentinel in token:
                raise MalformedInputError(
                    f"sentinel {sentinel!r} embedded in token {token!r}")
            else:
                texts[-1].append(token)
    texts = [t for t in texts if t]
    if not texts:
        raise EmptyCorpusError("corpus stream contains no words")
    return Corpus.from_surfaces(texts)


def read_corpus(paths: Iterable[str | Path], separator: str = DEFAULT_SEPARATOR,
                sentinel: str = DEFAULT_SENTINEL, encoding: str = "utf-8") -> Corpus:
    """Read and concatenate corpus files; each file boundary is a text boundary."""
    chunks = [Path(p).read_text(encoding=encoding) for p in paths]
    return parse_corpus(f"\n{sentinel}\n".join(chunks), separator, sentinel)


# -- morpheme rules ---------------------------------------------------------

WHOLE_WORD = "whole-word"
SUFFIX = "suffix"


@dataclass(frozen=True)
class MorphemeRule:
    match: str
    kind: str
    replacement: tuple[str, ...]

    def __post_init__(self):
        if self.kind not in (WHOLE_WORD, SUFFIX):
            raise InvalidRuleError(f"unknown rule kind {self.kind!r}")
        if not self.match:
            raise InvalidRuleError("rule with empty match")
        if not self.replacement or any(not p for p in self.replacement):
            raise InvalidRuleError(f"rule {self.match!r} has an empty replacement piece")
        if "".join(self.replacement) != self.match:
            raise InvalidRuleError(
                f"rule {self.match!r} -> {'+'.join(self.replacement)!r} "
                "does not concatenate back to its match")


@dataclass(frozen=True)
class RuleTable:
    """Whole-word rewrites, explicit suffix rules and a generic suffix set.

    ``suffix_rules`` is kept longest-match-first.  ``morphemes`` is the set of
    surfaces the generic stripper may split off when enabled.
    """

    rules: tuple[MorphemeRule, ...] = ()
    morphemes: frozenset[str] = frozenset()
    _whole: dict = field(init=False, repr=False, compare=False)
    _suffix: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        whole: dict[str, MorphemeRule] = {}
        for r in self.rules:
            if r.kind == WHOLE_WORD:
                if r.match in whole:
                    raise InvalidRuleError(f"duplicate whole-word rule {r.match!r}")
                whole[r.match] = r
        suffix = sorted((r for r in self.rules if r.kind == SUFFIX),
                        key=lambda r: (-len(r.match), r.match))
        seen = set()
        for r in suffix:
            if r.match in seen:
                raise InvalidRuleError(f"duplicate suffix rule {r.match!r}")
            seen.add(r.match)
        ordered = tuple(r for r in self.rules if r.kind == WHOLE_WORD) + tuple(suffix)
        object.__setattr__(self, "rules", ordered)
        object.__setattr__(self, "morphemes", frozenset(self.morphemes))
        object.__setattr__(self, "_whole", whole)
        object.__setattr__(self, "_suffix", tuple(suffix))

    @property
    def whole_word_rules(self) -> dict[str, MorphemeRule]:
        return dict(self._whole)

    @property
    def suffix_rules(self) -> tuple[MorphemeRule, ...]:
        return self._suffix

    def __len__(self) -> int:
        return len(self.rules)

    def split(self, word: str, strip_suffixes: bool = False) -> tuple[str, ...]:
        """Rewrite a single word into its pieces."""
        rule = self._whole.get(word)
        if rule is not None:
            return rule.replacement
        candidates = [(r.match, r.replacement) for r in self._suffix]
        if strip_suffixes:
            explicit = {m for m, _ in candidates}
            candidates += [(m, (m,)) for m in self.morphemes if m not in explicit]
            candidates.sort(key=lambda c: (-len(c[0]), c[0]))
        if not candidates:
            return (word,)
        tail: list[str] = []
        stem = word
        while True:
            for match, pieces in candidates:
                if len(stem) > len(match) and stem.endswith(match):
                    stem = stem[: -len(match)]
                    tail[:0] = pieces
                    break
            else:
                break
        return (stem, *tail)


_RULE_LINE = re.compile(r"^(?P<match>\S+)\s*->\s*(?P<pieces>\S+)$")


def parse_rule_table(text: str, source: str = "<rules>") -> RuleTable:
    """Parse the rule file format.

    One rule per line, ``match -> piece+piece``.  A leading ``-`` on the match
    marks a suffix rule.  Lines after a ``[suffixes]`` header list generic
    morphemes, whitespace separated.  ``#`` starts a comment.
    """
    rules = []
    morphemes: set[str] = set()
    in_suffixes = False
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "[suffixes]":
            in_suffixes = True
            continue
        if line.startswith("[") and line.endswith("]"):
            raise InvalidRuleError(f"{source}:{lineno}: unknown section {line}")
        if in_suffixes:
            morphemes.update(line.split())
            continue
        m = _RULE_LINE.match(line)
        if m is None:
            raise InvalidRuleError(f"{source}:{lineno}: cannot parse rule {line!r}")
        match = m["match"]
        kind = WHOLE_WORD
        if match.startswith("-"):
            kind, match = SUFFIX, match[1:]
        try:
            rules.append(MorphemeRule(match, kind, tuple(m["pieces"].split("+"))))
        except InvalidRuleError as e:
            raise InvalidRuleError(f"{source}:{lineno}: {e}") from None
    return RuleTable(tuple(rules), frozenset(morphemes))


def load_rule_table(path: str | Path | None = None) -> RuleTable:
    """Load a rule file; ``None`` loads the bundled bound-morpheme table."""
    if path is None:
        text = resources.files("distsim.data").joinpath("morphemes.rules").read_text("utf-8")
        return parse_rule_table(text, "morphemes.rules")
    return parse_rule_table(Path(path).read_text(encoding="utf-8"), str(path))


def apply_rules(corpus: Corpus, rules: RuleTable, strip_suffixes: bool = False) -> Corpus:
    """Rewrite every word of the corpus by the rule table.

    Explicit whole-word rules win.  Otherwise explicit suffix rules, plus the
    generic morpheme set when ``strip_suffixes`` is true, are stripped
    iteratively, longest first, while a nonempty stem remains.
    """
    cache: dict[str, tuple[str, ...]] = {}
    out = []
    for text in corpus.surface_texts():
        pieces: list[str] = []
        for w in text:
            if w not in cache:
                cache[w] = rules.split(w, strip_suffixes)
            pieces.extend(cache[w])
        out.append(pieces)
    return Corpus.from_surfaces(out)

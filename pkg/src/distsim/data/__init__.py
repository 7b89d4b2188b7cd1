"""Bundled rule table, lexicon and toy corpus."""
from importlib import resources
from pathlib import Path


def _path(name: str) -> Path:
    return Path(str(resources.files(__name__).joinpath(name)))


def toy_corpus_path() -> Path:
    return _path("toy_corpus.txt")


def toy_anchors_path() -> Path:
    return _path("toy_anchors.tsv")


def rule_table_path() -> Path:
    return _path("morphemes.rules")


def lexicon_path() -> Path:
    return _path("lexicon.tsv")

"""Stage-by-stage orchestration with file handoff between stages.

Every stage reads only the files written by earlier stages in the working
directory, so running the stages one at a time produces exactly the same
bytes as :func:`run_pipeline`.
"""
from __future__ import annotations

import configparser
import dataclasses
import logging
import os
import shutil
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Mapping

from . import cooccur, corpus, graph, infotheory, lexicon, similarity, zipf
from .errors import DistsimError, EmptyGraphError

log = logging.getLogger(__name__)

OUTPUT_DIR_ENV = "DISTSIM_OUTPUT_DIR"
BUNDLED = "bundled"

TOKENS = "tokens.txt"
FREQUENCIES = "frequencies.tsv"
PAIRS = {1: "pairs_d1.tsv", 2: "pairs_d2.tsv"}
MI = {1: "mi_d1.tsv", 2: "mi_d2.tsv", "blended": "mi_blended.tsv"}
REPORT_TSV = "similarity.tsv"
REPORT_JSON = "similarity.json"
CALIBRATION = "calibration.json"
ZIPF_TSV = "zipf.tsv"
ZIPF_JSON = "zipf.json"

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_CODES = {"corpus": 10, "stats": 11, "mi": 12, "rank": 13,
              "calibrate": 14, "mst": 15, "zipf": 16}


@dataclass(frozen=True)
class PipelineConfig:
    corpus_paths: tuple[str, ...] = ()
    separator: str = corpus.DEFAULT_SEPARATOR
    sentinel: str = corpus.DEFAULT_SENTINEL
    rule_file: str = BUNDLED
    strip_suffixes: bool = False
    weight: float = infotheory.DEFAULT_WEIGHT
    min_count: int = similarity.DEFAULT_MIN_COUNT
    cutoff: float = similarity.DEFAULT_CUTOFF
    lexicon: str = BUNDLED
    anchors: str | None = None
    grid: str = "0:1:0.05"
    objective: str = similarity.MEAN_SIMILARITY
    output_dir: str = "distsim-out"
    mi_mode: str = infotheory.WEIGHTED
    clamp_negative: bool = False
    unnormalized_similarity: bool = False
    zipf_max_rank: int | None = None
    graph_format: str = "dot"

    def __post_init__(self):
        object.__setattr__(self, "corpus_paths", tuple(str(p) for p in self.corpus_paths))
        if len(self.separator) != 1 or self.separator in self.sentinel:
            raise ValueError("separator must be one character not found in the sentinel")
        infotheory.check_weight(self.weight)
        if int(self.min_count) != self.min_count or self.min_count < 1:
            raise ValueError(f"min_count must be a positive integer, got {self.min_count}")
        if not 0.0 <= self.cutoff <= 1.0:
            raise ValueError(f"cutoff must lie in [0, 1], got {self.cutoff}")
        if self.mi_mode not in (infotheory.WEIGHTED, infotheory.PMI):
            raise ValueError(f"unknown mi_mode {self.mi_mode!r}")
        if self.objective not in (similarity.MEAN_SIMILARITY, similarity.MEAN_RANK):
            raise ValueError(f"unknown objective {self.objective!r}")
        if self.graph_format not in ("dot", "tsv"):
            raise ValueError(f"unknown graph_format {self.graph_format!r}")
        if self.zipf_max_rank is not None and self.zipf_max_rank < 3:
            raise ValueError("zipf_max_rank must be at least 3")
        similarity.parse_grid(self.grid)

    def echo(self, *keys: str) -> dict[str, object]:
        """Resolved values of ``keys`` for embedding in report headers."""
        return {k: _echo_value(getattr(self, k)) for k in keys}


def _echo_value(v):
    if isinstance(v, tuple):
        return ",".join(v)
    return v


_FIELD_TYPES = {f.name: f.type for f in dataclasses.fields(PipelineConfig)}


def coerce(key: str, value):
    """Convert a string config value to the type of field ``key``."""
    key = key.replace("-", "_")
    if key not in _FIELD_TYPES:
        raise ValueError(f"unknown config key {key!r}")
    if not isinstance(value, str):
        return key, value
    t = str(_FIELD_TYPES[key])
    if t.startswith("bool"):
        v = value.strip().lower()
        if v not in ("1", "0", "true", "false", "yes", "no", "on", "off"):
            raise ValueError(f"{key}: not a boolean: {value!r}")
        return key, v in ("1", "true", "yes", "on")
    if t.startswith("int"):
        return key, None if value.strip().lower() in ("", "none") else int(value)
    if t.startswith("float"):
        return key, float(value)
    if t.startswith("tuple"):
        return key, tuple(p for p in value.split(",") if p.strip())
    if t.startswith("str | None"):
        return key, None if value.strip().lower() in ("", "none") else value
    return key, value


def read_config_file(path: str | Path) -> dict[str, object]:
    """Parse ``key = value`` lines from the ``[distsim]`` section of an INI file."""
    parser = configparser.ConfigParser(interpolation=None)
    with open(path, encoding="utf-8") as fh:
        parser.read_file(fh)
    if not parser.has_section("distsim"):
        raise ValueError(f"{path}: missing [distsim] section")
    return dict(coerce(k, v) for k, v in parser.items("distsim"))


def resolve_config(config_file: str | Path | None = None,
                   overrides: Mapping[str, object] | None = None,
                   environ: Mapping[str, str] | None = None) -> PipelineConfig:
    """Defaults, then the config file, then the environment, then ``overrides``."""
    values: dict[str, object] = {}
    if config_file is not None:
        values.update(read_config_file(config_file))
    env = os.environ if environ is None else environ
    if env.get(OUTPUT_DIR_ENV):
        values["output_dir"] = env[OUTPUT_DIR_ENV]
    for k, v in (overrides or {}).items():
        k, v = coerce(k, v)
        values[k] = v
    return PipelineConfig(**values)


class StageError(DistsimError):
    def __init__(self, stage: str, cause: BaseException):
        self.stage = stage
        self.cause = cause
        self.exit_code = EXIT_CODES[stage]
        super().__init__(f"stage {stage!r} failed: {cause}")


# -- stages ------------------------------------------------------------------

def _write(path: Path, text: str, written: list[Path]) -> None:
    path.write_text(text, encoding="utf-8")
    written.append(path)


def _rules(cfg: PipelineConfig) -> corpus.RuleTable:
    return corpus.load_rule_table(None if cfg.rule_file == BUNDLED else cfg.rule_file)


def _lexicon(cfg: PipelineConfig) -> lexicon.Lexicon | None:
    if cfg.lexicon in ("", "none"):
        return None
    return lexicon.load_lexicon(None if cfg.lexicon == BUNDLED else cfg.lexicon)


def _read_stats(src: Path):
    freq = cooccur.read_frequency_tsv(src / FREQUENCIES)
    pairs = {d: cooccur.read_pair_tsv(src / PAIRS[d], freq.vocab) for d in cooccur.DISTANCES}
    return freq, pairs


def _mi_tables(cfg, freq, pairs):
    return {d: infotheory.mutual_information(freq, pairs[d], cfg.mi_mode, cfg.clamp_negative)
            for d in cooccur.DISTANCES}


def stage_corpus(cfg: PipelineConfig, src: Path, out: Path, written: list[Path]) -> None:
    if not cfg.corpus_paths:
        raise ValueError("no corpus files given")
    raw = corpus.read_corpus(cfg.corpus_paths, cfg.separator, cfg.sentinel)
    tokens = corpus.apply_rules(raw, _rules(cfg), cfg.strip_suffixes)
    log.info("corpus: %d texts, %d words, %d distinct",
             len(tokens), tokens.n_words, len(tokens.vocab))
    _write(out / TOKENS, tokens.dumps(cfg.separator, cfg.sentinel), written)


def stage_stats(cfg, src, out, written) -> None:
    text = (src / TOKENS).read_text(encoding="utf-8")
    c = corpus.parse_corpus(text, cfg.separator, cfg.sentinel)
    freq = cooccur.word_frequencies(c)
    meta = cfg.echo("separator", "sentinel")
    _write(out / FREQUENCIES, cooccur.format_frequency_tsv(freq, meta), written)
    for d in cooccur.DISTANCES:
        table = cooccur.pair_frequencies(c, d)
        _write(out / PAIRS[d], cooccur.format_pair_tsv(table, meta), written)


def stage_mi(cfg, src, out, written, distances=(1, 2, "blended")) -> None:
    freq, pairs = _read_stats(src)
    m = _mi_tables(cfg, freq, pairs)
    meta = cfg.echo("mi_mode", "clamp_negative")
    for d in cooccur.DISTANCES:
        if d in distances:
            _write(out / MI[d], infotheory.format_mi_tsv(m[d], meta), written)
    if "blended" in distances:
        blended = infotheory.blend(m[1], m[2], cfg.weight)
        _write(out / MI["blended"],
               infotheory.format_mi_tsv(blended, {**meta, **cfg.echo("weight")}), written)


RANK_KEYS = ("weight", "min_count", "cutoff", "mi_mode", "clamp_negative",
             "unnormalized_similarity", "lexicon")


def stage_rank(cfg, src, out, written) -> None:
    freq, pairs = _read_stats(src)
    m = _mi_tables(cfg, freq, pairs)
    blended = infotheory.blend(m[1], m[2], cfg.weight)
    records = similarity.rank_pairs(blended, freq, cfg.min_count, cfg.cutoff,
                                    _lexicon(cfg), normalize=not cfg.unnormalized_similarity)
    log.info("rank: %d pairs at or above cutoff %s", len(records), cfg.cutoff)
    meta = cfg.echo(*RANK_KEYS)
    _write(out / REPORT_TSV, similarity.format_report_tsv(records, meta), written)
    _write(out / REPORT_JSON, similarity.format_report_json(records, meta), written)


def stage_calibrate(cfg, src, out, written) -> None:
    if cfg.anchors is None:
        raise ValueError("calibration needs an anchors file")
    freq, pairs = _read_stats(src)
    anchors = lexicon.load_anchors(cfg.anchors)
    report = similarity.calibrate(
        freq, pairs[1], pairs[2], anchors, similarity.parse_grid(cfg.grid),
        objective=cfg.objective, mode=cfg.mi_mode, clamp_negative=cfg.clamp_negative,
        normalize=not cfg.unnormalized_similarity, min_count=cfg.min_count)
    log.info("calibrate: chosen weight %s", report.chosen_w)
    meta = cfg.echo("anchors", "grid", "objective", "mi_mode", "clamp_negative",
                    "unnormalized_similarity", "min_count")
    _write(out / CALIBRATION, report.to_json(meta), written)


def mst_filename(cfg: PipelineConfig) -> str:
    return "mst.dot" if cfg.graph_format == "dot" else "mst.tsv"


def stage_mst(cfg, src, out, written) -> None:
    records = similarity.read_report_tsv(src / REPORT_TSV)
    lex = _lexicon(cfg)
    if not records:
        log.warning("mst: similarity report is empty; writing an empty graph")
        tree = graph.SpanningTree((), (), 0)
    else:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", graph.ForestWarning)
            tree = graph.minimum_spanning_tree(records)
        if tree.is_forest:
            log.warning("mst: graph has %d components, wrote a spanning forest",
                        tree.n_components)
    _write(out / mst_filename(cfg), graph.export_graph(tree, lex, cfg.graph_format), written)


def stage_zipf(cfg, src, out, written) -> None:
    freq = cooccur.read_frequency_tsv(src / FREQUENCIES)
    meta = cfg.echo("zipf_max_rank")
    _write(out / ZIPF_TSV, zipf.format_rank_tsv(freq, meta), written)
    fit = zipf.fit_zipf(zipf.rank_frequency(freq), cfg.zipf_max_rank)
    _write(out / ZIPF_JSON, fit.to_json(meta), written)


STAGES: dict[str, Callable] = {
    "corpus": stage_corpus,
    "stats": stage_stats,
    "mi": stage_mi,
    "rank": stage_rank,
    "calibrate": stage_calibrate,
    "mst": stage_mst,
    "zipf": stage_zipf,
}


def run_stage(name: str, cfg: PipelineConfig, input_dir: str | Path | None = None,
              **options) -> list[Path]:
    """Run one stage, removing anything it wrote if it fails.

    ``options`` are stage specific; ``mi`` accepts ``distances``.
    """
    out = Path(cfg.output_dir)
    src = out if input_dir is None else Path(input_dir)
    written: list[Path] = []
    out.mkdir(parents=True, exist_ok=True)
    try:
        STAGES[name](cfg, src, out, written, **options)
    except (DistsimError, OSError, ValueError, KeyError, EmptyGraphError) as e:
        for p in written:
            p.unlink(missing_ok=True)
        raise StageError(name, e) from e
    return written


def execute_pipeline(cfg: PipelineConfig) -> list[Path]:
    """All stages in order; raises :class:`StageError` after cleaning up."""
    out = Path(cfg.output_dir)
    created = not out.exists()
    names = [n for n in STAGES if n != "calibrate" or cfg.anchors is not None]
    done: list[Path] = []
    try:
        for name in names:
            done += run_stage(name, cfg)
    except StageError:
        for p in done:
            p.unlink(missing_ok=True)
        if created and out.exists() and not any(out.iterdir()):
            shutil.rmtree(out)
        raise
    return done


def run_pipeline(cfg: PipelineConfig) -> int:
    """Run every stage; returns 0 or the failing stage's exit code."""
    try:
        execute_pipeline(cfg)
    except StageError as e:
        log.error("%s", e)
        return e.exit_code
    return EXIT_OK

"""Command line entry point: ``distsim <stage> [options]`` or ``distsim run``."""
from __future__ import annotations

import argparse
import logging
import sys

from . import pipeline
from .pipeline import EXIT_CONFIG, StageError

SUBCOMMANDS = {
    "tokenize": "corpus",
    "stats": "stats",
    "mi": "mi",
    "rank": "rank",
    "calibrate": "calibrate",
    "mst": "mst",
    "zipf": "zipf",
}


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", dest="config_file", metavar="FILE",
                   help="INI file with a [distsim] section; flags override it")
    p.add_argument("-o", "--output-dir", help="working directory for dumps and reports")
    p.add_argument("--input-dir", help="read earlier stage dumps from here (default: output dir)")
    p.add_argument("--separator")
    p.add_argument("--sentinel")
    p.add_argument("-v", "--verbose", action="store_true", default=False)


def _corpus_opts(p):
    p.add_argument("corpus_paths", nargs="*", metavar="CORPUS")
    p.add_argument("--rules", dest="rule_file", metavar="FILE",
                   help="morpheme rule file ('bundled' for the built-in table)")
    p.add_argument("--strip-suffixes", action="store_const", const=True,
                   help="also strip the generic suffix morphemes")


def _mi_opts(p):
    p.add_argument("--mi-mode", choices=["weighted", "pmi"])
    p.add_argument("--clamp-negative", action="store_const", const=True)


def _rank_opts(p):
    p.add_argument("--weight", type=float, help="distance-2 blend weight (default 0.75)")
    p.add_argument("--min-count", type=int, help="minimum raw count of both words (default 3)")
    p.add_argument("--cutoff", type=float, help="minimum similarity (default 0.95)")
    p.add_argument("--unnormalized-similarity", action="store_const", const=True)
    p.add_argument("--lexicon", metavar="FILE", help="gloss file, 'bundled' or 'none'")


def _calibrate_opts(p):
    p.add_argument("--anchors", metavar="FILE")
    p.add_argument("--grid", metavar="START:STOP:STEP")
    p.add_argument("--objective", choices=["mean-similarity", "mean-rank"])


def _mst_opts(p):
    p.add_argument("--graph-format", choices=["dot", "tsv"])


def _zipf_opts(p):
    p.add_argument("--zipf-max-rank", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="distsim",
        description="Distributional word similarity for transliterated corpora.")
    sub = parser.add_subparsers(dest="command", required=True)
    groups = {
        "tokenize": [_corpus_opts],
        "stats": [],
        "mi": [_mi_opts, lambda p: p.add_argument("--weight", type=float),
               lambda p: p.add_argument("--distance", choices=["1", "2", "blended"],
                                        help="write only this table")],
        "rank": [_mi_opts, _rank_opts],
        "calibrate": [_mi_opts, _calibrate_opts,
                      lambda p: p.add_argument("--min-count", type=int),
                      lambda p: p.add_argument("--unnormalized-similarity",
                                               action="store_const", const=True)],
        "mst": [_mst_opts, lambda p: p.add_argument("--lexicon", metavar="FILE")],
        "zipf": [_zipf_opts],
        "run": [_corpus_opts, _mi_opts, _rank_opts, _calibrate_opts, _mst_opts, _zipf_opts],
    }
    helps = {
        "tokenize": "read corpus files and split bound morphemes",
        "stats": "word and pair frequency tables",
        "mi": "per-pair and blended mutual information",
        "rank": "ranked similarity report",
        "calibrate": "choose the blend weight from anchor pairs",
        "mst": "minimum spanning tree of the report",
        "zipf": "rank-frequency table and power-law fit",
        "run": "all stages in order",
    }
    for name, adders in groups.items():
        p = sub.add_parser(name, help=helps[name], argument_default=argparse.SUPPRESS)
        _common(p)
        for add in adders:
            add(p)
    return parser


def main(argv=None) -> int:
    args = vars(build_parser().parse_args(argv))
    command = args.pop("command")
    logging.basicConfig(level=logging.INFO if args.pop("verbose", False) else logging.WARNING,
                        format="distsim: %(levelname)s: %(message)s")
    config_file = args.pop("config_file", None)
    input_dir = args.pop("input_dir", None)
    options = {}
    if "distance" in args:
        d = args.pop("distance")
        options["distances"] = (d if d == "blended" else int(d),)
    if not args.get("corpus_paths", True):
        args.pop("corpus_paths")
    try:
        cfg = pipeline.resolve_config(config_file, args)
    except (OSError, ValueError) as e:
        print(f"distsim: configuration error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    if command == "run":
        return pipeline.run_pipeline(cfg)
    try:
        pipeline.run_stage(SUBCOMMANDS[command], cfg, input_dir, **options)
    except StageError as e:
        print(f"distsim: {e}", file=sys.stderr)
        return e.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())

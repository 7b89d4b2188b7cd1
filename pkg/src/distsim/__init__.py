"""Distributional word similarity for transliterated, partly undeciphered corpora."""
from .cooccur import FrequencyTable, PairTable, pair_frequencies, word_frequencies
from .corpus import (Corpus, MorphemeRule, RuleTable, Vocabulary, Word, apply_rules,
                     load_rule_table, parse_corpus, parse_rule_table, read_corpus)
from .errors import *  # noqa: F401,F403
from .graph import (DistanceEdge, SpanningTree, export_graph, gower_distance,
                    minimum_spanning_tree)
from .infotheory import MIMatrix, blend, mutual_information
from .lexicon import AnchorSet, Lexicon, annotate, load_anchors, load_lexicon
from .pipeline import PipelineConfig, resolve_config, run_pipeline, run_stage
from .similarity import (CalibrationReport, SimilarityRecord, calibrate, rank_pairs,
                         similarity)
from .zipf import ZipfFit, fit_zipf, rank_frequency

__version__ = "0.1.0"

"""Grammar-pattern analysis for source-code identifier names.

Pipeline: scan source for declarations, split the names into word tokens,
assign each token a part-of-speech tag from an 11-tag reduced set, then
analyze the resulting grammar patterns, evaluate taggers against gold
annotations, and lint names against empirically grounded rules.
"""

from .analysis import (
    CrossTab,
    CrossTabRow,
    FrequencyReport,
    abbreviation_stats,
    distribution,
    pattern_frequencies,
    plural_collection_stats,
    verb_boolean_stats,
)
from .ensemble import EnsembleTagger, StrengthTable, TagProposal, ensemble_tag
from .external import ExternalTaggerRunner, SubprocessTagger, external_tag
from .goldset import (
    EvalResult,
    GoldEntry,
    evaluate,
    load_gold,
    pattern_accuracy,
    per_tag_agreement,
    top_misannotated,
    word_accuracy,
)
from .lint import LintConfig, LintFinding, Severity, lint, lint_corpus
from .model import Category, Identifier, IdentifierSet, Language
from .preamble import PreambleLexicon, detect_preambles
from .scan import ScanConfig, is_test_artifact, scan_corpus
from .split import (
    SplitIdentifier,
    apply_split_overrides,
    load_split_overrides,
    split,
    split_identifier,
)
from .tagging import HeuristicTagger, TagContext, context_for, heuristic_tag
from .tags import (
    GrammarPattern,
    PennTag,
    PosTag,
    format_pattern,
    map_penn_tag,
    parse_pattern,
)
from .typeinfo import is_boolean_type, is_collection_type

__version__ = "0.1.0"

__all__ = [
    "Category",
    "CrossTab",
    "CrossTabRow",
    "EnsembleTagger",
    "EvalResult",
    "FrequencyReport",
    "GoldEntry",
    "GrammarPattern",
    "HeuristicTagger",
    "Identifier",
    "IdentifierSet",
    "Language",
    "LintConfig",
    "LintFinding",
    "PennTag",
    "PosTag",
    "PreambleLexicon",
    "ScanConfig",
    "Severity",
    "SplitIdentifier",
    "StrengthTable",
    "SubprocessTagger",
    "ExternalTaggerRunner",
    "TagContext",
    "TagProposal",
    "abbreviation_stats",
    "apply_split_overrides",
    "context_for",
    "detect_preambles",
    "distribution",
    "ensemble_tag",
    "evaluate",
    "external_tag",
    "format_pattern",
    "heuristic_tag",
    "is_boolean_type",
    "is_collection_type",
    "is_test_artifact",
    "lint",
    "lint_corpus",
    "load_gold",
    "load_split_overrides",
    "map_penn_tag",
    "parse_pattern",
    "pattern_accuracy",
    "pattern_frequencies",
    "per_tag_agreement",
    "plural_collection_stats",
    "scan_corpus",
    "split",
    "split_identifier",
    "top_misannotated",
    "verb_boolean_stats",
    "word_accuracy",
]

"""Aggregate grammar patterns into frequency reports and cross-tabulations.

All operations are pure and permutation-invariant over their inputs; group
and pattern orderings in the outputs are deterministic (count descending,
then pattern text ascending).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .lexicon import in_dictionary
from .model import Category, Identifier, Language
from .tags import GrammarPattern, PosTag
from .typeinfo import is_boolean_type, is_collection_type

Annotated = tuple[Identifier, GrammarPattern]

GROUP_KEYS = ("category", "language")


@dataclass(frozen=True)
class PatternCount:
    pattern: str
    count: int
    share: float


@dataclass(frozen=True)
class FrequencyGroup:
    key: tuple[str, ...]
    total: int
    patterns: tuple[PatternCount, ...]

    def top(self, k: int) -> tuple[PatternCount, ...]:
        return self.patterns[:k]


@dataclass(frozen=True)
class FrequencyReport:
    group_by: tuple[str, ...]
    groups: tuple[FrequencyGroup, ...]
    total: int


def _group_key(ident: Identifier, group_by: Sequence[str]) -> tuple[str, ...]:
    parts = []
    for key in group_by:
        if key == "category":
            parts.append(ident.category.value)
        elif key == "language":
            parts.append(ident.language.value)
        else:
            raise ValueError(f"unknown grouping key: {key!r}")
    return tuple(parts)


def pattern_frequencies(
    annotated: Iterable[Annotated], group_by: Sequence[str] = ()
) -> FrequencyReport:
    """Count canonical pattern texts per group."""
    group_by = tuple(group_by)
    counters: dict[tuple[str, ...], Counter[str]] = {}
    total = 0
    for ident, pattern in annotated:
        key = _group_key(ident, group_by)
        counters.setdefault(key, Counter())[pattern.text] += 1
        total += 1
    groups = []
    for key in sorted(counters):
        counter = counters[key]
        group_total = sum(counter.values())
        ordered = sorted(counter.items(), key=lambda kv: (-kv[1], kv[0]))
        patterns = tuple(
            PatternCount(text, count, count / group_total) for text, count in ordered
        )
        groups.append(FrequencyGroup(key, group_total, patterns))
    return FrequencyReport(group_by, tuple(groups), total)


def distribution(report: FrequencyReport) -> list[tuple[str, int]]:
    """Long-tail series of (pattern, count) across all groups, sorted
    count-descending then pattern-ascending; singletons included."""
    merged: Counter[str] = Counter()
    for group in report.groups:
        for item in group.patterns:
            merged[item.pattern] += item.count
    return sorted(merged.items(), key=lambda kv: (-kv[1], kv[0]))


@dataclass(frozen=True)
class CrossTabRow:
    category: Category
    count_a: int
    count_b: int
    count_both: int

    def __post_init__(self) -> None:
        if self.count_both > min(self.count_a, self.count_b):
            raise ValueError("conjunction count exceeds a marginal count")

    @property
    def pct_b_given_a(self) -> float | None:
        return self.count_both / self.count_a if self.count_a else None

    @property
    def pct_a_given_b(self) -> float | None:
        return self.count_both / self.count_b if self.count_b else None


@dataclass(frozen=True)
class CrossTab:
    label_a: str
    label_b: str
    rows: tuple[CrossTabRow, ...]
    note: str | None = None


def _contains_verb(pattern: GrammarPattern) -> bool:
    return PosTag.V in pattern


def _ends_plural(pattern: GrammarPattern) -> bool:
    return pattern.tags[-1] is PosTag.NPL


VERB_BOOLEAN_CATEGORIES = (
    Category.PARAMETER,
    Category.DECLARATION,
    Category.ATTRIBUTE,
)

PLURAL_COLLECTION_CATEGORIES = (
    Category.PARAMETER,
    Category.DECLARATION,
    Category.ATTRIBUTE,
    Category.FUNCTION,
)


def verb_boolean_stats(
    annotated: Iterable[Annotated],
    *,
    loose_boolean: bool = False,
    categories: Sequence[Category] = VERB_BOOLEAN_CATEGORIES,
) -> CrossTab:
    """Per category: identifiers containing a verb vs carrying a boolean type."""
    rows = []
    items = list(annotated)
    for category in categories:
        count_verb = count_bool = count_both = 0
        for ident, pattern in items:
            if ident.category is not category:
                continue
            has_verb = _contains_verb(pattern)
            boolean = bool(ident.type_name) and is_boolean_type(
                ident.type_name, loose_boolean=loose_boolean
            )
            count_verb += has_verb
            count_bool += boolean
            count_both += has_verb and boolean
        rows.append(CrossTabRow(category, count_verb, count_bool, count_both))
    return CrossTab("contains_verb", "boolean_type", tuple(rows))


def plural_collection_stats(
    annotated: Iterable[Annotated],
    *,
    categories: Sequence[Category] = PLURAL_COLLECTION_CATEGORIES,
) -> CrossTab:
    """Per category: collection-typed identifiers vs plural-ending patterns."""
    rows = []
    items = list(annotated)
    for category in categories:
        count_coll = count_plural = count_both = 0
        for ident, pattern in items:
            if ident.category is not category:
                continue
            collection = bool(ident.type_name) and is_collection_type(ident.type_name)
            plural = _ends_plural(pattern)
            count_coll += collection
            count_plural += plural
            count_both += collection and plural
        rows.append(CrossTabRow(category, count_coll, count_plural, count_both))
    return CrossTab(
        "collection_type",
        "ends_plural",
        tuple(rows),
        note="collection classification is keyword/plural/bracket-based and"
        " not manually verified",
    )


@dataclass(frozen=True)
class AbbreviationRow:
    language: Language
    dictionary_terms: int
    abbreviations: int
    digits: int

    @property
    def total_words(self) -> int:
        return self.dictionary_terms + self.abbreviations + self.digits


@dataclass(frozen=True)
class AbbreviationReport:
    rows: tuple[AbbreviationRow, ...]

    @property
    def total_dictionary(self) -> int:
        return sum(row.dictionary_terms for row in self.rows)

    @property
    def total_abbreviations(self) -> int:
        return sum(row.abbreviations for row in self.rows)

    @property
    def total_digits(self) -> int:
        return sum(row.digits for row in self.rows)


def abbreviation_stats(
    tokenized: Iterable[tuple[Identifier, Sequence[str]]],
    dictionary: frozenset[str],
) -> AbbreviationReport:
    """Classify every token as dictionary term or abbreviation, per language.

    All-digit tokens are counted in a separate digit bucket rather than as
    either word class.
    """
    per_language: dict[Language, list[int]] = {}
    for ident, tokens in tokenized:
        counts = per_language.setdefault(ident.language, [0, 0, 0])
        for token in tokens:
            if token.isdigit():
                counts[2] += 1
            elif in_dictionary(token, dictionary):
                counts[0] += 1
            else:
                counts[1] += 1
    rows = tuple(
        AbbreviationRow(language, *per_language[language])
        for language in sorted(per_language, key=lambda lang: lang.value)
    )
    return AbbreviationReport(rows)

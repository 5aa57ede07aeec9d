"""Load gold annotations and measure tagger agreement against them.

Pattern-level accuracy is the share of identifiers whose full tool pattern
string exactly matches the gold pattern; word-level accuracy is the share of
individual token tags that agree positionwise.  Identifiers whose tool
pattern length differs from the gold token count contribute zero matches and
are flagged rather than dropped, so both denominators always cover the whole
gold set.
"""

from __future__ import annotations

import csv
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .errors import GoldFormatError, MissingToolPatternError
from .model import Category, Language
from .tags import GrammarPattern, PosTag, parse_pattern

GOLD_COLUMNS = (
    "identifier",
    "split",
    "category",
    "language",
    "system",
    "pattern",
    "type_name",
)


@dataclass(frozen=True)
class GoldEntry:
    identifier: str
    tokens: tuple[str, ...]
    category: Category
    language: Language
    system: str
    pattern: GrammarPattern
    type_name: str | None = None

    def __post_init__(self) -> None:
        if len(self.tokens) != len(self.pattern):
            raise ValueError(
                f"{self.identifier}: {len(self.tokens)} tokens but"
                f" {len(self.pattern)} tags"
            )


def load_gold(
    path,
    *,
    column_map: Mapping[str, str] | None = None,
    extra_pattern_columns: Sequence[str] = (),
) -> list[GoldEntry] | tuple[list[GoldEntry], dict[str, list[GrammarPattern]]]:
    """Load a gold CSV with header ``identifier,split,category,language,system,pattern,type_name``.

    ``column_map`` renames schema columns to the actual header names for
    datasets with a different layout.  ``extra_pattern_columns`` additionally
    loads stored tool-annotation columns (returned as a second value, as
    pattern lists aligned with the entries).
    """
    mapping = {name: name for name in GOLD_COLUMNS}
    if column_map:
        mapping.update(column_map)

    entries: list[GoldEntry] = []
    extra: dict[str, list[GrammarPattern]] = {name: [] for name in extra_pattern_columns}
    problems: list[str] = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise GoldFormatError(f"{path}: empty file, expected a header row")
        missing = [
            mapping[name] for name in GOLD_COLUMNS if mapping[name] not in reader.fieldnames
        ]
        missing += [c for c in extra_pattern_columns if c not in reader.fieldnames]
        if missing:
            raise GoldFormatError(f"{path}: missing columns {missing}")
        for row_number, row in enumerate(reader, start=2):
            try:
                tokens = tuple(row[mapping["split"]].split())
                pattern = parse_pattern(row[mapping["pattern"]])
                type_name = (row[mapping["type_name"]] or "").strip() or None
                entry = GoldEntry(
                    identifier=row[mapping["identifier"]].strip(),
                    tokens=tokens,
                    category=Category.parse(row[mapping["category"]]),
                    language=Language.parse(row[mapping["language"]]),
                    system=row[mapping["system"]].strip(),
                    pattern=pattern,
                    type_name=type_name,
                )
            except Exception as exc:
                problems.append(f"row {row_number}: {exc}")
                continue
            entries.append(entry)
            for column in extra_pattern_columns:
                try:
                    extra[column].append(parse_pattern(row[column]))
                except Exception as exc:
                    problems.append(f"row {row_number}: column {column}: {exc}")
    if problems:
        raise GoldFormatError(
            f"{path}: {len(problems)} malformed row(s):\n  " + "\n  ".join(problems)
        )
    if extra_pattern_columns:
        return entries, extra
    return entries


ToolPatterns = Mapping[str, GrammarPattern] | Sequence[GrammarPattern]


def _pairs(
    gold: Sequence[GoldEntry], tool: ToolPatterns
) -> list[tuple[GoldEntry, GrammarPattern]]:
    if isinstance(tool, Mapping):
        pairs = []
        for entry in gold:
            if entry.identifier not in tool:
                raise MissingToolPatternError(entry.identifier)
            pairs.append((entry, tool[entry.identifier]))
        return pairs
    tool = list(tool)
    if len(tool) != len(gold):
        raise MissingToolPatternError(
            f"expected {len(gold)} tool patterns, got {len(tool)}"
        )
    return list(zip(gold, tool))


def pattern_accuracy(gold: Sequence[GoldEntry], tool: ToolPatterns) -> float:
    """Exact full-pattern matches over the gold count."""
    pairs = _pairs(gold, tool)
    if not pairs:
        return 0.0
    matches = sum(1 for entry, pattern in pairs if entry.pattern.text == pattern.text)
    return matches / len(pairs)


def word_accuracy(gold: Sequence[GoldEntry], tool: ToolPatterns) -> float:
    """Positionwise tag matches over the total gold word count."""
    pairs = _pairs(gold, tool)
    total = sum(len(entry.pattern) for entry, _ in pairs)
    if total == 0:
        return 0.0
    matches = 0
    for entry, pattern in pairs:
        if len(pattern) != len(entry.pattern):
            continue  # zero credit for misaligned identifiers
        matches += sum(
            1 for g, t in zip(entry.pattern.tags, pattern.tags) if g is t
        )
    return matches / total


@dataclass(frozen=True)
class TagAgreement:
    human_count: int
    tool_agree_count: int

    @property
    def pct(self) -> float | None:
        return self.tool_agree_count / self.human_count if self.human_count else None


def per_tag_agreement(
    gold: Sequence[GoldEntry], tool: ToolPatterns
) -> dict[PosTag, TagAgreement]:
    """Per tag: gold occurrence count and positionwise tool agreement count."""
    human: Counter[PosTag] = Counter()
    agree: Counter[PosTag] = Counter()
    for entry, pattern in _pairs(gold, tool):
        human.update(entry.pattern.tags)
        if len(pattern) != len(entry.pattern):
            continue
        for g, t in zip(entry.pattern.tags, pattern.tags):
            if g is t:
                agree[g] += 1
    return {
        tag: TagAgreement(human[tag], agree[tag])
        for tag in PosTag
        if human[tag] > 0
    }


@dataclass(frozen=True)
class MissRow:
    pattern: str
    count: int
    share: float  # of all misses in the category


def top_misannotated(
    gold: Sequence[GoldEntry], tool: ToolPatterns, k: int
) -> dict[Category, list[MissRow]]:
    """Rank the gold patterns most often missed, per category."""
    if k < 1:
        raise ValueError("k must be positive")
    misses: dict[Category, Counter[str]] = {}
    for entry, pattern in _pairs(gold, tool):
        if entry.pattern.text != pattern.text:
            misses.setdefault(entry.category, Counter())[entry.pattern.text] += 1
    result: dict[Category, list[MissRow]] = {}
    for category in sorted(misses, key=lambda c: c.value):
        counter = misses[category]
        total = sum(counter.values())
        ordered = sorted(counter.items(), key=lambda kv: (-kv[1], kv[0]))[:k]
        result[category] = [
            MissRow(text, count, count / total) for text, count in ordered
        ]
    return result


@dataclass(frozen=True)
class EvalResult:
    pattern_accuracy: float
    word_accuracy: float
    per_tag: dict[PosTag, TagAgreement]
    total_identifiers: int
    total_words: int
    pattern_matches: int
    word_matches: int
    length_mismatches: tuple[str, ...]


def evaluate(gold: Sequence[GoldEntry], tool: ToolPatterns) -> EvalResult:
    """Bundle all agreement metrics over one gold/tool comparison."""
    pairs = _pairs(gold, tool)
    per_tag = per_tag_agreement(gold, tool)
    pattern_matches = sum(
        1 for entry, pattern in pairs if entry.pattern.text == pattern.text
    )
    word_matches = sum(a.tool_agree_count for a in per_tag.values())
    total_words = sum(len(entry.pattern) for entry, _ in pairs)
    mismatched = tuple(
        entry.identifier
        for entry, pattern in pairs
        if len(pattern) != len(entry.pattern)
    )
    return EvalResult(
        pattern_accuracy=pattern_matches / len(pairs) if pairs else 0.0,
        word_accuracy=word_matches / total_words if total_words else 0.0,
        per_tag=per_tag,
        total_identifiers=len(pairs),
        total_words=total_words,
        pattern_matches=pattern_matches,
        word_matches=word_matches,
        length_mismatches=mismatched,
    )


def tag_gold_entries(
    gold: Sequence[GoldEntry],
    tagger: Callable[[Sequence[str], "object"], GrammarPattern],
    context_builder: Callable[[GoldEntry], "object"],
) -> list[GrammarPattern]:
    """Run a tagger over the curated gold splits, aligned with the entries."""
    return [tagger(entry.tokens, context_builder(entry)) for entry in gold]

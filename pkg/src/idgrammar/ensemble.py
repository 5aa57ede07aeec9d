"""Strength-weighted combination of multiple taggers' proposals.

Per token, the proposal whose (tagger, tag) reliability weight is highest
wins, with one override: a plural-noun proposal beats a competing plain-noun
proposal whenever the token itself carries plural morphology, because
plurality is verifiable from the surface form while the weights are only
aggregates.  Ties break by a fixed tagger priority order.
"""

from __future__ import annotations

import csv
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import EnsembleError
from .lexicon import has_plural_morphology
from .split import SplitIdentifier
from .tags import GrammarPattern, PosTag
from .tagging import TagContext

# Default per-tag reliability weights for the bundled tagger kinds: the
# code-aware heuristic is strong on noun modifiers and determiners, while a
# general-language tagger is stronger on plurals, digits, prepositions, and
# adverbs.  Replace with a table measured against your own gold set.
DEFAULT_STRENGTHS: dict[tuple[str, PosTag], float] = {
    ("heuristic", PosTag.NM): 0.9401,
    ("heuristic", PosTag.N): 0.8554,
    ("heuristic", PosTag.V): 0.5607,
    ("heuristic", PosTag.NPL): 0.0,
    ("heuristic", PosTag.PRE): 0.019,
    ("heuristic", PosTag.P): 0.2979,
    ("heuristic", PosTag.D): 0.1852,
    ("heuristic", PosTag.DT): 0.8667,
    ("heuristic", PosTag.VM): 0.0,
    ("heuristic", PosTag.CJ): 0.0,
    ("external", PosTag.NM): 0.1571,
    ("external", PosTag.N): 0.9325,
    ("external", PosTag.V): 0.7639,
    ("external", PosTag.NPL): 0.7185,
    ("external", PosTag.PRE): 0.0,
    ("external", PosTag.P): 0.9043,
    ("external", PosTag.D): 1.0,
    ("external", PosTag.DT): 0.6,
    ("external", PosTag.VM): 0.6923,
    ("external", PosTag.CJ): 0.5,
}

DEFAULT_PRIORITY = ("heuristic", "external")


@dataclass(frozen=True)
class TagProposal:
    index: int
    tag: PosTag
    source: str

    def __post_init__(self) -> None:
        if self.index < 0:
            raise ValueError("proposal index must be >= 0")


class StrengthTable:
    """Reliability weight per (tagger, tag); missing cells read as 0."""

    def __init__(self, weights: Mapping[tuple[str, PosTag], float] | None = None):
        table = dict(DEFAULT_STRENGTHS if weights is None else weights)
        for (source, tag), weight in table.items():
            if not 0.0 <= weight <= 1.0:
                raise ValueError(
                    f"weight for ({source}, {tag.value}) out of [0,1]: {weight}"
                )
        self._weights = table

    def weight(self, source: str, tag: PosTag) -> float:
        return self._weights.get((source, tag), 0.0)

    def items(self):
        return self._weights.items()

    @classmethod
    def from_csv(cls, path) -> "StrengthTable":
        weights: dict[tuple[str, PosTag], float] = {}
        with open(path, newline="", encoding="utf-8") as fh:
            for lineno, row in enumerate(csv.reader(fh), start=1):
                if not row or row[0].startswith("#"):
                    continue
                if row == ["tagger", "tag", "weight"]:
                    continue
                if len(row) != 3:
                    raise ValueError(f"{path}:{lineno}: expected tagger,tag,weight")
                source, tag_text, weight_text = row
                weights[(source.strip(), PosTag.parse(tag_text.strip()))] = float(
                    weight_text
                )
        return cls(weights)

    def to_csv(self, path) -> None:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["tagger", "tag", "weight"])
            for (source, tag), weight in sorted(
                self._weights.items(), key=lambda kv: (kv[0][0], kv[0][1].value)
            ):
                writer.writerow([source, tag.value, weight])


def ensemble_tag(
    tokens: Sequence[str] | SplitIdentifier,
    proposals: Iterable[TagProposal],
    table: StrengthTable | None = None,
    *,
    priority: Sequence[str] = DEFAULT_PRIORITY,
) -> GrammarPattern:
    """Merge per-token proposals into one pattern."""
    if isinstance(tokens, SplitIdentifier):
        tokens = tokens.tokens
    if not tokens:
        raise ValueError("cannot tag an identifier with no tokens")
    table = table or StrengthTable()

    by_index: dict[int, list[TagProposal]] = defaultdict(list)
    per_source: dict[str, set[int]] = defaultdict(set)
    for proposal in proposals:
        if proposal.index >= len(tokens):
            raise EnsembleError(
                f"proposal index {proposal.index} out of range for"
                f" {len(tokens)} tokens"
            )
        if proposal.index in per_source[proposal.source]:
            raise EnsembleError(
                f"tagger {proposal.source!r} proposed twice for token"
                f" {proposal.index}"
            )
        per_source[proposal.source].add(proposal.index)
        by_index[proposal.index].append(proposal)

    for source, indices in per_source.items():
        if indices != set(range(len(tokens))):
            missing = sorted(set(range(len(tokens))) - indices)
            raise EnsembleError(
                f"tagger {source!r} did not propose for tokens {missing}"
            )

    def rank(source: str) -> tuple[int, str]:
        try:
            return (priority.index(source), source)
        except ValueError:
            return (len(priority), source)

    chosen: list[PosTag] = []
    for index, token in enumerate(tokens):
        candidates = by_index.get(index)
        if not candidates:
            raise EnsembleError(f"no proposals for token {index} ({token!r})")
        if has_plural_morphology(token):
            plural = [p for p in candidates if p.tag is PosTag.NPL]
            if plural and any(p.tag is PosTag.N for p in candidates):
                candidates = plural
        best = min(
            candidates,
            key=lambda p: (-table.weight(p.source, p.tag), rank(p.source)),
        )
        chosen.append(best.tag)
    return GrammarPattern(tuple(chosen))


class EnsembleTagger:
    """Runs member taggers and merges their proposals."""

    name = "ensemble"

    def __init__(
        self,
        members: Sequence,
        table: StrengthTable | None = None,
        priority: Sequence[str] | None = None,
    ):
        if not members:
            raise ValueError("ensemble needs at least one member tagger")
        self.members = list(members)
        self.table = table or StrengthTable()
        self.priority = tuple(priority or [m.name for m in members])

    def tag(self, tokens: Sequence[str], context: TagContext) -> GrammarPattern:
        proposals: list[TagProposal] = []
        for member in self.members:
            pattern = member.tag(tokens, context)
            if len(pattern) != len(tokens):
                raise EnsembleError(
                    f"tagger {member.name!r} returned {len(pattern)} tags for"
                    f" {len(tokens)} tokens"
                )
            proposals.extend(
                TagProposal(i, tag, member.name) for i, tag in enumerate(pattern)
            )
        return ensemble_tag(tokens, proposals, self.table, priority=self.priority)

"""Naming-appraisal rules grounded in observed identifier-pattern tendencies.

Every rule is advisory (Suggestion or Info, never an error): the regularities
they encode are strong tendencies in real code, not laws.

R1 boolean-no-verb      boolean-typed identifier without a verb in its pattern
R2 collection-not-plural collection-typed non-function not ending in a plural
R3 plural-function-note function ends in a plural but returns a non-collection;
                        the plural may refer to the data being operated on
R4 function-no-verb     function name with no verb (implied-verb getter style)
R5 preamble-note        leading token is a known preamble and carries no
                        role information
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import AlignmentError
from .model import Category, Identifier
from .preamble import PreambleLexicon
from .split import SplitError, split
from .tags import GrammarPattern, PosTag
from .typeinfo import is_boolean_type, is_collection_type


class Severity(enum.Enum):
    INFO = "info"
    SUGGESTION = "suggestion"


RULE_IDS = ("R1", "R2", "R3", "R4", "R5")

DEFAULT_SEVERITIES = {
    "R1": Severity.SUGGESTION,
    "R2": Severity.SUGGESTION,
    "R3": Severity.INFO,
    "R4": Severity.SUGGESTION,
    "R5": Severity.INFO,
}

_MESSAGES = {
    "R1": "boolean-typed identifier contains no verb; predicates read better"
    " with one (is/has/can ...)",
    "R2": "collection-typed identifier does not end in a plural; consider a"
    " plural head word",
    "R3": "function ends in a plural but does not return a collection; the"
    " plural may refer to the multiplicity of the data being operated on",
    "R4": "function name contains no verb; the action is implied rather than"
    " stated",
    "R5": "leading token is a preamble; it namespaces the identifier without"
    " describing its role",
}


@dataclass(frozen=True)
class LintContext:
    is_boolean: bool = False
    is_collection: bool = False
    preambles: PreambleLexicon = field(default_factory=PreambleLexicon.hungarian_only)
    system: str | None = None


@dataclass(frozen=True)
class LintConfig:
    enabled: frozenset[str] = frozenset(RULE_IDS)
    severity_overrides: Mapping[str, Severity] = field(default_factory=dict)
    loose_boolean: bool = False

    def severity(self, rule_id: str) -> Severity:
        return self.severity_overrides.get(rule_id, DEFAULT_SEVERITIES[rule_id])


@dataclass(frozen=True)
class LintFinding:
    rule: str
    severity: Severity
    identifier: Identifier
    message: str
    pattern: str
    type_flags: tuple[tuple[str, bool], ...]

    def __post_init__(self) -> None:
        if self.rule not in RULE_IDS:
            raise ValueError(f"unknown rule id: {self.rule}")
        if not self.message:
            raise ValueError("finding message must be non-empty")

    def render(self) -> str:
        return (
            f"{self.identifier.file}:{self.identifier.line}:"
            f" [{self.rule}] {self.identifier.name}: {self.message}"
        )


def context_for(
    ident: Identifier,
    preambles: PreambleLexicon | None = None,
    *,
    loose_boolean: bool = False,
) -> LintContext:
    boolean = collection = False
    if ident.type_name:
        boolean = is_boolean_type(ident.type_name, loose_boolean=loose_boolean)
        collection = is_collection_type(ident.type_name)
    return LintContext(
        is_boolean=boolean,
        is_collection=collection,
        preambles=preambles or PreambleLexicon.hungarian_only(),
        system=ident.system,
    )


def rule_fires(
    rule_id: str,
    category: Category,
    is_boolean: bool,
    is_collection: bool,
    pattern: GrammarPattern,
    leading_is_preamble: bool = False,
) -> bool:
    """Pure firing predicate for one rule."""
    has_verb = PosTag.V in pattern
    ends_plural = pattern.tags[-1] is PosTag.NPL
    is_function = category is Category.FUNCTION
    if rule_id == "R1":
        return is_boolean and not has_verb
    if rule_id == "R2":
        return is_collection and not is_function and not ends_plural
    if rule_id == "R3":
        return is_function and ends_plural and not is_collection
    if rule_id == "R4":
        return is_function and not has_verb
    if rule_id == "R5":
        return leading_is_preamble
    raise ValueError(f"unknown rule id: {rule_id}")


def lint(
    ident: Identifier,
    pattern: GrammarPattern,
    context: LintContext,
    *,
    tokens: Sequence[str] | None = None,
    config: LintConfig = LintConfig(),
) -> list[LintFinding]:
    """Apply every enabled rule to one annotated identifier."""
    if tokens is None:
        try:
            tokens = split(ident.name)
        except SplitError as exc:
            raise AlignmentError(str(exc)) from exc
    if len(tokens) != len(pattern):
        raise AlignmentError(
            f"{ident.name}: {len(tokens)} tokens but {len(pattern)} tags"
        )
    leading_is_preamble = context.preambles.is_preamble(tokens[0], context.system)
    flags = (("boolean", context.is_boolean), ("collection", context.is_collection))
    findings = []
    for rule_id in RULE_IDS:
        if rule_id not in config.enabled:
            continue
        if rule_fires(
            rule_id,
            ident.category,
            context.is_boolean,
            context.is_collection,
            pattern,
            leading_is_preamble,
        ):
            findings.append(
                LintFinding(
                    rule=rule_id,
                    severity=config.severity(rule_id),
                    identifier=ident,
                    message=_MESSAGES[rule_id],
                    pattern=pattern.text,
                    type_flags=flags,
                )
            )
    return findings


def lint_corpus(
    annotated: Iterable[tuple[Identifier, GrammarPattern]],
    preambles: PreambleLexicon | None = None,
    *,
    tokens_by_name: Mapping[str, Sequence[str]] | None = None,
    config: LintConfig = LintConfig(),
) -> tuple[list[LintFinding], dict[str, int]]:
    """Lint a whole annotated set; returns findings plus per-rule counts."""
    findings: list[LintFinding] = []
    for ident, pattern in annotated:
        context = context_for(
            ident, preambles, loose_boolean=config.loose_boolean
        )
        tokens = tokens_by_name.get(ident.name) if tokens_by_name else None
        findings.extend(
            lint(ident, pattern, context, tokens=tokens, config=config)
        )
    findings.sort(
        key=lambda f: (f.identifier.file, f.identifier.line, f.identifier.name, f.rule)
    )
    summary = {rule_id: 0 for rule_id in RULE_IDS}
    for finding in findings:
        summary[finding.rule] += 1
    summary = {rule: count for rule, count in summary.items() if count}
    return findings, summary

"""Corpus-driven detection of preamble tokens.

A preamble namespaces or type-marks an identifier without describing its
role (the "g" in g_assert, Hungarian "m_").  Detection needs corpus context:
a short first token that starts a large share of one system's identifiers,
is not an English word, and is not a known domain term.  Hungarian prefixes
are always treated as preambles regardless of corpus statistics.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from .lexicon import DOMAIN_TERM_ALLOWLIST, HUNGARIAN_PREFIXES, load_dictionary
from .model import Identifier
from .split import SplitError, split


@dataclass(frozen=True)
class PreambleLexicon:
    """Per-system preamble tokens plus the global Hungarian prefix set."""

    per_system: Mapping[str, frozenset[str]] = field(default_factory=dict)
    hungarian: frozenset[str] = HUNGARIAN_PREFIXES
    allowlist: frozenset[str] = DOMAIN_TERM_ALLOWLIST

    def __post_init__(self) -> None:
        clashes = set()
        for tokens in self.per_system.values():
            clashes |= tokens & self.allowlist
        clashes |= self.hungarian & self.allowlist
        if clashes:
            raise ValueError(
                f"allowlist and preamble sets must be disjoint; both contain {sorted(clashes)}"
            )

    def is_preamble(self, token: str, system: str | None = None) -> bool:
        word = token.lower()
        if word in self.allowlist:
            return False
        if word in self.hungarian:
            return True
        if system is not None and word in self.per_system.get(system, frozenset()):
            return True
        return False

    @classmethod
    def hungarian_only(cls, prefixes: Iterable[str] = HUNGARIAN_PREFIXES) -> "PreambleLexicon":
        return cls(per_system={}, hungarian=frozenset(p.lower() for p in prefixes))


def detect_preambles(
    corpus: Iterable[Identifier],
    splitter: Callable[[str], Sequence[str]] = split,
    *,
    min_share: float = 0.25,
    min_ident_count: int = 20,
    max_len: int = 4,
    allowlist: Iterable[str] = DOMAIN_TERM_ALLOWLIST,
    hungarian: Iterable[str] = HUNGARIAN_PREFIXES,
    dictionary: frozenset[str] | None = None,
) -> PreambleLexicon:
    """Build a :class:`PreambleLexicon` from first-token frequencies.

    A first token of length <= ``max_len`` becomes a preamble for a system
    when it starts at least ``min_share`` of that system's identifiers with
    at least ``min_ident_count`` occurrences, is not an English dictionary
    word, and is not allowlisted.
    """
    words = dictionary if dictionary is not None else load_dictionary()
    allow = frozenset(w.lower() for w in allowlist)
    hung = frozenset(w.lower() for w in hungarian)

    totals: Counter[str] = Counter()
    first_tokens: dict[str, Counter[str]] = {}
    for ident in corpus:
        try:
            tokens = splitter(ident.name)
        except SplitError:
            continue
        if not tokens:
            continue
        totals[ident.system] += 1
        first_tokens.setdefault(ident.system, Counter())[tokens[0].lower()] += 1

    per_system: dict[str, frozenset[str]] = {}
    for system, counter in sorted(first_tokens.items()):
        total = totals[system]
        found = set()
        for token, count in counter.items():
            if len(token) > max_len:
                continue
            if count < min_ident_count or count / total < min_share:
                continue
            if token in allow or token in words:
                continue
            found.add(token)
        if found:
            per_system[system] = frozenset(found)
    return PreambleLexicon(per_system=per_system, hungarian=hung, allowlist=allow)

"""Split identifier names into their constituent word tokens.

Boundaries: separator characters (``_``, ``-``, ``$``), lowercase-to-uppercase
transitions, letter/digit transitions, and acronym-to-word transitions
("XMLReader" breaks before "Reader").  One exception keeps domain terms whole:
a digit run stays attached to an immediately preceding all-uppercase run of
length >= 2, so "IPV4" is a single token while "event0" splits in two.

No abbreviation expansion is performed anywhere; curated corrections are
applied through :func:`apply_split_overrides` instead.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import OverrideError, SplitError
from .model import Identifier

SEPARATORS = frozenset("_-$")

_UPPER, _LOWER, _DIGIT = "U", "L", "D"


def _char_class(ch: str) -> str:
    if ch.isdigit():
        return _DIGIT
    if ch.isupper():
        return _UPPER
    # Caseless alphabetic characters group with lowercase.
    return _LOWER


def _runs(segment: str) -> list[tuple[str, str]]:
    runs: list[tuple[str, str]] = []
    start = 0
    current = _char_class(segment[0])
    for i in range(1, len(segment)):
        cls = _char_class(segment[i])
        if cls != current:
            runs.append((current, segment[start:i]))
            start, current = i, cls
    runs.append((current, segment[start:]))
    return runs


def _split_segment(segment: str) -> list[str]:
    tokens: list[str] = []
    runs = _runs(segment)
    i = 0
    while i < len(runs):
        cls, text = runs[i]
        if cls == _UPPER and i + 1 < len(runs) and runs[i + 1][0] == _LOWER:
            # The run's final capital starts the next word: XMLReader -> XML, Reader.
            if len(text) > 1:
                tokens.append(text[:-1])
            tokens.append(text[-1] + runs[i + 1][1])
            i += 2
            continue
        if (
            cls == _DIGIT
            and tokens
            and len(tokens[-1]) >= 2
            and tokens[-1].isupper()
        ):
            tokens[-1] += text
            i += 1
            continue
        tokens.append(text)
        i += 1
    return tokens


def split(name: str) -> list[str]:
    """Split an identifier name into word tokens.

    Raises :class:`SplitError` for empty names, names made solely of
    separator characters, or names containing other illegal characters.
    """
    if not name:
        raise SplitError("cannot split an empty name")
    for ch in name:
        if not (ch.isalnum() or ch in SEPARATORS):
            raise SplitError(f"illegal character {ch!r} in identifier {name!r}")
    segments = [seg for seg in _resplit(name) if seg]
    if not segments:
        raise SplitError(f"name consists only of separators: {name!r}")
    tokens: list[str] = []
    for segment in segments:
        tokens.extend(_split_segment(segment))
    return tokens


def _resplit(name: str) -> list[str]:
    segments, current = [], []
    for ch in name:
        if ch in SEPARATORS:
            segments.append("".join(current))
            current = []
        else:
            current.append(ch)
    segments.append("".join(current))
    return segments


def _strip_separators(name: str) -> str:
    return "".join(ch for ch in name if ch not in SEPARATORS)


def validate_override(name: str, tokens: Sequence[str]) -> None:
    """Check the round-trip invariant for a curated token list."""
    if not tokens or any(not tok for tok in tokens):
        raise OverrideError(f"override for {name!r} contains an empty token")
    for tok in tokens:
        if any(ch in SEPARATORS for ch in tok):
            raise OverrideError(
                f"override token {tok!r} for {name!r} contains a separator"
            )
    joined = "".join(tokens)
    if joined.lower() != _strip_separators(name).lower():
        raise OverrideError(
            f"override tokens {list(tokens)!r} do not reassemble {name!r}"
        )


def apply_split_overrides(
    name: str, tokens: Sequence[str], overrides: Mapping[str, Sequence[str]]
) -> list[str]:
    """Return the curated token list for ``name`` if one exists, else ``tokens``."""
    if name in overrides:
        return list(overrides[name])
    return list(tokens)


def load_split_overrides(path) -> dict[str, list[str]]:
    """Load a two-column CSV of ``raw_name,space_separated_tokens``.

    Every entry is validated against the round-trip invariant at load time.
    """
    overrides: dict[str, list[str]] = {}
    with open(path, newline="", encoding="utf-8") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if len(row) != 2:
                raise OverrideError(
                    f"{path}:{lineno}: expected 2 columns, got {len(row)}"
                )
            name, token_text = row[0].strip(), row[1].strip()
            tokens = token_text.split()
            try:
                validate_override(name, tokens)
            except OverrideError as exc:
                raise OverrideError(f"{path}:{lineno}: {exc}") from None
            overrides[name] = tokens
    return overrides


@dataclass(frozen=True)
class SplitIdentifier:
    """An identifier together with the word tokens recovered from its name."""

    source: Identifier
    tokens: tuple[str, ...]

    def __post_init__(self) -> None:
        validate_override(self.source.name, self.tokens)


def split_identifier(
    ident: Identifier, overrides: Mapping[str, Sequence[str]] | None = None
) -> SplitIdentifier:
    tokens = split(ident.name)
    if overrides:
        tokens = apply_split_overrides(ident.name, tokens, overrides)
    return SplitIdentifier(ident, tuple(tokens))

"""Classify declared types as boolean-like or collection-like.

Both checks work on the raw type text as captured by the scanner, so
qualifiers, pointers, and template arguments are tolerated.
"""

from __future__ import annotations

import re

from .lexicon import has_plural_morphology

COLLECTION_WORDS = frozenset(
    {"list", "map", "dictionary", "collection", "array", "vector", "data", "set"}
)

BOOLEAN_WORDS = frozenset({"bool", "boolean"})

# Integer types accepted as boolean-like under the loose policy.
LOOSE_BOOLEAN_WORDS = frozenset(
    {
        "int", "integer", "short", "long", "byte", "char",
        "int8", "int16", "int32", "int64",
        "uint", "uint8", "uint16", "uint32", "uint64",
        "size_t", "ssize_t", "gint", "guint",
    }
)

_WORD_RE = re.compile(r"[A-Za-z]+|[0-9]+")


def _type_words(type_name: str) -> list[str]:
    """Camel- and punctuation-split words of a type string, lowercased."""
    words: list[str] = []
    for chunk in _WORD_RE.findall(type_name):
        for part in re.findall(r"[A-Z]+(?![a-z])|[A-Z][a-z]*|[a-z]+|[0-9]+", chunk):
            words.append(part.lower())
    return words


def is_boolean_type(type_name: str, *, loose_boolean: bool = False) -> bool:
    """True for bool/boolean/Boolean/BOOL; with ``loose_boolean`` also for
    integer types, which are often used as flags."""
    if not type_name:
        raise ValueError("type_name must be non-empty")
    words = set(_type_words(type_name))
    # Suffix match also catches single-word aliases like gboolean.
    if any(w in BOOLEAN_WORDS or w.endswith("bool") or w.endswith("boolean") for w in words):
        return True
    if loose_boolean:
        joined = re.sub(r"\s+", "", type_name.lower())
        if words & LOOSE_BOOLEAN_WORDS or joined in {"size_t", "ssize_t"}:
            return True
    return False


def is_collection_type(type_name: str) -> bool:
    """True when the type text mentions a collection word, the type's final
    word is plural, or the declarator carried array brackets."""
    if not type_name:
        raise ValueError("type_name must be non-empty")
    if "[" in type_name:
        return True
    words = _type_words(type_name)
    if any(word in COLLECTION_WORDS for word in words):
        return True
    # The final word of the base type decides plurality; template arguments
    # like <Item> would otherwise mask it, so inspect the pre-template part.
    base = type_name.split("<", 1)[0]
    base_words = _type_words(base) or words
    return bool(base_words) and has_plural_morphology(base_words[-1])

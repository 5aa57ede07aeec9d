"""Domain types for extracted identifiers.

An :class:`Identifier` is one named declaration pulled out of source code,
carrying the declaration category, the language it came from, its type
context (declared type, or return type for functions), and its location.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterator, Mapping

_NAME_RE = re.compile(r"^[^\W\d][\w$]*$|^\$[\w$]*$", re.UNICODE)


class Category(enum.Enum):
    """The five declaration categories analyzed by this package."""

    CLASS = "class"
    FUNCTION = "function"
    PARAMETER = "parameter"
    ATTRIBUTE = "attribute"
    DECLARATION = "declaration"

    @classmethod
    def parse(cls, text: str) -> "Category":
        key = text.strip().lower().replace("-", "").replace("_", "").replace(" ", "")
        aliases = {
            "class": cls.CLASS,
            "function": cls.FUNCTION,
            "method": cls.FUNCTION,
            "parameter": cls.PARAMETER,
            "attribute": cls.ATTRIBUTE,
            "field": cls.ATTRIBUTE,
            "declaration": cls.DECLARATION,
            "declarationstatement": cls.DECLARATION,
            "decl": cls.DECLARATION,
            "decls": cls.DECLARATION,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown identifier category: {text!r}") from None


class Language(enum.Enum):
    C = "C"
    CPP = "C++"
    JAVA = "Java"
    CSHARP = "C#"
    UNKNOWN = "Unknown"

    @classmethod
    def parse(cls, text: str) -> "Language":
        key = text.strip().lower()
        aliases = {
            "c": cls.C,
            "c++": cls.CPP,
            "cpp": cls.CPP,
            "java": cls.JAVA,
            "c#": cls.CSHARP,
            "cs": cls.CSHARP,
            "csharp": cls.CSHARP,
            "unknown": cls.UNKNOWN,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown language: {text!r}") from None


# File extensions the scanner recognizes.  .h is treated as C even though it
# may hide C++ in the wild; tightening this requires content inspection.
EXTENSION_LANGUAGES: Mapping[str, Language] = {
    ".c": Language.C,
    ".h": Language.C,
    ".cpp": Language.CPP,
    ".hpp": Language.CPP,
    ".cc": Language.CPP,
    ".hh": Language.CPP,
    ".java": Language.JAVA,
    ".cs": Language.CSHARP,
}


@dataclass(frozen=True)
class Identifier:
    """One extracted name with its category, type context, and location."""

    name: str
    category: Category
    language: Language
    type_name: str | None = None
    file: str = ""
    line: int = 1
    system: str = ""

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("identifier name must be non-empty")
        if not _NAME_RE.match(self.name):
            raise ValueError(f"not a legal identifier name: {self.name!r}")
        if self.line < 1:
            raise ValueError(f"line must be positive, got {self.line}")

    def to_record(self) -> dict:
        return {
            "name": self.name,
            "category": self.category.value,
            "language": self.language.value,
            "type_name": self.type_name,
            "file": self.file,
            "line": self.line,
            "system": self.system,
        }

    @classmethod
    def from_record(cls, record: Mapping) -> "Identifier":
        return cls(
            name=record["name"],
            category=Category.parse(record["category"]),
            language=Language.parse(record["language"]),
            type_name=record.get("type_name"),
            file=record.get("file", ""),
            line=int(record.get("line", 1)),
            system=record.get("system", ""),
        )


def _sort_key(ident: Identifier):
    return (ident.file, ident.line, ident.name, ident.category.value)


@dataclass(frozen=True)
class IdentifierSet:
    """A deterministically ordered collection of identifiers plus scan provenance."""

    entries: tuple[Identifier, ...]
    provenance: Mapping[str, object] = field(default_factory=dict)
    warnings: tuple[str, ...] = ()

    @classmethod
    def build(cls, identifiers, provenance=None, warnings=()) -> "IdentifierSet":
        ordered = tuple(sorted(identifiers, key=_sort_key))
        return cls(ordered, dict(provenance or {}), tuple(warnings))

    def __iter__(self) -> Iterator[Identifier]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def category_counts(self) -> dict[Category, int]:
        counts: dict[Category, int] = {}
        for ident in self.entries:
            counts[ident.category] = counts.get(ident.category, 0) + 1
        return counts

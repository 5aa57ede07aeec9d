"""Scan a source tree for identifier declarations in the five categories.

Test code is excluded: any directory, file, class, or function whose name
contains the word "test" is skipped, where "contains" means a word-boundary
token match after camel/underscore splitting ("attestation" survives,
"TestCase" does not).
"""

from __future__ import annotations

import os
import re
import sys
from dataclasses import dataclass, replace

from .declparse import parse_source
from .errors import ConfigError, ScanError
from .model import EXTENSION_LANGUAGES, Category, Identifier, IdentifierSet, Language
from .split import SplitError, split

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

TEST_TOKENS = frozenset({"test", "tests", "testing"})

_WORD_CHUNK_RE = re.compile(r"[A-Za-z0-9]+")


def _name_tokens(text: str) -> list[str]:
    tokens: list[str] = []
    for chunk in _WORD_CHUNK_RE.findall(text):
        try:
            tokens.extend(split(chunk))
        except SplitError:
            continue
    return tokens


def is_test_artifact(path_or_name: str) -> bool:
    """True when any path segment, file stem, or name carries a "test" token."""
    segments = re.split(r"[/\\]+", path_or_name)
    for i, segment in enumerate(segments):
        if not segment:
            continue
        if i == len(segments) - 1 and "." in segment:
            segment = segment.rsplit(".", 1)[0]
        if any(tok.lower() in TEST_TOKENS for tok in _name_tokens(segment)):
            return True
    return False


DEFAULT_LANGUAGES = (Language.C, Language.CPP, Language.JAVA, Language.CSHARP)


@dataclass(frozen=True)
class ScanConfig:
    languages: tuple[Language, ...] = DEFAULT_LANGUAGES
    system: str | None = None
    exclude_tests: bool = True
    loose_boolean: bool = False
    encoding: str = "utf-8"

    def __post_init__(self) -> None:
        if not self.languages:
            raise ConfigError("at least one language must be included")

    @classmethod
    def from_file(cls, path) -> "ScanConfig":
        """Read a [scan] table from a TOML config file."""
        try:
            with open(path, "rb") as fh:
                data = tomllib.load(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read config file {path}: {exc}") from exc
        except tomllib.TOMLDecodeError as exc:
            raise ConfigError(f"invalid config file {path}: {exc}") from exc
        section = data.get("scan", data)
        kwargs = {}
        if "languages" in section:
            try:
                kwargs["languages"] = tuple(
                    Language.parse(item) for item in section["languages"]
                )
            except ValueError as exc:
                raise ConfigError(str(exc)) from exc
        for key in ("system", "exclude_tests", "loose_boolean", "encoding"):
            if key in section:
                kwargs[key] = section[key]
        return cls(**kwargs)

    def override(self, **kwargs) -> "ScanConfig":
        supplied = {k: v for k, v in kwargs.items() if v is not None}
        return replace(self, **supplied) if supplied else self


def _language_for(path: str, config: ScanConfig) -> Language | None:
    _, ext = os.path.splitext(path)
    language = EXTENSION_LANGUAGES.get(ext.lower())
    if language is None or language not in config.languages:
        return None
    return language


def scan_corpus(root, config: ScanConfig | None = None) -> IdentifierSet:
    """Extract every non-test identifier declaration under ``root``.

    Unreadable roots abort the scan; individual files that cannot be read
    are skipped and recorded as warnings on the returned set.
    """
    config = config or ScanConfig()
    root = os.fspath(root)
    if not os.path.isdir(root) or not os.access(root, os.R_OK):
        raise ScanError(f"corpus root is not a readable directory: {root}")
    system = config.system if config.system is not None else os.path.basename(
        os.path.abspath(root)
    )

    identifiers: list[Identifier] = []
    warnings: list[str] = []
    for dirpath, dirnames, filenames in os.walk(root):
        if config.exclude_tests:
            dirnames[:] = [d for d in dirnames if not is_test_artifact(d)]
        dirnames.sort()
        for filename in sorted(filenames):
            full = os.path.join(dirpath, filename)
            rel = os.path.relpath(full, root).replace(os.sep, "/")
            language = _language_for(filename, config)
            if language is None:
                continue
            if config.exclude_tests and is_test_artifact(rel):
                continue
            try:
                with open(full, encoding=config.encoding, errors="strict") as fh:
                    text = fh.read()
            except (OSError, UnicodeDecodeError) as exc:
                warnings.append(f"{rel}: skipped ({exc})")
                continue
            try:
                decls = parse_source(text, language)
            except Exception as exc:  # defensive: a bad file must not kill the scan
                warnings.append(f"{rel}: parse failed ({exc})")
                continue
            for decl in decls:
                if config.exclude_tests:
                    if any(is_test_artifact(name) for name in decl.enclosing):
                        continue
                    if decl.category in (Category.CLASS, Category.FUNCTION):
                        if is_test_artifact(decl.name):
                            continue
                try:
                    identifiers.append(
                        Identifier(
                            name=decl.name,
                            category=decl.category,
                            language=language,
                            type_name=decl.type_name,
                            file=rel,
                            line=decl.line,
                            system=system,
                        )
                    )
                except ValueError:
                    continue

    provenance = {
        "root": root,
        "system": system,
        "languages": [lang.value for lang in config.languages],
        "exclude_tests": config.exclude_tests,
        "loose_boolean": config.loose_boolean,
    }
    return IdentifierSet.build(identifiers, provenance, warnings)

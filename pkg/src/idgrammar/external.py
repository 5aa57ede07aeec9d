"""Adapter for external Penn-Treebank taggers.

Protocol: line-oriented over a child process (or any object exposing
``request(line) -> line``).  One request is the space-joined tokens on a
single line; one response is the same number of ``token/PENNTAG`` pairs
separated by single spaces.  Function identifiers are submitted with a
leading "I" token so the tagger reads the name as an action ("I run user
query"); the annotation for the padding token is discarded.
"""

from __future__ import annotations

import os
import shlex
import subprocess
from typing import Protocol, Sequence

from .errors import AdapterError, AdapterProtocolError, AlignmentError
from .model import Category
from .split import SplitIdentifier
from .tags import GrammarPattern, resolve_penn_text
from .tagging import TagContext

ADAPTER_CMD_ENV = "IDGRAMMAR_ADAPTER_CMD"


class ExternalTagger(Protocol):
    def request(self, line: str) -> str: ...


class SubprocessTagger:
    """Line-protocol tagger over a child process.

    Holds one in-flight request at a time; create one instance per worker
    for parallel use.
    """

    def __init__(self, command: str | Sequence[str]):
        argv = shlex.split(command) if isinstance(command, str) else list(command)
        if not argv:
            raise AdapterError("adapter command is empty")
        try:
            self._proc = subprocess.Popen(
                argv,
                stdin=subprocess.PIPE,
                stdout=subprocess.PIPE,
                text=True,
                bufsize=1,
            )
        except OSError as exc:
            raise AdapterError(f"cannot start adapter {argv[0]!r}: {exc}") from exc

    def request(self, line: str) -> str:
        proc = self._proc
        if proc.poll() is not None:
            raise AdapterError("adapter process has exited")
        try:
            assert proc.stdin is not None and proc.stdout is not None
            proc.stdin.write(line + "\n")
            proc.stdin.flush()
            response = proc.stdout.readline()
        except (OSError, ValueError) as exc:
            raise AdapterError(f"adapter I/O failed: {exc}") from exc
        if response == "":
            raise AdapterError("adapter closed the stream")
        return response.rstrip("\n")

    def close(self) -> None:
        proc = self._proc
        if proc.poll() is None:
            if proc.stdin is not None:
                proc.stdin.close()
            try:
                proc.wait(timeout=5)
            except subprocess.TimeoutExpired:
                proc.kill()
                proc.wait()

    def __enter__(self) -> "SubprocessTagger":
        return self

    def __exit__(self, *exc_info) -> None:
        self.close()


def adapter_from_env() -> SubprocessTagger:
    command = os.environ.get(ADAPTER_CMD_ENV, "")
    if not command:
        raise AdapterError(f"no adapter command; set {ADAPTER_CMD_ENV}")
    return SubprocessTagger(command)


def _parse_response(line: str, sent_tokens: Sequence[str], name: str) -> list[str]:
    pairs = [p for p in line.split(" ") if p]
    tags: list[str] = []
    for pair in pairs:
        token, sep, tag = pair.rpartition("/")
        if not sep or not token or not tag:
            raise AdapterProtocolError(
                f"malformed response pair {pair!r} for identifier {name!r}"
            )
        tags.append(tag)
    if len(tags) != len(sent_tokens):
        raise AlignmentError(
            f"adapter returned {len(tags)} tags for {len(sent_tokens)} tokens"
            f" of identifier {name!r}"
        )
    return tags


def external_tag(
    tokens: Sequence[str] | SplitIdentifier,
    context: TagContext,
    adapter: ExternalTagger,
) -> GrammarPattern:
    """Tag a split identifier through an external Penn tagger."""
    name = "<unknown>"
    if isinstance(tokens, SplitIdentifier):
        name = tokens.source.name
        tokens = tokens.tokens
    else:
        name = " ".join(tokens)
    if not tokens:
        raise ValueError("cannot tag an identifier with no tokens")

    prepend = context.category is Category.FUNCTION
    sent = (["I"] if prepend else []) + list(tokens)
    try:
        response = adapter.request(" ".join(sent))
    except (AdapterError, AlignmentError):
        raise
    except Exception as exc:
        raise AdapterError(f"adapter failed on identifier {name!r}: {exc}") from exc

    penn_texts = _parse_response(response, sent, name)
    if prepend:
        penn_texts = penn_texts[1:]
    tags = tuple(resolve_penn_text(text, context.category) for text in penn_texts)
    return GrammarPattern(tags)


class ExternalTaggerRunner:
    """Callable wrapper pairing an adapter with the tagger interface."""

    name = "external"

    def __init__(self, adapter: ExternalTagger):
        self.adapter = adapter

    def tag(self, tokens: Sequence[str], context: TagContext) -> GrammarPattern:
        return external_tag(tokens, context, self.adapter)

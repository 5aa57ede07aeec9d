"""The built-in heuristic tagger.

Tags are assigned per token by a fixed priority: digits, then preambles,
then closed-class words, then plural morphology on the head token, then the
verb rule (leading token of a function, or any token of a boolean-typed
identifier, when the token is a known verb), and finally the noun-phrase
default of NM for non-final tokens and N for the final token.  That default
reflects how overwhelmingly identifiers are noun phrases whose head-noun
sits rightmost.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .lexicon import closed_class_tag, has_plural_morphology, is_verb
from .model import Category, Identifier
from .preamble import PreambleLexicon
from .split import SplitIdentifier
from .tags import GrammarPattern, PosTag
from .typeinfo import is_boolean_type, is_collection_type


@dataclass(frozen=True)
class TagContext:
    """Per-identifier facts the taggers may consult."""

    category: Category
    is_boolean: bool = False
    is_collection: bool = False
    preambles: PreambleLexicon = field(default_factory=PreambleLexicon.hungarian_only)
    system: str | None = None


def context_for(
    ident: Identifier,
    preambles: PreambleLexicon | None = None,
    *,
    loose_boolean: bool = False,
) -> TagContext:
    """Derive a :class:`TagContext` from an identifier's type information."""
    boolean = collection = False
    if ident.type_name:
        boolean = is_boolean_type(ident.type_name, loose_boolean=loose_boolean)
        collection = is_collection_type(ident.type_name)
    return TagContext(
        category=ident.category,
        is_boolean=boolean,
        is_collection=collection,
        preambles=preambles or PreambleLexicon.hungarian_only(),
        system=ident.system,
    )


def heuristic_tag(
    tokens: Sequence[str] | SplitIdentifier,
    context: TagContext,
    *,
    interior_plurals: bool = False,
) -> GrammarPattern:
    """Tag one split identifier; total over all inputs with >= 1 token."""
    if isinstance(tokens, SplitIdentifier):
        tokens = tokens.tokens
    if not tokens:
        raise ValueError("cannot tag an identifier with no tokens")

    tags: list[PosTag] = []
    leading_preamble_run = True
    first_content_seen = False
    for index, token in enumerate(tokens):
        is_final = index == len(tokens) - 1
        word = token.lower()

        if token.isdigit():
            tags.append(PosTag.D)
            leading_preamble_run = False
            continue

        # A preamble must precede something: never the final token.
        if (
            leading_preamble_run
            and not is_final
            and context.preambles.is_preamble(word, context.system)
        ):
            tags.append(PosTag.PRE)
            continue
        leading_preamble_run = False

        closed = closed_class_tag(word)
        if closed is not None:
            tags.append(closed)
            first_content_seen = True
            continue

        if (is_final or interior_plurals) and has_plural_morphology(word):
            tags.append(PosTag.NPL)
            first_content_seen = True
            continue

        verb_position = (
            context.category is Category.FUNCTION and not first_content_seen
        ) or context.is_boolean
        first_content_seen = True
        if verb_position and is_verb(word):
            tags.append(PosTag.V)
            continue

        tags.append(PosTag.N if is_final else PosTag.NM)

    return GrammarPattern(tuple(tags))


class HeuristicTagger:
    """Callable wrapper so the heuristic composes with the other taggers."""

    name = "heuristic"

    def __init__(self, *, interior_plurals: bool = False):
        self.interior_plurals = interior_plurals

    def tag(self, tokens: Sequence[str], context: TagContext) -> GrammarPattern:
        return heuristic_tag(
            tokens, context, interior_plurals=self.interior_plurals
        )

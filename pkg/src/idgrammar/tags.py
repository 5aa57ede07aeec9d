"""The reduced part-of-speech tagset, grammar patterns, and the Penn Treebank mapping.

The reduced set has 11 annotations.  NM covers both pure adjectives and
noun-adjuncts (nouns used adjectivally, e.g. "bit" in bitSet); PRE marks
preambles, which have no counterpart in general-language tagsets.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import PatternParseError, UnknownTagError
from .model import Category

logger = logging.getLogger(__name__)


class PosTag(enum.Enum):
    N = "N"        # noun
    DT = "DT"      # determiner
    CJ = "CJ"      # conjunction
    P = "P"        # preposition
    NPL = "NPL"    # plural noun
    NM = "NM"      # noun modifier (adjective or noun-adjunct)
    V = "V"        # verb
    VM = "VM"      # verb modifier (adverb)
    PR = "PR"      # pronoun
    D = "D"        # digit
    PRE = "PRE"    # preamble

    @classmethod
    def parse(cls, text: str) -> "PosTag":
        try:
            return cls(text)
        except ValueError:
            raise UnknownTagError(f"unknown part-of-speech tag: {text!r}") from None


@dataclass(frozen=True)
class GrammarPattern:
    """An ordered tag sequence, one tag per word token of an identifier."""

    tags: tuple[PosTag, ...]

    def __post_init__(self) -> None:
        if not self.tags:
            raise ValueError("a grammar pattern must contain at least one tag")

    @property
    def text(self) -> str:
        return format_pattern(self)

    def __len__(self) -> int:
        return len(self.tags)

    def __iter__(self) -> Iterator[PosTag]:
        return iter(self.tags)

    def __contains__(self, tag: PosTag) -> bool:
        return tag in self.tags

    def __str__(self) -> str:
        return self.text


def pattern_of(*tags: PosTag) -> GrammarPattern:
    return GrammarPattern(tuple(tags))


def parse_pattern(text: str) -> GrammarPattern:
    """Parse a space-separated tag string such as ``"NM NM N"``."""
    tokens = text.split()
    if not tokens:
        raise PatternParseError("empty grammar pattern text")
    tags = []
    for token in tokens:
        try:
            tags.append(PosTag(token))
        except ValueError:
            raise PatternParseError(
                f"unknown tag {token!r} in pattern {text!r}"
            ) from None
    return GrammarPattern(tuple(tags))


def format_pattern(pattern: GrammarPattern) -> str:
    """Render a pattern in the canonical space-separated abbreviations."""
    return " ".join(tag.value for tag in pattern.tags)


class PennTag(enum.Enum):
    """The 27 Penn Treebank annotations this package maps onto the reduced set."""

    CC = "CC"          # coordinating conjunction
    CD = "CD"          # cardinal number
    DT = "DT"          # determiner
    FW = "FW"          # foreign word
    IN = "IN"          # preposition / subordinating conjunction
    JJ = "JJ"          # adjective
    JJR = "JJR"        # comparative adjective
    JJS = "JJS"        # superlative adjective
    LS = "LS"          # list item marker
    MD = "MD"          # modal
    NN = "NN"          # noun, singular
    NNP = "NNP"        # proper noun
    NNPS = "NNPS"      # proper noun, plural
    NNS = "NNS"        # noun, plural
    PRP = "PRP"        # personal pronoun
    PRP_POSS = "PRP$"  # possessive pronoun
    RB = "RB"          # adverb
    RBR = "RBR"        # comparative adverb
    RP = "RP"          # particle
    SYM = "SYM"        # symbol
    TO = "TO"          # "to"
    VB = "VB"          # verb, base form
    VBD = "VBD"        # verb, past tense
    VBG = "VBG"        # verb, gerund / present participle
    VBN = "VBN"        # verb, past participle
    VBP = "VBP"        # verb, non-3rd person present
    VBZ = "VBZ"        # verb, 3rd person present

    @classmethod
    def parse(cls, text: str) -> "PennTag":
        try:
            return cls(text)
        except ValueError:
            raise UnknownTagError(f"unknown Penn Treebank tag: {text!r}") from None


# Past-tense and participle forms read as verbs in function names and as
# adjectives everywhere else (sortedIndicesBuf, waitingList, adjustedGradient).
CONTEXT_SENSITIVE_PENN = frozenset({PennTag.VBD, PennTag.VBG, PennTag.VBN})

_PENN_TO_REDUCED = {
    PennTag.CC: PosTag.CJ,
    PennTag.CD: PosTag.D,
    PennTag.DT: PosTag.DT,
    PennTag.FW: PosTag.N,
    PennTag.IN: PosTag.P,
    PennTag.JJ: PosTag.NM,
    PennTag.JJR: PosTag.NM,
    PennTag.JJS: PosTag.NM,
    PennTag.LS: PosTag.N,
    PennTag.MD: PosTag.V,
    PennTag.NN: PosTag.N,
    PennTag.NNP: PosTag.N,
    PennTag.NNPS: PosTag.NPL,
    PennTag.NNS: PosTag.NPL,
    PennTag.PRP: PosTag.PR,
    PennTag.PRP_POSS: PosTag.PR,
    PennTag.RB: PosTag.VM,
    PennTag.RBR: PosTag.VM,
    PennTag.RP: PosTag.VM,
    PennTag.SYM: PosTag.N,
    PennTag.TO: PosTag.P,
    PennTag.VB: PosTag.V,
    PennTag.VBP: PosTag.V,
    PennTag.VBZ: PosTag.V,
}

# Penn annotations a general-language tagger can emit that fall outside the
# mapped set.  These coerce to N with a warning rather than failing the run.
EXTENDED_PENN_TAGS = frozenset(
    {"EX", "PDT", "POS", "RBS", "UH", "WDT", "WP", "WP$", "WRB"}
)


def map_penn_tag(tag: PennTag, category: Category) -> PosTag:
    """Map a Penn annotation to the reduced set.

    VBD/VBG/VBN are category-sensitive: they map to V for function
    identifiers and to NM for every other category.
    """
    if tag in CONTEXT_SENSITIVE_PENN:
        return PosTag.V if category is Category.FUNCTION else PosTag.NM
    return _PENN_TO_REDUCED[tag]


def resolve_penn_text(text: str, category: Category) -> PosTag:
    """Map raw tag text from an external tagger, failing soft on exotic tags."""
    try:
        tag = PennTag(text)
    except ValueError:
        if text in EXTENDED_PENN_TAGS:
            logger.warning("unmapped Penn tag %s coerced to N", text)
            return PosTag.N
        raise UnknownTagError(f"unknown Penn Treebank tag: {text!r}") from None
    return map_penn_tag(tag, category)


def map_penn_pattern(tags: Sequence[PennTag], category: Category) -> GrammarPattern:
    return GrammarPattern(tuple(map_penn_tag(t, category) for t in tags))

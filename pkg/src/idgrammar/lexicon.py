"""Word lists backing the heuristic tagger and the analysis passes.

Provenance: the closed-class sets are standard English function words trimmed
to forms that plausibly appear inside identifier names; contested words are
pinned to one tag each ("for" reads prepositionally in names like
waitForEvent, so it lives under P rather than CJ).  The verb set is a curated
list of base-form verbs common in code, deliberately excluding words that are
predominantly nouns in identifiers (frame, list, name, count, ...) because the
tagger consults this set only to decide between V and the noun tags.  The
Hungarian prefix set follows widely documented naming-convention prefixes.
"""

from __future__ import annotations

import importlib.resources
from functools import lru_cache

from .tags import PosTag

PREPOSITIONS = frozenset("""
    about above across after against along amid among around as at before
    behind below beneath beside besides between beyond by despite during
    except for from in inside into near of off on onto over past per since
    through throughout till to toward towards under underneath until unto
    upon versus via whether with within without
""".split())

DETERMINERS = frozenset("""
    a all an another any both each either every neither no none some that
    the these this those which
""".split())

CONJUNCTIONS = frozenset("and but nor or so yet".split())

PRONOUNS = frozenset("""
    he her hers him his it its mine my she their theirs them they we you
    your yours
""".split())

VERBS = frozenset("""
    abort accept acquire activate add adjust advance aggregate allocate allow
    am analyze append apply are assert assign attach authenticate authorize
    await be been begin bind broadcast build calculate call can cancel
    capture cast catch change check choose clamp clean clear clone close
    collect combine commit compare compile complete compose compute compress
    concat concatenate configure confirm connect construct consume contains
    convert copy could create deactivate deallocate decode decompress
    decrement decrypt delete dequeue derive deserialize destroy detach detect
    determine did disable discard disconnect dispatch display dispose divide
    do does drain draw drop dump duplicate emit enable encode encrypt ends
    enqueue ensure enumerate equals erase escape evaluate examine exclude
    exec execute exists exit expand expect expire export extend extract fail
    fetch fill filter finalize find finish fire fix flatten flip flush fold
    force format forward free freeze generate get grant grow had halt handle
    has have hide hold identify ignore import increment indent init
    initialize inject insert inspect install instantiate interpolate
    interrupt intersect invalidate invert invoke is iterate join keep kill
    launch listen load lock log look make mark match may measure merge
    migrate might minimize modify move multiply must navigate need needs
    normalize notify observe obtain open optimize overwrite pack pad paint
    parse pause peek perform persist ping poll pop populate post prepare
    prepend print process produce propagate protect prune publish pull purge
    push put quit raise read rebuild receive recompute reconnect recover
    redo reduce refresh register reject release reload remove rename render
    repaint repeat replace require reset resize resolve restart restore
    resume retain retrieve retry return revert rewind rotate run sanitize
    save scale scan schedule scroll seek select send serialize set shall
    should show shrink shut sign simulate skip sleep sort spawn split start
    starts stop store strip submit subscribe subtract succeed suspend swap
    sync synchronize take terminate test throw toggle tokenize touch track
    transform translate traverse trim truncate try turn unbind undo unescape
    uninstall unload unlock unregister unsubscribe unwrap update upload use
    validate verify visit wait wake walk want wants warn was watch were will
    wipe would wrap write yield
""".split())

# Single-character and short prefixes used by Hungarian-style conventions to
# mark type or membership (m_ members, p pointers, f floats, g globals, ...).
HUNGARIAN_PREFIXES = frozenset("""
    b c cb cr cx dw f fn g h i l lp m n p s sz tm u ul w x y
""".split())

# Domain terms that look preamble-like in some systems (frequent leading
# tokens) but specialize the words after them, so they must never be demoted.
DOMAIN_TERM_ALLOWLIST = frozenset("""
    xml json html http https url uri api sql css io db
""".split())

IRREGULAR_PLURALS = frozenset("""
    alumni appendices bacteria cacti children corpora criteria data dice feet
    fungi geese indices matrices maxima media men mice minima nuclei oxen
    people phenomena radii stimuli teeth vertices women
""".split())

# Words ending in a bare "s" that are not plurals; endings the morphology
# check already rejects (-ss, -us, -is, length < 3) are not repeated here.
NON_PLURAL_S_WORDS = frozenset("""
    abs alias always atlas bias canvas chaos cls contains cos cosmos ends
    equals exists gas goes has hers its lens needs news ours perhaps pos res
    series species starts sys theirs thus wants was whereas yes yours
""".split())


def _build_closed_class() -> dict[str, PosTag]:
    table: dict[str, PosTag] = {}
    for words, tag in (
        (DETERMINERS, PosTag.DT),
        (PRONOUNS, PosTag.PR),
        (CONJUNCTIONS, PosTag.CJ),
        (PREPOSITIONS, PosTag.P),
    ):
        for word in words:
            if word in table:
                raise AssertionError(f"closed-class sets overlap on {word!r}")
            table[word] = tag
    return table


CLOSED_CLASS: dict[str, PosTag] = _build_closed_class()


def closed_class_tag(token: str) -> PosTag | None:
    """The P/DT/CJ/PR tag for a closed-class word, or None."""
    return CLOSED_CLASS.get(token.lower())


def is_verb(token: str) -> bool:
    return token.lower() in VERBS


def has_plural_morphology(token: str) -> bool:
    """Surface check for plural form.

    Ends-in-s with exclusions for -ss/-us/-is endings and a short list of
    non-plural s-final words, plus an irregular-plural list, so that "cols"
    and "indices" read plural while "class" and "status" do not.
    """
    word = token.lower()
    if word in IRREGULAR_PLURALS:
        return True
    if word in NON_PLURAL_S_WORDS:
        return False
    return (
        len(word) >= 3
        and word.endswith("s")
        and not word.endswith("ss")
        and not word.endswith("us")
        and not word.endswith("is")
    )


def singularize(token: str) -> str:
    """Best-effort singular form used for dictionary lookups."""
    word = token.lower()
    if word.endswith("ies") and len(word) > 4:
        return word[:-3] + "y"
    if word.endswith("es") and len(word) > 3:
        return word[:-2]
    if has_plural_morphology(word):
        return word[:-1]
    return word


@lru_cache(maxsize=None)
def default_dictionary() -> frozenset[str]:
    """The bundled English word list (lowercase)."""
    text = (
        importlib.resources.files("idgrammar.data")
        .joinpath("english_words.txt")
        .read_text(encoding="utf-8")
    )
    return frozenset(
        line.strip().lower()
        for line in text.splitlines()
        if line.strip() and not line.startswith("#")
    )


def load_dictionary(path=None) -> frozenset[str]:
    """Load a one-word-per-line dictionary file, or the bundled default."""
    if path is None:
        return default_dictionary()
    with open(path, encoding="utf-8") as fh:
        words = frozenset(
            line.strip().lower()
            for line in fh
            if line.strip() and not line.startswith("#")
        )
    if not words:
        raise ValueError(f"dictionary file {path} contains no words")
    return words


def in_dictionary(token: str, words: frozenset[str]) -> bool:
    """Morphology-tolerant membership: tries the token, then the singular,
    then common -ing/-ed strippings."""
    word = token.lower()
    if not word.isalpha():
        return False
    if word in words:
        return True
    singular = singularize(word)
    if singular != word and singular in words:
        return True
    for suffix, restores in (("ing", ("", "e")), ("ed", ("", "e"))):
        if word.endswith(suffix) and len(word) > len(suffix) + 2:
            stem = word[: -len(suffix)]
            for restore in restores:
                if stem + restore in words:
                    return True
            if len(stem) > 2 and stem[-1] == stem[-2] and stem[:-1] in words:
                return True
    return False

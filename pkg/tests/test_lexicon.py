import pytest

from idgrammar.lexicon import (
    CLOSED_CLASS,
    closed_class_tag,
    default_dictionary,
    has_plural_morphology,
    in_dictionary,
    is_verb,
    load_dictionary,
    singularize,
)
from idgrammar.tags import PosTag


@pytest.mark.parametrize(
    "token,expected",
    [
        ("cols", True),
        ("items", True),
        ("indices", True),
        ("children", True),
        ("data", True),
        ("contexts", True),
        ("matchers", True),
        ("class", False),
        ("address", False),
        ("status", False),
        ("is", False),
        ("has", False),
        ("was", False),
        ("this", False),
        ("analysis", False),
        ("bus", False),
        ("pos", False),
        ("xs", False),
        ("s", False),
    ],
)
def test_plural_morphology(token, expected):
    assert has_plural_morphology(token) is expected


def test_plural_morphology_is_case_insensitive():
    assert has_plural_morphology("Items")
    assert has_plural_morphology("INDICES")


@pytest.mark.parametrize(
    "word,tag",
    [
        ("for", PosTag.P),
        ("in", PosTag.P),
        ("to", PosTag.P),
        ("per", PosTag.P),
        ("and", PosTag.CJ),
        ("or", PosTag.CJ),
        ("the", PosTag.DT),
        ("all", PosTag.DT),
        ("this", PosTag.DT),
        ("which", PosTag.DT),
        ("it", PosTag.PR),
        ("their", PosTag.PR),
    ],
)
def test_closed_class_assignments(word, tag):
    assert closed_class_tag(word) is tag
    assert closed_class_tag(word.upper()) is tag


def test_closed_class_misses_return_none():
    assert closed_class_tag("token") is None
    assert closed_class_tag("is") is None  # verb, not closed class


def test_closed_class_only_emits_the_four_function_tags():
    assert set(CLOSED_CLASS.values()) == {PosTag.P, PosTag.DT, PosTag.CJ, PosTag.PR}


@pytest.mark.parametrize("word", ["get", "set", "is", "has", "assert", "run", "check"])
def test_core_verbs_present(word):
    assert is_verb(word)


@pytest.mark.parametrize("word", ["frame", "first", "user", "token", "num", "list"])
def test_noun_dominant_words_absent_from_verb_lexicon(word):
    assert not is_verb(word)


def test_singularize():
    assert singularize("tokens") == "token"
    assert singularize("entries") == "entry"
    assert singularize("classes") == "class"
    assert singularize("status") == "status"


def test_default_dictionary_loads_and_caches():
    words = default_dictionary()
    assert len(words) > 2000
    assert "token" in words
    assert "tkn" not in words
    assert default_dictionary() is words


def test_in_dictionary_morphology():
    words = default_dictionary()
    assert in_dictionary("token", words)
    assert in_dictionary("tokens", words)
    assert in_dictionary("running", words)
    assert in_dictionary("sorted", words)
    assert not in_dictionary("tkn", words)
    assert not in_dictionary("grpc", words)
    assert not in_dictionary("42", words)


def test_load_dictionary_from_file(tmp_path):
    path = tmp_path / "words.txt"
    path.write_text("# comment\nalpha\nBeta\n\n")
    assert load_dictionary(path) == frozenset({"alpha", "beta"})


def test_load_dictionary_rejects_empty_file(tmp_path):
    path = tmp_path / "empty.txt"
    path.write_text("")
    with pytest.raises(ValueError):
        load_dictionary(path)

import pytest

from idgrammar.model import Category, Identifier, Language
from idgrammar.preamble import PreambleLexicon, detect_preambles


def _corpus(names_by_system):
    idents = []
    for system, names in names_by_system.items():
        for i, name in enumerate(names):
            idents.append(
                Identifier(
                    name=name,
                    category=Category.DECLARATION,
                    language=Language.C,
                    file=f"{system}/f.c",
                    line=i + 1,
                    system=system,
                )
            )
    return idents


def test_detects_frequent_nonword_first_token():
    names = [f"grpc_slice_{i}" for i in range(30)] + [
        f"other_name_{i}" for i in range(20)
    ]
    lexicon = detect_preambles(
        _corpus({"grpc": names}), min_share=0.25, min_ident_count=20
    )
    assert lexicon.is_preamble("grpc", "grpc")
    assert not lexicon.is_preamble("grpc", "elsewhere")
    assert not lexicon.is_preamble("other", "grpc")  # dictionary word


def test_allowlisted_domain_terms_never_become_preambles():
    names = [f"xml_reader_{i}" for i in range(40)]
    lexicon = detect_preambles(_corpus({"lib": names}))
    assert not lexicon.is_preamble("xml", "lib")


def test_dictionary_words_never_become_preambles():
    names = [f"data_block_{i}" for i in range(40)]
    lexicon = detect_preambles(_corpus({"lib": names}))
    assert not lexicon.is_preamble("data", "lib")


def test_threshold_knobs():
    names = [f"qq_val_{i}" for i in range(10)] + [f"name_{i}" for i in range(10)]
    corpus = _corpus({"sys": names})
    strict = detect_preambles(corpus, min_ident_count=20)
    assert not strict.is_preamble("qq", "sys")
    relaxed = detect_preambles(corpus, min_ident_count=5, min_share=0.25)
    assert relaxed.is_preamble("qq", "sys")


def test_max_len_limit():
    names = [f"verylongprefix_val_{i}" for i in range(40)]
    lexicon = detect_preambles(_corpus({"sys": names}), min_ident_count=10)
    assert not lexicon.is_preamble("verylongprefix", "sys")


def test_empty_corpus_keeps_hungarian_prefixes():
    lexicon = detect_preambles([])
    assert lexicon.per_system == {}
    assert lexicon.is_preamble("m")
    assert lexicon.is_preamble("g", "anything")


def test_permutation_invariance():
    names = [f"grpc_x_{i}" for i in range(25)] + [f"plain_{i}" for i in range(10)]
    corpus = _corpus({"sys": names})
    forward = detect_preambles(corpus, min_ident_count=10)
    backward = detect_preambles(list(reversed(corpus)), min_ident_count=10)
    assert forward.per_system == backward.per_system


def test_allowlist_preamble_disjointness_enforced():
    with pytest.raises(ValueError):
        PreambleLexicon(
            per_system={"s": frozenset({"xml"})},
            allowlist=frozenset({"xml"}),
        )
    with pytest.raises(ValueError):
        PreambleLexicon(
            hungarian=frozenset({"g"}),
            allowlist=frozenset({"g"}),
        )


def test_hungarian_only():
    lexicon = PreambleLexicon.hungarian_only({"M", "P"})
    assert lexicon.is_preamble("m")
    assert lexicon.is_preamble("P")
    assert not lexicon.is_preamble("xyz")

import random

import pytest

from idgrammar.analysis import (
    abbreviation_stats,
    distribution,
    pattern_frequencies,
    plural_collection_stats,
    verb_boolean_stats,
)
from idgrammar.lexicon import default_dictionary
from idgrammar.model import Category, Language
from idgrammar.tags import parse_pattern


def annotated(make_identifier, *specs):
    """specs: (name, pattern_text, category, type_name, language)."""
    out = []
    for i, spec in enumerate(specs):
        name, pattern, category = spec[0], spec[1], spec[2]
        type_name = spec[3] if len(spec) > 3 else None
        language = spec[4] if len(spec) > 4 else Language.JAVA
        ident = make_identifier(
            name, category=category, language=language, type_name=type_name, line=i + 1
        )
        out.append((ident, parse_pattern(pattern)))
    return out


def test_pattern_frequencies_counting(make_identifier):
    items = annotated(
        make_identifier,
        ("a", "NM N", Category.DECLARATION),
        ("b", "NM N", Category.DECLARATION),
        ("c", "V N", Category.DECLARATION),
        ("d", "N", Category.DECLARATION),
    )
    report = pattern_frequencies(items)
    (group,) = report.groups
    assert [(p.pattern, p.count) for p in group.patterns] == [
        ("NM N", 2),
        ("N", 1),
        ("V N", 1),
    ]
    shares = {p.pattern: p.share for p in group.patterns}
    assert shares == {"NM N": 0.5, "V N": 0.25, "N": 0.25}


def test_pattern_frequencies_empty_input():
    report = pattern_frequencies([])
    assert report.total == 0
    assert report.groups == ()


def test_shares_sum_to_one_and_counts_to_total(make_identifier):
    rng = random.Random(7)
    patterns = ["NM N", "V NM N", "N", "NM NPL", "PRE V"]
    items = annotated(
        make_identifier,
        *(
            (f"n{i}", rng.choice(patterns), rng.choice(list(Category)))
            for i in range(60)
        ),
    )
    report = pattern_frequencies(items, ("category",))
    assert sum(g.total for g in report.groups) == report.total == 60
    for group in report.groups:
        assert sum(p.count for p in group.patterns) == group.total
        assert abs(sum(p.share for p in group.patterns) - 1.0) < 1e-9


def test_frequencies_permutation_invariant(make_identifier):
    items = annotated(
        make_identifier,
        ("a", "NM N", Category.CLASS),
        ("b", "V N", Category.CLASS),
        ("c", "NM N", Category.FUNCTION),
    )
    forward = pattern_frequencies(items, ("category",))
    backward = pattern_frequencies(list(reversed(items)), ("category",))
    assert forward == backward


def test_grouping_by_category_and_language(make_identifier):
    items = annotated(
        make_identifier,
        ("a", "NM N", Category.CLASS, None, Language.C),
        ("b", "NM N", Category.CLASS, None, Language.JAVA),
    )
    report = pattern_frequencies(items, ("category", "language"))
    assert [g.key for g in report.groups] == [("class", "C"), ("class", "Java")]
    with pytest.raises(ValueError):
        pattern_frequencies(items, ("bogus",))


def test_distribution_is_sorted_and_includes_singletons(make_identifier):
    items = annotated(
        make_identifier,
        ("a", "NM N", Category.CLASS),
        ("b", "NM N", Category.FUNCTION),
        ("c", "NM N", Category.CLASS),
        ("d", "V N", Category.CLASS),
        ("e", "P N", Category.CLASS),
    )
    series = distribution(pattern_frequencies(items, ("category",)))
    assert series == [("NM N", 3), ("P N", 1), ("V N", 1)]
    counts = [c for _, c in series]
    assert counts == sorted(counts, reverse=True)


def test_distribution_single_pattern(make_identifier):
    items = annotated(make_identifier, ("a", "N", Category.CLASS))
    assert distribution(pattern_frequencies(items)) == [("N", 1)]


def test_verb_boolean_crosstab_hand_count(make_identifier):
    # 3 boolean identifiers of which 2 contain V, plus 1 non-boolean with V:
    # verb count 3, boolean count 3, both 2 -> P(verb|boolean) = 2/3
    items = annotated(
        make_identifier,
        ("a", "V N", Category.DECLARATION, "bool"),
        ("b", "V NM N", Category.DECLARATION, "boolean"),
        ("c", "NM N", Category.DECLARATION, "bool"),
        ("d", "V N", Category.DECLARATION, "QString"),
    )
    tab = verb_boolean_stats(items)
    row = {r.category: r for r in tab.rows}[Category.DECLARATION]
    assert (row.count_a, row.count_b, row.count_both) == (3, 3, 2)
    assert row.pct_a_given_b == pytest.approx(2 / 3)
    assert row.pct_b_given_a == pytest.approx(2 / 3)


def test_verb_boolean_no_booleans_gives_none_not_zero(make_identifier):
    items = annotated(
        make_identifier, ("a", "NM N", Category.PARAMETER, "QString")
    )
    tab = verb_boolean_stats(items)
    row = {r.category: r for r in tab.rows}[Category.PARAMETER]
    assert row.count_b == 0
    assert row.pct_a_given_b is None
    assert row.pct_b_given_a is None


def test_verb_boolean_loose_policy(make_identifier):
    items = annotated(
        make_identifier, ("flag", "V N", Category.DECLARATION, "int")
    )
    strict_row = verb_boolean_stats(items).rows[1]
    loose_row = verb_boolean_stats(items, loose_boolean=True).rows[1]
    assert strict_row.count_b == 0
    assert loose_row.count_b == 1


def test_plural_collection_hand_count(make_identifier):
    # 2 collection identifiers, 1 ending in NPL -> 50%
    items = annotated(
        make_identifier,
        ("a", "NM NPL", Category.ATTRIBUTE, "GList*"),
        ("b", "NM N", Category.ATTRIBUTE, "int[]"),
        ("c", "NM N", Category.ATTRIBUTE, "QString"),
    )
    tab = plural_collection_stats(items)
    row = {r.category: r for r in tab.rows}[Category.ATTRIBUTE]
    assert (row.count_a, row.count_b, row.count_both) == (2, 1, 1)
    assert row.pct_b_given_a == pytest.approx(0.5)


def test_plural_collection_covers_functions(make_identifier):
    items = annotated(
        make_identifier,
        ("getRawArguments", "V NM NPL", Category.FUNCTION, "Object"),
    )
    tab = plural_collection_stats(items)
    categories = [row.category for row in tab.rows]
    assert Category.FUNCTION in categories
    row = {r.category: r for r in tab.rows}[Category.FUNCTION]
    assert (row.count_a, row.count_b, row.count_both) == (0, 1, 0)


def test_crosstab_percentages_derive_exactly_from_counts(make_identifier):
    items = annotated(
        make_identifier,
        *(
            (f"v{i}", "V N" if i % 2 else "NM N", Category.PARAMETER,
             "bool" if i % 3 else "int")
            for i in range(30)
        ),
    )
    tab = verb_boolean_stats(items)
    for row in tab.rows:
        if row.count_a:
            assert row.pct_b_given_a == row.count_both / row.count_a
        if row.count_b:
            assert row.pct_a_given_b == row.count_both / row.count_b


def test_abbreviation_stats(make_identifier):
    dictionary = default_dictionary()
    items = [
        (make_identifier("a", language=Language.C), ["token", "tkn"]),
        (make_identifier("b", language=Language.JAVA), ["user", "name"]),
        (make_identifier("c", language=Language.C), ["event", "0"]),
    ]
    report = abbreviation_stats(items, dictionary)
    by_language = {row.language: row for row in report.rows}
    c_row = by_language[Language.C]
    assert (c_row.dictionary_terms, c_row.abbreviations, c_row.digits) == (2, 1, 1)
    java_row = by_language[Language.JAVA]
    assert (java_row.dictionary_terms, java_row.abbreviations) == (2, 0)
    assert report.total_abbreviations == 1
    assert report.total_digits == 1

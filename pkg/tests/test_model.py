import pytest

from idgrammar.model import Category, Identifier, IdentifierSet, Language


def test_category_parse_accepts_aliases():
    assert Category.parse("class") is Category.CLASS
    assert Category.parse("Function") is Category.FUNCTION
    assert Category.parse("declaration") is Category.DECLARATION
    assert Category.parse("declaration_statement") is Category.DECLARATION
    assert Category.parse("decls") is Category.DECLARATION
    assert Category.parse("field") is Category.ATTRIBUTE
    with pytest.raises(ValueError):
        Category.parse("module")


def test_language_parse():
    assert Language.parse("c") is Language.C
    assert Language.parse("C++") is Language.CPP
    assert Language.parse("cpp") is Language.CPP
    assert Language.parse("java") is Language.JAVA
    assert Language.parse("c#") is Language.CSHARP
    with pytest.raises(ValueError):
        Language.parse("rust")


def test_identifier_validation(make_identifier):
    with pytest.raises(ValueError):
        make_identifier("")
    with pytest.raises(ValueError):
        make_identifier("1bad")
    with pytest.raises(ValueError):
        make_identifier("has space")
    with pytest.raises(ValueError):
        make_identifier("ok", line=0)
    ident = make_identifier("_leading", line=12)
    assert ident.line == 12


def test_identifier_record_round_trip(make_identifier):
    ident = make_identifier("tileListHead", type_name="GList*", line=7)
    assert Identifier.from_record(ident.to_record()) == ident


def test_identifier_set_orders_deterministically(make_identifier):
    a = make_identifier("zeta", file="b.java", line=1)
    b = make_identifier("alpha", file="a.java", line=9)
    c = make_identifier("beta", file="a.java", line=2)
    built = IdentifierSet.build([a, b, c])
    assert [i.name for i in built] == ["beta", "alpha", "zeta"]
    again = IdentifierSet.build([c, a, b])
    assert built.entries == again.entries


def test_category_counts_partition_the_set(make_identifier):
    idents = [
        make_identifier("a", category=Category.CLASS),
        make_identifier("b", category=Category.CLASS),
        make_identifier("c", category=Category.PARAMETER),
    ]
    built = IdentifierSet.build(idents)
    counts = built.category_counts()
    assert sum(counts.values()) == len(built)
    assert counts[Category.CLASS] == 2

import pytest

from idgrammar.model import Category, Identifier, Language


@pytest.fixture
def make_identifier():
    def _make(
        name,
        category=Category.DECLARATION,
        language=Language.JAVA,
        type_name=None,
        file="src/main.java",
        line=1,
        system="sample",
    ):
        return Identifier(
            name=name,
            category=category,
            language=language,
            type_name=type_name,
            file=file,
            line=line,
            system=system,
        )

    return _make

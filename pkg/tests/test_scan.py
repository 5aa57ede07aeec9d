import pytest

from idgrammar.errors import ConfigError, ScanError
from idgrammar.model import Category, Language
from idgrammar.reports import identifiers_to_jsonl
from idgrammar.scan import ScanConfig, is_test_artifact, scan_corpus


@pytest.mark.parametrize(
    "path,expected",
    [
        ("src/tests/util.c", True),
        ("src/main/render.c", False),
        ("attestation.c", False),
        ("TestCase.java", True),
        ("test_util.c", True),
        ("testing/helpers.c", True),
        ("latest.c", False),
        ("contest.c", False),
        ("src/unittests/a.c", False),  # "unittests" splits to one token
        ("UnitTest.java", True),
        ("protester.c", False),
    ],
)
def test_is_test_artifact(path, expected):
    assert is_test_artifact(path) is expected


@pytest.fixture
def sample_tree(tmp_path):
    (tmp_path / "src").mkdir()
    (tmp_path / "src" / "tests").mkdir()
    (tmp_path / "src" / "Factory.java").write_text(
        "class FactoryClass { boolean isFirstFrame; }\n"
    )
    (tmp_path / "src" / "render.c").write_text(
        "GList* tile_list_head = NULL;\n"
        "static void draw_tile(GimpTile *tile) { int local_count = 0; }\n"
    )
    (tmp_path / "src" / "tests" / "util.c").write_text("int hidden_in_tests;\n")
    (tmp_path / "src" / "notes.txt").write_text("int not_source;\n")
    return tmp_path


def test_scan_extracts_and_excludes_tests(sample_tree):
    corpus = scan_corpus(sample_tree, ScanConfig(system="sample"))
    names = {(i.name, i.category) for i in corpus}
    assert ("FactoryClass", Category.CLASS) in names
    assert ("isFirstFrame", Category.ATTRIBUTE) in names
    assert ("tile_list_head", Category.DECLARATION) in names
    assert ("draw_tile", Category.FUNCTION) in names
    assert ("tile", Category.PARAMETER) in names
    assert ("local_count", Category.DECLARATION) in names
    assert all(i.name != "hidden_in_tests" for i in corpus)
    assert all(i.name != "not_source" for i in corpus)


def test_scan_records_language_and_location(sample_tree):
    corpus = scan_corpus(sample_tree, ScanConfig(system="sample"))
    by_name = {i.name: i for i in corpus}
    assert by_name["FactoryClass"].language is Language.JAVA
    assert by_name["FactoryClass"].file == "src/Factory.java"
    assert by_name["tile_list_head"].language is Language.C
    assert by_name["tile_list_head"].line == 1
    assert by_name["isFirstFrame"].type_name == "boolean"
    assert all(i.system == "sample" for i in corpus)


def test_scan_is_deterministic_across_runs(sample_tree):
    config = ScanConfig(system="sample")
    first = scan_corpus(sample_tree, config)
    second = scan_corpus(sample_tree, config)
    assert identifiers_to_jsonl(first) == identifiers_to_jsonl(second)


def test_scan_language_filter(sample_tree):
    config = ScanConfig(languages=(Language.JAVA,), system="sample")
    corpus = scan_corpus(sample_tree, config)
    assert {i.language for i in corpus} == {Language.JAVA}


def test_scan_include_tests_flag(sample_tree):
    config = ScanConfig(system="sample", exclude_tests=False)
    corpus = scan_corpus(sample_tree, config)
    assert any(i.name == "hidden_in_tests" for i in corpus)


def test_test_named_functions_and_members_are_excluded(tmp_path):
    (tmp_path / "a.java").write_text(
        "class Helper {\n"
        "  void testSomething(int testParam) { int inner = 1; }\n"
        "  void realWork(int realParam) { }\n"
        "}\n"
    )
    corpus = scan_corpus(tmp_path, ScanConfig(system="s"))
    names = {i.name for i in corpus}
    assert "testSomething" not in names
    assert "testParam" not in names
    assert "inner" not in names
    assert {"Helper", "realWork", "realParam"} <= names


def test_variables_named_test_survive_outside_test_contexts(tmp_path):
    (tmp_path / "a.java").write_text("class Holder { int testFlag; }\n")
    corpus = scan_corpus(tmp_path, ScanConfig(system="s"))
    assert any(i.name == "testFlag" for i in corpus)


def test_unreadable_root_is_fatal(tmp_path):
    with pytest.raises(ScanError):
        scan_corpus(tmp_path / "missing", ScanConfig())


def test_bad_files_are_warned_and_skipped(tmp_path):
    (tmp_path / "good.c").write_text("int fine;\n")
    (tmp_path / "bad.c").write_bytes(b"\xff\xfe invalid \xff utf8")
    corpus = scan_corpus(tmp_path, ScanConfig(system="s"))
    assert [i.name for i in corpus] == ["fine"]
    assert len(corpus.warnings) == 1
    assert "bad.c" in corpus.warnings[0]


def test_category_counts_partition(sample_tree):
    corpus = scan_corpus(sample_tree, ScanConfig(system="sample"))
    assert sum(corpus.category_counts().values()) == len(corpus)


def test_config_requires_a_language():
    with pytest.raises(ConfigError):
        ScanConfig(languages=())


def test_config_from_toml(tmp_path):
    path = tmp_path / "scan.toml"
    path.write_text(
        '[scan]\nlanguages = ["java", "c"]\nsystem = "demo"\nexclude_tests = false\n'
    )
    config = ScanConfig.from_file(path)
    assert config.languages == (Language.JAVA, Language.C)
    assert config.system == "demo"
    assert config.exclude_tests is False
    merged = config.override(system="other", exclude_tests=None)
    assert merged.system == "other"
    assert merged.exclude_tests is False


def test_config_from_toml_rejects_garbage(tmp_path):
    path = tmp_path / "scan.toml"
    path.write_text("languages = [not toml")
    with pytest.raises(ConfigError):
        ScanConfig.from_file(path)
    path.write_text('languages = ["fortran"]')
    with pytest.raises(ConfigError):
        ScanConfig.from_file(path)


def test_provenance_snapshot(sample_tree):
    corpus = scan_corpus(sample_tree, ScanConfig(system="sample"))
    assert corpus.provenance["system"] == "sample"
    assert corpus.provenance["exclude_tests"] is True
    assert "Java" in corpus.provenance["languages"]

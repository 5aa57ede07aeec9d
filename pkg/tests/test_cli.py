import json
import sys

import pytest

from idgrammar.cli import main

ECHO_TAGGER = (
    "import sys\n"
    "for line in sys.stdin:\n"
    "    print(' '.join(t + '/NN' for t in line.split()), flush=True)\n"
)

GOLD_CSV = """identifier,split,category,language,system,pattern,type_name
tile_list_head,tile list head,declaration,C,gimp,NM NM N,GList*
GetUserToken,Get User Token,function,Java,lib,V NM N,
deepStub,deep stub,function,Java,lib,NM N,Object
"""


@pytest.fixture
def tree(tmp_path):
    src = tmp_path / "proj"
    (src / "tests").mkdir(parents=True)
    (src / "main.java").write_text(
        "class FactoryClass {\n"
        "  boolean isFirstFrame;\n"
        "  GList itemGroups;\n"
        "  void drawContentBorder(int contentBorder) { }\n"
        "}\n"
    )
    (src / "tests" / "T.java").write_text("class Secret { int hideMe; }\n")
    return src


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_extract_emits_jsonl_on_stdout(tree, capsys):
    code, out, err = run(capsys, "extract", str(tree), "--system", "demo")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    names = {r["name"] for r in records}
    assert "FactoryClass" in names and "hideMe" not in names
    assert all(r["system"] == "demo" for r in records)
    assert out.endswith("\n")


def test_extract_missing_root_is_usage_error(tmp_path, capsys):
    code, out, err = run(capsys, "extract", str(tmp_path / "nope"))
    assert code == 1
    assert out == ""
    assert "error" in err


def test_unknown_flag_is_usage_error(capsys):
    code = main(["extract", "--bogus"])
    assert code == 1


def test_tag_pipeline(tree, tmp_path, capsys):
    idents = tmp_path / "idents.jsonl"
    code, out, _ = run(capsys, "extract", str(tree), "--system", "demo")
    idents.write_text(out)
    code, out, err = run(capsys, "tag", "--in", str(idents))
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    by_name = {r["name"]: r for r in records}
    assert by_name["isFirstFrame"]["pattern"] == "V NM N"
    assert by_name["isFirstFrame"]["tokens"] == ["is", "First", "Frame"]
    assert by_name["drawContentBorder"]["pattern"] == "V NM N"
    assert by_name["itemGroups"]["pattern"] == "NM NPL"
    assert len(records) == len(idents.read_text().splitlines())


def test_tag_order_preserving_and_atomic_out(tree, tmp_path, capsys):
    idents = tmp_path / "idents.jsonl"
    _, out, _ = run(capsys, "extract", str(tree))
    idents.write_text(out)
    out_path = tmp_path / "tagged.jsonl"
    code, stdout, _ = run(capsys, "tag", "--in", str(idents), "--out", str(out_path))
    assert code == 0
    assert stdout == ""
    input_names = [json.loads(l)["name"] for l in idents.read_text().splitlines()]
    output_names = [
        json.loads(l)["name"] for l in out_path.read_text().splitlines()
    ]
    assert input_names == output_names
    assert not list(tmp_path.glob("*.tmp"))


def test_tag_with_split_overrides(tmp_path, capsys):
    idents = tmp_path / "idents.jsonl"
    idents.write_text(
        json.dumps(
            {
                "name": "IPV4",
                "category": "declaration",
                "language": "C",
                "type_name": None,
                "file": "a.c",
                "line": 1,
                "system": "s",
            }
        )
        + "\n"
    )
    overrides = tmp_path / "ov.csv"
    overrides.write_text("IPV4,IPV4\n")
    code, out, _ = run(
        capsys, "tag", "--in", str(idents), "--split-overrides", str(overrides)
    )
    assert code == 0
    assert json.loads(out)["tokens"] == ["IPV4"]


def test_tag_external_requires_adapter(tmp_path, capsys, monkeypatch):
    monkeypatch.delenv("IDGRAMMAR_ADAPTER_CMD", raising=False)
    idents = tmp_path / "i.jsonl"
    idents.write_text("")
    code, out, err = run(capsys, "tag", "--in", str(idents), "--tagger", "external")
    assert code == 1


def test_tag_with_external_adapter(tmp_path, capsys):
    idents = tmp_path / "i.jsonl"
    idents.write_text(
        json.dumps(
            {
                "name": "userQuery",
                "category": "parameter",
                "language": "Java",
                "type_name": None,
                "file": "a.java",
                "line": 1,
                "system": "s",
            }
        )
        + "\n"
    )
    cmd = f'{sys.executable} -c "{ECHO_TAGGER}"'
    code, out, _ = run(
        capsys, "tag", "--in", str(idents), "--tagger", "external",
        "--adapter-cmd", cmd,
    )
    assert code == 0
    assert json.loads(out)["pattern"] == "N N"


def test_report_frequencies_and_distribution(tree, tmp_path, capsys):
    _, out, _ = run(capsys, "extract", str(tree))
    idents = tmp_path / "i.jsonl"
    idents.write_text(out)
    _, tagged, _ = run(capsys, "tag", "--in", str(idents))
    tagged_path = tmp_path / "t.jsonl"
    tagged_path.write_text(tagged)

    code, out, _ = run(
        capsys, "report", "--in", str(tagged_path), "--report", "frequencies",
        "--group-by", "category", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["total"] == len(tagged.splitlines())

    code, out, _ = run(
        capsys, "report", "--in", str(tagged_path), "--report", "distribution",
        "--format", "csv",
    )
    assert code == 0
    assert out.splitlines()[0] == "pattern,count"

    code, out, _ = run(
        capsys, "report", "--in", str(tagged_path), "--report", "verb-boolean",
        "--format", "csv",
    )
    assert code == 0
    assert "count_contains_verb" in out.splitlines()[0]

    code, out, _ = run(
        capsys, "report", "--in", str(tagged_path), "--report", "abbreviations",
        "--format", "json",
    )
    assert code == 0
    assert "total_abbreviations" in json.loads(out)


def test_eval_with_heuristic(tmp_path, capsys):
    gold = tmp_path / "gold.csv"
    gold.write_text(GOLD_CSV)
    code, out, err = run(capsys, "eval", "--gold", str(gold), "--tagger", "heuristic")
    assert code == 0
    payload = json.loads(out)
    assert payload["total_identifiers"] == 3
    assert payload["pattern_accuracy"] == 1.0
    assert payload["per_tag"]["NM"]["human_count"] == 4


def test_eval_missing_gold_is_usage_error(tmp_path, capsys):
    code, out, err = run(capsys, "eval", "--gold", str(tmp_path / "missing.csv"))
    assert code == 1
    assert out == ""


def test_eval_malformed_gold_is_data_error(tmp_path, capsys):
    gold = tmp_path / "gold.csv"
    gold.write_text(
        "identifier,split,category,language,system,pattern,type_name\n"
        "bad,a b c,declaration,C,s,NM N,\n"
    )
    code, out, err = run(capsys, "eval", "--gold", str(gold))
    assert code == 2
    assert out == ""
    assert "data error" in err


def test_eval_tool_column_and_misses(tmp_path, capsys):
    gold = tmp_path / "gold.csv"
    gold.write_text(
        "identifier,split,category,language,system,pattern,type_name,stored\n"
        "a_b,a b,declaration,C,s,NM N,,N N\n"
        "c_d,c d,declaration,C,s,NM N,,NM N\n"
    )
    code, out, _ = run(
        capsys, "eval", "--gold", str(gold), "--tool-column", "stored",
        "--misses", "3",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["pattern_accuracy"] == 0.5
    assert payload["top_misannotated"]["declaration"][0]["pattern"] == "NM N"


def test_lint_text_and_json(tmp_path, capsys):
    tagged = tmp_path / "t.jsonl"
    record = {
        "name": "deepStub",
        "category": "function",
        "language": "Java",
        "type_name": "Object",
        "file": "src/a.java",
        "line": 9,
        "system": "s",
        "tokens": ["deep", "Stub"],
        "pattern": "NM N",
    }
    tagged.write_text(json.dumps(record) + "\n")
    code, out, _ = run(capsys, "lint", "--in", str(tagged))
    assert code == 0
    assert "src/a.java:9: [R4] deepStub:" in out
    code, out, _ = run(capsys, "lint", "--in", str(tagged), "--format", "json")
    payload = json.loads(out)
    assert payload["summary"] == {"R4": 1}
    code, out, _ = run(
        capsys, "lint", "--in", str(tagged), "--rules", "R1,R2", "--format", "json"
    )
    assert json.loads(out)["summary"] == {}


def test_lint_severity_override(tmp_path, capsys):
    tagged = tmp_path / "t.jsonl"
    record = {
        "name": "deepStub",
        "category": "function",
        "language": "Java",
        "type_name": None,
        "file": "a.java",
        "line": 1,
        "system": "s",
        "tokens": ["deep", "Stub"],
        "pattern": "NM N",
    }
    tagged.write_text(json.dumps(record) + "\n")
    code, out, _ = run(
        capsys, "lint", "--in", str(tagged), "--severity", "R4=info",
        "--format", "json",
    )
    findings = json.loads(out)["findings"]
    assert findings[0]["severity"] == "info"


def test_identical_invocations_produce_identical_reports(tree, tmp_path, capsys):
    _, first, _ = run(capsys, "extract", str(tree), "--system", "x")
    _, second, _ = run(capsys, "extract", str(tree), "--system", "x")
    assert first == second


def test_tag_with_ensemble_and_strengths_file(tmp_path, capsys):
    idents = tmp_path / "i.jsonl"
    idents.write_text(
        json.dumps(
            {
                "name": "numActiveContexts",
                "category": "attribute",
                "language": "Java",
                "type_name": "int[]",
                "file": "a.java",
                "line": 1,
                "system": "s",
            }
        )
        + "\n"
    )
    from idgrammar.ensemble import StrengthTable

    strengths = tmp_path / "strengths.csv"
    StrengthTable().to_csv(strengths)
    cmd = f'{sys.executable} -c "{ECHO_TAGGER}"'
    code, out, _ = run(
        capsys, "tag", "--in", str(idents), "--tagger", "ensemble",
        "--adapter-cmd", cmd, "--strengths", str(strengths),
    )
    assert code == 0
    record = json.loads(out)
    # heuristic wins NM (0.9401 vs 0.9325); plural surface form keeps NPL
    assert record["pattern"] == "NM NM NPL"


def test_tag_detect_preambles_flag(tmp_path, capsys):
    records = []
    for i in range(25):
        records.append(
            {
                "name": f"grpc_slice_{i}",
                "category": "declaration",
                "language": "C",
                "type_name": None,
                "file": "a.c",
                "line": i + 1,
                "system": "grpc",
            }
        )
    idents = tmp_path / "i.jsonl"
    idents.write_text("".join(json.dumps(r) + "\n" for r in records))
    code, out, _ = run(capsys, "tag", "--in", str(idents), "--detect-preambles")
    assert code == 0
    first = json.loads(out.splitlines()[0])
    assert first["pattern"].startswith("PRE")


def test_failed_eval_never_leaves_partial_output(tmp_path, capsys):
    gold = tmp_path / "gold.csv"
    gold.write_text(
        "identifier,split,category,language,system,pattern,type_name\n"
        "bad,a b c,declaration,C,s,NM N,\n"
    )
    out_path = tmp_path / "result.json"
    code, _, _ = run(capsys, "eval", "--gold", str(gold), "--out", str(out_path))
    assert code == 2
    assert not out_path.exists()
    assert not list(tmp_path.glob("*.tmp"))


def test_report_plural_collection_carries_unverified_note(tmp_path, capsys):
    record = {
        "name": "numCols",
        "category": "attribute",
        "language": "C",
        "type_name": "int[]",
        "file": "a.c",
        "line": 1,
        "system": "s",
        "tokens": ["num", "Cols"],
        "pattern": "NM NPL",
    }
    tagged = tmp_path / "t.jsonl"
    tagged.write_text(json.dumps(record) + "\n")
    code, out, _ = run(
        capsys, "report", "--in", str(tagged), "--report", "plural-collection",
        "--format", "json",
    )
    assert code == 0
    assert "not manually verified" in json.loads(out)["note"]

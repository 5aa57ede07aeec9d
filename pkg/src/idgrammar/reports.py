"""Serialization of identifiers, annotations, and reports.

JSONL is the inter-stage interchange format; reports additionally render as
CSV.  Percentages are displayed with one decimal place, but the raw counts
are always emitted alongside so nothing is lost to rounding.  File output is
write-then-rename so a failed run never leaves a partial file.
"""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from typing import Iterable, Iterator, Sequence

from .analysis import AbbreviationReport, CrossTab, FrequencyReport
from .goldset import EvalResult
from .lint import LintFinding
from .model import Identifier
from .tags import GrammarPattern, parse_pattern


def _fmt_pct(value: float | None) -> str:
    return "N/A" if value is None else f"{100 * value:.1f}"


def atomic_write(path, text: str) -> None:
    """Write a file via a temporary sibling and rename."""
    directory = os.path.dirname(os.path.abspath(os.fspath(path)))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


# -- identifiers and annotations ---------------------------------------------


def identifiers_to_jsonl(identifiers: Iterable[Identifier]) -> str:
    return "".join(json.dumps(ident.to_record()) + "\n" for ident in identifiers)


def identifiers_from_jsonl(lines: Iterable[str]) -> Iterator[Identifier]:
    for line in lines:
        line = line.strip()
        if line:
            yield Identifier.from_record(json.loads(line))


def tagged_record(
    ident: Identifier, tokens: Sequence[str], pattern: GrammarPattern
) -> dict:
    record = ident.to_record()
    record["tokens"] = list(tokens)
    record["pattern"] = pattern.text
    return record


def tagged_from_jsonl(
    lines: Iterable[str],
) -> Iterator[tuple[Identifier, list[str], GrammarPattern]]:
    for line in lines:
        line = line.strip()
        if not line:
            continue
        record = json.loads(line)
        ident = Identifier.from_record(record)
        yield ident, list(record["tokens"]), parse_pattern(record["pattern"])


# -- frequency reports ---------------------------------------------------------


def frequency_to_json(report: FrequencyReport) -> str:
    payload = {
        "group_by": list(report.group_by),
        "total": report.total,
        "groups": [
            {
                "key": list(group.key),
                "total": group.total,
                "patterns": [
                    {"pattern": p.pattern, "count": p.count, "share": p.share}
                    for p in group.patterns
                ],
            }
            for group in report.groups
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def frequency_to_csv(report: FrequencyReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow([*report.group_by, "pattern", "count", "share_pct"])
    for group in report.groups:
        for item in group.patterns:
            writer.writerow([*group.key, item.pattern, item.count, _fmt_pct(item.share)])
    return buf.getvalue()


def distribution_to_csv(series: Sequence[tuple[str, int]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["pattern", "count"])
    writer.writerows(series)
    return buf.getvalue()


# -- cross tabulations ---------------------------------------------------------


def crosstab_to_json(tab: CrossTab) -> str:
    payload = {
        "predicate_a": tab.label_a,
        "predicate_b": tab.label_b,
        **({"note": tab.note} if tab.note else {}),
        "rows": [
            {
                "category": row.category.value,
                f"count_{tab.label_a}": row.count_a,
                f"count_{tab.label_b}": row.count_b,
                "count_both": row.count_both,
                "pct_b_given_a": row.pct_b_given_a,
                "pct_a_given_b": row.pct_a_given_b,
            }
            for row in tab.rows
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def crosstab_to_csv(tab: CrossTab) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(
        [
            "category",
            f"count_{tab.label_a}",
            f"count_{tab.label_b}",
            "count_both",
            "pct_b_given_a",
            "pct_a_given_b",
        ]
    )
    for row in tab.rows:
        writer.writerow(
            [
                row.category.value,
                row.count_a,
                row.count_b,
                row.count_both,
                _fmt_pct(row.pct_b_given_a),
                _fmt_pct(row.pct_a_given_b),
            ]
        )
    return buf.getvalue()


# -- abbreviation report --------------------------------------------------------


def abbreviations_to_json(report: AbbreviationReport) -> str:
    payload = {
        "rows": [
            {
                "language": row.language.value,
                "dictionary_terms": row.dictionary_terms,
                "abbreviations": row.abbreviations,
                "digits": row.digits,
            }
            for row in report.rows
        ],
        "total_dictionary": report.total_dictionary,
        "total_abbreviations": report.total_abbreviations,
        "total_digits": report.total_digits,
    }
    return json.dumps(payload, indent=2) + "\n"


def abbreviations_to_csv(report: AbbreviationReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["language", "dictionary_terms", "abbreviations", "digits"])
    for row in report.rows:
        writer.writerow(
            [row.language.value, row.dictionary_terms, row.abbreviations, row.digits]
        )
    writer.writerow(
        [
            "total",
            report.total_dictionary,
            report.total_abbreviations,
            report.total_digits,
        ]
    )
    return buf.getvalue()


# -- evaluation -----------------------------------------------------------------


def eval_to_json(result: EvalResult) -> str:
    payload = {
        "pattern_accuracy": result.pattern_accuracy,
        "word_accuracy": result.word_accuracy,
        "total_identifiers": result.total_identifiers,
        "total_words": result.total_words,
        "pattern_matches": result.pattern_matches,
        "word_matches": result.word_matches,
        "length_mismatches": list(result.length_mismatches),
        "per_tag": {
            tag.value: {
                "human_count": agreement.human_count,
                "tool_agree_count": agreement.tool_agree_count,
                "pct": agreement.pct,
            }
            for tag, agreement in sorted(
                result.per_tag.items(), key=lambda kv: -kv[1].human_count
            )
        },
    }
    return json.dumps(payload, indent=2) + "\n"


def eval_to_csv(result: EvalResult) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["metric", "value"])
    writer.writerow(["pattern_accuracy", result.pattern_accuracy])
    writer.writerow(["word_accuracy", result.word_accuracy])
    writer.writerow(["tag", "human_count", "tool_agree_count", "pct"])
    for tag, agreement in sorted(
        result.per_tag.items(), key=lambda kv: -kv[1].human_count
    ):
        writer.writerow(
            [tag.value, agreement.human_count, agreement.tool_agree_count, _fmt_pct(agreement.pct)]
        )
    return buf.getvalue()


# -- lint findings ----------------------------------------------------------------


def findings_to_json(findings: Sequence[LintFinding], summary: dict[str, int]) -> str:
    payload = {
        "findings": [
            {
                "rule": f.rule,
                "severity": f.severity.value,
                "name": f.identifier.name,
                "category": f.identifier.category.value,
                "file": f.identifier.file,
                "line": f.identifier.line,
                "message": f.message,
                "pattern": f.pattern,
                "type_flags": dict(f.type_flags),
            }
            for f in findings
        ],
        "summary": summary,
    }
    return json.dumps(payload, indent=2) + "\n"


def findings_to_text(findings: Sequence[LintFinding]) -> str:
    return "".join(f.render() + "\n" for f in findings)

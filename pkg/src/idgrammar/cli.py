"""Command-line front end: extract | tag | report | eval | lint.

Each subcommand mirrors one pipeline stage and composes with the others
through line-delimited JSON on stdin/stdout.  stdout carries only the
machine-readable payload; every diagnostic goes to stderr.  Exit codes:
0 success, 1 usage/configuration error, 2 data error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Sequence

from . import reports
from .analysis import (
    abbreviation_stats,
    distribution,
    pattern_frequencies,
    plural_collection_stats,
    verb_boolean_stats,
)
from .ensemble import EnsembleTagger, StrengthTable
from .errors import (
    AdapterError,
    AlignmentError,
    ConfigError,
    EnsembleError,
    GoldFormatError,
    IdGrammarError,
    MissingToolPatternError,
    OverrideError,
    PatternParseError,
    ScanError,
    SplitError,
    UnknownTagError,
)
from .external import ADAPTER_CMD_ENV, ExternalTaggerRunner, SubprocessTagger
from .goldset import GoldEntry, evaluate, load_gold, tag_gold_entries, top_misannotated
from .lexicon import load_dictionary
from .lint import LintConfig, Severity, lint_corpus
from .model import Identifier, Language
from .preamble import PreambleLexicon, detect_preambles
from .scan import ScanConfig, scan_corpus
from .split import load_split_overrides, split_identifier
from .tagging import HeuristicTagger, TagContext, context_for

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

logger = logging.getLogger("idgrammar")

USAGE_ERROR = 1
DATA_ERROR = 2

_DATA_ERRORS = (
    GoldFormatError,
    AdapterError,
    AlignmentError,
    EnsembleError,
    MissingToolPatternError,
    PatternParseError,
    UnknownTagError,
    SplitError,
    json.JSONDecodeError,
)

_USAGE_ERRORS = (ConfigError, ScanError, OverrideError, FileNotFoundError)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _emit(text: str, out: str | None) -> None:
    if out:
        reports.atomic_write(out, text)
    else:
        sys.stdout.write(text)


def _read_lines(path: str | None) -> list[str]:
    if path is None or path == "-":
        return sys.stdin.read().splitlines()
    with open(path, encoding="utf-8") as fh:
        return fh.read().splitlines()


def _require_files(*paths: str | None) -> None:
    for path in paths:
        if path and path != "-" and not os.path.exists(path):
            raise FileNotFoundError(f"file not found: {path}")


def _load_preamble_config(path: str | None) -> tuple[PreambleLexicon, dict]:
    """Read a [preambles] TOML table: hungarian/allowlist/systems plus
    detection knobs (min_share, min_ident_count, max_len)."""
    if path is None:
        return PreambleLexicon.hungarian_only(), {}
    with open(path, "rb") as fh:
        try:
            data = tomllib.load(fh)
        except tomllib.TOMLDecodeError as exc:
            raise ConfigError(f"invalid preamble config {path}: {exc}") from exc
    section = data.get("preambles", data)
    kwargs = {}
    if "hungarian" in section:
        kwargs["hungarian"] = frozenset(w.lower() for w in section["hungarian"])
    if "allowlist" in section:
        kwargs["allowlist"] = frozenset(w.lower() for w in section["allowlist"])
    if "systems" in section:
        kwargs["per_system"] = {
            system: frozenset(w.lower() for w in words)
            for system, words in section["systems"].items()
        }
    try:
        lexicon = PreambleLexicon(**kwargs)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    knobs = {
        key: section[key]
        for key in ("min_share", "min_ident_count", "max_len")
        if key in section
    }
    return lexicon, knobs


def _build_tagger(args, preambles: PreambleLexicon):
    heuristic = HeuristicTagger(interior_plurals=args.interior_plurals)
    if args.tagger == "heuristic":
        return heuristic, None
    command = args.adapter_cmd or os.environ.get(ADAPTER_CMD_ENV, "")
    if not command:
        raise ConfigError(
            f"--tagger {args.tagger} needs --adapter-cmd or ${ADAPTER_CMD_ENV}"
        )
    adapter = SubprocessTagger(command)
    external = ExternalTaggerRunner(adapter)
    if args.tagger == "external":
        return external, adapter
    table = StrengthTable.from_csv(args.strengths) if args.strengths else StrengthTable()
    return EnsembleTagger([heuristic, external], table), adapter


# -- subcommands -----------------------------------------------------------


def cmd_extract(args) -> int:
    config = ScanConfig()
    if args.config:
        _require_files(args.config)
        config = ScanConfig.from_file(args.config)
    overrides = {}
    if args.languages:
        overrides["languages"] = tuple(
            Language.parse(item) for item in args.languages.split(",")
        )
    if args.system:
        overrides["system"] = args.system
    if args.include_tests:
        overrides["exclude_tests"] = False
    config = config.override(**overrides)
    corpus = scan_corpus(args.root, config)
    for warning in corpus.warnings:
        logger.warning("%s", warning)
    _emit(reports.identifiers_to_jsonl(corpus), args.out)
    return 0


def cmd_tag(args) -> int:
    _require_files(args.input, args.strengths, args.split_overrides, args.preamble_config)
    preambles, knobs = _load_preamble_config(args.preamble_config)
    overrides = (
        load_split_overrides(args.split_overrides) if args.split_overrides else {}
    )
    identifiers = list(reports.identifiers_from_jsonl(_read_lines(args.input)))
    if args.detect_preambles:
        detected = detect_preambles(
            identifiers,
            allowlist=preambles.allowlist,
            hungarian=preambles.hungarian,
            dictionary=load_dictionary(args.dictionary),
            **knobs,
        )
        preambles = detected
    tagger, adapter = _build_tagger(args, preambles)
    try:
        lines = []
        for ident in identifiers:
            split_ident = split_identifier(ident, overrides)
            context = context_for(
                ident, preambles, loose_boolean=args.loose_boolean
            )
            pattern = tagger.tag(split_ident.tokens, context)
            lines.append(
                json.dumps(reports.tagged_record(ident, split_ident.tokens, pattern))
            )
    finally:
        if adapter is not None:
            adapter.close()
    _emit("".join(line + "\n" for line in lines), args.out)
    return 0


def cmd_report(args) -> int:
    _require_files(args.input, args.dictionary)
    records = list(reports.tagged_from_jsonl(_read_lines(args.input)))
    annotated = [(ident, pattern) for ident, _tokens, pattern in records]
    fmt = args.format
    if args.report == "frequencies":
        group_by = tuple(k for k in args.group_by.split(",") if k) if args.group_by else ()
        report = pattern_frequencies(annotated, group_by)
        text = (
            reports.frequency_to_csv(report)
            if fmt == "csv"
            else reports.frequency_to_json(report)
        )
    elif args.report == "distribution":
        series = distribution(pattern_frequencies(annotated))
        if fmt == "csv":
            text = reports.distribution_to_csv(series)
        else:
            text = json.dumps(
                [{"pattern": p, "count": c} for p, c in series], indent=2
            ) + "\n"
    elif args.report == "verb-boolean":
        tab = verb_boolean_stats(annotated, loose_boolean=args.loose_boolean)
        text = reports.crosstab_to_csv(tab) if fmt == "csv" else reports.crosstab_to_json(tab)
    elif args.report == "plural-collection":
        tab = plural_collection_stats(annotated)
        text = reports.crosstab_to_csv(tab) if fmt == "csv" else reports.crosstab_to_json(tab)
    else:  # abbreviations
        dictionary = load_dictionary(args.dictionary)
        report = abbreviation_stats(
            [(ident, tokens) for ident, tokens, _ in records], dictionary
        )
        text = (
            reports.abbreviations_to_csv(report)
            if fmt == "csv"
            else reports.abbreviations_to_json(report)
        )
    _emit(text, args.out)
    return 0


def _parse_column_map(text: str | None) -> dict[str, str]:
    if not text:
        return {}
    mapping = {}
    for item in text.split(","):
        key, sep, value = item.partition("=")
        if not sep:
            raise ConfigError(f"--column-map entries must be schema=header: {item!r}")
        mapping[key.strip()] = value.strip()
    return mapping


def cmd_eval(args) -> int:
    _require_files(args.gold, args.strengths, args.preamble_config)
    column_map = _parse_column_map(args.column_map)
    preambles, _ = _load_preamble_config(args.preamble_config)
    if args.tool_column:
        gold, extra = load_gold(
            args.gold, column_map=column_map, extra_pattern_columns=[args.tool_column]
        )
        tool = extra[args.tool_column]
    else:
        gold = load_gold(args.gold, column_map=column_map)
        tagger, adapter = _build_tagger(args, preambles)

        def build_context(entry: GoldEntry) -> TagContext:
            ident_like = Identifier(
                name=entry.identifier,
                category=entry.category,
                language=entry.language,
                type_name=entry.type_name,
                system=entry.system,
            )
            return context_for(
                ident_like, preambles, loose_boolean=args.loose_boolean
            )

        try:
            tool = tag_gold_entries(
                gold, lambda tokens, ctx: tagger.tag(tokens, ctx), build_context
            )
        finally:
            if adapter is not None:
                adapter.close()
    result = evaluate(gold, tool)
    text = (
        reports.eval_to_csv(result) if args.format == "csv" else reports.eval_to_json(result)
    )
    if args.misses:
        ranked = top_misannotated(gold, tool, args.misses)
        if args.format == "json":
            payload = json.loads(text)
            payload["top_misannotated"] = {
                category.value: [
                    {"pattern": row.pattern, "count": row.count, "share": row.share}
                    for row in rows
                ]
                for category, rows in ranked.items()
            }
            text = json.dumps(payload, indent=2) + "\n"
        else:
            extra_lines = ["category,gold_pattern,miss_count,share_pct"]
            for category, rows in ranked.items():
                for row in rows:
                    extra_lines.append(
                        f"{category.value},{row.pattern},{row.count},{100 * row.share:.1f}"
                    )
            text += "\n".join(extra_lines) + "\n"
    _emit(text, args.out)
    return 0


def cmd_lint(args) -> int:
    _require_files(args.input, args.preamble_config)
    preambles, _ = _load_preamble_config(args.preamble_config)
    records = list(reports.tagged_from_jsonl(_read_lines(args.input)))
    enabled = frozenset(args.rules.split(",")) if args.rules else LintConfig().enabled
    severity_overrides = {}
    for item in args.severity or []:
        rule, sep, sev = item.partition("=")
        if not sep:
            raise ConfigError(f"--severity entries must be RULE=LEVEL: {item!r}")
        severity_overrides[rule.strip()] = Severity(sev.strip().lower())
    config = LintConfig(
        enabled=enabled,
        severity_overrides=severity_overrides,
        loose_boolean=args.loose_boolean,
    )
    annotated = [(ident, pattern) for ident, _tokens, pattern in records]
    tokens_by_name = {ident.name: tokens for ident, tokens, _ in records}
    findings, summary = lint_corpus(
        annotated, preambles, tokens_by_name=tokens_by_name, config=config
    )
    if args.format == "json":
        text = reports.findings_to_json(findings, summary)
    else:
        text = reports.findings_to_text(findings)
    _emit(text, args.out)
    return 0


# -- argument wiring ----------------------------------------------------------


def _add_tagger_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--tagger",
        choices=("heuristic", "external", "ensemble"),
        default="heuristic",
    )
    parser.add_argument("--adapter-cmd", help="external tagger command line")
    parser.add_argument("--strengths", help="tagger,tag,weight CSV for the ensemble")
    parser.add_argument("--preamble-config", help="TOML preamble lexicon/config")
    parser.add_argument("--loose-boolean", action="store_true")
    parser.add_argument("--interior-plurals", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="idgrammar", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_extract = sub.add_parser("extract", help="scan a source tree for identifiers")
    p_extract.add_argument("root")
    p_extract.add_argument("--config", help="TOML scan config")
    p_extract.add_argument("--languages", help="comma-separated: c,cpp,java,cs")
    p_extract.add_argument("--system", help="corpus label (default: root dir name)")
    p_extract.add_argument("--include-tests", action="store_true")
    p_extract.add_argument("--out")
    p_extract.set_defaults(func=cmd_extract)

    p_tag = sub.add_parser("tag", help="split and tag an identifier stream")
    p_tag.add_argument("--in", dest="input", help="identifier JSONL (default stdin)")
    p_tag.add_argument("--split-overrides", help="raw_name,tokens CSV")
    p_tag.add_argument("--detect-preambles", action="store_true")
    p_tag.add_argument("--dictionary", help="word list for preamble detection")
    _add_tagger_flags(p_tag)
    p_tag.add_argument("--out")
    p_tag.set_defaults(func=cmd_tag)

    p_report = sub.add_parser("report", help="aggregate tagged identifiers")
    p_report.add_argument("--in", dest="input", help="tagged JSONL (default stdin)")
    p_report.add_argument(
        "--report",
        choices=(
            "frequencies",
            "distribution",
            "verb-boolean",
            "plural-collection",
            "abbreviations",
        ),
        default="frequencies",
    )
    p_report.add_argument("--group-by", help="comma-separated: category,language")
    p_report.add_argument("--dictionary")
    p_report.add_argument("--loose-boolean", action="store_true")
    p_report.add_argument("--format", choices=("csv", "json"), default="json")
    p_report.add_argument("--out")
    p_report.set_defaults(func=cmd_report)

    p_eval = sub.add_parser("eval", help="measure tagger accuracy against gold")
    p_eval.add_argument("--gold", required=True)
    p_eval.add_argument("--tool-column", help="stored tool-annotation column name")
    p_eval.add_argument("--column-map", help="schema=header renames, comma-separated")
    p_eval.add_argument("--misses", type=int, help="also rank top-K missed patterns")
    _add_tagger_flags(p_eval)
    p_eval.add_argument("--format", choices=("csv", "json"), default="json")
    p_eval.add_argument("--out")
    p_eval.set_defaults(func=cmd_eval)

    p_lint = sub.add_parser("lint", help="appraise tagged identifiers")
    p_lint.add_argument("--in", dest="input", help="tagged JSONL (default stdin)")
    p_lint.add_argument("--preamble-config")
    p_lint.add_argument("--rules", help="comma-separated rule ids to enable")
    p_lint.add_argument(
        "--severity", action="append", help="override, e.g. R3=suggestion"
    )
    p_lint.add_argument("--loose-boolean", action="store_true")
    p_lint.add_argument("--format", choices=("json", "text"), default="text")
    p_lint.add_argument("--out")
    p_lint.set_defaults(func=cmd_lint)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(stream=sys.stderr, format="idgrammar: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits; keep main() returning an int
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _USAGE_ERRORS as exc:
        print(f"idgrammar: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except _DATA_ERRORS as exc:
        print(f"idgrammar: data error: {exc}", file=sys.stderr)
        return DATA_ERROR
    except IdGrammarError as exc:
        print(f"idgrammar: data error: {exc}", file=sys.stderr)
        return DATA_ERROR


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

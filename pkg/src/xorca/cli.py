"""Command-line interface: ``xorca evolve|classify|census|diff|count``.

Exit codes: 0 success, 1 I/O or data error, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from xorca import counting
from xorca.census import (
    CensusConfig,
    TableParseError,
    classify_rule,
    diff_against_paper,
    load_table,
    run_census,
    shipped_table,
    to_csv,
)
from xorca.evolve import evolve
from xorca.grid import check_dimensions, new_grid, place_seed
from xorca.render import to_ascii, to_pbm
from xorca.rules import ALL_RULES, InvalidRuleError, check_rule, parse_rule_list

SHIPPED_TABLES = ("table4", "table5")


class DataError(Exception):
    pass


def _rule(text: str) -> int:
    try:
        return check_rule(int(text))
    except (ValueError, InvalidRuleError):
        raise argparse.ArgumentTypeError(f"rule must be an integer in [0, 511], got {text!r}")


def _rules(text: str) -> tuple[int, ...]:
    try:
        return tuple(parse_rule_list(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        value = -1
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return value


def _cell(text: str) -> tuple[int, int]:
    s, sep, n = text.partition(":")
    if not sep or not s.isdigit() or not n.isdigit():
        raise argparse.ArgumentTypeError(f"cell must look like STATES:NEIGHBORHOOD, got {text!r}")
    return int(s), int(n)


def _geometry(p: argparse.ArgumentParser) -> None:
    p.add_argument("--rows", type=_nonneg, default=80)
    p.add_argument("--cols", type=_nonneg, default=80)
    p.add_argument("--seed-r", type=_nonneg, default=40)
    p.add_argument("--seed-c", type=_nonneg, default=40)
    steps = p.add_mutually_exclusive_group()
    steps.add_argument("--n", type=_nonneg, default=None, help="iterations (default 15)")
    steps.add_argument("--k", type=_nonneg, default=None, help="run n = 2**k - 1 iterations")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="xorca", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evolve", help="render the pattern after n iterations")
    p.add_argument("--rule", type=_rule, required=True)
    _geometry(p)
    p.add_argument("--format", choices=("ascii", "pbm"), default="ascii")
    p.add_argument("--out", type=Path)

    p = sub.add_parser("classify", help="print rule,group,shape,connectivity,cell_count")
    p.add_argument("--rule", type=_rule, required=True)
    _geometry(p)

    p = sub.add_parser("census", help="classify a rule set and write the CSV report")
    p.add_argument("--rules", type=_rules, default=ALL_RULES)
    _geometry(p)
    p.add_argument("--out", type=Path, help="CSV path (default: stdout)")
    p.add_argument(
        "--paper-table",
        action="append",
        default=[],
        metavar="PATH",
        help="digitized table to diff against; table4/table5 name the shipped ones",
    )
    p.add_argument("--workers", type=_nonneg, default=1)

    p = sub.add_parser("diff", help="diff a census against a digitized table (JSON)")
    p.add_argument("--table", default="table5", metavar="PATH")
    p.add_argument("--rules", type=_rules, default=ALL_RULES)
    _geometry(p)
    p.add_argument("--out", type=Path)
    p.add_argument("--workers", type=_nonneg, default=1)

    p = sub.add_parser("count", help="exact rule-space sizes")
    formulas = p.add_subparsers(dest="formula", required=True)
    f = formulas.add_parser("uniform")
    f.add_argument("--states", type=_nonneg, required=True)
    f.add_argument("--neighborhood", type=_nonneg, required=True)
    f = formulas.add_parser("hybrid")
    f.add_argument("--states", type=_nonneg, required=True)
    f.add_argument("--neighborhood", type=_nonneg, required=True)
    f.add_argument("--length", type=_nonneg, required=True)
    f = formulas.add_parser("hybrid-time")
    f.add_argument("--states", type=_nonneg, required=True)
    f.add_argument("--neighborhood", type=_nonneg, required=True)
    f.add_argument("--length", type=_nonneg, required=True)
    f.add_argument("--time", type=_nonneg, required=True)
    f = formulas.add_parser("heterogeneous")
    f.add_argument("--cell", type=_cell, action="append", required=True, metavar="S:N")
    f.add_argument("--time", type=_nonneg, required=True)
    f = formulas.add_parser("linear")
    f.add_argument("--neighborhood", type=_nonneg, required=True)
    for f in formulas.choices.values():
        f.add_argument("--budget", type=_nonneg, default=counting.DEFAULT_DIGIT_BUDGET)
    return parser


def _config(args, rules=ALL_RULES) -> CensusConfig:
    n = 15
    if args.n is not None:
        n = args.n
    elif args.k is not None:
        n = 2**args.k - 1
    return CensusConfig(args.rows, args.cols, (args.seed_r, args.seed_c), n, tuple(rules))


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise DataError(f"cannot write {out}: {exc.strerror or exc}") from None


def _table(spec: str):
    if spec in SHIPPED_TABLES and not os.path.exists(spec):
        return shipped_table(spec)
    try:
        return load_table(spec)
    except OSError as exc:
        raise DataError(f"cannot read table {spec}: {exc.strerror or exc}") from None
    except UnicodeDecodeError:
        raise DataError(f"table {spec} is not ASCII text") from None


def _census_diff(args, parser) -> None:
    config = _checked(_config(args, args.rules), parser)
    tables = [_table(t) for t in args.paper_table]
    records = run_census(config, workers=max(args.workers, 1))
    _emit(to_csv(records), args.out)
    for table in tables:
        report = diff_against_paper(records, table).to_json()
        if args.out is None:
            sys.stdout.write(report)
        else:
            _emit(report, args.out.with_name(f"{args.out.stem}.{table.name}.diff.json"))


def _checked(config: CensusConfig, parser) -> CensusConfig:
    try:
        return config.validate()
    except ValueError as exc:
        parser.error(str(exc))


def _run(args, parser) -> None:
    if args.command in ("evolve", "classify"):
        config = _checked(_config(args, (args.rule,)), parser)
        if args.command == "classify":
            rec = classify_rule(args.rule, config)
            sys.stdout.write(
                f"{rec.rule},{rec.group},{rec.shape.name},{rec.connectivity.value},{rec.cell_count}\n"
            )
            return
        start = place_seed(new_grid(config.rows, config.cols), *config.seed)
        grid, _ = evolve(start, args.rule, config.iterations)
        render = to_pbm if args.format == "pbm" else to_ascii
        _emit(render(grid), args.out)
    elif args.command == "census":
        _census_diff(args, parser)
    elif args.command == "diff":
        config = _checked(_config(args, args.rules), parser)
        table = _table(args.table)
        records = run_census(config, workers=max(args.workers, 1))
        _emit(diff_against_paper(records, table).to_json(), args.out)
    elif args.command == "count":
        _count(args, parser)


def _count(args, parser) -> None:
    try:
        if args.formula == "uniform":
            value = counting.count_uniform(args.states, args.neighborhood, args.budget)
        elif args.formula == "hybrid":
            value = counting.count_hybrid(args.states, args.neighborhood, args.length, args.budget)
        elif args.formula == "hybrid-time":
            value = counting.count_hybrid_time(
                args.states, args.neighborhood, args.length, args.time, args.budget
            )
        elif args.formula == "heterogeneous":
            value = counting.count_heterogeneous_time(args.cell, args.time, args.budget)
        else:
            value = counting.linear_rule_count(args.neighborhood)
    except counting.DigitBudgetError as exc:
        raise DataError(str(exc)) from None
    except ValueError as exc:
        parser.error(str(exc))
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    approx = counting.scientific(value)
    exact = counting.power_form(value)
    sys.stdout.write(f"{value}\n{exact + ' ' if exact else ''}~ {approx}\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _run(args, parser)
    except (DataError, TableParseError) as exc:
        print(f"xorca: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

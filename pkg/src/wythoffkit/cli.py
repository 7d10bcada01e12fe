"""Command-line front end.

    wythoffkit table --game r-wythoff --max 9
    wythoffkit verify all --game e-wythoff --max 500
    wythoffkit conjecture additive-period --game r-wythoff --row 3..10 --max-b 20000
    wythoffkit classify 4
    wythoffkit best-move --game r-wythoff --position 1,3

Exit status: 0 when every report is Pass or Skipped, 1 when any report is
Fail, 2 for usage and configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

import numpy as np

from . import explore, verify
from .beatty import classify
from .engine import ORDERS, TableMemoryError, build_table, estimate_bytes, winning_moves
from .reports import any_failed, to_json, to_text
from .rules import ConfigError, GameId, Position, parse_game

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# runs whose estimated table size exceeds this need --yes
CONFIRM_BYTES = 1 << 30

SUITES = ("p-positions", "value1", "golden", "bounds", "rows", "row-existence", "diagonal", "redundancy", "all")
CONJECTURES = ("additive-period", "bw-upper2", "ew-diagonals", "survey-value1")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _row_range(text: str) -> tuple[int, int]:
    """``"3"`` or ``"0..30"``."""
    lo, sep, hi = text.partition("..")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if sep else lo_i
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a row or a range lo..hi, got {text!r}") from None
    if lo_i < 0 or hi_i < lo_i:
        raise argparse.ArgumentTypeError(f"bad row range {text!r}")
    return lo_i, hi_i


def _position(text: str) -> Position:
    try:
        return Position.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--game",
        default="r-wythoff",
        help="wythoff, r-wythoff, e-wythoff, generalized:<path.ini> or preset:<name> (default r-wythoff)",
    )
    common.add_argument("--format", choices=("ascii", "csv", "json"), default="ascii")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    p = _Parser(prog="wythoffkit", description="Sprague-Grundy analysis of Wythoff's game and its variants.")
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    t = sub.add_parser("table", parents=[common], help="compute and print a Grundy table")
    t.add_argument("--max", type=_nonneg, default=9, help="largest pile size (default 9)")
    t.add_argument("--order", choices=ORDERS, default="sequential")
    t.add_argument("--yes", action="store_true", help="confirm a large run")

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--max", type=_nonneg, default=200, help="position bound for table checks (default 200)")
    v.add_argument("--max-b", type=_nonneg, help="row bound for the rows suite (default --max)")
    v.add_argument("--k-max", type=_nonneg, default=50, help="redundancy witnesses k <= K (default 50)")
    v.add_argument("--a-max", type=_nonneg, default=9)
    v.add_argument("--c-max", type=_nonneg, default=9)
    v.add_argument("--b-budget", type=_nonneg, help="search budget for row/diagonal suites (default --max)")
    v.add_argument("--yes", action="store_true", help="confirm a large run")

    c = sub.add_parser("conjecture", parents=[common], help="explore an open conjecture")
    c.add_argument("name", choices=CONJECTURES)
    c.add_argument("--max", type=_nonneg, default=500, help="position bound (default 500)")
    c.add_argument("--row", type=_row_range, default=(0, 10), help="row or range lo..hi (default 0..10)")
    c.add_argument("--max-b", type=_nonneg, default=20000, help="window for period mining (default 20000)")
    c.add_argument("--yes", action="store_true", help="confirm a large run")

    k = sub.add_parser("classify", parents=[common], help="place v in the lower or upper Wythoff sequence")
    k.add_argument("value", type=int)

    b = sub.add_parser("best-move", parents=[common], help="list the winning moves from a position")
    b.add_argument("--position", type=_position, required=True, metavar="A,B")
    return p


def _confirm(args, bound: int, rows: Optional[int] = None, order: str = "sequential") -> None:
    est = estimate_bytes(bound, rows, order)
    if est > CONFIRM_BYTES and not args.yes:
        raise UsageError(f"this run needs about {est / 2**20:.0f} MiB for its table; pass --yes to proceed")


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def render_ascii(square: np.ndarray) -> str:
    n = len(square)
    w = max(len(str(int(square.max()))), len(str(n - 1)), 1)
    lw = max(len(str(n - 1)), 3)
    lines = []
    for a in range(n - 1, -1, -1):
        cells = " ".join(f"{int(x):>{w}}" for x in square[a])
        lines.append(f"{a:>{lw}} | {cells}")
    lines.append("-" * lw + "-+-" + "-" * (n * (w + 1) - 1))
    lines.append(f"{'a/b':>{lw}} | " + " ".join(f"{b:>{w}}" for b in range(n)))
    return "\n".join(lines)


def parse_ascii_table(text: str) -> np.ndarray:
    """Inverse of :func:`render_ascii`."""
    rows = {}
    for line in text.splitlines():
        head, sep, rest = line.partition("|")
        head = head.strip()
        if not sep or not head.isdigit():
            continue
        rows[int(head)] = [int(x) for x in rest.split()]
    n = len(rows)
    return np.array([rows[a] for a in range(n)], dtype=np.int64).reshape(n, n)


def cmd_table(args) -> int:
    rule = parse_game(args.game)
    _confirm(args, args.max, order=args.order)
    t = build_table(rule, args.max, order=args.order)
    if args.format == "csv":
        _emit(args, t.to_csv(symmetric=True))
    elif args.format == "json":
        cells = t.cells(symmetric=True).tolist()
        doc = {"rule": rule.name, "max": args.max, "cells": [{"a": a, "b": b, "g": g} for a, b, g in cells]}
        _emit(args, json.dumps(doc))
    else:
        _emit(args, render_ascii(t.square()))
    return EXIT_OK


def _report_out(args, reports: list) -> int:
    if args.format == "json":
        _emit(args, to_json(reports))
    else:
        _emit(args, to_text(reports))
    return EXIT_FAIL if any_failed(reports) else EXIT_OK


def cmd_verify(args) -> int:
    rule = parse_game(args.game)
    suite = args.suite
    n = args.max
    budget = n if args.b_budget is None else args.b_budget
    max_b = n if args.max_b is None else args.max_b
    if suite == "all":
        # diagonal uniqueness and non-redundancy are statements about R-Wythoff only
        r_only = ("diagonal", "redundancy")
        want = tuple(x for x in SUITES[:-1] if rule.id is GameId.R_WYTHOFF or x not in r_only)
    else:
        want = (suite,)

    if any(s in want for s in ("p-positions", "value1", "bounds")):
        _confirm(args, n)
    table = build_table(rule, n) if any(s in want for s in ("p-positions", "value1", "bounds")) else None
    reports = []
    for s in want:
        if s == "p-positions":
            reports.append(verify.verify_p_positions(rule, n, table))
        elif s == "value1":
            reports.append(verify.verify_value1(rule, n, table))
        elif s == "golden":
            reports.append(verify.verify_golden_tables())
        elif s == "bounds":
            reports.append(verify.verify_bounds(rule, n, table))
        elif s == "rows":
            reports.append(verify.verify_small_row_formulas(rule, max_b, table if max_b <= n else None))
        elif s == "row-existence":
            _confirm(args, budget, args.a_max)
            reports.append(verify.verify_row_existence(rule, args.a_max, args.c_max, budget))
        elif s == "diagonal":
            _confirm(args, args.a_max + budget, budget)
            reports.append(verify.verify_diagonal_uniqueness(args.a_max, args.c_max, budget))
        elif s == "redundancy":
            reports.append(verify.verify_no_redundant_moves(args.k_max))
    return _report_out(args, reports)


def cmd_conjecture(args) -> int:
    name = args.name
    if name == "additive-period":
        rule = parse_game(args.game)
        lo, hi = args.row
        _confirm(args, args.max_b, hi)
        table = build_table(rule, args.max_b, rows=hi)
        reports = [explore.mine_additive_period(rule, a, args.max_b, table) for a in range(lo, hi + 1)]
    elif name == "bw-upper2":
        _confirm(args, args.max)
        reports = [explore.check_conjecture_bw_upper2(args.max)]
    elif name == "ew-diagonals":
        _confirm(args, args.max)
        reports = [explore.check_conjecture_ew_diagonals(args.max)]
    else:
        _confirm(args, args.max)
        reports = [explore.survey_value1_variants(args.max)]
    return _report_out(args, reports)


def cmd_classify(args) -> int:
    v = args.value
    if v < 1:
        raise UsageError(f"classify needs v >= 1, got {v}")
    c = classify(v)
    pa, pb = c.p_position()
    if args.format == "json":
        _emit(args, json.dumps({"value": v, "kind": c.kind.value, "index": c.index, "p_position": [pa, pb]}))
    elif args.format == "csv":
        _emit(args, f"value,kind,index,a,b\n{v},{c.kind.value},{c.index},{pa},{pb}")
    else:
        _emit(args, f"{c.kind.value}, n={c.index}, P-position ({pa},{pb})")
    return EXIT_OK


def cmd_best_move(args) -> int:
    rule = parse_game(args.game)
    p = args.position
    wins = winning_moves(rule, p)
    if args.format == "json":
        doc = {
            "rule": rule.name,
            "position": list(p),
            "p_position": not wins,
            "moves": [dict(m.to_dict(), result=list(q)) for m, q in wins],
        }
        _emit(args, json.dumps(doc))
    elif args.format == "csv":
        lines = ["kind,take_low,take_high,a,b"]
        lines += [f"{m.kind.value},{m.take_low},{m.take_high},{q.low},{q.high}" for m, q in wins]
        _emit(args, "\n".join(lines))
    elif not wins:
        _emit(args, "P-position: no winning move")
    else:
        _emit(args, "\n".join(f"{m.describe()} -> {q!r}" for m, q in wins))
    return EXIT_OK


_COMMANDS = {
    "table": cmd_table,
    "verify": cmd_verify,
    "conjecture": cmd_conjecture,
    "classify": cmd_classify,
    "best-move": cmd_best_move,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except (UsageError, ConfigError, OSError, TableMemoryError) as e:
        print(f"wythoffkit: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Exhaustive checks of the closed-form results on computed tables.

Each ``verify_*`` function returns a :class:`VerificationReport`; failures are
reported with counterexample positions, never raised.  Functions accept an
optional prebuilt ``table`` so one build can serve several checks.
"""

from __future__ import annotations

from importlib import resources
from typing import Optional

import numpy as np

from .beatty import BeattyKind, beatty_a, beatty_a_upto, beatty_b, classify
from .engine import GrundyTable, build_table, winning_moves
from .reports import Checker, VerificationReport
from .rules import (
    E_WYTHOFF,
    R_WYTHOFF,
    GameId,
    GameRule,
    Move,
    MoveKind,
    Position,
    value1_formula,
)

__all__ = [
    "verify_p_positions",
    "verify_value1",
    "verify_no_redundant_moves",
    "verify_row_existence",
    "verify_diagonal_uniqueness",
    "verify_small_row_formulas",
    "verify_bounds",
    "verify_golden_tables",
    "load_fixture",
]

_PREFIX = {
    GameId.WYTHOFF: "W",
    GameId.R_WYTHOFF: "BW",
    GameId.E_WYTHOFF: "CW",
    GameId.GENERALIZED: "GEN",
}


def _claim(rule: GameRule, suffix: str) -> str:
    return f"{_PREFIX[rule.id]}-{suffix}"


def _table(rule: GameRule, bound: int, rows: Optional[int], table: Optional[GrundyTable]) -> GrundyTable:
    need_rows = bound if rows is None else min(rows, bound)
    if table is not None and table.rule == rule and table.bound >= bound and table.rows >= need_rows:
        return table
    return build_table(rule, bound, rows=rows)


def _cells(table: GrundyTable, bound: int):
    """``(a, b, g)`` arrays for all cells with ``b <= bound``."""
    a, b = table.coords()
    keep = b <= bound
    return a[keep], b[keep], table.values[keep].astype(np.int64)


def _p_positions_upto(bound: int) -> set[tuple[int, int]]:
    # b(n) >= 2n, so n <= bound // 2 covers every pair with high <= bound
    n = np.arange(bound // 2 + 2)
    a = beatty_a_upto(len(n) - 1)
    b = a + n
    keep = b <= bound
    return set(zip(a[keep].tolist(), b[keep].tolist()))


def verify_p_positions(rule: GameRule, bound: int, table: Optional[GrundyTable] = None) -> VerificationReport:
    """Zero set of the table equals the Wythoff P-positions, for high <= bound."""
    chk = Checker(_claim(rule, "P"), rule, bound=bound)
    t = _table(rule, bound, None, table)
    a, b, g = _cells(t, bound)
    zeros = set(zip(a[g == 0].tolist(), b[g == 0].tolist()))
    expected = _p_positions_upto(bound)
    for p in sorted(zeros - expected):
        chk.fail(p, "Grundy value 0 but not a Wythoff P-position")
    for p in sorted(expected - zeros):
        chk.fail(p, f"Wythoff P-position with Grundy value {t.value(*p)}")
    return chk.done(p_positions=len(expected))


def _value1_expected(rule: GameRule, bound: int) -> set[Position]:
    n_max = 0
    while beatty_b(n_max + 1) - 1 <= bound:
        n_max += 1
    return {p for p in value1_formula(rule, max(n_max, 1)) if p.high <= bound}


def verify_value1(rule: GameRule, bound: int, table: Optional[GrundyTable] = None) -> VerificationReport:
    """Positions of Grundy value 1 equal the closed-form set, for high <= bound."""
    chk = Checker(_claim(rule, "V1"), rule, bound=bound)
    if rule.id not in (GameId.R_WYTHOFF, GameId.E_WYTHOFF):
        chk.skip(f"no value-1 formula for {rule.name}")
        return chk.done()
    t = _table(rule, bound, None, table)
    a, b, g = _cells(t, bound)
    found = {Position(x, y) for x, y in zip(a[g == 1].tolist(), b[g == 1].tolist())}
    expected = _value1_expected(rule, bound)
    for p in sorted(found - expected):
        chk.fail(p, "Grundy value 1 but not in the formula set")
    for p in sorted(expected - found):
        chk.fail(p, f"in the formula set but Grundy value is {t.value(p.low, p.high)}")
    shown = sorted(found)
    return chk.done(count=len(found), value1=[list(p) for p in shown[:20]])


def verify_no_redundant_moves(k_max: int) -> VerificationReport:
    """Every R-Wythoff move family is the unique winning move somewhere.

    For each k: from ``(1, 2 + k)`` only "take k from the larger pile" wins,
    and from ``(a(n) + k, b(n) + k)``, with n = 2 or 3 chosen so that
    ``a(n) + k`` is itself a lower Wythoff number, only "take k from both" wins.
    """
    chk = Checker("BW-NoRestriction", R_WYTHOFF, k_max=k_max)
    if k_max < 1:
        chk.skip("empty range of k")
        return chk.done()
    witnesses = []
    for k in range(1, k_max + 1):
        p = Position(1, 2 + k)
        wins = winning_moves(R_WYTHOFF, p)
        want = Move(MoveKind.SINGLE_LARGER, 0, k)
        if [m for m, _ in wins] != [want]:
            chk.fail(p, f"k={k}: winning moves {[m.describe() for m, _ in wins]}, expected only '{want.describe()}'")

        if classify(3 + k).kind is BeattyKind.A:
            n = 2
        elif classify(4 + k).kind is BeattyKind.A:
            n = 3
        else:
            chk.fail((3 + k, 4 + k), f"k={k}: neither {3 + k} nor {4 + k} is a lower Wythoff number")
            continue
        q = Position(beatty_a(n) + k, beatty_b(n) + k)
        wins = winning_moves(R_WYTHOFF, q)
        want = Move(MoveKind.EQUAL_BOTH, k, k)
        if [m for m, _ in wins] != [want]:
            chk.fail(q, f"k={k}: winning moves {[m.describe() for m, _ in wins]}, expected only '{want.describe()}'")
        if k <= 20:
            witnesses.append({"k": k, "larger": list(p), "both": list(q), "n": n})
    return chk.done(witnesses=witnesses)


def verify_row_existence(
    rule: GameRule, a_max: int, c_max: int, b_budget: int, table: Optional[GrundyTable] = None
) -> VerificationReport:
    """Every value ``c <= c_max`` occurs in each row ``a <= a_max`` within ``b <= b_budget``.

    Rules with single-pile moves from both piles (all but R-Wythoff) must hit
    each value at most once per row; a repeat is a counterexample.  Values not
    found within the budget make the report Skipped, not Fail.
    """
    chk = Checker(_claim(rule, "Row"), rule, a_max=a_max, c_max=c_max, b_budget=b_budget)
    unique = rule.id is not GameId.R_WYTHOFF
    t = _table(rule, b_budget, a_max, table)
    missing = []
    for a in range(a_max + 1):
        r = t.row(a)[: b_budget + 1]
        small = r[r <= c_max]
        counts = np.bincount(small, minlength=c_max + 1)
        for c in np.nonzero(counts == 0)[0].tolist():
            missing.append((a, c))
        if unique:
            for c in np.nonzero(counts > 1)[0].tolist():
                hits = np.nonzero(r == c)[0].tolist()
                chk.fail((a, hits[1]), f"value {c} occurs in row {a} at b={hits}")
    if missing:
        shown = ", ".join(f"(a={a}, c={c})" for a, c in missing[:10])
        chk.skip(f"{len(missing)} (row, value) pairs not reached within b <= {b_budget}: {shown}")
    return chk.done(unique_checked=unique, missing=len(missing))


def verify_diagonal_uniqueness(
    a_max: int, c_max: int, b_budget: int, table: Optional[GrundyTable] = None
) -> VerificationReport:
    """Each value ``c <= c_max`` occurs at most once on each R-Wythoff diagonal
    ``(b, a + b)``, ``a <= a_max``, ``b <= b_budget``; existence as for rows."""
    chk = Checker("BW-Diagonal", R_WYTHOFF, a_max=a_max, c_max=c_max, b_budget=b_budget)
    t = _table(R_WYTHOFF, a_max + b_budget, b_budget, table)
    missing = []
    for a in range(a_max + 1):
        d = t.diagonal(a)[: b_budget + 1]
        counts = np.bincount(d[d <= c_max], minlength=c_max + 1)
        for c in np.nonzero(counts == 0)[0].tolist():
            missing.append((a, c))
        for c in np.nonzero(counts > 1)[0].tolist():
            hits = np.nonzero(d == c)[0].tolist()
            chk.fail((hits[1], a + hits[1]), f"value {c} occurs on diagonal {a} at b={hits}")
    if missing:
        shown = ", ".join(f"(a={a}, c={c})" for a, c in missing[:10])
        chk.skip(f"{len(missing)} (diagonal, value) pairs not reached within b <= {b_budget}: {shown}")
    return chk.done(missing=len(missing))


def _wythoff_row1(i: np.ndarray) -> np.ndarray:
    return np.where(i % 3 <= 1, i + 1, i - 2)


def _row_formulas(rule: GameRule):
    """(name, row, first valid column, formula) tuples for a rule."""
    if rule.id is GameId.R_WYTHOFF:
        return [
            ("R0: g(0,i) = i", 0, 0, lambda i: i),
            ("R1: g(1,i) = i", 1, 3, lambda i: i),
            ("R2: g(2,i) = i", 2, 3, lambda i: i),
            ("R3: g(3,i) = i or i-4 by i mod 4", 3, 7, lambda i: np.where(np.isin(i % 4, (0, 3)), i, i - 4)),
        ]
    if rule.id is GameId.E_WYTHOFF:
        return [
            ("R1: g(1,i) = i+1 or i-2 by i mod 3", 1, 0, _wythoff_row1),
            ("R2: g(2,i) = i+2, i-3, i+1 by i mod 3", 2, 0, lambda i: np.choose(i % 3, [i + 2, i - 3, i + 1])),
        ]
    if rule.id is GameId.WYTHOFF:
        return [("R1: g(1,i) = i+1 or i-2 by i mod 3", 1, 0, _wythoff_row1)]
    return []


# g(3, i) for i = 0..7 in R-Wythoff, listed before the closed form takes over
_R3_PREFIX = (3, 3, 3, 4, 2, 0, 1, 7)


def verify_small_row_formulas(rule: GameRule, b_max: int, table: Optional[GrundyTable] = None) -> VerificationReport:
    """Closed forms of the first rows, each on its stated range of columns."""
    chk = Checker(_claim(rule, "SmallRows"), rule, b_max=b_max)
    formulas = _row_formulas(rule)
    if not formulas:
        chk.skip(f"no row formulas for {rule.name}")
        return chk.done()
    top = max(r for _, r, _, _ in formulas)
    t = _table(rule, b_max, top, table)
    checked = {}
    for name, a, start, f in formulas:
        i = np.arange(start, b_max + 1)
        if rule.id is GameId.E_WYTHOFF and a == 2:
            i = i[i != 1]
        got = t.row(a)[i]
        want = f(i)
        for j in np.nonzero(got != want)[0]:
            chk.fail((a, int(i[j])), f"{name}: expected {int(want[j])}, got {int(got[j])}")
        checked[name] = int(len(i))
    if rule.id is GameId.R_WYTHOFF:
        for i, want in enumerate(_R3_PREFIX[: b_max + 1]):
            got = t.value(3, i)
            if got != want:
                chk.fail((3, i), f"R3 prefix: expected {want}, got {got}")
    return chk.done(cells_checked=checked)


def verify_bounds(rule: GameRule, bound: int, table: Optional[GrundyTable] = None) -> VerificationReport:
    """Lower bound ``g >= b - 2a + 1`` and upper bounds on their stated domains.

    R-Wythoff: lower for 4 <= a <= b, ``g <= a + b - 1`` for 2 <= a <= b.
    E-Wythoff (and generalized extensions): lower for 3 <= a <= b, ``g <= a + b``
    everywhere.
    """
    chk = Checker(_claim(rule, "Bounds"), rule, bound=bound)
    if rule.id is GameId.R_WYTHOFF:
        lower_from, upper_from, slack = 4, 2, 1
    elif rule.id in (GameId.E_WYTHOFF, GameId.GENERALIZED):
        lower_from, upper_from, slack = 3, 0, 0
    else:
        chk.skip(f"no bound results for {rule.name}")
        return chk.done()
    t = _table(rule, bound, None, table)
    a, b, g = _cells(t, bound)
    low = (a >= lower_from) & (g < b - 2 * a + 1)
    high = (a >= upper_from) & (g > a + b - slack)
    for j in np.nonzero(low)[0]:
        chk.fail((a[j], b[j]), f"g={g[j]} below b-2a+1={b[j] - 2 * a[j] + 1}")
    for j in np.nonzero(high)[0]:
        chk.fail((a[j], b[j]), f"g={g[j]} above a+b-{slack}={a[j] + b[j] - slack}")
    return chk.done(
        lower_cells=int(np.count_nonzero(a >= lower_from)),
        upper_cells=int(np.count_nonzero(a >= upper_from)),
    )


def load_fixture(name: str) -> dict[tuple[int, int], int]:
    """Golden 10x10 table ``table1`` (R-Wythoff) or ``table2`` (E-Wythoff)."""
    text = resources.files(__package__).joinpath("data", f"{name}.txt").read_text(encoding="utf-8")
    out = {}
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            a, b, g = (int(x) for x in line.split())
            out[(a, b)] = g
    return out


def verify_golden_tables() -> VerificationReport:
    """Bit-exact comparison of the 10x10 tables with the stored fixtures."""
    chk = Checker("Golden-Tables", "r-wythoff,e-wythoff", bound=9)
    for name, rule in (("table1", R_WYTHOFF), ("table2", E_WYTHOFF)):
        fixture = load_fixture(name)
        t = build_table(rule, 9)
        if len(fixture) != 100:
            chk.fail((0, 0), f"{name} fixture has {len(fixture)} cells, expected 100")
        for (a, b), want in sorted(fixture.items()):
            got = t.value(a, b)
            if got != want:
                chk.fail((a, b), f"{name}: fixture {want}, computed {got}")
    return chk.done(cells=200)

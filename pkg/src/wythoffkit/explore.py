"""Empirical checks of open conjectures: additive periodicity of rows and
closed forms on diagonals.  Nothing here proves anything; reports say what
holds on the computed window."""

from __future__ import annotations

import math
import time
from typing import Iterable, Optional, Sequence

import numpy as np

from .beatty import beatty_a_upto
from .engine import GrundyTable, build_table
from .reports import Checker, PeriodReport, SurveyReport, VerificationReport
from .rules import E_WYTHOFF, R_WYTHOFF, WYTHOFF, GameRule, preset
from .verify import _cells, _p_positions_upto, _table

__all__ = [
    "find_additive_period",
    "mine_additive_period",
    "check_conjecture_bw_upper2",
    "check_conjecture_ew_diagonals",
    "survey_value1_variants",
    "default_survey_rules",
]

# a period must be confirmed on at least this fraction of the window
MIN_SPAN_FRACTION = 0.5


def find_additive_period(s: Sequence[int], min_fraction: float = MIN_SPAN_FRACTION) -> Optional[tuple[int, int]]:
    """Smallest ``(p, n0)``, by p then n0, with ``s[n + p] == s[n] + p`` for
    every ``n0 <= n <= len(s) - 1 - p``.

    A candidate counts only if that range holds at least two periods and at
    least ``min_fraction`` of the window; otherwise any large p near the end
    of the window would qualify vacuously.
    """
    s = np.asarray(s, dtype=np.int64)
    B = len(s) - 1
    if B < 4:
        raise ValueError(f"window too short for period mining: b_max={B} < 4")
    floor_span = math.ceil(min_fraction * B)
    for p in range(1, B + 1):
        need = max(floor_span, 2 * p)
        last = B - p
        if last + 1 < need:
            return None
        # cheap rejection on the tail before the full scan
        k = min(16, need)
        if not np.array_equal(s[last - k + 1 + p : last + 1 + p] - s[last - k + 1 : last + 1], np.full(k, p)):
            continue
        bad = np.nonzero(s[p:] - s[:-p] != p)[0]
        n0 = int(bad[-1]) + 1 if len(bad) else 0
        if last - n0 + 1 >= need:
            return p, n0
    return None


def mine_additive_period(
    rule: GameRule, a: int, b_max: int, table: Optional[GrundyTable] = None
) -> PeriodReport:
    """Additive period of row ``a`` on ``b <= b_max``, re-mined on ``b <= b_max // 2``
    to judge stability."""
    if b_max < 4:
        raise ValueError(f"window too short for period mining: b_max={b_max} < 4")
    t0 = time.perf_counter()
    t = _table(rule, b_max, a, table)
    s = t.row(a)[: b_max + 1]
    found = find_additive_period(s)
    half = find_additive_period(s[: b_max // 2 + 1])
    p, n0 = found if found else (None, None)
    return PeriodReport(
        rule=rule.name,
        row=a,
        period=p,
        preperiod=n0,
        checked_to=b_max,
        stable_under_doubling=found is not None and found == half,
        elapsed=time.perf_counter() - t0,
    )


def check_conjecture_bw_upper2(bound: int, table: Optional[GrundyTable] = None) -> VerificationReport:
    """For 4 <= a < b: ``g <= b + b//3 - 1``; for 4 <= b: ``3b//4 <= g(b, b) <= b + b//3``."""
    chk = Checker("BW-upper2", R_WYTHOFF, bound=bound)
    t = _table(R_WYTHOFF, bound, None, table)
    a, b, g = _cells(t, bound)
    off = (a >= 4) & (a < b) & (g > b + b // 3 - 1)
    on = (a >= 4) & (a == b) & ((g < 3 * b // 4) | (g > b + b // 3))
    for j in np.nonzero(off)[0]:
        chk.fail((a[j], b[j]), f"g={g[j]} > b + b//3 - 1 = {b[j] + b[j] // 3 - 1}  [refutes the conjecture]")
    for j in np.nonzero(on)[0]:
        chk.fail((a[j], b[j]), f"g={g[j]} outside [{3 * b[j] // 4}, {b[j] + b[j] // 3}]  [refutes the conjecture]")
    return chk.done(cells=int(np.count_nonzero(a >= 4)))


def check_conjecture_ew_diagonals(bound: int, table: Optional[GrundyTable] = None) -> VerificationReport:
    """E-Wythoff diagonals:

    * ``g(a, a + r) = 2a + r`` for ``r >= 0, a >= 2r``, except ``g(2, 2) = 3``;
    * ``g(a, 3a + r) = 4a + r - 1`` for ``a >= 4, 2 <= r <= a + 1``.
    """
    chk = Checker("EW-diagonals", E_WYTHOFF, bound=bound)
    t = _table(E_WYTHOFF, bound, None, table)
    a, b, g = _cells(t, bound)
    r = b - a
    near = a >= 2 * r
    want = np.where((a == 2) & (r == 0), 3, 2 * a + r)
    near_bad = np.nonzero(near & (g != want))[0]
    for j in near_bad:
        chk.fail((a[j], b[j]), f"near-diagonal: g={g[j]}, conjectured {want[j]}  [refutes the conjecture]")
    r3 = b - 3 * a
    far = (a >= 4) & (r3 >= 2) & (r3 <= a + 1)
    want3 = 4 * a + r3 - 1
    far_bad = np.nonzero(far & (g != want3))[0]
    for j in far_bad:
        chk.fail((a[j], b[j]), f"g(a,3a+r): g={g[j]}, conjectured {want3[j]}  [refutes the conjecture]")
    return chk.done(
        near_cells=int(np.count_nonzero(near)),
        near_failures=len(near_bad),
        far_cells=int(np.count_nonzero(far)),
        far_failures=len(far_bad),
    )


def default_survey_rules() -> list[GameRule]:
    return [WYTHOFF, R_WYTHOFF, E_WYTHOFF, preset("successor")]


def survey_value1_variants(bound: int, rules: Optional[Iterable[GameRule]] = None) -> SurveyReport:
    """For each rule: does it keep the Wythoff P-positions up to ``bound``, and
    how does its value-1 set differ from ``{(a(n) - 1, b(n) - 1)}``?

    Purely descriptive.
    """
    t0 = time.perf_counter()
    rules = default_survey_rules() if rules is None else list(rules)
    n = np.arange(bound // 2 + 3)
    an = beatty_a_upto(len(n) - 1)
    shifted = {(int(x) - 1, int(y) - 1) for x, y in zip(an[1:], (an + n)[1:]) if y - 1 <= bound}
    p_set = _p_positions_upto(bound)
    entries = []
    for rule in rules:
        t = build_table(rule, bound)
        a, b, g = _cells(t, bound)
        zeros = set(zip(a[g == 0].tolist(), b[g == 0].tolist()))
        ones = set(zip(a[g == 1].tolist(), b[g == 1].tolist()))
        entries.append(
            {
                "rule": rule.name,
                "preserves_p_positions": zeros == p_set,
                "extra": sorted(ones - shifted),
                "missing": sorted(shifted - ones),
            }
        )
    return SurveyReport(bound, entries, time.perf_counter() - t0)

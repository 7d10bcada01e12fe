import json

import pytest

from oracles import wythoff_p_positions
from wythoffkit import E_WYTHOFF, R_WYTHOFF, WYTHOFF, build_table, winning_moves
from wythoffkit.reports import Checker, Status, any_failed, to_json, to_text
from wythoffkit.rules import Position, preset
from wythoffkit.verify import (
    _p_positions_upto,
    load_fixture,
    verify_bounds,
    verify_diagonal_uniqueness,
    verify_golden_tables,
    verify_no_redundant_moves,
    verify_p_positions,
    verify_row_existence,
    verify_small_row_formulas,
    verify_value1,
)


def P(*pairs):
    return [list(p) for p in pairs]


def test_p_position_set_matches_greedy_construction():
    assert _p_positions_upto(500) == wythoff_p_positions(500)


@pytest.mark.parametrize("rule,bound", [(R_WYTHOFF, 9), (E_WYTHOFF, 9), (WYTHOFF, 0), (preset("successor"), 150)])
def test_p_positions_pass(rule, bound):
    assert verify_p_positions(rule, bound).status is Status.PASS


def test_p_positions_monotone():
    t = build_table(E_WYTHOFF, 120)
    for m in (0, 1, 7, 50, 120):
        assert verify_p_positions(E_WYTHOFF, m, t).status is Status.PASS


def test_value1_examples():
    r = verify_value1(R_WYTHOFF, 9)
    assert r.status is Status.PASS
    assert r.details["value1"] == P((0, 1), (2, 2), (3, 6), (4, 6), (5, 9))
    r = verify_value1(R_WYTHOFF, 1)
    assert r.status is Status.PASS and r.details["value1"] == P((0, 1))
    e = verify_value1(E_WYTHOFF, 9)
    assert e.status is Status.PASS
    # (5,9) = (a(4) - 1, b(4) - 1) has value 1 as well
    assert e.details["value1"] == P((0, 1), (2, 4), (3, 6), (5, 9))


def test_value1_skipped_without_formula():
    assert verify_value1(WYTHOFF, 50).status is Status.SKIPPED


def test_no_redundant_moves():
    r = verify_no_redundant_moves(1)
    assert r.status is Status.PASS
    assert r.details["witnesses"][0] == {"k": 1, "larger": [1, 3], "both": [4, 6], "n": 2}
    assert verify_no_redundant_moves(0).status is Status.SKIPPED
    w2 = verify_no_redundant_moves(2).details["witnesses"][1]
    assert w2["both"] == [6, 9] and w2["n"] == 3
    wins = winning_moves(R_WYTHOFF, (6, 9))
    assert [(m.describe(), tuple(q)) for m, q in wins] == [("take 2 from both piles", (4, 7))]


def test_row_existence_examples():
    r = verify_row_existence(R_WYTHOFF, 9, 9, 9)
    t = build_table(R_WYTHOFF, 9)
    assert t.value(4, 7) == 0
    assert r.status in (Status.PASS, Status.SKIPPED)
    e = verify_row_existence(E_WYTHOFF, 2, 6, 9)
    assert e.status is Status.PASS
    assert build_table(E_WYTHOFF, 9).row(2).tolist() == [2, 0, 3, 5, 1, 6, 8, 4, 9, 11]
    assert verify_row_existence(R_WYTHOFF, 0, 5, 5).status is Status.PASS


def test_row_existence_budget_exhaustion_is_skipped():
    r = verify_row_existence(E_WYTHOFF, 5, 40, 10)
    assert r.status is Status.SKIPPED
    assert r.details["missing"] > 0 and not r.counterexamples


def test_row_uniqueness_failure_in_r_wythoff_is_not_checked():
    # R-Wythoff rows repeat values (row 3 starts 3, 3, 3)
    assert verify_row_existence(R_WYTHOFF, 3, 3, 60).status is Status.PASS


def test_diagonal_examples():
    t = build_table(R_WYTHOFF, 20)
    assert [t.value(b, b) for b in range(10)] == [0, 2, 1, 4, 3, 6, 5, 8, 7, 10]
    assert t.value(1, 2) == 0
    assert verify_diagonal_uniqueness(2, 2, 9).status is Status.PASS
    assert verify_diagonal_uniqueness(9, 9, 200).status is Status.PASS


def test_small_rows():
    t = build_table(R_WYTHOFF, 9)
    assert t.value(3, 8) == 8 and t.value(3, 9) == 5
    assert build_table(E_WYTHOFF, 9).value(2, 9) == 11
    for rule in (R_WYTHOFF, E_WYTHOFF, WYTHOFF):
        assert verify_small_row_formulas(rule, 3000).status is Status.PASS
    assert verify_small_row_formulas(preset("successor"), 50).status is Status.SKIPPED


def test_bounds():
    t = build_table(R_WYTHOFF, 9)
    assert t.value(4, 9) == 9 and t.value(2, 2) == 1
    assert build_table(E_WYTHOFF, 9).value(9, 9) == 18
    for rule in (R_WYTHOFF, E_WYTHOFF):
        assert verify_bounds(rule, 400).status is Status.PASS
    assert verify_bounds(WYTHOFF, 50).status is Status.SKIPPED


def test_golden():
    assert load_fixture("table1")[(5, 9)] == 1
    assert load_fixture("table2")[(7, 4)] == 0
    assert load_fixture("table1")[(0, 0)] == 0
    assert len(load_fixture("table1")) == len(load_fixture("table2")) == 100
    assert verify_golden_tables().status is Status.PASS


def test_fixtures_against_naive_oracle():
    from oracles import naive_square

    for name, game in (("table1", "r-wythoff"), ("table2", "e-wythoff")):
        sq = naive_square(game, 9)
        assert all(sq[a, b] == g for (a, b), g in load_fixture(name).items())


def test_fail_reports_carry_rechecked_counterexamples():
    # Wythoff's value-1 positions differ from the shifted P-positions, so
    # checking them against E-Wythoff's formula must fail with real witnesses
    from wythoffkit.verify import _value1_expected

    t = build_table(WYTHOFF, 100)
    chk = Checker("demo", WYTHOFF, bound=100)
    for p in sorted(_value1_expected(E_WYTHOFF, 100)):
        if t.value(p.low, p.high) != 1:
            chk.fail(p, "not value 1")
    r = chk.done()
    assert r.status is Status.FAIL and r.counterexamples
    for c in r.counterexamples:
        assert build_table(WYTHOFF, c.position.high).value(c.position.low, c.position.high) != 1


def test_deterministic_reports():
    a = verify_bounds(E_WYTHOFF, 150).to_dict()
    b = verify_bounds(E_WYTHOFF, 150).to_dict()
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b


def test_report_serialization():
    chk = Checker("X-1", R_WYTHOFF, bound=3)
    for i in range(60):
        chk.fail(Position(i, i + 1), "bad")
    r = chk.done()
    assert r.status is Status.FAIL and len(r.counterexamples) == 50 and r.total_counterexamples == 60
    d = json.loads(to_json([r]))[0]
    assert d["claim_id"] == "X-1" and d["status"] == "Fail" and "elapsed_ms" in d
    assert d["counterexamples"][0] == {"a": 0, "b": 1, "detail": "bad"}
    assert "FAIL" in to_text([r]) and any_failed([r])
    ok = Checker("X-2", R_WYTHOFF).done()
    assert ok.status is Status.PASS and not any_failed([ok])

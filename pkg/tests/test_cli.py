import csv
import io
import json
import subprocess
import sys

import pytest

from wythoffkit.cli import main, parse_ascii_table
from wythoffkit.verify import load_fixture


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_table_ascii_matches_golden(capsys):
    code, out, _ = run(capsys, "table", "--game", "r-wythoff", "--max", "9", "--format", "ascii")
    assert code == 0
    sq = parse_ascii_table(out)
    assert all(sq[a, b] == g for (a, b), g in load_fixture("table1").items())
    lines = out.splitlines()
    assert lines[0].split("|")[0].strip() == "9" and lines[-1].startswith("a/b")


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--game", "e-wythoff", "--max", "9", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 100
    assert {(int(r["a"]), int(r["b"])): int(r["g"]) for r in rows}[(9, 9)] == 18


def test_table_trivial(capsys):
    code, out, _ = run(capsys, "table", "--game", "wythoff", "--max", "0", "--format", "csv")
    assert out == "a,b,g\n0,0,0\n"


@pytest.mark.parametrize("n", [0, 1, 5, 13, 20])
def test_ascii_round_trip_and_csv_json_agree(capsys, n):
    _, a_out, _ = run(capsys, "table", "--game", "e-wythoff", "--max", str(n))
    _, c_out, _ = run(capsys, "table", "--game", "e-wythoff", "--max", str(n), "--format", "csv")
    _, j_out, _ = run(capsys, "table", "--game", "e-wythoff", "--max", str(n), "--format", "json")
    from_csv = sorted(tuple(int(x) for x in line.split(",")) for line in c_out.splitlines()[1:])
    from_json = sorted((c["a"], c["b"], c["g"]) for c in json.loads(j_out)["cells"])
    sq = parse_ascii_table(a_out)
    from_ascii = sorted((a, b, int(sq[a, b])) for a in range(n + 1) for b in range(n + 1))
    assert from_csv == from_json == from_ascii


def test_out_file(tmp_path, capsys):
    path = tmp_path / "t.csv"
    assert run(capsys, "table", "--max", "4", "--format", "csv", "--out", str(path))[0] == 0
    assert path.read_bytes().startswith(b"a,b,g\n0,0,0\n")
    assert b"\r" not in path.read_bytes()


def test_large_table_needs_confirmation(capsys):
    code, _, err = run(capsys, "table", "--max", "40000")
    assert code == 2 and "--yes" in err


def test_verify_all_r_wythoff(capsys):
    code, out, _ = run(capsys, "verify", "all", "--game", "r-wythoff", "--max", "500")
    assert code == 0
    assert "FAIL" not in out and out.count("PASS") == 8


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "golden", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data[0]["status"] == "Pass"
    assert set(data[0]) >= {"claim_id", "rule", "bounds", "status", "counterexamples", "elapsed_ms"}


def test_verify_redundancy(capsys):
    assert run(capsys, "verify", "redundancy", "--k-max", "200")[0] == 0


def test_verify_skipped_is_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "value1", "--game", "wythoff", "--max", "30")
    assert code == 0 and "SKIPPED" in out


def test_conjecture_additive_period(capsys):
    code, out, _ = run(capsys, "conjecture", "additive-period", "--game", "r-wythoff", "--row", "3", "--max-b", "100000")
    assert code == 0 and "p=4 n0=7" in out
    code, out, _ = run(
        capsys, "conjecture", "additive-period", "--game", "e-wythoff", "--row", "0", "--max-b", "100", "--format", "json"
    )
    d = json.loads(out)[0]
    assert (d["period"], d["preperiod"]) == (1, 0)


def test_conjecture_row_range(capsys):
    code, out, _ = run(capsys, "conjecture", "additive-period", "--row", "0..4", "--max-b", "2000")
    assert code == 0 and len(out.splitlines()) == 5


def test_conjecture_fail_exit_code(capsys):
    code, out, _ = run(capsys, "conjecture", "ew-diagonals", "--max", "200")
    assert code == 1 and "(35,107)" in out


def test_conjecture_others(capsys):
    assert run(capsys, "conjecture", "bw-upper2", "--max", "300")[0] == 0
    code, out, _ = run(capsys, "conjecture", "survey-value1", "--max", "9")
    assert code == 0 and "(2,2), (4,6)" in out


@pytest.mark.parametrize("v,text", [(4, "A, n=3, P-position (4,7)"), (5, "B, n=2, P-position (3,5)"), (1, "A, n=1, P-position (1,2)")])
def test_classify(capsys, v, text):
    code, out, _ = run(capsys, "classify", str(v))
    assert code == 0 and out.strip() == text


def test_classify_json(capsys):
    _, out, _ = run(capsys, "classify", "4", "--format", "json")
    assert json.loads(out) == {"value": 4, "kind": "A", "index": 3, "p_position": [4, 7]}


def test_best_move(capsys):
    code, out, _ = run(capsys, "best-move", "--game", "r-wythoff", "--position", "1,3")
    assert code == 0 and out.strip() == "take 1 from the larger pile -> (1,2)"
    _, out, _ = run(capsys, "best-move", "--game", "wythoff", "--position", "3,5")
    assert out.strip() == "P-position: no winning move"
    _, out, _ = run(capsys, "best-move", "--game", "e-wythoff", "--position", "2,2", "--format", "json")
    d = json.loads(out)
    assert [0, 0] in [m["result"] for m in d["moves"]] and not d["p_position"]


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "0"],
        ["classify", "-2"],
        ["best-move", "--position", "1;3"],
        ["best-move", "--position", "-1,3"],
        ["verify", "everything"],
        ["conjecture", "riemann"],
        ["table", "--game", "chess"],
        ["table", "--max", "-1"],
        ["table", "--format", "xml"],
        ["table", "--game", "generalized:/nonexistent.ini"],
        [],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_generalized_config(tmp_path, capsys):
    cfg = tmp_path / "succ.ini"
    cfg.write_text("[game]\nid = generalized\nname = succ\nl_set = 1..*\nrelation = successor\n")
    code, out, _ = run(capsys, "verify", "p-positions", "--game", f"generalized:{cfg}", "--max", "100")
    assert code == 0 and "GEN-P" in out


def test_wavefront_flag(capsys):
    _, seq, _ = run(capsys, "table", "--max", "30", "--format", "csv")
    _, wav, _ = run(capsys, "table", "--max", "30", "--format", "csv", "--order", "wavefront")
    assert seq == wav


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "wythoffkit", "classify", "4"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "A, n=3, P-position (4,7)"

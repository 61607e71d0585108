import json
import subprocess
import sys
from pathlib import Path

import pytest

from qgolden import cli, sw_identity

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "argv, golden",
    [
        (["qfib", "5"], "qfib_5.txt"),
        (["qfib", "5", "--json"], "qfib_5.json"),
        (["phi", "--reciprocal", "--order", "5"], "phi_reciprocal_5.txt"),
        (["phi", "--reciprocal", "--order", "5", "--json"], "phi_reciprocal_5.json"),
    ],
)
def test_golden_output(capsys, argv, golden):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["qfib", "4"], "1 3 1"),
        (["qfib", "0"], "1"),
        (["qfib", "6", "--closed-form"], "1 5 6 1"),
        (["phi", "--order", "6"], "1 1 -1 2 -5 14"),
        (["phi", "--order", "1"], "1"),
        (["fib", "10"], "89"),
        (["catalan", "19"], "1767263190"),
        (["catalan", "4", "--closed-form"], "14"),
        (["ratio", "2", "--order", "4"], "1 1 -1 1"),
        (["ratio", "3"], "1 1 -1 2"),
    ],
)
def test_text_output(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.strip() == expected


@pytest.mark.parametrize(
    "argv",
    [
        ["qfib", "-1"],
        ["qfib", "x"],
        ["phi", "--order", "0"],
        ["phi"],
        ["verify", "nonsense"],
        ["verify", "theorem", "--max-n", "-3"],
        ["verify", "sw", "--max-n", "0"],
        ["verify", "sw", "--max-m", "0"],
        ["verify", "sw", "--n", "3", "--m", "5"],
        ["verify", "sw", "--n", "3"],
        ["verify", "theorem", "--n", "3", "--m", "2"],
        ["bogus"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "proposition", "--max-n", "300")
    lines = out.strip().splitlines()
    assert code == 0
    assert sum(line.startswith("PASS proposition") for line in lines) == 301
    assert lines[-1] == "proposition: 301/301 checks passed"

    code, out, _ = run(capsys, "verify", "sw", "--max-n", "18", "--max-m", "18")
    assert code == 0
    assert out.strip().splitlines()[-1] == "sw: 171/171 checks passed"

    code, out, _ = run(capsys, "verify", "theorem", "--max-n", "0")
    assert code == 0
    assert out.strip().splitlines() == ["PASS theorem n=0", "theorem: 1/1 checks passed"]


def test_verify_output_order_is_parameter_order(capsys):
    _, out, _ = run(capsys, "verify", "sw", "--max-n", "4", "--max-m", "3")
    params = [line.split()[2:] for line in out.strip().splitlines()[:-1]]
    assert params == [
        ["n=1", "m=1"], ["n=2", "m=1"], ["n=2", "m=2"], ["n=3", "m=1"], ["n=3", "m=2"],
        ["n=3", "m=3"], ["n=4", "m=1"], ["n=4", "m=2"], ["n=4", "m=3"],
    ]


def test_single_sw_and_explore(capsys):
    code, out, _ = run(capsys, "verify", "sw", "--n", "6", "--m", "4")
    assert code == 0 and out.startswith("PASS sw n=6 m=4")
    code, out, _ = run(capsys, "verify", "sw", "--n", "3", "--m", "5", "--explore", "--json")
    assert code == 0
    record = json.loads(out)
    assert int(record["result"]) == sw_identity.sw_lhs(3, 5)
    assert "passed" not in record


def test_corrupted_check_exits_1(capsys, monkeypatch):
    monkeypatch.setattr(sw_identity, "sw_rhs", lambda m: 12345)
    code, out, _ = run(capsys, "verify", "sw", "--max-n", "3")
    assert code == 1
    assert "FAIL sw n=1 m=1" in out


def test_corrupted_theorem_exits_1(capsys, monkeypatch):
    from qgolden import golden
    from qgolden.qseries import TruncatedSeries

    monkeypatch.setattr(golden, "phi_series", lambda order: TruncatedSeries.one(order))
    code, _, _ = run(capsys, "verify", "all", "--max-n", "5")
    assert code == 1


def test_verify_json_round_trip(capsys):
    code, out, _ = run(capsys, "verify", "all", "--max-n", "8", "--max-m", "6", "--json")
    assert code == 0
    record = json.loads(out)
    assert json.loads(json.dumps(record)) == record
    assert record["passed"] is True
    reports = record["result"]
    assert {r["check"] for r in reports} == {"proposition", "theorem", "corollary", "sw"}
    sw = [r for r in reports if r["check"] == "sw"]
    assert all(set(r["routes"]) == {"series_division", "geometric"} for r in sw)
    for r in reports:
        assert isinstance(r["passed"], bool)


def test_json_coefficients_parse_back_exactly(capsys):
    from qgolden.qfib import qfib_recursive

    code, out, _ = run(capsys, "qfib", "300", "--json")
    assert code == 0
    record = json.loads(out)
    assert all(isinstance(c, str) for c in record["result"])
    values = [int(c) for c in record["result"]]
    assert tuple(values) == qfib_recursive(300).coeffs
    assert max(values) > 2**64


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qgolden", "qfib", "5"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout == "1 4 3\n"

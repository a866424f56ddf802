import csv
import io
import json

import pytest

from parity_descents.cli import main
from parity_descents.stats import Family


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_genocchi(capsys):
    assert run(capsys, "genocchi", "--count", "6") == (0, "1 1 3 17 155 2073\n", "")


def test_genocchi_check(capsys):
    code, out, _ = run(capsys, "genocchi", "--count", "3", "--check")
    assert code == 0 and "genocchi: PASS" in out


def test_table_text(capsys):
    assert run(capsys, "table", "--family", "R", "--n", "3", "--format", "text") == (0, "4 + 2x\n", "")


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "--family", "P", "--n", "8", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["family"] == "P" and doc["n"] == 8
    cell = [c for c in doc["coefficients"] if (c["z"], c["x"]) == (1, 2)]
    assert cell == [{"z": 1, "x": 2, "value": "6912"}]
    assert all(isinstance(c["value"], str) for c in doc["coefficients"])


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--family", "Q", "--n", "3", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows == [["z", "x", "value"], ["0", "1", "2"], ["1", "0", "2"], ["1", "1", "2"]]


def test_table_big_json(capsys):
    _, out, _ = run(capsys, "table", "--family", "R", "--n", "40", "--format", "json")
    assert max(int(c["value"]) for c in json.loads(out)["coefficients"]) > 2 ** 64


@pytest.mark.parametrize("family", [f.name for f in Family])
def test_closed_form_flag_identical(capsys, family):
    for n in range(1, 41):
        for fmt in ("json", "csv"):
            a = run(capsys, "table", "--family", family, "--n", str(n), "--format", fmt)
            b = run(capsys, "table", "--family", family, "--n", str(n), "--format", fmt, "--closed-form")
            assert a == b


def test_verify_xi(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "xi_transfer", "--max-n", "8")
    assert code == 0 and "xi_transfer: PASS" in out and out.endswith("overall: PASS\n")


def test_verify_p8_expected_deviation(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "paper_table_p8", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    statuses = [r["status"] for r in doc[0]["records"]]
    assert statuses.count("expected-deviation") == 2 and "fail" not in statuses


def test_verify_failure_exit_code(capsys, monkeypatch):
    from parity_descents import verify

    def broken(rep, ns):
        rep.check("always", 1, 1, 2)

    monkeypatch.setitem(verify.SUITES, "broken", verify.Suite(broken, 1, False, "test"))
    code, out, _ = run(capsys, "verify", "--suite", "broken")
    assert code == 1 and "fail" in out and "overall: FAIL" in out


def test_verify_byte_stable(capsys):
    a = run(capsys, "verify", "--suite", "paper_tables", "--format", "json")
    b = run(capsys, "verify", "--suite", "paper_tables", "--format", "json")
    assert a == b


def test_bijection_list(capsys):
    code, out, _ = run(capsys, "bijection", "--name", "r-split", "--n", "2")
    assert code == 0 and out == "1 2 -> P0 1 2\n2 1 -> P1 2 1\n"
    code, out, _ = run(capsys, "bijection", "--name", "alpha", "--n", "4")
    assert code == 0 and len(out.splitlines()) == 12


def test_bijection_apply(capsys):
    assert run(capsys, "bijection", "--name", "r-symmetry", "--apply", "1,2,3,4") == (0, "1 2 3 4 -> 4 3 2 1\n", "")
    assert run(capsys, "bijection", "--name", "p-complement", "--n", "2", "--apply", "1 2")[1] == "1 2 -> 2 1\n"


@pytest.mark.parametrize("argv", [
    ["bijection", "--name", "r-symmetry", "--n", "3"],
    ["bijection", "--name", "alpha"],
    ["bijection", "--name", "alpha", "--n", "3", "--apply", "1 2"],
    ["bijection", "--name", "alpha", "--apply", "2 1 3"],
    ["bijection", "--name", "beta", "--n", "12"],
    ["pattern", "--perm", "2 5 3 x", "--pattern", "1o2e"],
    ["pattern", "--perm", "2 5 3", "--pattern", "1q2e"],
    ["pattern", "--perm", "2 5 3", "--pattern", "1%1:3 2e"],
    ["verify", "--suite", "nope"],
    ["verify", "--suite", "recursion_vs_brute", "--max-n", "12"],
    ["table", "--family", "R", "--n", "0"],
    ["genocchi", "--count", "0"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and err.startswith("parity-descents: error:")


@pytest.mark.parametrize("argv", [[], ["table", "--family", "X", "--n", "3"], ["frobnicate"]])
def test_argparse_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_pattern(capsys):
    code, out, _ = run(capsys, "pattern", "--perm", "2 5 3 1 4", "--pattern", "1o2e")
    assert code == 0 and out == "consecutive matches of 1o2e: 1\n"
    code, out, _ = run(capsys, "pattern", "--perm", "3 2 4 5 1", "--pattern", "2%2:3 1%1:3", "--classical")
    assert out.splitlines() == ["consecutive matches of 2%2:3 1%1:3: 1",
                                "classically avoids 2%2:3 1%1:3: false"]


def test_module_entry_point():
    import subprocess
    import sys
    res = subprocess.run([sys.executable, "-m", "parity_descents", "genocchi", "--count", "4"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "1 1 3 17\n"

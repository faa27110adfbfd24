import csv
import io
import json
import subprocess
import sys

import pytest

from descmat.cli import main
from descmat.exact_linalg import ExactMatrix
from descmat.families import build
from descmat.formats import parse_matrix_csv, parse_matrix_json


def run(capsys, *args):
    code = main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def test_matrix_pretty(capsys):
    code, out, _ = run(capsys, "matrix", "A", "2")
    assert code == 0
    assert [line.split() for line in out.splitlines()] == [
        ["1", "1", "1", "1"],
        ["1", "-1", "1", "-1"],
        ["1", "1", "-1", "-1"],
        ["1", "-1", "0", "1"],
    ]


def test_matrix_trivial(capsys):
    assert run(capsys, "matrix", "AM", "0") == (0, "1\n", "")


def test_explicit_is_byte_identical(capsys):
    for fam in ("A", "B", "H", "Z", "M", "AM", "BM", "HM"):
        _, rec, _ = run(capsys, "matrix", fam, "3")
        _, exp, _ = run(capsys, "matrix", fam, "3", "--explicit")
        assert rec == exp


@pytest.mark.parametrize("fmt,parse", [("csv", parse_matrix_csv), ("json", parse_matrix_json)])
def test_matrix_roundtrip(capsys, fmt, parse):
    _, out, _ = run(capsys, "matrix", "AM", "3", "--inverse", "--format", fmt)
    assert parse(out) @ build("AM", 3) == ExactMatrix.identity(8)


def test_matrix_mx_and_out(capsys, tmp_path):
    target = tmp_path / "m.json"
    code, out, _ = run(capsys, "matrix", "M", "1", "--x", "1/2", "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text()) == [["1", "0"], ["1/2", "-3/2"]]


def test_usage_errors(capsys):
    code, _, err = run(capsys, "matrix", "A", "13")
    assert code == 2 and "cap" in err
    assert run(capsys, "matrix", "Q", "2")[0] == 2
    assert run(capsys, "matrix", "A", "2", "--x", "1")[0] == 2
    assert run(capsys, "character", "9")[0] == 2
    assert run(capsys, "descent-dist", "knuth", "3")[0] == 2
    assert run(capsys, "descent-dist", "involutions", "11")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["matrix"])
    assert exc.value.code == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "all", "0")
    assert code == 0 and json.loads(out)["passed"] is True
    code, out, _ = run(capsys, "verify", "matrices", "6")
    assert code == 0
    code, out, _ = run(capsys, "verify", "eigen", "--n-max", "5")
    report = json.loads(out)
    assert code == 0 and report["passed"]
    assert any("(x^2 - 3) * (x^2 - 4)" in c["detail"] or "(x^2 - 4) * (x^2 - 3)" in c["detail"] for c in report["checks"])


def test_character_table(capsys):
    code, out, _ = run(capsys, "character", "3", "--source", "mn", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["row", "1,1,1", "2,1", "3"]
    table = {r[0]: r[1:] for r in rows[1:]}
    assert table["2,1"] == ["2", "0", "-1"]
    assert table["3"] == ["1", "1", "1"]


@pytest.mark.parametrize("source", ["knuth", "length", "involutions"])
def test_character_diff_empty(capsys, source):
    code, out, _ = run(capsys, "character", "5", "--source", source, "--diff", "mn", "--format", "json")
    assert code == 0 and json.loads(out) == []


def test_descent_dist(capsys):
    code, out, _ = run(capsys, "descent-dist", "involutions", "3", "--mode", "both", "--format", "json")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 4
    assert all(r["direct"] == r["inverted"] == "1" and r["diff"] == "0" for r in rows)

    code, out, _ = run(capsys, "descent-dist", "explicit", "--empty", "--format", "json")
    assert code == 0 and all(r["direct"] == "0" for r in json.loads(out))

    code, out, _ = run(capsys, "descent-dist", "syt", "4", "--shape", "2,2", "--mode", "both", "--format", "json")
    rows = {r["subset"]: r for r in json.loads(out)}
    assert code == 0
    assert rows["{2}"]["direct"] == rows["{1,3}"]["direct"] == "1"
    assert sum(int(r["direct"]) for r in rows.values()) == 2
    assert all(r["diff"] == "0" for r in rows.values())


def test_descent_dist_explicit_perms(capsys):
    code, out, _ = run(capsys, "descent-dist", "explicit", "--perm", "2,1,3", "--perm", "1,3,2", "--mode", "inverted")
    assert code == 0
    assert "{1}" in out


def test_fineness_command(capsys):
    code, out, _ = run(capsys, "fineness", "explicit", "--perm", "2,1,3")
    doc = json.loads(out)
    assert code == 0 and doc["fine"] is False
    code, out, _ = run(capsys, "fineness", "conj", "--shape", "2,2")
    assert json.loads(out)["fine"] is True


def test_closed_form_commands(capsys):
    code, out, _ = run(capsys, "det", "A", "3", "--format", "json")
    doc = json.loads(out)[0]
    assert code == 0 and doc["equal"] == "true" and doc["bareiss"] == doc["closed"]
    code, out, _ = run(capsys, "eigen", "A", "2", "--charpoly")
    assert "charpoly: x^4 - 7*x^2 + 12" in out
    code, out, _ = run(capsys, "diag-seq", "8", "--format", "csv")
    assert [r[1] for r in csv.reader(io.StringIO(out))][1:] == ["1", "2", "2", "3", "2", "4", "3", "4"]


def test_deterministic_and_module_entry():
    cmd = [sys.executable, "-m", "descmat", "character", "4", "--source", "knuth"]
    first = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert first == second and first.split()[0] == "row"
    bad = subprocess.run([sys.executable, "-m", "descmat", "matrix", "AM", "11"], capture_output=True, text=True)
    assert bad.returncode == 2

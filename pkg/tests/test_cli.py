import csv
import io
import json

import pytest

from hookspecht.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_text(capsys):
    code, out, _ = run(capsys, "analyze", "--a", "3", "--b", "2", "--char", "0")
    assert code == EXIT_OK
    assert "decomposable" in out and "indecomposable" not in out
    assert "-2, 0" in out


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "--a", "4", "--b", "4", "--char", "3", "--format", "json")
    rep = json.loads(out)
    assert code == EXIT_OK and rep["decomposable"] is False and rep["rule"] == "n-even"
    code, out, _ = run(capsys, "analyze", "--a", "3", "--b", "2", "--char", "2", "--format", "json")
    assert json.loads(out)["rule"] == "murphy-char2" and not json.loads(out)["decomposable"]


def test_analyze_char_p_eigenvalues_are_residues(capsys):
    _, out, _ = run(capsys, "analyze", "--a", "3", "--b", "2", "--char", "5", "--format", "json")
    assert json.loads(out)["eigenvalues"] == [0, 3]


def test_trace(capsys):
    code, out, err = run(capsys, "analyze", "--a", "5", "--b", "4", "--trace", "--format", "json")
    rep = json.loads(out)
    assert rep["trace"]["fallbacks"] == 0
    assert rep["trace"]["rules"]["y-kills"] == 6 * 9


def test_matrix(capsys, tmp_path):
    code, out, _ = run(capsys, "matrix", "--a", "3", "--b", "2", "--gen", "f", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_OK and data["rows"] == data["cols"] == 6
    code, out, _ = run(capsys, "matrix", "--a", "3", "--b", "2", "--gen", "y1", "--format", "json")
    assert json.loads(out)["entries"] == []
    target = tmp_path / "e.json"
    run(capsys, "matrix", "--a", "3", "--b", "2", "--gen", "e_lambda", "--format", "json", "--out", str(target))
    entries = json.loads(target.read_text())["entries"]
    assert all(i == j and v == "1/1" for i, j, v in entries)


@pytest.mark.parametrize("args", [
    ("matrix", "--a", "3", "--b", "2", "--gen", "bogus"),
    ("matrix", "--a", "4", "--b", "2", "--gen", "f"),
    ("analyze", "--a", "3", "--b", "2", "--char", "4"),
    ("analyze", "--a", "0", "--b", "2"),
    ("analyze", "--b", "2"),
    ("verify", "--n-max", "12"),
    ("nonsense",),
])
def test_usage_errors(capsys, args):
    assert main(list(args)) == EXIT_USAGE


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "6", "--chars", "0,3", "--format", "json")
    rep = json.loads(out)
    assert code == EXIT_OK and rep["ok"]
    assert {r["suite"] for r in rep["reports"]} == {"presentation", "domino", "endomorphism"}


def test_verify_failure_exit(capsys, monkeypatch):
    from hookspecht import cli
    from hookspecht.oracle import VerificationReport

    def broken(shape, char, cap, module):
        rep = VerificationReport(shape, char, "presentation")
        rep.add("forced", False, "witness")
        return rep

    monkeypatch.setattr(cli, "verify_presentation", broken)
    assert main(["verify", "--n-max", "2"]) == EXIT_FAIL


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--a", "3..9", "--b", "2..6", "--char", "0")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == EXIT_OK
    assert list(rows[0]) == ["a", "b", "n", "char", "decomposable", "rule"]
    for r in rows:
        a, b, n = int(r["a"]), int(r["b"]), int(r["n"])
        if n % 2 == 1 and b in (2, 3):
            assert r["decomposable"] == "True"  # char 0 never divides ceil(a/2)
        if n % 2 == 0:
            assert r["decomposable"] == "False"


def test_empty_table(capsys):
    code, out, _ = run(capsys, "table", "--a", "5..3", "--b", "2..6", "--char", "0")
    assert code == EXIT_OK and out.strip() == "a,b,n,char,decomposable,rule"
    code, out, _ = run(capsys, "table", "--a", "5..3", "--b", "2", "--format", "json")
    assert json.loads(out) == []

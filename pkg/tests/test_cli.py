from __future__ import annotations

import json
import os
import subprocess
import sys

import pytest

from charpoly import verify as V
from charpoly.cli import main, parse_partition, parse_range


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_partition_syntax():
    assert parse_partition("3,1") == (3, 1)
    assert parse_partition("0") == ()
    assert parse_partition("empty") == ()
    with pytest.raises(Exception):
        parse_partition("1,2")
    with pytest.raises(Exception):
        parse_partition("3,x")
    assert list(parse_range("1..3")) == [1, 2, 3]
    assert list(parse_range("4")) == [4]


def test_charpoly_text(capsys):
    assert run(capsys, "charpoly", "weyl", "--shape", "2,1")[:2] == (0, "1/3*X1^3 - 1/3*X1 - X3\n")
    assert run(capsys, "charpoly", "sym", "--degree", "0")[1] == "1\n"
    assert run(capsys, "charpoly", "specht", "--shape", "1")[1] == "X1 - 1\n"
    assert run(capsys, "charpoly", "alt", "--degree", "2")[1] == "1/2*X1^2 - 1/2*X1 - X2\n"
    assert run(capsys, "charpoly", "weyl", "--shape", "0")[1] == "1\n"


def test_charpoly_formats(capsys, tmp_path):
    code, out, _ = run(capsys, "charpoly", "weyl", "--shape", "2,1", "--basis", "binomial", "--format", "json")
    obj = json.loads(out)
    assert obj["basis"] == "binomial"
    assert {tuple(t["partition"]): t["coeff"] for t in obj["terms"]} == {(3,): "-1", (1, 1, 1): "2", (1, 1): "2"}
    code, out, _ = run(capsys, "charpoly", "weyl", "--shape", "2", "--format", "csv")
    assert out.splitlines() == ["monomial,coeff", "X1^2,1/2", "X1,1/2", "X2,1"]
    target = tmp_path / "s.txt"
    code, out, _ = run(capsys, "charpoly", "weyl", "--shape", "1,1", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text(encoding="utf-8") == "1/2*X1^2 - 1/2*X1 - X2\n"


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["charpoly", "weyl", "--shape", "1,2"])
    assert exc.value.code == 2
    assert run(capsys, "charpoly", "weyl")[0] == 2
    assert run(capsys, "moments", "--stable")[0] == 2
    assert run(capsys, "kronecker", "1", "1", "0")[0] == 2


def test_restriction_table(capsys):
    code, out, _ = run(capsys, "restriction-table", "--max", "5")
    rows = out.splitlines()
    assert code == 0 and len(rows) == 19
    assert rows[5].startswith("1 3 2 2 0 1 0")  # row (2,1)
    assert rows[8].startswith("2 7 5 6 2 3 1 0 1")  # row (3,1)
    assert run(capsys, "restriction-table", "--max", "0")[1] == "1\n"
    assert run(capsys, "restriction-table", "--max", "2")[1].splitlines()[3] == "0 1 0 1"
    csv_out = run(capsys, "restriction-table", "--max", "2", "--format", "csv")[1]
    assert csv_out.splitlines()[0] == ",0,1,2,1+1"
    j = json.loads(run(capsys, "restriction-table", "--max", "1", "--format", "json")[1])
    assert j == {"rows": [[], [1]], "cols": [[], [1]], "entries": [[1, 0], [1, 1]]}


def test_output_is_identical_across_jobs(capsys):
    a = run(capsys, "restriction-table", "--max", "4", "--jobs", "1")[1]
    b = run(capsys, "restriction-table", "--max", "4", "--jobs", "3")[1]
    assert a == b


def test_moments(capsys, tmp_path):
    assert run(capsys, "moments", "--shape-weyl", "2,2", "--stable")[1] == "2\n"
    assert run(capsys, "moments", "--shape-weyl", "2,2")[1] == "2\n"
    assert run(capsys, "moments", "--sym", "1", "--alt", "1", "--n", "3")[1] == "2\n"
    assert run(capsys, "moments", "--shape-weyl", "3,1", "--shape-specht", "1")[1] == "7\n"
    assert run(capsys, "moments", "--sym", "2", "--n", "1")[1] == "1\n"
    text = tmp_path / "p.txt"
    text.write_text("1/2*X1^2 - 1/2*X1", encoding="utf-8")
    assert run(capsys, "moments", "--file", str(text))[1] == "1/2\n"
    js = tmp_path / "p.json"
    js.write_text(json.dumps({"basis": "binomial", "terms": [{"partition": [2], "coeff": "4"}]}), encoding="utf-8")
    assert run(capsys, "moments", "--file", str(js), "--n", "1")[1] == "0\n"
    assert run(capsys, "moments", "--file", str(js))[1] == "2\n"


def test_invariants_and_kronecker(capsys):
    assert run(capsys, "invariants", "--shape", "1,1", "--n-range", "1..8")[1] == "0 0 0 0 0 0 0 0\n"
    assert run(capsys, "invariants", "--shape", "2", "--n-range", "1..4")[1] == "1 2 2 2\n"
    assert run(capsys, "kronecker", "1", "1", "1")[1] == "1\n"
    assert run(capsys, "kronecker", "1,1", "1,1", "2")[1] == "2\n"
    assert run(capsys, "kronecker", "1", "1", "1", "--n", "3")[1] == "1\n"


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "matrix", "--max", "5")
    assert code == 0 and out.startswith("PASS matrix")
    code, out, _ = run(capsys, "verify", "--suite", "table1")
    assert code == 0


def test_verify_reports_failures(capsys, monkeypatch):
    bad = [list(r) for r in V.RESTRICTION_MATRIX]
    bad[8][1] = 3
    monkeypatch.setattr(V, "RESTRICTION_MATRIX", tuple(tuple(r) for r in bad))
    code, out, _ = run(capsys, "verify", "--suite", "matrix")
    assert code == 1
    assert "FAIL matrix" in out and "r[3,1; 1]: got 7, expected 3" in out


def test_verify_infeasible(capsys):
    code, out, err = run(capsys, "verify", "--suite", "genfun", "--max", "20")
    assert code == 3 and out == "" and "budget" in err


def _cli(*argv, env=None):
    return subprocess.run(
        [sys.executable, "-m", "charpoly.cli", *argv], capture_output=True, text=True, env=env, check=False
    )


def test_cache_dir(tmp_path):
    env = dict(os.environ, CHARPOLY_CACHE_DIR=str(tmp_path / "env"))
    first = _cli("charpoly", "specht", "--shape", "2,1", env=env)
    assert first.returncode == 0
    assert (tmp_path / "env" / "chartable_3.json").exists()
    second = _cli("--cache-dir", str(tmp_path / "flag"), "charpoly", "specht", "--shape", "2,1", env=env)
    assert (tmp_path / "flag" / "chartable_3.json").exists()
    # a run served from the persisted tables prints the same bytes
    third = _cli("--cache-dir", str(tmp_path / "flag"), "charpoly", "specht", "--shape", "2,1", env=env)
    env.pop("CHARPOLY_CACHE_DIR")
    plain = _cli("charpoly", "specht", "--shape", "2,1", env=env)
    assert first.stdout == second.stdout == third.stdout == plain.stdout == "1/3*X1^3 - 2*X1^2 + 8/3*X1 - X3\n"

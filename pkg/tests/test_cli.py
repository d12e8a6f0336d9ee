import contextlib
import io
import json
import os
import subprocess
import sys

import pytest

from conftest import FIXTURES, GOLDEN
from prealg.cli import main
from prealg.fileformat import read_algebra
from prealg.algebra import a2, sum_algebras

CASES = json.loads((GOLDEN / "cases.json").read_text())


def run(argv, cwd=FIXTURES):
    out, err = io.StringIO(), io.StringIO()
    old = os.getcwd()
    os.chdir(cwd)
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = main(argv)
    finally:
        os.chdir(old)
    return code, out.getvalue() + err.getvalue()


@pytest.mark.parametrize("case", CASES, ids=[c["name"] for c in CASES])
@pytest.mark.parametrize("fmt,ext", [("json", "json"), ("text", "txt")])
def test_golden(case, fmt, ext):
    code, text = run(case["argv"] + ["--format", fmt])
    assert code == case["exit"]
    assert text == (GOLDEN / f"{case['name']}.{ext}").read_text(encoding="utf-8")


@pytest.mark.parametrize("case", CASES, ids=[c["name"] for c in CASES])
def test_json_reports_are_versioned(case):
    _, text = run(case["argv"] + ["--format", "json"])
    obj = json.loads(text)
    assert obj["version"] == 1 and obj["command"] == case["argv"][0] and obj["exit_code"] == case["exit"]
    assert "seconds" not in obj


def test_binary_byte_stable():
    argv = [sys.executable, "-m", "prealg.cli", "tensor", "a2_f3.json", "--kind", "prelie", "--format", "json"]
    outs = {subprocess.run(argv, cwd=FIXTURES, capture_output=True, check=True).stdout for _ in range(3)}
    assert len(outs) == 1


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as e:
        run(["check"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        run(["tensor", "a2.json", "--kind", "nope"])
    assert e.value.code == 2


def test_missing_file_exit_2():
    code, text = run(["check", "nope.json"])
    assert code == 2 and "FileNotFoundError" in text


def test_timing_is_opt_in():
    _, text = run(["check", "a2.json", "--identity", "pre-lie", "--format", "json", "--timing"])
    assert "seconds" in json.loads(text)


def test_decompose_writes_recombining_files(tmp_path):
    code, _ = run(["decompose", str(FIXTURES / "a2.json"), "--out-dir", str(tmp_path)], cwd=tmp_path)
    assert code == 0
    comm = read_algebra(tmp_path / "A2.comm.json")
    anti = read_algebra(tmp_path / "A2.anticomm.json")
    assert sum_algebras(comm, anti) == a2()


def test_double_zero_is_zero(tmp_path):
    code, _ = run(["double", str(FIXTURES / "zero2.json"), "--mu", "1", "--lambda", "-1", "--out-dir",
                   str(tmp_path)], cwd=tmp_path)
    d = read_algebra(next(tmp_path.glob("*.json")))
    assert code == 0 and d.dim == 4 and d.is_zero_algebra()


def test_commutator_pre_is_span_e2():
    _, text = run(["commutator", "a2.json", "full2.json", "full2.json", "--format", "json"])
    assert json.loads(text)["result"]["result"] == [["0", "1"]]


def test_check_exit_codes():
    assert run(["check", "a2.json", "--identity", "pre-lie"])[0] == 0
    assert run(["check", "a2.json", "--identity", "commutative"])[0] == 1

"""Rewrite tests/golden/*.json and *.txt from the current CLI output.

Run after an intentional report change; review the diff before committing.
"""

import contextlib
import io
import json
import os
from pathlib import Path

from prealg.cli import main

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "tests" / "fixtures"
GOLDEN = ROOT / "tests" / "golden"


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue() + err.getvalue()


def regen():
    cases = json.loads((GOLDEN / "cases.json").read_text())
    os.chdir(FIXTURES)
    for case in cases:
        for fmt, ext in (("json", "json"), ("text", "txt")):
            code, text = run(case["argv"] + ["--format", fmt])
            assert code == case["exit"], (case["name"], code)
            (GOLDEN / f"{case['name']}.{ext}").write_text(text, encoding="utf-8")
        print(f"{case['name']:<28} exit {code}")


if __name__ == "__main__":
    regen()

#!/usr/bin/env python3
"""Run the acceptance gate with live per-criterion pass/fail lines.

Equivalent to `pytest -s tests/test_acceptance.py`; exists so the gate can
be run (and its output captured) without remembering pytest flags.
"""

import pathlib
import subprocess
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent

if __name__ == "__main__":
    sys.exit(subprocess.call(
        [sys.executable, "-m", "pytest", "-s", "-v", str(ROOT / "tests" / "test_acceptance.py"),
         *sys.argv[1:]],
        cwd=ROOT,
    ))

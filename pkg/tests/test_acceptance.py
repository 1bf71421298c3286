"""Acceptance criteria.

Each criterion runs the matching verification cases at master seed 42,
checks the outcome and the time budget, and prints one PASS/FAIL line.
Run ``pytest tests/test_acceptance.py -v -s`` to see the lines inline, or
``python tests/test_acceptance.py`` for the summary alone.
"""
from __future__ import annotations

import json
import subprocess
import sys
import time

import pytest

from shufflemac.verify import run_suite

SEED = 42

# (number, title, case ids, time limit in seconds)
CRITERIA = [
    (1, "worked skew example from the lattice", ["worked-example"], 5),
    (2, "six-vertex trace as a shuffle product, N <= 3", ["trace-six-vertex"], 30),
    (3, "coloured trace as an ordered shuffle product, N <= 3", ["trace-super"], 60),
    (4, "Izergin determinant, exact M <= 3 and random M = 4", ["izergin"], 30),
    (5, "fermionic domain wall factorization, M <= 3", ["fermionic-domain-wall"], 10),
    (6, "quadratic E/H identities and the subset formula", ["quadratic-EH", "subset-formula"], 60),
    (7, "iota images and L_N from S_N", ["iota-images", "L-trace"], 30),
    (8, "evaluation representation", ["ev-F-basis", "rep-homomorphism", "E-times-F"], 60),
    (9, "Macdonald core through degree 5", ["macdonald-core"], 60),
    (10, "YBE, unitarity, exchange, F-matrix and eigenvalues", ["operator-identities"], 60),
    (11, "mixed Cauchy kernel", ["mixed-cauchy"], 60),
]


def _line(num: int, ok: bool, title: str, detail: str) -> str:
    return f"{'PASS' if ok else 'FAIL'} criterion {num:2d}: {title} ({detail})"


def evaluate(num: int, title: str, ids: list[str], limit: float) -> tuple[bool, str]:
    start = time.perf_counter()
    report = run_suite("all", seed=SEED, only=ids)
    elapsed = time.perf_counter() - start
    found = {c["id"] for c in report["cases"]}
    failed = [c["id"] for c in report["cases"] if c["result"] != "pass"]
    ok = found == set(ids) and not failed and elapsed < limit
    detail = f"{elapsed:.1f}s of {limit}s"
    if failed:
        detail += ", failed: " + ", ".join(failed)
    return ok, _line(num, ok, title, detail)


def _cli_verify_all() -> bytes:
    cmd = [sys.executable, "-m", "shufflemac.cli", "verify", "--suite", "all", "--seed", str(SEED)]
    proc = subprocess.run(cmd, capture_output=True, timeout=600)
    if proc.returncode != 0:
        raise AssertionError(f"verify exited with {proc.returncode}")
    return proc.stdout


def evaluate_property_suite() -> tuple[bool, str]:
    title = "property suite via verify --suite all --seed 42"
    start = time.perf_counter()
    first = _cli_verify_all()
    second = _cli_verify_all()
    elapsed = time.perf_counter() - start
    report = json.loads(first)
    results = {c["id"]: c["result"] for c in report["cases"]}
    needed = ("trace-symmetry", "wheel-closure", "commutativity")
    ok = first == second and report["failed"] == 0 and all(results.get(i) == "pass" for i in needed)
    detail = f"{report['passed']} cases passed, reports identical: {first == second}, {elapsed:.1f}s"
    return ok, _line(12, ok, title, detail)


def _report(capsys, line: str) -> None:
    with capsys.disabled():
        print("\n" + line)


@pytest.mark.parametrize("num,title,ids,limit", CRITERIA, ids=[f"criterion-{c[0]}" for c in CRITERIA])
def test_criterion(capsys, num, title, ids, limit):
    ok, line = evaluate(num, title, ids, limit)
    _report(capsys, line)
    assert ok, line


def test_criterion_12(capsys):
    ok, line = evaluate_property_suite()
    _report(capsys, line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA] + [evaluate_property_suite()]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)

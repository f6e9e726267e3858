"""End-to-end acceptance matrix.  Each case prints one PASS/FAIL line."""

import time

import pytest

from ybx.suite import CRITERIA

SEED = 20240601


@pytest.mark.parametrize("name,check", CRITERIA, ids=[name for name, _ in CRITERIA])
def test_criterion(name, check, capsys):
    start = time.perf_counter()
    cert = check(SEED)
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        verdict = "PASS" if cert.passed else "FAIL"
        print(f"\n{verdict} criterion {name} ({elapsed:.2f}s)")
    assert cert.passed, cert.counterexample


def test_full_matrix_runtime():
    start = time.perf_counter()
    from ybx.suite import run_all

    results = run_all(SEED)
    elapsed = time.perf_counter() - start
    assert len(results) == 12
    assert all(c.passed for c in results.values())
    assert elapsed < 120

import time

import pytest

from core import InvalidTolerance, run_selftest
from core.selftest import SUITES


def test_selftest_passes_with_small_samples():
    results = run_selftest(samples=25)
    assert [r.suite for r in results] == list(SUITES)
    assert all(r.passed for r in results), [r.to_dict() for r in results]
    assert all(r.samples == 25 for r in results)


def test_injected_fault_is_detected():
    results = {r.suite: r for r in run_selftest(samples=25, inject_fault=True)}
    assert not results["closed_form_oracle"].passed
    assert results["gram_identity"].passed
    assert results["eigen_trace_det"].passed
    assert results["equality_family"].passed


def test_tolerance_replaces_thresholds():
    results = run_selftest(tol=1e-3, samples=10)
    assert all(r.threshold == 1e-3 for r in results)
    assert all(r.passed for r in results)


def test_default_thresholds():
    results = run_selftest(samples=5)
    assert {r.suite: r.threshold for r in results} == {name: t for name, (_, t) in SUITES.items()}


def test_selftest_rejects_bad_tolerance():
    with pytest.raises(InvalidTolerance):
        run_selftest(tol=0.0, samples=1)


def test_suite_result_to_dict():
    payload = run_selftest(samples=3)[0].to_dict()
    assert set(payload) == {"suite", "passed", "samples", "maxError", "threshold"}


def test_default_run_is_fast():
    started = time.perf_counter()
    results = run_selftest()
    assert all(r.passed for r in results)
    assert time.perf_counter() - started < 10.0

import math

import pytest

from core import (
    InvalidAmplitudes,
    InvalidLambda,
    InvalidTolerance,
    NumericalError,
    get_named_amplitudes,
    NAMED_STATES_KEYS,
)
from core.utils import (
    check_lambda,
    check_tolerance,
    clamp_nonnegative,
    ensure_finite,
    format_bool,
    format_float,
    split_into_batches,
)


def test_format_float_is_round_trip_exact():
    for x in (0.1, 1 / 3, 1e-300, -2.5):
        assert float(format_float(x)) == x


def test_format_bool():
    assert format_bool(True) == "true"
    assert format_bool(False) == "false"


@pytest.mark.parametrize("total, size, expected", [
    (10, 4, [range(0, 4), range(4, 8), range(8, 10)]),
    (3, 5, [range(0, 3)]),
    (0, 5, []),
    (2, 0, [range(0, 1), range(1, 2)]),
])
def test_split_into_batches(total, size, expected):
    assert split_into_batches(total, size) == expected


def test_ensure_finite():
    assert ensure_finite([1, 2j]).dtype.kind == "c"
    with pytest.raises(InvalidAmplitudes):
        ensure_finite([1, float("nan")])


@pytest.mark.parametrize("tol", [0, -1e-9, float("inf"), float("nan"), "1e-9"])
def test_check_tolerance_rejects(tol):
    with pytest.raises(InvalidTolerance):
        check_tolerance(tol)


def test_check_lambda_clamps_round_off():
    assert check_lambda(-1e-13) == 0.0
    assert check_lambda(0.5 + 1e-13) == 0.5
    assert check_lambda(0.3) == 0.3


@pytest.mark.parametrize("lam", [-0.1, 0.51, math.nan])
def test_check_lambda_rejects(lam):
    with pytest.raises(InvalidLambda):
        check_lambda(lam)


def test_clamp_nonnegative():
    assert clamp_nonnegative(-1e-13, 1e-12) == 0.0
    assert clamp_nonnegative(0.25, 1e-12) == 0.25
    with pytest.raises(NumericalError):
        clamp_nonnegative(-1e-6, 1e-12, "det L")


def test_named_amplitudes_padding():
    assert get_named_amplitudes("phi_minus", 3) == pytest.approx(
        [1 / math.sqrt(2), 0, 0, 0, -1 / math.sqrt(2), 0]
    )
    assert "psi_minus" in NAMED_STATES_KEYS
    with pytest.raises(KeyError):
        get_named_amplitudes("ghz")

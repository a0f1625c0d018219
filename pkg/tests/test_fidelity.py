import math

import numpy as np
import pytest
from hypothesis import given, settings

from core import (
    DensityMatrixQubit,
    DimensionMismatch,
    InvalidLambda,
    fidelity_pair,
    from_coefficients,
    generic_uhlmann_fidelity,
    global_fidelity,
    global_fidelity_schmidt,
    gram_identity_sides,
    haar_sample,
    local_fidelity,
    local_fidelity_closed_form,
    local_operator,
    new_state,
    normalized_operator,
    reduced_qubit,
    schmidt_decompose,
    spectral_local_fidelity,
    express_in_frame,
)
from core.fidelity import operator_fidelity
from core.generator import rng_stream
from core.states import reduced_from_coefficients

from tests.strategies import state_pairs

R = 1 / math.sqrt(2)
HALVES = [[0.5, 0.5], [0.5, 0.5]]
DIMS = [2, 3, 5, 8]


# ===================================================================
# GLOBAL FIDELITY
# ===================================================================

def test_global_fidelity_of_identical_states(phi_plus):
    assert global_fidelity(phi_plus, phi_plus) == pytest.approx(1.0, abs=1e-12)


def test_global_fidelity_of_epr_pair(phi_plus, phi_minus):
    assert global_fidelity(phi_plus, phi_minus) == pytest.approx(0.0, abs=1e-12)


def test_global_fidelity_schmidt_form():
    assert global_fidelity_schmidt(0.5, HALVES) == pytest.approx(0.5, abs=1e-12)


def test_global_fidelity_both_paths_on_halves(phi_plus):
    phi = from_coefficients(HALVES)
    assert global_fidelity(phi_plus, phi) == pytest.approx(0.5, abs=1e-12)


@pytest.mark.parametrize("d", DIMS)
def test_global_fidelity_paths_agree(d):
    for i in range(200):
        psi = haar_sample(d, 23, index=2 * i)
        phi = haar_sample(d, 23, index=2 * i + 1)
        frame = schmidt_decompose(psi)
        c = express_in_frame(phi, frame)
        assert global_fidelity_schmidt(frame.lam, c) == pytest.approx(global_fidelity(psi, phi), abs=1e-12)


def test_global_fidelity_dimension_mismatch(phi_plus):
    with pytest.raises(DimensionMismatch):
        global_fidelity(phi_plus, new_state(3, [1, 0, 0, 0, 0, 0]))


def test_global_fidelity_schmidt_rejects_bad_lambda():
    with pytest.raises(InvalidLambda):
        global_fidelity_schmidt(0.7, HALVES)


# ===================================================================
# LOCAL FIDELITY
# ===================================================================

def test_local_fidelity_of_epr_pair(phi_plus, phi_minus):
    assert local_fidelity(phi_plus, phi_minus) == pytest.approx(1.0, abs=1e-12)


def test_local_fidelity_of_identical_states():
    psi = from_coefficients([[0.8, 0], [0, 0.6]])
    assert local_fidelity(psi, psi) == pytest.approx(1.0, abs=1e-12)


def test_local_fidelity_on_halves(phi_plus):
    assert local_fidelity(phi_plus, from_coefficients(HALVES)) == pytest.approx(0.5, abs=1e-12)


def test_local_fidelity_dimension_mismatch(phi_plus):
    with pytest.raises(DimensionMismatch):
        local_fidelity(phi_plus, new_state(3, [1, 0, 0, 0, 0, 0]))


@pytest.mark.parametrize("lam, c, expected", [
    (0.0, [[0.6, 0], [0, 0.8]], 0.64),
    (0.0, [[0, 0.6], [0.8, 0]], 0.64),
    (0.5, [[R, 0], [0, -R]], 1.0),
    (0.36, [[0.6, 0], [0, 0.8]], 1.0),
    (0.5, HALVES, 0.5),
])
def test_closed_form_examples(lam, c, expected):
    assert local_fidelity_closed_form(lam, c) == pytest.approx(expected, abs=1e-12)


def test_closed_form_rejects_bad_lambda():
    with pytest.raises(InvalidLambda):
        local_fidelity_closed_form(-0.1, HALVES)


def test_closed_form_matches_identical_reduction_oracle():
    psi = from_coefficients([[0.8, 0], [0, 0.6]])
    rho = reduced_qubit(psi)
    assert generic_uhlmann_fidelity(rho, rho) == pytest.approx(
        local_fidelity_closed_form(0.36, [[0.6, 0], [0, 0.8]]), abs=1e-12
    )


def test_local_operator_entries():
    rho = DensityMatrixQubit(0.36, 0.64, 0.2 + 0.1j)
    op = local_operator(0.25, rho)
    assert op.a00 == pytest.approx(0.25 * 0.36)
    assert op.a11 == pytest.approx(0.75 * 0.64)
    assert op.a01 == pytest.approx(math.sqrt(0.25 * 0.75) * (0.2 + 0.1j))


def test_operator_with_zero_trace():
    op = local_operator(0.0, DensityMatrixQubit(1.0, 0.0))
    assert normalized_operator(op) is None
    assert spectral_local_fidelity(op) == 0.0
    assert operator_fidelity(op) == 0.0


@pytest.mark.parametrize("d", DIMS)
def test_all_local_paths_agree_with_oracle(d):
    for i in range(300):
        psi = haar_sample(d, 31, index=2 * i)
        phi = haar_sample(d, 31, index=2 * i + 1)
        frame = schmidt_decompose(psi)
        c = express_in_frame(phi, frame)
        op = local_operator(frame.lam, reduced_from_coefficients(c))

        oracle = generic_uhlmann_fidelity(reduced_qubit(psi), reduced_qubit(phi))
        assert local_fidelity(psi, phi) == pytest.approx(oracle, abs=1e-10)
        assert local_fidelity_closed_form(frame.lam, c) == pytest.approx(oracle, abs=1e-10)
        assert spectral_local_fidelity(op) == pytest.approx(oracle, abs=1e-10)


def test_closed_form_uses_gram_side_for_large_dimension():
    for i in range(20):
        psi = haar_sample(24, 37, index=2 * i)
        phi = haar_sample(24, 37, index=2 * i + 1)
        frame = schmidt_decompose(psi)
        c = express_in_frame(phi, frame)
        oracle = generic_uhlmann_fidelity(reduced_qubit(psi), reduced_qubit(phi))
        assert local_fidelity_closed_form(frame.lam, c) == pytest.approx(oracle, abs=1e-10)


# ===================================================================
# GRAM IDENTITY
# ===================================================================

def test_gram_identity_identical_rows():
    lhs, rhs = gram_identity_sides([0.6, 0.8j], [0.6, 0.8j])
    assert lhs == pytest.approx(0.0, abs=1e-15)
    assert rhs == pytest.approx(0.0, abs=1e-15)


def test_gram_identity_orthonormal_rows():
    assert gram_identity_sides([1, 0], [0, 1]) == pytest.approx((1.0, 1.0))


@pytest.mark.parametrize("d", [2, 5, 16])
def test_gram_identity_random_rows(d):
    for i in range(500):
        rng = rng_stream(41, d * 10000 + i)
        rows = rng.standard_normal((2, d)) + 1j * rng.standard_normal((2, d))
        rows /= np.linalg.norm(rows)
        lhs, rhs = gram_identity_sides(rows[0], rows[1])
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, rhs)


@pytest.mark.parametrize("row0, row1", [
    ([1, 0], [1, 0, 0]),
    ([1], [0]),
])
def test_gram_identity_shape_errors(row0, row1):
    with pytest.raises(DimensionMismatch):
        gram_identity_sides(row0, row1)


# ===================================================================
# MONOTONICITY
# ===================================================================

@pytest.mark.parametrize("d", DIMS)
def test_global_never_exceeds_local_on_haar_pairs(d):
    for i in range(1000):
        pair = fidelity_pair(haar_sample(d, 47, index=2 * i), haar_sample(d, 47, index=2 * i + 1))
        assert pair.f_global <= pair.f_local + 1e-10
        assert 0.0 <= pair.f_global <= 1.0
        assert 0.0 <= pair.f_local <= 1.0


@given(pair=state_pairs())
@settings(deadline=None, max_examples=200)
def test_global_never_exceeds_local(pair):
    psi, phi = pair
    fids = fidelity_pair(psi, phi)
    assert fids.gap >= -1e-9


def test_fidelity_pair_gap_for_epr_pair(phi_plus, phi_minus):
    pair = fidelity_pair(phi_plus, phi_minus)
    assert pair.gap == pytest.approx(1.0, abs=1e-12)

import cmath
import math

import numpy as np
import pytest

from core import (
    EqualityFamilyParams,
    InvalidLambda,
    InvalidTolerance,
    SchmidtForm,
    analyze_pair,
    BipartitePureState,
    check_equality_conditions,
    check_separable_case,
    express_in_frame,
    fidelity_pair,
    from_coefficients,
    generate_equality_state,
    haar_sample,
    haar_unitary,
    lemma1_extract_k,
    lemma1_extract_p,
    new_state,
    numeric_equality_verdict,
    regauge_frame,
    schmidt_decompose,
)
from core.generator import random_family_params, rng_stream

R = 1 / math.sqrt(2)
HALVES = [[0.5, 0.5], [0.5, 0.5]]


# ===================================================================
# FOUR CONDITIONS
# ===================================================================

def test_epr_pair_fails_second_condition():
    report = check_equality_conditions(0.5, [[R, 0], [0, -R]])
    assert report.flags == (True, False, True, True)
    assert report.verdict is False
    assert report.residuals[1] == pytest.approx(1.0, abs=1e-12)


def test_self_pair_passes():
    lam = 0.36
    report = check_equality_conditions(lam, [[0.6, 0], [0, 0.8]])
    assert report.verdict
    assert report.k == pytest.approx(math.sqrt((1 - lam) / lam))
    assert report.p == pytest.approx(0.0, abs=1e-15)


def test_uniform_pair_passes():
    report = check_equality_conditions(0.5, HALVES)
    assert report.flags == (True, True, True, True)
    assert all(r == pytest.approx(0.0, abs=1e-15) for r in report.residuals)
    assert report.k == pytest.approx(1.0)
    assert report.p == pytest.approx(1.0)


def test_support_outside_frame_fails_third_condition():
    c = np.array([[0.6, 0, 0], [0, 0.6, math.sqrt(0.28)]])
    report = check_equality_conditions(0.36, c)
    assert report.flags[2] is False
    assert report.residuals[2] == pytest.approx(0.28)


def test_first_condition_residual():
    c = np.array([[0.5, 0.5], [0.1, math.sqrt(0.49)]])
    report = check_equality_conditions(0.5, c)
    assert report.residuals[0] == pytest.approx(R * 0.4)
    assert not report.flags[0]


def test_negative_k_is_signed():
    report = check_equality_conditions(0.5, [[R, 0], [0, -R]])
    assert report.k == pytest.approx(-1.0)


def test_k_and_p_absent_for_vanishing_coefficients():
    report = check_equality_conditions(0.5, [[0, R], [R, 0]])
    assert report.k is None
    assert report.p is None


def test_report_to_dict():
    payload = check_equality_conditions(0.5, HALVES).to_dict()
    assert set(payload) == {"residuals", "flags", "k", "p", "verdict"}
    assert len(payload["residuals"]) == 4
    assert payload["verdict"] is True


def test_conditions_reject_bad_inputs():
    with pytest.raises(InvalidLambda):
        check_equality_conditions(0.6, HALVES)
    with pytest.raises(InvalidTolerance):
        check_equality_conditions(0.5, HALVES, tol=0.0)
    with pytest.raises(InvalidTolerance):
        check_equality_conditions(0.5, HALVES, tol=float("nan"))


# ===================================================================
# NUMERIC VERDICT
# ===================================================================

def test_numeric_verdict_examples(phi_plus, phi_minus):
    assert numeric_equality_verdict(phi_plus, phi_plus)
    assert not numeric_equality_verdict(phi_plus, phi_minus)


def test_analysis_of_epr_pair(phi_plus, phi_minus):
    analysis = analyze_pair(phi_plus, phi_minus)
    assert analysis.fidelities.f_global == pytest.approx(0.0, abs=1e-12)
    assert analysis.fidelities.f_local == pytest.approx(1.0, abs=1e-12)
    assert analysis.verdict_numeric is False
    assert analysis.report.verdict is False
    assert analysis.consistent

    payload = analysis.to_dict()
    assert set(payload) == {"fGlobal", "fLocal", "gap", "lambda", "verdictNumeric", "conditions"}
    assert payload["lambda"] == pytest.approx(0.5)


# ===================================================================
# SEPARABLE PSI
# ===================================================================

@pytest.mark.parametrize("c, expected", [
    ([[0.6, 0], [0, 0.8]], True),
    ([[0, R], [R, 0]], False),
    ([[1, 0], [0, 0]], True),
])
def test_separable_case_examples(c, expected):
    assert check_separable_case(c) is expected


def test_separable_case_agrees_with_four_conditions():
    psi = new_state(2, [0, 0, 0, 1])
    for d in (2, 3, 5):
        for i in range(300):
            phi = haar_sample(d, 53, index=i)
            if i % 3 == 0:
                # force the equality pattern on a third of the draws
                coeffs = np.array(phi.coeffs)
                coeffs[1, [j for j in range(d) if j != 1]] = 0
                phi = from_coefficients(coeffs, auto_normalize=True)
            psi_d = new_state(d, np.eye(2 * d)[d + 1]) if d > 2 else psi
            frame = schmidt_decompose(psi_d)
            c = express_in_frame(phi, frame)
            assert frame.lam == 0.0
            assert check_separable_case(c) == check_equality_conditions(0.0, c).verdict
            if check_separable_case(c):
                pair = fidelity_pair(psi_d, phi)
                assert pair.f_global == pytest.approx(abs(c[1, 1]) ** 2, abs=1e-12)
                assert pair.gap == pytest.approx(0.0, abs=1e-10)


# ===================================================================
# COMPLEX-NUMBER EXTRACTORS
# ===================================================================

def test_extract_k_positive_multiple():
    assert lemma1_extract_k(1 + 1j, 2 + 2j) == pytest.approx(2.0)


@pytest.mark.parametrize("alpha, beta", [
    (1, 1j),
    (3 * cmath.exp(1j * math.pi / 7), -0.5 * cmath.exp(1j * math.pi / 7)),
    (0, 1),
])
def test_extract_k_rejects(alpha, beta):
    assert lemma1_extract_k(alpha, beta) is None


@pytest.mark.parametrize("alpha, beta, expected", [
    (2 * cmath.exp(1j * math.pi / 3), 0.5 * cmath.exp(1j * math.pi / 3), 0.25),
    (1 + 1j, 0.3 + 0.3j, 0.3),
    (1, 0, 0.0),
])
def test_extract_p(alpha, beta, expected):
    assert lemma1_extract_p(alpha, beta) == pytest.approx(expected)


@pytest.mark.parametrize("alpha, beta", [
    (1, -1),
    (1, 1j),
    (1, 2),
])
def test_extract_p_rejects(alpha, beta):
    assert lemma1_extract_p(alpha, beta) is None


# ===================================================================
# EQUIVALENCE OF THE TWO VERDICTS
# ===================================================================

def test_generated_states_pass_both_verdicts():
    for i in range(300):
        params = random_family_params(61, i)
        d = (2, 3, 5, 8)[i % 4]
        frame = SchmidtForm(
            lam=params.lam,
            basis_a=haar_unitary(2, 62, index=i),
            basis_b=haar_unitary(d, 63, index=i)[:2],
        )
        psi = BipartitePureState(frame.reconstruct())
        phi = generate_equality_state(params, frame)

        analysis = analyze_pair(psi, phi)
        assert analysis.report.verdict, (i, params, analysis.report)
        assert numeric_equality_verdict(psi, phi, tol=1e-10)


@pytest.mark.parametrize("d", [2, 3, 5, 8])
def test_verdicts_agree_on_haar_pairs(d):
    for i in range(500):
        psi = haar_sample(d, 67, index=2 * i)
        phi = haar_sample(d, 67, index=2 * i + 1)
        analysis = analyze_pair(psi, phi)
        assert analysis.consistent
        assert analysis.fidelities.gap >= -1e-10


def test_verdict_is_frame_independent_at_half():
    psi = new_state(2, [R, 0, 0, R])
    frame = schmidt_decompose(psi)
    phis = [
        from_coefficients(HALVES),
        new_state(2, [R, 0, 0, -R]),
        haar_sample(2, 71),
        new_state(2, [0.6, 0, 0, 0.8]),
    ]
    for phi in phis:
        expected = check_equality_conditions(0.5, express_in_frame(phi, frame)).verdict
        for i in range(100):
            regauged = regauge_frame(frame, haar_unitary(2, 73, index=i))
            c = express_in_frame(phi, regauged)
            assert check_equality_conditions(regauged.lam, c).verdict == expected


def test_verdict_is_frame_independent_for_degenerate_haar_psi():
    for i in range(20):
        u = haar_unitary(2, 79, index=i)
        v = haar_unitary(3, 83, index=i)
        psi = BipartitePureState(R * u @ v[:2])
        frame = schmidt_decompose(psi)
        assert frame.lam == pytest.approx(0.5, abs=1e-12)

        params = random_family_params(89, i)
        half_params = EqualityFamilyParams(0.5, params.k, params.p, params.theta01, params.theta10)
        phi = generate_equality_state(half_params, frame)
        for j in range(100):
            regauged = regauge_frame(frame, haar_unitary(2, 97, index=100 * i + j))
            assert check_equality_conditions(0.5, express_in_frame(phi, regauged)).verdict


def test_verdict_implies_intermediate_inequality_and_bounded_p():
    hits = 0
    for i in range(500):
        params = random_family_params(101, i)
        rng = rng_stream(103, i)
        d = 2 + i % 4
        frame = SchmidtForm(
            lam=params.lam,
            basis_a=haar_unitary(2, 107, index=i),
            basis_b=haar_unitary(d, 109, index=i)[:2],
        )
        phi = generate_equality_state(params, frame)
        if i % 2:
            # perturb half of the draws so both outcomes are exercised
            noise = rng.standard_normal((2, d)) + 1j * rng.standard_normal((2, d))
            phi = from_coefficients(phi.coeffs + 0.05 * noise, auto_normalize=True)
        c = express_in_frame(phi, frame)
        report = check_equality_conditions(frame.lam, c)
        if not report.verdict:
            continue
        hits += 1
        assert abs(c[0, 0] * c[1, 1]) >= abs(c[0, 1] * c[1, 0]) - 1e-9
        if report.p is not None:
            assert report.p <= 1 + 1e-9
    assert hits >= 250

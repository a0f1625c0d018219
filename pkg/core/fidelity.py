"""
FidelityEq - Global & Local Fidelities
Squared-overlap convention: F(psi, phi) = |<psi|phi>|^2.
"""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .constants import EPS, GRAM_DIRECT_MAX_DIM
from .exceptions import DimensionMismatch
from .numerics import HermitianQubitOperator, as_matrix_2xd, trace_one_eigenvalues
from .states import (
    BipartitePureState,
    DensityMatrixQubit,
    SchmidtForm,
    express_in_frame,
    reduced_from_coefficients,
    schmidt_decompose,
)
from .utils import check_lambda, clamp_nonnegative, ensure_finite


@dataclass(frozen=True)
class FidelityPair:
    f_global: float
    f_local: float

    @property
    def gap(self) -> float:
        return self.f_local - self.f_global


def _clamp_unit(x: float) -> float:
    return min(1.0, max(0.0, float(x)))


def _check_pair(psi: BipartitePureState, phi: BipartitePureState) -> None:
    if psi.dim_b != phi.dim_b:
        raise DimensionMismatch(f"dimB differs: {psi.dim_b} vs {phi.dim_b}")


# ===================================================================
# GRAM IDENTITY
# ===================================================================

def gram_identity_sides(row0, row1) -> Tuple[float, float]:
    """
    lhs = sum_{j>l} |c0j c1l - c0l c1j|^2
    rhs = |row0|^2 |row1|^2 - |<row1|row0>|^2
    """
    r0 = ensure_finite(row0, "row0").reshape(-1)
    r1 = ensure_finite(row1, "row1").reshape(-1)
    if r0.size != r1.size:
        raise DimensionMismatch(f"rows differ in length: {r0.size} vs {r1.size}")
    if r0.size < 2:
        raise DimensionMismatch("rows need at least two entries")

    wedge = np.outer(r0, r1)
    wedge = wedge - wedge.T
    lhs = float(np.sum(np.tril(np.abs(wedge) ** 2, k=-1)))

    n0 = float(np.vdot(r0, r0).real)
    n1 = float(np.vdot(r1, r1).real)
    overlap = np.vdot(r1, r0)
    rhs = n0 * n1 - float((overlap * overlap.conjugate()).real)
    return lhs, rhs


def _wedge_norm_sq(c: np.ndarray) -> float:
    """sum_{j>l} |c0j c1l - c0l c1j|^2, direct form for small d"""
    if c.shape[1] <= GRAM_DIRECT_MAX_DIM:
        lhs, _ = gram_identity_sides(c[0], c[1])
        return lhs
    _, rhs = gram_identity_sides(c[0], c[1])
    return max(0.0, rhs)


# ===================================================================
# GLOBAL FIDELITY
# ===================================================================

def global_fidelity(psi: BipartitePureState, phi: BipartitePureState) -> float:
    """|<psi|phi>|^2 from the entrywise inner product of the coefficient matrices"""
    _check_pair(psi, phi)
    overlap = np.vdot(psi.coeffs, phi.coeffs)
    return _clamp_unit(abs(overlap) ** 2)


def global_fidelity_schmidt(lam: float, c) -> float:
    """|sqrt(lam) c00 + sqrt(1 - lam) c11|^2 in psi's Schmidt frame"""
    lam = check_lambda(lam)
    c = as_matrix_2xd(c)
    amp = math.sqrt(lam) * c[0, 0] + math.sqrt(1.0 - lam) * c[1, 1]
    return _clamp_unit(abs(amp) ** 2)


# ===================================================================
# LOCAL FIDELITY
# ===================================================================

def local_operator(lam: float, rho_phi: DensityMatrixQubit) -> HermitianQubitOperator:
    """
    L = sqrt(rho_psi) rho_phi sqrt(rho_psi) with rho_psi = diag(lam, 1 - lam):
    a00 = lam p00, a11 = (1 - lam) p11, a01 = sqrt(lam (1 - lam)) p01.
    """
    lam = check_lambda(lam)
    return HermitianQubitOperator(
        a00=lam * rho_phi.p00,
        a11=(1.0 - lam) * rho_phi.p11,
        a01=math.sqrt(lam * (1.0 - lam)) * rho_phi.p01,
    )


def normalized_operator(op: HermitianQubitOperator) -> Optional[HermitianQubitOperator]:
    """M = L / Tr L; None when the trace vanishes"""
    tr = op.trace
    if tr <= 0:
        return None
    return HermitianQubitOperator(op.a00 / tr, op.a11 / tr, op.a01 / tr)


def operator_fidelity(op: HermitianQubitOperator) -> float:
    """(Tr sqrt L)^2 = a00 + a11 + 2 sqrt(a00 a11 - |a01|^2)"""
    det = clamp_nonnegative(op.det, EPS, "det L")
    return _clamp_unit(op.a00 + op.a11 + 2.0 * math.sqrt(det))


def spectral_local_fidelity(op: HermitianQubitOperator) -> float:
    """
    (sqrt(Tr L * l1) + sqrt(Tr L * l2))^2 with l1, l2 the eigenvalues of
    M = L / Tr L. l1 comes from the trace-one formula, l2 = Det M / l1
    avoids the cancellation in (1 - root) / 2.
    """
    m = normalized_operator(op)
    if m is None:
        return 0.0
    l1, _ = trace_one_eigenvalues(m.a00, m.a01)
    l2 = clamp_nonnegative(m.det, EPS, "det M") / l1
    tr = op.trace
    return _clamp_unit((math.sqrt(max(0.0, tr * l1)) + math.sqrt(max(0.0, tr * l2))) ** 2)


def local_fidelity(psi: BipartitePureState, phi: BipartitePureState) -> float:
    """F(rho_psi^A, rho_phi^A) through the operator L in psi's Schmidt frame"""
    _check_pair(psi, phi)
    frame = schmidt_decompose(psi)
    c = express_in_frame(phi, frame)
    return operator_fidelity(local_operator(frame.lam, reduced_from_coefficients(c)))


def local_fidelity_closed_form(lam: float, c, flip_cross_sign: bool = False) -> float:
    """
    lam sum_j |c0j|^2 + 2 sqrt(lam (1 - lam)) sqrt(sum_{j>l} |c0j c1l - c0l c1j|^2)
    + (1 - lam) sum_j |c1j|^2

    flip_cross_sign exists only for the self-test harness.
    """
    lam = check_lambda(lam)
    c = as_matrix_2xd(c)
    n0 = float(np.sum(np.abs(c[0]) ** 2))
    n1 = float(np.sum(np.abs(c[1]) ** 2))
    cross = 2.0 * math.sqrt(lam * (1.0 - lam)) * math.sqrt(_wedge_norm_sq(c))
    if flip_cross_sign:
        cross = -cross
    return _clamp_unit(lam * n0 + cross + (1.0 - lam) * n1)


# ===================================================================
# PAIRS
# ===================================================================

def fidelity_pair(psi: BipartitePureState, phi: BipartitePureState, frame: Optional[SchmidtForm] = None) -> FidelityPair:
    """İki fidelity, psi'nin tek bir Schmidt çerçevesinden"""
    _check_pair(psi, phi)
    if frame is None:
        frame = schmidt_decompose(psi)
    c = express_in_frame(phi, frame)
    return FidelityPair(
        f_global=global_fidelity(psi, phi),
        f_local=local_fidelity_closed_form(frame.lam, c),
    )

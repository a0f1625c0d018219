"""
FidelityEq - Bipartite Pure States
Construction, Schmidt frames, frame re-expression and reduced states.
"""

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .constants import EPS, NORM_TOL, STATE_NORM_TOL, ZERO_NORM
from .exceptions import DimensionMismatch, InvalidLambda, NotNormalized, NotUnitary, ZeroState
from .numerics import (
    HermitianQubitOperator,
    as_matrix_2xd,
    complete_orthonormal_rows,
    svd_2xd,
)
from .utils import ensure_finite


# ===================================================================
# TYPES
# ===================================================================

@dataclass(frozen=True, eq=False)
class BipartitePureState:
    """
    Pure state on a qubit A and a d-level system B.
    coeffs[i, j] is the amplitude of |i>^A |j>^B in the computational basis.
    """
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(as_matrix_2xd(self.coeffs), dtype=np.complex128)
        norm = float(np.linalg.norm(c))
        if abs(norm - 1.0) > STATE_NORM_TOL:
            raise NotNormalized(f"state norm is {norm:.12g}; build it with new_state(..., auto_normalize=True)")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def dim_b(self) -> int:
        return self.coeffs.shape[1]

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    def amplitudes(self) -> np.ndarray:
        """Row-major amplitude vector, index i*d + j"""
        return self.coeffs.reshape(-1)

    def __repr__(self) -> str:
        return f"BipartitePureState(dim_b={self.dim_b}, norm={self.norm:.12f})"


@dataclass(frozen=True, eq=False)
class SchmidtForm:
    """
    psi = sqrt(lam)|0>|0> + sqrt(1 - lam)|1>|1> in the frame given by
    basis_a (columns |0>^A, |1>^A) and basis_b (rows |0>^B, |1>^B).
    """
    lam: float
    basis_a: np.ndarray
    basis_b: np.ndarray

    def __post_init__(self):
        if not (-EPS <= self.lam <= 0.5 + EPS):
            raise InvalidLambda(f"lambda must lie in [0, 1/2], got {self.lam}")
        object.__setattr__(self, "lam", min(0.5, max(0.0, float(self.lam))))

        basis_a = np.array(check_unitary(self.basis_a, 2))
        basis_b = np.array(check_orthonormal_rows(self.basis_b))
        basis_a.setflags(write=False)
        basis_b.setflags(write=False)
        object.__setattr__(self, "basis_a", basis_a)
        object.__setattr__(self, "basis_b", basis_b)

    @property
    def dim_b(self) -> int:
        return self.basis_b.shape[1]

    @cached_property
    def full_basis_b(self) -> np.ndarray:
        """d x d unitary whose first two rows are basis_b"""
        full = complete_orthonormal_rows(self.basis_b, self.dim_b)
        full.setflags(write=False)
        return full

    def schmidt_coefficients(self) -> np.ndarray:
        c = np.zeros((2, self.dim_b), dtype=np.complex128)
        c[0, 0] = math.sqrt(self.lam)
        c[1, 1] = math.sqrt(1.0 - self.lam)
        return c

    def reconstruct(self) -> np.ndarray:
        """Coefficients of the source state in the computational basis"""
        return embed_coefficients(self.schmidt_coefficients(), self)


@dataclass(frozen=True)
class DensityMatrixQubit:
    """Reduced state [[p00, p01], [conj(p01), p11]]"""
    p00: float
    p11: float
    p01: complex = 0j

    def __post_init__(self):
        ensure_finite([self.p00, self.p11, self.p01], "density matrix entries")
        object.__setattr__(self, "p00", float(self.p00))
        object.__setattr__(self, "p11", float(self.p11))
        object.__setattr__(self, "p01", complex(self.p01))
        if abs(self.p00 + self.p11 - 1.0) > 1e-10:
            raise NotNormalized(f"trace must be 1, got {self.p00 + self.p11}")
        if min(self.p00, self.p11) < -EPS or self.det < -EPS:
            raise NotNormalized("density matrix is not positive semidefinite")

    @property
    def det(self) -> float:
        return self.p00 * self.p11 - abs(self.p01) ** 2

    def as_operator(self) -> HermitianQubitOperator:
        return HermitianQubitOperator(self.p00, self.p11, self.p01)

    def as_array(self) -> np.ndarray:
        return self.as_operator().as_array()


# ===================================================================
# CONSTRUCTION
# ===================================================================

def new_state(dim_b: int, amplitudes: Sequence[complex], auto_normalize: bool = False) -> BipartitePureState:
    """
    Validated state from 2*dim_b row-major amplitudes.
    A norm within NORM_TOL of one is accepted and rescaled exactly.
    """
    if int(dim_b) != dim_b or dim_b < 2:
        raise DimensionMismatch(f"dimB must be an integer >= 2, got {dim_b}")
    dim_b = int(dim_b)
    amps = ensure_finite(amplitudes, "amplitudes").reshape(-1)
    if amps.size != 2 * dim_b:
        raise DimensionMismatch(f"expected {2 * dim_b} amplitudes for dimB={dim_b}, got {amps.size}")

    norm = float(np.linalg.norm(amps))
    if norm < ZERO_NORM:
        raise ZeroState("all amplitudes are zero")
    if not auto_normalize and abs(norm - 1.0) > NORM_TOL:
        raise NotNormalized(f"state norm is {norm:.12g}; pass auto_normalize to rescale")

    return BipartitePureState(amps.reshape(2, dim_b) / norm)


def from_coefficients(c, auto_normalize: bool = False) -> BipartitePureState:
    c = as_matrix_2xd(c)
    return new_state(c.shape[1], c.reshape(-1), auto_normalize=auto_normalize)


def canonical_frame(lam: float, dim_b: int) -> SchmidtForm:
    """Schmidt frame whose bases are the computational ones"""
    if dim_b < 2:
        raise DimensionMismatch(f"dimB must be >= 2, got {dim_b}")
    eye_b = np.eye(dim_b, dtype=np.complex128)[:2]
    return SchmidtForm(lam=lam, basis_a=np.eye(2, dtype=np.complex128), basis_b=eye_b)


# ===================================================================
# SCHMIDT DECOMPOSITION & FRAMES
# ===================================================================

def schmidt_decompose(psi: BipartitePureState) -> SchmidtForm:
    """
    lam = smaller squared singular value, placed in slot (0, 0).
    The larger one sits in slot (1, 1), so a product state reads |11>.
    A degenerate spectrum keeps the SVD order.
    """
    svd = svd_2xd(psi.coeffs)
    s0, s1 = svd.s
    if s0 - s1 < EPS:
        order = [0, 1]
    else:
        order = [1, 0]
    lam = min(s0 * s0, s1 * s1)
    basis_a = np.ascontiguousarray(svd.u_a[:, order])
    basis_b = np.ascontiguousarray(svd.v_rows[order])
    basis_a.setflags(write=False)
    basis_b.setflags(write=False)
    return SchmidtForm(lam=lam, basis_a=basis_a, basis_b=basis_b)


def express_in_frame(phi: BipartitePureState, frame: SchmidtForm) -> np.ndarray:
    """c_ij = <i^A j^B | phi> in the frame's bases (B basis completed to d vectors)"""
    if phi.dim_b != frame.dim_b:
        raise DimensionMismatch(f"state has dimB={phi.dim_b}, frame has dimB={frame.dim_b}")
    return frame.basis_a.conj().T @ phi.coeffs @ frame.full_basis_b.conj().T


def embed_coefficients(c, frame: SchmidtForm) -> np.ndarray:
    """Inverse of express_in_frame: frame coefficients -> computational ones"""
    c = as_matrix_2xd(c)
    if c.shape[1] != frame.dim_b:
        raise DimensionMismatch(f"coefficients have dimB={c.shape[1]}, frame has dimB={frame.dim_b}")
    return frame.basis_a @ c @ frame.full_basis_b


# ===================================================================
# REDUCED STATES
# ===================================================================

def reduced_from_coefficients(c) -> DensityMatrixQubit:
    """
    p00 = sum_j |c0j|^2, p11 = sum_j |c1j|^2, p01 = sum_j conj(c1j) c0j.
    The trace is renormalized to absorb round-off.
    """
    c = as_matrix_2xd(c)
    p00 = float(np.sum(np.abs(c[0]) ** 2))
    p11 = float(np.sum(np.abs(c[1]) ** 2))
    p01 = complex(np.vdot(c[1], c[0]))
    total = p00 + p11
    if total < ZERO_NORM:
        raise ZeroState("cannot reduce a zero coefficient matrix")
    return DensityMatrixQubit(p00 / total, p11 / total, p01 / total)


def reduced_qubit(state: BipartitePureState) -> DensityMatrixQubit:
    """Partial trace over B"""
    return reduced_from_coefficients(state.coeffs)


# ===================================================================
# LOCAL UNITARIES
# ===================================================================

def check_unitary(u: np.ndarray, dim: int) -> np.ndarray:
    u = ensure_finite(u, "unitary")
    if u.shape != (dim, dim):
        raise DimensionMismatch(f"expected a {dim}x{dim} unitary, got shape {u.shape}")
    if np.max(np.abs(u @ u.conj().T - np.eye(dim))) > EPS:
        raise NotUnitary("matrix is not unitary to 1e-12")
    return u


def check_orthonormal_rows(rows: np.ndarray) -> np.ndarray:
    """Two orthonormal rows of length d >= 2 (a Schmidt frame's B basis)"""
    rows = ensure_finite(rows, "basis rows")
    if rows.ndim != 2 or rows.shape[0] != 2 or rows.shape[1] < 2:
        raise DimensionMismatch(f"expected 2 x d basis rows with d >= 2, got shape {rows.shape}")
    if np.max(np.abs(rows @ rows.conj().T - np.eye(2))) > EPS:
        raise NotUnitary("basis rows are not orthonormal to 1e-12")
    return rows


def apply_local_unitary_B(state: BipartitePureState, u) -> BipartitePureState:
    """(I x u)|state>: coefficient rows right-multiplied by u^T"""
    u = check_unitary(u, state.dim_b)
    return BipartitePureState(state.coeffs @ u.T)


def apply_local_unitary_A(state: BipartitePureState, u) -> BipartitePureState:
    """(u x I)|state>"""
    u = check_unitary(u, 2)
    return BipartitePureState(u @ state.coeffs)


def is_product_state(state: BipartitePureState, tol: float = EPS) -> bool:
    """Rank-one coefficient matrix, i.e. second singular value <= tol"""
    return svd_2xd(state.coeffs).s[1] <= tol

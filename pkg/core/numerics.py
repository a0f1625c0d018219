"""
FidelityEq - Numerics
Small dense complex linear algebra: 2x2 Hermitian spectra, 2 x d SVD and a
generic Uhlmann fidelity used as a cross-check.
"""

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .constants import COMPLETION_TOL, EPS, ZERO_NORM
from .exceptions import DimensionMismatch, ZeroMatrix
from .utils import ensure_finite


# ===================================================================
# TYPES
# ===================================================================

@dataclass(frozen=True)
class HermitianQubitOperator:
    """[[a00, a01], [conj(a01), a11]]"""
    a00: float
    a11: float
    a01: complex = 0j

    def __post_init__(self):
        ensure_finite([self.a00, self.a11, self.a01], "operator entries")
        object.__setattr__(self, "a00", float(self.a00))
        object.__setattr__(self, "a11", float(self.a11))
        object.__setattr__(self, "a01", complex(self.a01))

    @property
    def trace(self) -> float:
        return self.a00 + self.a11

    @property
    def det(self) -> float:
        return self.a00 * self.a11 - abs(self.a01) ** 2

    def as_array(self) -> np.ndarray:
        return np.array(
            [[self.a00, self.a01], [self.a01.conjugate(), self.a11]],
            dtype=np.complex128,
        )

    @classmethod
    def from_array(cls, m: np.ndarray) -> "HermitianQubitOperator":
        m = np.asarray(m)
        if m.shape != (2, 2):
            raise DimensionMismatch(f"expected a 2x2 matrix, got shape {m.shape}")
        return cls(m[0, 0].real, m[1, 1].real, complex(m[0, 1]))


@dataclass(frozen=True, eq=False)
class SingularValueDecomposition:
    """C = u_a @ diag(s) @ v_rows, s[0] >= s[1] >= 0"""
    u_a: np.ndarray
    s: Tuple[float, float]
    v_rows: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return self.u_a @ np.diag(np.asarray(self.s, dtype=np.complex128)) @ self.v_rows


def as_matrix_2xd(c) -> np.ndarray:
    """Validate a 2 x d coefficient layout (row = A index, column = B index)"""
    arr = ensure_finite(c, "coefficients")
    if arr.ndim != 2 or arr.shape[0] != 2:
        raise DimensionMismatch(f"expected a 2 x d matrix, got shape {arr.shape}")
    if arr.shape[1] < 2:
        raise DimensionMismatch(f"dimB must be >= 2, got {arr.shape[1]}")
    return arr


# ===================================================================
# 2x2 HERMITIAN SPECTRA
# ===================================================================

def hermitian2_eigenvalues(h: HermitianQubitOperator) -> Tuple[float, float]:
    """Kapalı form özdeğerler: Tr/2 +- hypot((a00 - a11)/2, |a01|)"""
    t = 0.5 * (h.a00 + h.a11)
    r = math.hypot(0.5 * (h.a00 - h.a11), abs(h.a01))
    return t + r, t - r


def trace_one_eigenvalues(a: float, b: complex) -> Tuple[float, float]:
    """Eigenvalues of [[a, b], [b*, 1 - a]]"""
    disc = 1.0 - 4.0 * a + 4.0 * a * a + 4.0 * abs(b) ** 2
    root = math.sqrt(max(0.0, disc))
    return 0.5 * (1.0 + root), 0.5 * (1.0 - root)


def hermitian2_eigh(h: HermitianQubitOperator) -> Tuple[Tuple[float, float], np.ndarray]:
    """
    Azalan özdeğerler ve üniter özvektör matrisi.
    Column 1 is the orthogonal complement of column 0; degenerate -> identity.
    """
    lam_plus, lam_minus = hermitian2_eigenvalues(h)
    if lam_plus - lam_minus < EPS:
        return (lam_plus, lam_minus), np.eye(2, dtype=np.complex128)

    # Either row of (H - lam I) v = 0 gives a candidate; keep the better conditioned one
    x1 = np.array([h.a01, lam_plus - h.a00], dtype=np.complex128)
    x2 = np.array([lam_plus - h.a11, h.a01.conjugate()], dtype=np.complex128)
    x = x1 if np.linalg.norm(x1) >= np.linalg.norm(x2) else x2
    v0 = x / np.linalg.norm(x)
    v1 = np.array([-np.conj(v0[1]), np.conj(v0[0])])

    return (lam_plus, lam_minus), np.column_stack([v0, v1])


# ===================================================================
# BASES
# ===================================================================

def fix_phase(v: np.ndarray) -> complex:
    """Phase that makes the largest entry of v real and >= 0"""
    idx = int(np.argmax(np.abs(v)))
    z = v[idx]
    if abs(z) == 0:
        return 1 + 0j
    return complex(np.conj(z) / abs(z))


def complete_orthonormal_rows(rows: np.ndarray, dim: int) -> np.ndarray:
    """Satırları Gram-Schmidt ile dim x dim üniter matrise tamamla"""
    basis = [np.asarray(r, dtype=np.complex128) for r in np.atleast_2d(rows)]
    for k in range(dim):
        if len(basis) == dim:
            break
        cand = np.zeros(dim, dtype=np.complex128)
        cand[k] = 1.0
        # two passes keep orthogonality at round-off level
        for _ in range(2):
            for b in basis:
                cand = cand - np.vdot(b, cand) * b
        norm = np.linalg.norm(cand)
        if norm < COMPLETION_TOL:
            continue
        basis.append(cand / norm)
    if len(basis) != dim:
        raise DimensionMismatch(f"could not complete {len(rows)} rows to a basis of dimension {dim}")
    return np.vstack(basis)


# ===================================================================
# SVD OF A 2 x d MATRIX
# ===================================================================

def svd_2xd(c) -> SingularValueDecomposition:
    """
    SVD through the 2x2 Gram matrix C C^dagger.
    Degenerate: right rows by Gram-Schmidt on the rows of C, u_a = C v^dagger / s.
    """
    c = as_matrix_2xd(c)
    dim = c.shape[1]
    if np.linalg.norm(c) < ZERO_NORM:
        raise ZeroMatrix("cannot decompose a zero coefficient matrix")

    gram = HermitianQubitOperator.from_array(c @ c.conj().T)
    (g_plus, g_minus), u = hermitian2_eigh(gram)
    s_plus = math.sqrt(max(0.0, g_plus))
    s_minus = math.sqrt(max(0.0, g_minus))

    if s_plus - s_minus < EPS:
        # Degenerate: rows of C are orthogonal with equal norm
        v0 = c[0] / np.linalg.norm(c[0])
        w1 = c[1] - np.vdot(v0, c[1]) * v0
        w1 = w1 - np.vdot(v0, w1) * v0
        if np.linalg.norm(w1) < COMPLETION_TOL:
            v_rows = complete_orthonormal_rows(v0[None, :], dim)[:2]
        else:
            v_rows = np.vstack([v0, w1 / np.linalg.norm(w1)])
        s = 0.5 * (s_plus + s_minus)
        u_a = (c @ v_rows.conj().T) / s
        # re-orthonormalize columns of u_a against round-off
        q, r = np.linalg.qr(u_a)
        u_a = q * (np.diag(r) / np.abs(np.diag(r)))
        return _phase_fixed(u_a, (s, s), v_rows)

    w0 = u[:, 0].conj() @ c
    w1 = u[:, 1].conj() @ c
    s0 = float(np.linalg.norm(w0))
    s1 = float(np.linalg.norm(w1))
    v0 = w0 / s0
    r1 = w1 - np.vdot(v0, w1) * v0
    r1 = r1 - np.vdot(v0, r1) * v0
    if np.linalg.norm(r1) < ZERO_NORM:
        v1 = complete_orthonormal_rows(v0[None, :], dim)[1]
    else:
        v1 = r1 / np.linalg.norm(r1)
    v_rows = np.vstack([v0, v1])

    if s1 > s0:
        u = u[:, ::-1]
        v_rows = v_rows[::-1]
        s0, s1 = s1, s0

    return _phase_fixed(u.copy(), (s0, s1), v_rows)


def _phase_fixed(u_a: np.ndarray, s: Tuple[float, float], v_rows: np.ndarray) -> SingularValueDecomposition:
    u_a = np.array(u_a, dtype=np.complex128)
    v_rows = np.array(v_rows, dtype=np.complex128)
    for k in range(2):
        phase = fix_phase(u_a[:, k])
        u_a[:, k] *= phase
        v_rows[k] *= np.conj(phase)
    u_a.setflags(write=False)
    v_rows.setflags(write=False)
    return SingularValueDecomposition(u_a=u_a, s=(float(s[0]), float(s[1])), v_rows=v_rows)


# ===================================================================
# GENERIC UHLMANN FIDELITY
# ===================================================================

def _sqrt_psd(m: np.ndarray) -> np.ndarray:
    """Matrix square root of a PSD matrix via eigh, round-off negatives clamped"""
    w, v = np.linalg.eigh(m)
    w = np.where(w < 0, 0.0, w)
    return (v * np.sqrt(w)) @ v.conj().T


def generic_uhlmann_fidelity(rho, sigma) -> float:
    """Uhlmann fidelity by eigendecomposition - closed formlardan bağımsız oracle"""
    r = _as_density_array(rho)
    s = _as_density_array(sigma)
    sr = _sqrt_psd(r)
    inner = sr @ s @ sr
    inner = 0.5 * (inner + inner.conj().T)
    w = np.linalg.eigvalsh(inner)
    fid = float(np.sum(np.sqrt(np.where(w < 0, 0.0, w))) ** 2)
    return min(1.0, max(0.0, fid))


def _as_density_array(x) -> np.ndarray:
    if hasattr(x, "as_array"):
        return x.as_array()
    arr = np.asarray(x, dtype=np.complex128)
    if arr.shape != (2, 2):
        raise DimensionMismatch(f"expected a 2x2 density matrix, got shape {arr.shape}")
    return arr

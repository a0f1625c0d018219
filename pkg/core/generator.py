"""
FidelityEq - Equality Family Generator
States phi guaranteed to reach F^AB = F^A against a given psi, plus the
seeded Haar sampling used by the scans.
"""

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .constants import EPS, FAMILY_NORM_TOL, LAMBDA_MATCH_TOL
from .exceptions import DimensionMismatch, InvalidParams, NotNormalized
from .states import (
    BipartitePureState,
    SchmidtForm,
    check_unitary,
    embed_coefficients,
)
from .utils import ensure_finite


# ===================================================================
# PARAMETERS
# ===================================================================

@dataclass(frozen=True)
class EqualityFamilyParams:
    """Entangled-psi aile parametreleri"""
    lam: float
    k: float
    p: float
    theta01: float = 0.0
    theta10: float = 0.0

    def __post_init__(self):
        values = (self.lam, self.k, self.p, self.theta01, self.theta10)
        if not all(math.isfinite(float(v)) for v in values):
            raise InvalidParams("family parameters must be finite")
        for name in ("lam", "k", "p", "theta01", "theta10"):
            object.__setattr__(self, name, float(getattr(self, name)))

        if self.lam <= 0.0:
            raise InvalidParams(
                "lambda = 0 means psi is separable; use the separable family "
                "(c11 and tail coefficients) instead"
            )
        if self.lam > 0.5:
            raise InvalidParams(f"lambda must lie in (0, 1/2], got {self.lam}")
        if self.k < 0.0:
            raise InvalidParams(f"k must be non-negative, got {self.k}")
        if self.p < 0.0:
            raise InvalidParams(f"p must be non-negative, got {self.p}")
        if self.p > 1.0:
            raise InvalidParams(
                f"p must not exceed 1 (got {self.p}); the fourth condition fails for p > 1"
            )

    @property
    def alpha(self) -> complex:
        """e^{i (theta01 - theta10) / 2}"""
        return complex(np.exp(0.5j * (self.theta01 - self.theta10)))

    @property
    def ratio(self) -> float:
        """sqrt(1 - lam) / sqrt(lam)"""
        return math.sqrt(1.0 - self.lam) / math.sqrt(self.lam)


@dataclass(frozen=True, eq=False)
class SeparableFamilyParams:
    """phi = c11|11> + sum_j tail[j] |0j> against psi = |11>"""
    c11: complex
    tail: Sequence[complex]

    def __post_init__(self):
        c11 = complex(ensure_finite(self.c11, "c11"))
        tail = ensure_finite(self.tail, "tail").reshape(-1)
        tail.setflags(write=False)
        object.__setattr__(self, "c11", c11)
        object.__setattr__(self, "tail", tail)

        norm_sq = abs(c11) ** 2 + float(np.sum(np.abs(tail) ** 2))
        if abs(norm_sq - 1.0) > FAMILY_NORM_TOL:
            raise NotNormalized(f"|c11|^2 + sum |c0j|^2 must be 1, got {norm_sq:.12g}")


# ===================================================================
# ENTANGLED-PSI FAMILY
# ===================================================================

def _check_frame(params: EqualityFamilyParams, frame: SchmidtForm) -> None:
    if abs(frame.lam - params.lam) > LAMBDA_MATCH_TOL:
        raise InvalidParams(f"frame lambda {frame.lam} does not match params lambda {params.lam}")


def family_coefficients(params: EqualityFamilyParams, dim_b: int) -> np.ndarray:
    """
    Normalized frame coefficients of
    (1, sqrt(r p k) alpha, sqrt(p k / r) alpha*, k) in slots (00, 01, 10, 11),
    r = sqrt(1 - lam) / sqrt(lam), zero elsewhere.
    """
    if dim_b < 2:
        raise DimensionMismatch(f"dimB must be >= 2, got {dim_b}")
    r = params.ratio
    pk = params.p * params.k
    alpha = params.alpha

    c = np.zeros((2, dim_b), dtype=np.complex128)
    c[0, 0] = 1.0
    c[1, 1] = params.k
    if pk > 0.0:
        c[0, 1] = math.sqrt(r * pk) * alpha
        c[1, 0] = math.sqrt(pk / r) * alpha.conjugate()
    return c / np.linalg.norm(c)


def generate_equality_state(params: EqualityFamilyParams, frame: SchmidtForm) -> BipartitePureState:
    """phi in the equality family, mapped out of psi's Schmidt frame"""
    _check_frame(params, frame)
    c = family_coefficients(params, frame.dim_b)
    return BipartitePureState(embed_coefficients(c, frame))


def generate_separable_product_state(params: EqualityFamilyParams, frame: SchmidtForm) -> BipartitePureState:
    """
    p = 1 member written as an explicit product:
    (|0> + sqrt(k / r) alpha*|1>)^A x (|0> + sqrt(r k) alpha|1>)^B
    """
    if params.p != 1.0:
        raise InvalidParams(f"the product form needs p = 1 exactly, got {params.p}")
    _check_frame(params, frame)

    r = params.ratio
    alpha = params.alpha
    a = np.array([1.0, math.sqrt(params.k / r) * alpha.conjugate()], dtype=np.complex128)
    b = np.zeros(frame.dim_b, dtype=np.complex128)
    b[0] = 1.0
    b[1] = math.sqrt(r * params.k) * alpha

    c = np.outer(a / np.linalg.norm(a), b / np.linalg.norm(b))
    return BipartitePureState(embed_coefficients(c, frame))


# ===================================================================
# SEPARABLE-PSI FAMILY
# ===================================================================

def generate_separable_psi_family(params: SeparableFamilyParams, dim_b: int) -> BipartitePureState:
    """phi = c11|11> + sum_j c0j|0j> in computational coordinates"""
    if dim_b < 2:
        raise DimensionMismatch(f"dimB must be >= 2, got {dim_b}")
    if params.tail.size != dim_b:
        raise DimensionMismatch(f"tail needs {dim_b} entries, got {params.tail.size}")

    c = np.zeros((2, dim_b), dtype=np.complex128)
    c[0] = params.tail
    c[1, 1] = params.c11
    return BipartitePureState(c / np.linalg.norm(c))


# ===================================================================
# SEEDED SAMPLING
# ===================================================================

def rng_stream(seed: int, index: int) -> np.random.Generator:
    """Philox stream keyed by (seed, index)"""
    if index < 0:
        raise InvalidParams(f"index must be non-negative, got {index}")
    key = (int(seed) & 0xFFFFFFFFFFFFFFFF) | (int(index) << 64)
    return np.random.Generator(np.random.Philox(key=key))


def haar_amplitudes(dim_b: int, seed: int, index: int = 0) -> np.ndarray:
    """Normalized i.i.d. standard complex Gaussian amplitudes as a 2 x dim_b matrix"""
    if dim_b < 2:
        raise DimensionMismatch(f"dimB must be >= 2, got {dim_b}")
    rng = rng_stream(seed, index)
    z = rng.standard_normal(2 * dim_b) + 1j * rng.standard_normal(2 * dim_b)
    z = z / np.linalg.norm(z)
    return z.reshape(2, dim_b)


def haar_sample(dim_b: int, seed: int, index: int = 0) -> BipartitePureState:
    return BipartitePureState(haar_amplitudes(dim_b, seed, index))


def haar_unitary(dim: int, seed: int, index: int = 0) -> np.ndarray:
    """Haar unitary from the QR factorization of a Ginibre matrix, R's diagonal phases removed"""
    if dim < 1:
        raise DimensionMismatch(f"dimension must be >= 1, got {dim}")
    rng = rng_stream(seed, index)
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / math.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_family_params(seed: int, index: int = 0) -> EqualityFamilyParams:
    """lam ~ U(0.01, 0.5], k ~ U[0, 4], p ~ U[0, 1], angles ~ U[0, 2 pi)"""
    rng = rng_stream(seed, index)
    lam, k, p, t01, t10 = rng.random(5)
    return EqualityFamilyParams(
        lam=0.5 - 0.49 * lam,
        k=4.0 * k,
        p=p,
        theta01=2.0 * math.pi * t01,
        theta10=2.0 * math.pi * t10,
    )


# ===================================================================
# FRAME RE-GAUGING
# ===================================================================

def regauge_frame(frame: SchmidtForm, w) -> SchmidtForm:
    """Eşdeğer Schmidt çerçevesi - lam = 1/2 dışında W diyagonal olmalı"""
    w = check_unitary(w, 2)
    degenerate = abs(frame.lam - 0.5) <= EPS
    if not degenerate and max(abs(w[0, 1]), abs(w[1, 0])) > EPS:
        raise InvalidParams("only diagonal phase changes keep a non-degenerate Schmidt frame")

    basis_a = frame.basis_a @ w
    basis_b = w.conj().T @ frame.basis_b
    basis_a.setflags(write=False)
    basis_b.setflags(write=False)
    return SchmidtForm(lam=frame.lam, basis_a=basis_a, basis_b=basis_b)

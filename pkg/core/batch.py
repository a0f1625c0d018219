"""
FidelityEq - Batch Evaluation
Haar çiftleri blok halinde, elementwise numpy ile.

Complex values are (re, im) arrays and sums run column by column, so a
pair gives the same numbers in any block.
"""

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from .constants import (
    BATCH_GAP_SCREEN,
    BATCH_LAMBDA_FLOOR,
    GRAM_DIRECT_MAX_DIM,
    NUMERIC_TOL_FACTOR,
)
from .exceptions import DimensionMismatch
from .generator import haar_amplitudes
from .utils import check_tolerance

Pair = Tuple[np.ndarray, np.ndarray]


# ===================================================================
# ELEMENTWISE COMPLEX HELPERS
# ===================================================================

def _add(a: Pair, b: Pair) -> Pair:
    return a[0] + b[0], a[1] + b[1]


def _sub(a: Pair, b: Pair) -> Pair:
    return a[0] - b[0], a[1] - b[1]


def _mul(a: Pair, b: Pair) -> Pair:
    return a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0]


def _mul_conj(a: Pair, b: Pair) -> Pair:
    """a * conj(b)"""
    return a[0] * b[0] + a[1] * b[1], a[1] * b[0] - a[0] * b[1]


def _conj(a: Pair) -> Pair:
    return a[0], -a[1]


def _scale(a: Pair, s: np.ndarray) -> Pair:
    return a[0] * s, a[1] * s


def _abs2(a: Pair) -> np.ndarray:
    return a[0] * a[0] + a[1] * a[1]


def _abs(a: Pair) -> np.ndarray:
    return np.sqrt(_abs2(a))


def _where(mask: np.ndarray, a: Pair, b: Pair) -> Pair:
    return np.where(mask, a[0], b[0]), np.where(mask, a[1], b[1])


def _columns(m: np.ndarray, row: int) -> List[Pair]:
    return [(m[:, row, j].real.copy(), m[:, row, j].imag.copy()) for j in range(m.shape[2])]


def _rotate(u: Tuple[Pair, Pair], row0: List[Pair], row1: List[Pair]) -> List[Pair]:
    """Entries of conj(u0) row0 + conj(u1) row1, column by column"""
    return [_add(_mul_conj(r0, u[0]), _mul_conj(r1, u[1])) for r0, r1 in zip(row0, row1)]


# ===================================================================
# REDUCED-STATE QUANTITIES
# ===================================================================

def _gram(row0: List[Pair], row1: List[Pair]) -> Tuple[np.ndarray, np.ndarray, Pair]:
    """(p00, p11, p01) of the reduced qubit, p01 = sum_j c0j conj(c1j)"""
    zero = np.zeros_like(row0[0][0])
    p00, p11, p01 = zero, zero, (zero, zero)
    for r0, r1 in zip(row0, row1):
        p00 = p00 + _abs2(r0)
        p11 = p11 + _abs2(r1)
        p01 = _add(p01, _mul_conj(r0, r1))
    return p00, p11, p01


def _det(row0: List[Pair], row1: List[Pair], p00: np.ndarray, p11: np.ndarray, p01: Pair) -> np.ndarray:
    """sum_{j>l} |c0j c1l - c0l c1j|^2 for small d, the Gram form above"""
    d = len(row0)
    if d > GRAM_DIRECT_MAX_DIM:
        return np.maximum(0.0, p00 * p11 - _abs2(p01))
    acc = np.zeros_like(p00)
    for j in range(d):
        for l in range(j):
            minor = _sub(_mul(row0[j], row1[l]), _mul(row0[l], row1[j]))
            acc = acc + _abs2(minor)
    return acc


# ===================================================================
# BLOCKS
# ===================================================================

@dataclass(frozen=True, eq=False)
class PairBlock:
    """psi (stream 0) and phi (stream 1) of consecutive pair seeds, shape (n, 2, d)"""
    dim_b: int
    seeds: List[int]
    psi: np.ndarray
    phi: np.ndarray

    def __len__(self) -> int:
        return len(self.seeds)


@dataclass(frozen=True, eq=False)
class BlockEvaluation:
    lam: np.ndarray
    f_global: np.ndarray
    f_local: np.ndarray
    verdict_numeric: np.ndarray
    verdict_conditions: np.ndarray
    needs_exact: np.ndarray

    @property
    def gap(self) -> np.ndarray:
        return self.f_local - self.f_global


def sample_pair_block(dim_b: int, seed: int, start: int, stop: int) -> PairBlock:
    """Pairs with seeds seed + start .. seed + stop - 1, same streams as haar_sample"""
    if int(dim_b) != dim_b or dim_b < 2:
        raise DimensionMismatch(f"dimB must be an integer >= 2, got {dim_b}")
    dim_b = int(dim_b)
    seeds = [int(seed) + i for i in range(start, stop)]
    psi = np.zeros((len(seeds), 2, dim_b), dtype=np.complex128)
    phi = np.zeros((len(seeds), 2, dim_b), dtype=np.complex128)
    for n, s in enumerate(seeds):
        psi[n] = haar_amplitudes(dim_b, s, 0)
        phi[n] = haar_amplitudes(dim_b, s, 1)
    return PairBlock(dim_b=dim_b, seeds=seeds, psi=psi, phi=phi)


def evaluate_block(block: PairBlock, tol: float) -> BlockEvaluation:
    """
    Fidelities and both verdicts for every pair of the block.

    F^A = Tr(rho sigma) + 2 sqrt(det rho det sigma), the frame-free form of
    the closed form. The conditions use psi's Schmidt frame built from the
    2x2 Gram eigenvector of the smaller eigenvalue. needs_exact marks pairs
    near the numeric threshold or with an ill-conditioned frame.
    """
    tol = check_tolerance(tol)
    a, b = _columns(block.psi, 0), _columns(block.psi, 1)
    x, y = _columns(block.phi, 0), _columns(block.phi, 1)
    d = block.dim_b
    zero = np.zeros(len(block))

    # Global fidelity
    overlap = (zero, zero)
    for j in range(d):
        overlap = _add(overlap, _mul_conj(x[j], a[j]))
        overlap = _add(overlap, _mul_conj(y[j], b[j]))
    f_global = np.clip(_abs2(overlap), 0.0, 1.0)

    # Local fidelity
    r00, r11, r01 = _gram(a, b)
    s00, s11, s01 = _gram(x, y)
    det_r = _det(a, b, r00, r11, r01)
    det_s = _det(x, y, s00, s11, s01)
    trace = r00 * s00 + r11 * s11 + 2.0 * _mul_conj(r01, s01)[0]
    f_local = np.clip(trace + 2.0 * np.sqrt(det_r * det_s), 0.0, 1.0)
    gap = f_local - f_global

    half = 0.5 * (r00 - r11)
    l_max = 0.5 * (r00 + r11) + np.sqrt(half * half + _abs2(r01))
    lam = np.clip(det_r / l_max, 0.0, 0.5)

    with np.errstate(divide="ignore", invalid="ignore"):
        # Eigenvector of rho for lam: either row of (rho - lam I) u = 0
        cand1 = (r01, (lam - r00, zero))
        cand2 = ((lam - r11, zero), _conj(r01))
        use1 = _abs2(cand1[0]) + _abs2(cand1[1]) >= _abs2(cand2[0]) + _abs2(cand2[1])
        u0a, u0b = _where(use1, cand1[0], cand2[0]), _where(use1, cand1[1], cand2[1])
        inv = 1.0 / np.sqrt(_abs2(u0a) + _abs2(u0b))
        u0 = (_scale(u0a, inv), _scale(u0b, inv))
        u1 = ((-u0[1][0], u0[1][1]), _conj(u0[0]))

        # B rows of the frame: u_k^dagger psi, normalized
        v0 = _rotate(u0, a, b)
        v1 = _rotate(u1, a, b)
        for v in (v0, v1):
            norm = zero
            for entry in v:
                norm = norm + _abs2(entry)
            inv_norm = 1.0 / np.sqrt(norm)
            v[:] = [_scale(entry, inv_norm) for entry in v]

        # phi in the frame: rows p_i = u_i^dagger phi, then c_ik = <v_k|p_i>
        rows = (_rotate(u0, x, y), _rotate(u1, x, y))
        c = [[(zero, zero), (zero, zero)], [(zero, zero), (zero, zero)]]
        tails = [zero, zero]
        for i, p in enumerate(rows):
            total = zero
            for j in range(d):
                c[i][0] = _add(c[i][0], _mul_conj(p[j], v0[j]))
                c[i][1] = _add(c[i][1], _mul_conj(p[j], v1[j]))
                total = total + _abs2(p[j])
            if d > 2:
                tails[i] = np.maximum(0.0, total - _abs2(c[i][0]) - _abs2(c[i][1]))

        c00, c01 = c[0]
        c10, c11 = c[1]
        w = 2.0 * np.sqrt(lam * (1.0 - lam))
        z = _mul_conj(c00, c11)
        diag = _mul(c00, c11)
        off = _mul(c01, c10)
        r1 = np.abs(np.sqrt(lam) * _abs(c01) - np.sqrt(1.0 - lam) * _abs(c10))
        r4 = np.abs(_abs(diag) - _abs(off) - _abs(_sub(diag, off)))

        verdict_conditions = (
            (r1 * r1 <= tol)
            & (w * np.abs(z[1]) <= tol)
            & (w * z[0] >= -tol)
            & (lam * tails[0] + (1.0 - lam) * tails[1] <= tol)
            & (w * r4 <= tol)
        )

    screen = max(BATCH_GAP_SCREEN, 100.0 * NUMERIC_TOL_FACTOR * tol)
    needs_exact = (
        (np.abs(gap) <= screen)
        | (lam < BATCH_LAMBDA_FLOOR)
        | (lam > 0.5 - BATCH_LAMBDA_FLOOR)
        | ~np.isfinite(r1 + r4 + z[0] + z[1] + tails[0] + tails[1])
    )
    return BlockEvaluation(
        lam=lam,
        f_global=f_global,
        f_local=f_local,
        verdict_numeric=np.abs(gap) <= NUMERIC_TOL_FACTOR * tol,
        verdict_conditions=verdict_conditions,
        needs_exact=needs_exact,
    )

"""
FidelityEq - Equality Conditions
Four-condition test for F^AB = F^A, the separable special case and the
complex-number extractors behind the k and p diagnostics.
"""

import math
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

import numpy as np

from .constants import DEFAULT_TOL, NUMERIC_TOL_FACTOR
from .exceptions import logger
from .fidelity import FidelityPair, fidelity_pair
from .numerics import as_matrix_2xd
from .states import BipartitePureState, express_in_frame, schmidt_decompose
from .utils import check_lambda, check_tolerance, ensure_finite


# ===================================================================
# REPORT
# ===================================================================

@dataclass(frozen=True)
class ConditionReport:
    """
    Residuals of the four conditions:
      r1 = | sqrt(lam)|c01| - sqrt(1 - lam)|c10| |
      r2 = | |c00 c11| - Re(c00 c11*) |
      r3 = sum_{j>=2} |c0j|^2 + |c1j|^2
      r4 = | |c00 c11| - |c01 c10| - |c00 c11 - c01 c10| |
    """
    residuals: Tuple[float, float, float, float]
    flags: Tuple[bool, bool, bool, bool]
    k: Optional[float] = None
    p: Optional[float] = None

    @property
    def verdict(self) -> bool:
        return all(self.flags)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "residuals": [float(r) for r in self.residuals],
            "flags": [bool(f) for f in self.flags],
            "k": self.k,
            "p": self.p,
            "verdict": self.verdict,
        }


def check_equality_conditions(lam: float, c, tol: float = DEFAULT_TOL) -> ConditionReport:
    """
    Evaluate the four conditions on frame coefficients c (psi's Schmidt frame).

    Each flag compares its condition in the weight it carries in F^A - F^AB,
    w = 2 sqrt(lam (1 - lam)):
      flag1: r1^2 <= tol
      flag2: w |Im z| <= tol and w Re z >= -tol, z = c00 c11*
      flag3: lam sum_{j>=2}|c0j|^2 + (1 - lam) sum_{j>=2}|c1j|^2 <= tol
      flag4: w r4 <= tol
    At lam = 0 this is the separable-psi test c1j = 0 for j != 1.
    """
    lam = check_lambda(lam)
    tol = check_tolerance(tol)
    c = as_matrix_2xd(c)

    c00, c01 = c[0, 0], c[0, 1]
    c10, c11 = c[1, 0], c[1, 1]
    w = 2.0 * math.sqrt(lam * (1.0 - lam))

    z = c00 * np.conj(c11)
    diag = c00 * c11
    off = c01 * c10

    r1 = abs(math.sqrt(lam) * abs(c01) - math.sqrt(1.0 - lam) * abs(c10))
    r2 = abs(abs(z) - z.real)
    tail0 = float(np.sum(np.abs(c[0, 2:]) ** 2))
    tail1 = float(np.sum(np.abs(c[1, 2:]) ** 2))
    r3 = tail0 + tail1
    r4 = abs(abs(diag) - abs(off) - abs(diag - off))

    flags = (
        r1 * r1 <= tol,
        w * abs(z.imag) <= tol and w * z.real >= -tol,
        lam * tail0 + (1.0 - lam) * tail1 <= tol,
        w * r4 <= tol,
    )

    k = None
    if abs(c00) > tol:
        sign = 1.0 if (c11 * np.conj(c00)).real >= 0 else -1.0
        k = sign * abs(c11) / abs(c00)

    p = None
    if abs(diag) > tol:
        p = abs(off) / abs(diag)

    return ConditionReport(
        residuals=(float(r1), float(r2), float(r3), float(r4)),
        flags=tuple(bool(f) for f in flags),
        k=k,
        p=p,
    )


def check_separable_case(c, tol: float = DEFAULT_TOL) -> bool:
    """psi = |11>: equality iff sum_{j != 1} |c1j|^2 <= tol"""
    tol = check_tolerance(tol)
    c = as_matrix_2xd(c)
    row = np.abs(c[1]) ** 2
    return float(np.sum(row) - row[1]) <= tol


# ===================================================================
# NUMERIC VERDICT
# ===================================================================

def numeric_equality_verdict(psi: BipartitePureState, phi: BipartitePureState, tol: float = DEFAULT_TOL) -> bool:
    """|F^A - F^AB| <= tol"""
    tol = check_tolerance(tol)
    return abs(fidelity_pair(psi, phi).gap) <= tol


# ===================================================================
# COMPLEX-NUMBER EXTRACTORS
# ===================================================================

def lemma1_extract_k(alpha: complex, beta: complex, tol: float = DEFAULT_TOL) -> Optional[float]:
    """
    Re(alpha beta*) = |alpha beta|  =>  beta = k alpha with k real.
    Returns None when the hypothesis fails, alpha vanishes or the
    recovered multiple does not reproduce beta.
    """
    tol = check_tolerance(tol)
    alpha, beta = (complex(x) for x in ensure_finite([alpha, beta], "alpha, beta"))

    mag = abs(alpha) * abs(beta)
    if abs((alpha * beta.conjugate()).real - mag) > tol * mag:
        return None
    if abs(alpha) <= tol:
        return None

    k = (beta * alpha.conjugate()).real / (alpha * alpha.conjugate()).real
    if abs(beta - k * alpha) > 10.0 * tol * max(1.0, abs(beta)):
        return None
    return k


def lemma1_extract_p(alpha: complex, beta: complex, tol: float = DEFAULT_TOL) -> Optional[float]:
    """|alpha| - |beta| = |alpha - beta|  =>  beta = p alpha with p >= 0"""
    tol = check_tolerance(tol)
    alpha, beta = (complex(x) for x in ensure_finite([alpha, beta], "alpha, beta"))

    if abs(abs(alpha) - abs(beta) - abs(alpha - beta)) > tol:
        return None
    if abs(alpha) <= tol:
        return None

    p = abs(beta) / abs(alpha)
    if abs(beta - p * alpha) > 10.0 * tol * max(1.0, abs(beta)):
        return None
    return p


# ===================================================================
# PAIR ANALYSIS
# ===================================================================

@dataclass(frozen=True, eq=False)
class PairAnalysis:
    """Everything check and scan report for one (psi, phi) pair"""
    lam: float
    fidelities: FidelityPair
    coefficients: np.ndarray = field(repr=False)
    verdict_numeric: bool
    report: ConditionReport

    @property
    def consistent(self) -> bool:
        return self.verdict_numeric == self.report.verdict

    def to_dict(self) -> Dict[str, Any]:
        return {
            "fGlobal": self.fidelities.f_global,
            "fLocal": self.fidelities.f_local,
            "gap": self.fidelities.gap,
            "lambda": self.lam,
            "verdictNumeric": self.verdict_numeric,
            "conditions": self.report.to_dict(),
        }


def analyze_pair(psi: BipartitePureState, phi: BipartitePureState, tol: float = DEFAULT_TOL) -> PairAnalysis:
    """
    Fidelities, frame coefficients and both verdicts from one Schmidt frame.
    The numeric verdict runs at NUMERIC_TOL_FACTOR * tol.
    """
    tol = check_tolerance(tol)
    frame = schmidt_decompose(psi)
    c = express_in_frame(phi, frame)
    fids = fidelity_pair(psi, phi, frame)
    report = check_equality_conditions(frame.lam, c, tol)
    numeric = abs(fids.gap) <= NUMERIC_TOL_FACTOR * tol

    analysis = PairAnalysis(
        lam=frame.lam,
        fidelities=fids,
        coefficients=c,
        verdict_numeric=numeric,
        report=report,
    )
    logger.debug(
        f"[analyze] lambda={frame.lam:.6g} gap={fids.gap:.3e} "
        f"numeric={numeric} conditions={report.verdict}"
    )
    return analysis

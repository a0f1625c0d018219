"""
FidelityEq - Utilities
Shared helpers for number formatting and work splitting.
"""

import math
from typing import List

import numpy as np

from .constants import EPS
from .exceptions import InvalidAmplitudes, InvalidLambda, InvalidTolerance, NumericalError


def format_float(x: float) -> str:
    """17 significant digits, round-trip exact for doubles"""
    return format(float(x), ".17g")


def format_bool(flag: bool) -> str:
    return "true" if flag else "false"


def split_into_batches(total: int, batch_size: int) -> List[range]:
    """Consecutive ranges of at most batch_size over 0..total-1"""
    if total <= 0:
        return []
    batch_size = max(1, int(batch_size))
    return [range(start, min(start + batch_size, total)) for start in range(0, total, batch_size)]


def ensure_finite(values, what: str = "values") -> np.ndarray:
    """Convert to a complex array and reject NaN/Inf"""
    arr = np.asarray(values, dtype=np.complex128)
    if not np.all(np.isfinite(arr)):
        raise InvalidAmplitudes(f"{what} contain NaN or infinite entries")
    return arr


def check_tolerance(tol: float) -> float:
    if not isinstance(tol, (int, float)) or not math.isfinite(tol) or tol <= 0:
        raise InvalidTolerance(f"tolerance must be positive and finite, got {tol!r}")
    return float(tol)


def check_lambda(lam: float) -> float:
    """Accept lam in [0, 1/2] up to EPS and clamp it into range"""
    if not isinstance(lam, (int, float)) or not math.isfinite(lam) or lam < -EPS or lam > 0.5 + EPS:
        raise InvalidLambda(f"lambda must lie in [0, 1/2], got {lam!r}")
    return min(0.5, max(0.0, float(lam)))


def clamp_nonnegative(x: float, tol: float, what: str = "value") -> float:
    """Round-off negatifleri sıfırla; -tol altı gerçek hata"""
    if x < -tol:
        raise NumericalError(f"{what} is negative ({x:.3e}) beyond round-off")
    return max(0.0, float(x))

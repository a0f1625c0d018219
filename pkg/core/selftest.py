"""
FidelityEq - Self-Test Suites
Fixed-seed checks of the identities the closed forms rest on. Each suite
reports the largest error it saw against its threshold.
"""

import functools
import time
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from .conditions import analyze_pair
from .constants import SELFTEST_SEED
from .exceptions import logger
from .fidelity import (
    gram_identity_sides,
    local_fidelity_closed_form,
    local_operator,
    spectral_local_fidelity,
)
from .generator import (
    generate_equality_state,
    haar_sample,
    haar_unitary,
    random_family_params,
    rng_stream,
)
from .numerics import (
    HermitianQubitOperator,
    generic_uhlmann_fidelity,
    hermitian2_eigenvalues,
    trace_one_eigenvalues,
)
from .states import (
    BipartitePureState,
    SchmidtForm,
    express_in_frame,
    reduced_from_coefficients,
    reduced_qubit,
    schmidt_decompose,
)
from .utils import check_tolerance

ORACLE_DIMS = (2, 3, 5, 8)
GRAM_MAX_DIM = 16

# name -> (default samples, default threshold)
SUITES: Dict[str, Tuple[int, float]] = {
    "gram_identity": (10000, 1e-12),
    "closed_form_oracle": (1000, 1e-10),
    "eigen_trace_det": (10000, 1e-12),
    "equality_family": (1000, 1e-10),
}


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    samples: int
    max_error: float
    threshold: float

    @property
    def passed(self) -> bool:
        return self.max_error <= self.threshold

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "samples": self.samples,
            "maxError": self.max_error,
            "threshold": self.threshold,
        }


# ===================================================================
# SUITES
# ===================================================================

def _gram_identity(samples: int, seed: int) -> float:
    """lhs vs rhs, relative to max(1, rhs), d cycling through 2..16"""
    worst = 0.0
    rng = rng_stream(seed, 0)
    for i in range(samples):
        d = 2 + i % (GRAM_MAX_DIM - 1)
        rows = rng.standard_normal((2, d)) + 1j * rng.standard_normal((2, d))
        rows /= np.linalg.norm(rows)
        lhs, rhs = gram_identity_sides(rows[0], rows[1])
        worst = max(worst, abs(lhs - rhs) / max(1.0, rhs))
    return worst


def _closed_form_oracle(samples: int, seed: int, inject_fault: bool = False) -> float:
    """
    Closed form and spectral chain against the eigendecomposition oracle,
    `samples` pairs per dimension. inject_fault flips the closed form's cross term.
    """
    worst = 0.0
    for d in ORACLE_DIMS:
        for i in range(samples):
            psi = haar_sample(d, seed + d, index=2 * i)
            phi = haar_sample(d, seed + d, index=2 * i + 1)
            frame = schmidt_decompose(psi)
            c = express_in_frame(phi, frame)

            oracle = generic_uhlmann_fidelity(reduced_qubit(psi), reduced_qubit(phi))
            closed = local_fidelity_closed_form(frame.lam, c, flip_cross_sign=inject_fault)
            spectral = spectral_local_fidelity(local_operator(frame.lam, reduced_from_coefficients(c)))
            worst = max(worst, abs(closed - oracle), abs(spectral - oracle))
    return worst


def _eigen_trace_det(samples: int, seed: int) -> float:
    """Sum/product of the eigenvalues vs trace/determinant, plus the trace-one formula"""
    worst = 0.0
    rng = rng_stream(seed, 0)
    for _ in range(samples):
        a00, a11, re, im = rng.standard_normal(4)
        h = HermitianQubitOperator(a00, a11, complex(re, im))
        lp, lm = hermitian2_eigenvalues(h)
        worst = max(worst, abs(lp + lm - h.trace), abs(lp * lm - h.det))

        a = rng.random()
        b = 0.5 * complex(*rng.standard_normal(2))
        t1 = trace_one_eigenvalues(a, b)
        ref = hermitian2_eigenvalues(HermitianQubitOperator(a, 1.0 - a, b))
        worst = max(worst, abs(t1[0] - ref[0]), abs(t1[1] - ref[1]))
    return worst


def _equality_family(samples: int, seed: int) -> float:
    """
    Family members built in a random Schmidt frame. Error is |gap|, or 1 when
    the condition verdict fails.
    """
    worst = 0.0
    for i in range(samples):
        params = random_family_params(seed, i)
        d = ORACLE_DIMS[i % len(ORACLE_DIMS)]
        frame = SchmidtForm(
            lam=params.lam,
            basis_a=haar_unitary(2, seed + 1, index=i),
            basis_b=haar_unitary(d, seed + 2, index=i)[:2],
        )
        psi = BipartitePureState(frame.reconstruct())
        phi = generate_equality_state(params, frame)

        analysis = analyze_pair(psi, phi)
        worst = max(worst, abs(analysis.fidelities.gap), 0.0 if analysis.report.verdict else 1.0)
    return worst


def _runners(inject_fault: bool) -> Dict[str, Callable[[int, int], float]]:
    """Suite runners; only the oracle suite has a fault to inject"""
    return {
        "gram_identity": _gram_identity,
        "closed_form_oracle": functools.partial(_closed_form_oracle, inject_fault=inject_fault),
        "eigen_trace_det": _eigen_trace_det,
        "equality_family": _equality_family,
    }


# ===================================================================
# ENTRY POINT
# ===================================================================

def run_selftest(
    tol: Optional[float] = None,
    samples: Optional[int] = None,
    inject_fault: bool = False,
    seed: int = SELFTEST_SEED,
) -> List[SuiteResult]:
    """Tüm suite'leri çalıştır (tol / samples verilirse varsayılanları ezer)"""
    if tol is not None:
        tol = check_tolerance(tol)
    runners = _runners(inject_fault)
    results = []
    for offset, (name, (default_samples, default_threshold)) in enumerate(SUITES.items()):
        n = default_samples if samples is None else max(1, int(samples))
        threshold = default_threshold if tol is None else tol
        started = time.perf_counter()
        worst = runners[name](n, seed + 1000 * offset)
        result = SuiteResult(suite=name, samples=n, max_error=float(worst), threshold=threshold)
        elapsed = time.perf_counter() - started
        log = logger.info if result.passed else logger.warning
        log(f"[selftest] {name}: max error {worst:.3e} (threshold {threshold:.1e}) in {elapsed:.2f}s")
        results.append(result)
    return results

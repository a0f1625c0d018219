"""
FidelityEq - Constants
Central definitions for tolerances, defaults and named states
"""

import math

# ===================================================================
# TOLERANCES
# ===================================================================

# Internal round-off gate (PSD clamps, unitarity, degeneracy)
EPS = 1e-12

# Frobenius norm below which a matrix/state counts as zero
ZERO_NORM = 1e-14

# Accepted norm deviation when a state is constructed from user input
NORM_TOL = 1e-8

# Norm deviation a BipartitePureState tolerates once constructed
STATE_NORM_TOL = 1e-10

# Candidate residual below which basis completion skips a vector
COMPLETION_TOL = 1e-8

# Default tolerance of the equality conditions (cli --tol)
DEFAULT_TOL = 1e-9

# The numeric verdict runs at this multiple of the condition tolerance
NUMERIC_TOL_FACTOR = 10.0

# Allowed mismatch between a frame lambda and family parameters
LAMBDA_MATCH_TOL = 1e-10

# Normalization tolerance of separable-family parameters
FAMILY_NORM_TOL = 1e-10

# Allowed negative gap F^A - F^AB before it counts as a violation
GAP_FLOOR = -1e-10

# Up to this dimension the antisymmetrized sum is evaluated directly,
# above it the Gram form is used
GRAM_DIRECT_MAX_DIM = 16

# Batch scans hand a pair to the per-pair path when |gap| is below this
# (or 100x the numeric threshold, whichever is larger) ...
BATCH_GAP_SCREEN = 1e-6

# ... or when lambda lies within this distance of 0 or 1/2
BATCH_LAMBDA_FLOOR = 1e-6


# ===================================================================
# CLI / OUTPUT
# ===================================================================

DEFAULT_SEED = 0
DEFAULT_DIM_B = 2

# Base seed of the self-test suites
SELFTEST_SEED = 20240607

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_INCONSISTENT = 2

CSV_COLUMNS = [
    "seed",
    "dimB",
    "lambda",
    "fGlobal",
    "fLocal",
    "gap",
    "verdictNumeric",
    "verdictConditions",
]


# ===================================================================
# NAMED STATES
# ===================================================================

_R = 1 / math.sqrt(2)

# Two-qubit amplitudes in row-major (i*2 + j) order; padded with zeros for dimB > 2
NAMED_STATES = {
    "phi_plus": {
        "description": "EPR pair (|00> + |11>)/sqrt(2)",
        "amplitudes": [_R, 0.0, 0.0, _R],
    },
    "phi_minus": {
        "description": "EPR pair (|00> - |11>)/sqrt(2)",
        "amplitudes": [_R, 0.0, 0.0, -_R],
    },
    "psi_plus": {
        "description": "Bell state (|01> + |10>)/sqrt(2)",
        "amplitudes": [0.0, _R, _R, 0.0],
    },
    "psi_minus": {
        "description": "Singlet (|01> - |10>)/sqrt(2)",
        "amplitudes": [0.0, _R, -_R, 0.0],
    },
    "zero_zero": {
        "description": "Product state |00>",
        "amplitudes": [1.0, 0.0, 0.0, 0.0],
    },
    "one_one": {
        "description": "Product state |11>",
        "amplitudes": [0.0, 0.0, 0.0, 1.0],
    },
}


def get_named_amplitudes(name: str, dim_b: int = 2) -> list:
    """Row-major amplitudes of a named state embedded in a 2 x dim_b system"""
    if name not in NAMED_STATES:
        raise KeyError(f"Unknown state '{name}'. Choices: {', '.join(NAMED_STATES_KEYS)}")
    base = NAMED_STATES[name]["amplitudes"]
    padded = [0.0] * (2 * dim_b)
    for i in range(2):
        for j in range(2):
            padded[i * dim_b + j] = base[i * 2 + j]
    return padded


NAMED_STATES_KEYS = list(NAMED_STATES.keys())

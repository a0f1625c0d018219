"""
FidelityEq - Core Module
"""

from .exceptions import (
    FidelityError,
    DimensionMismatch,
    NotNormalized,
    ZeroState,
    ZeroMatrix,
    NotUnitary,
    InvalidLambda,
    InvalidTolerance,
    InvalidParams,
    InvalidAmplitudes,
    NumericalError,
    StorageError,
    error_boundary,
    strict_operation,
    logger,
)

from .config import AppConfig, get_config
from .constants import (
    DEFAULT_TOL, DEFAULT_SEED, DEFAULT_DIM_B, NUMERIC_TOL_FACTOR,
    EXIT_OK, EXIT_INPUT_ERROR, EXIT_INCONSISTENT,
    CSV_COLUMNS, NAMED_STATES, NAMED_STATES_KEYS, get_named_amplitudes,
)
from .numerics import (
    HermitianQubitOperator,
    SingularValueDecomposition,
    hermitian2_eigenvalues,
    hermitian2_eigh,
    trace_one_eigenvalues,
    svd_2xd,
    generic_uhlmann_fidelity,
)
from .states import (
    BipartitePureState,
    SchmidtForm,
    DensityMatrixQubit,
    new_state,
    from_coefficients,
    canonical_frame,
    schmidt_decompose,
    express_in_frame,
    embed_coefficients,
    reduced_qubit,
    apply_local_unitary_A,
    apply_local_unitary_B,
    is_product_state,
)
from .fidelity import (
    FidelityPair,
    global_fidelity,
    global_fidelity_schmidt,
    local_fidelity,
    local_fidelity_closed_form,
    local_operator,
    normalized_operator,
    spectral_local_fidelity,
    gram_identity_sides,
    fidelity_pair,
)
from .conditions import (
    ConditionReport,
    PairAnalysis,
    check_equality_conditions,
    check_separable_case,
    numeric_equality_verdict,
    lemma1_extract_k,
    lemma1_extract_p,
    analyze_pair,
)
from .generator import (
    EqualityFamilyParams,
    SeparableFamilyParams,
    generate_equality_state,
    generate_separable_product_state,
    generate_separable_psi_family,
    haar_sample,
    haar_unitary,
    regauge_frame,
)
from .scan import ScanRecord, ScanSummary, ScanJob, JobStatus, run_scan
from .selftest import SuiteResult, run_selftest
from . import storage

__all__ = [
    # Exceptions
    "FidelityError",
    "DimensionMismatch",
    "NotNormalized",
    "ZeroState",
    "ZeroMatrix",
    "NotUnitary",
    "InvalidLambda",
    "InvalidTolerance",
    "InvalidParams",
    "InvalidAmplitudes",
    "NumericalError",
    "StorageError",
    # Decorators
    "error_boundary",
    "strict_operation",
    # Config
    "AppConfig",
    "get_config",
    # Constants
    "DEFAULT_TOL",
    "DEFAULT_SEED",
    "DEFAULT_DIM_B",
    "NUMERIC_TOL_FACTOR",
    "EXIT_OK",
    "EXIT_INPUT_ERROR",
    "EXIT_INCONSISTENT",
    "CSV_COLUMNS",
    "NAMED_STATES",
    "NAMED_STATES_KEYS",
    "get_named_amplitudes",
    # Numerics
    "HermitianQubitOperator",
    "SingularValueDecomposition",
    "hermitian2_eigenvalues",
    "hermitian2_eigh",
    "trace_one_eigenvalues",
    "svd_2xd",
    "generic_uhlmann_fidelity",
    # States
    "BipartitePureState",
    "SchmidtForm",
    "DensityMatrixQubit",
    "new_state",
    "from_coefficients",
    "canonical_frame",
    "schmidt_decompose",
    "express_in_frame",
    "embed_coefficients",
    "reduced_qubit",
    "apply_local_unitary_A",
    "apply_local_unitary_B",
    "is_product_state",
    # Fidelity
    "FidelityPair",
    "global_fidelity",
    "global_fidelity_schmidt",
    "local_fidelity",
    "local_fidelity_closed_form",
    "local_operator",
    "normalized_operator",
    "spectral_local_fidelity",
    "gram_identity_sides",
    "fidelity_pair",
    # Conditions
    "ConditionReport",
    "PairAnalysis",
    "check_equality_conditions",
    "check_separable_case",
    "numeric_equality_verdict",
    "lemma1_extract_k",
    "lemma1_extract_p",
    "analyze_pair",
    # Generator
    "EqualityFamilyParams",
    "SeparableFamilyParams",
    "generate_equality_state",
    "generate_separable_product_state",
    "generate_separable_psi_family",
    "haar_sample",
    "haar_unitary",
    "regauge_frame",
    # Scan
    "ScanRecord",
    "ScanSummary",
    "ScanJob",
    "JobStatus",
    "run_scan",
    # Self-test
    "SuiteResult",
    "run_selftest",
    # Storage
    "storage",
    # Logging
    "logger",
]

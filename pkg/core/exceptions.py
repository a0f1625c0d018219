"""
FidelityEq - Custom Exceptions & Error Handling
Hata sınıfları, logging kurulumu ve error boundary
"""

import functools
import logging
import os
from datetime import datetime
from typing import Any, Callable, TypeVar

# Logging setup
log_handlers = []
log_type = os.getenv("LOG_TYPE", "console").lower()

if "console" in log_type or "both" in log_type:
    log_handlers.append(logging.StreamHandler())

if "file" in log_type or "both" in log_type:
    base_dir = os.path.dirname(os.path.dirname(__file__))
    logs_dir = os.path.join(base_dir, "logs")
    os.makedirs(logs_dir, exist_ok=True)

    # Daily log file
    today = datetime.now().strftime("%Y-%m-%d")
    log_file = os.path.join(logs_dir, f"fidelityeq_{today}.log")

    log_handlers.append(logging.FileHandler(log_file, encoding="utf-8"))

# Default fallback
if not log_handlers:
    log_handlers.append(logging.StreamHandler())

logging.basicConfig(
    level=os.getenv("LOG_LEVEL", "INFO").upper(),
    format="%(asctime)s [%(levelname)s] %(message)s",
    datefmt="%Y-%m-%d %H:%M:%S",
    handlers=log_handlers,
)
logger = logging.getLogger("fidelityeq")

T = TypeVar("T")


# ===================================================================
# CUSTOM EXCEPTIONS
# ===================================================================

class FidelityError(Exception):
    """Base exception for FidelityEq errors"""
    pass


class DimensionMismatch(FidelityError):
    """Shapes or subsystem dimensions do not fit together"""
    pass


class NotNormalized(FidelityError):
    """State norm deviates from one beyond the accepted tolerance"""
    pass


class ZeroState(FidelityError):
    """All amplitudes vanish"""
    pass


class ZeroMatrix(FidelityError):
    """Matrix has (numerically) zero Frobenius norm"""
    pass


class NotUnitary(FidelityError):
    """Operator fails the unitarity check"""
    pass


class InvalidLambda(FidelityError):
    """Schmidt coefficient outside [0, 1/2]"""
    pass


class InvalidTolerance(FidelityError):
    """Tolerance must be a positive finite number"""
    pass


class InvalidParams(FidelityError):
    """Equality-family parameters outside their admissible range"""
    pass


class InvalidAmplitudes(FidelityError):
    """NaN or infinite values passed to a public API"""
    pass


class NumericalError(FidelityError):
    """A quantity that must be non-negative came out clearly negative"""
    pass


class StorageError(FidelityError):
    """File read/write or parse failure"""
    pass


# ===================================================================
# ERROR BOUNDARY DECORATOR
# ===================================================================

def error_boundary(
    default_return: Any = None,
    reraise: bool = False,
    log_error: bool = True
) -> Callable:
    """
    Global error boundary decorator.
    Catches errors, logs them and returns a fallback value.

    Args:
        default_return: Value returned when an error is caught
        reraise: Re-raise instead of returning (unexpected errors are wrapped in FidelityError)
        log_error: Log the caught error
    """
    def decorator(func: Callable[..., T]) -> Callable[..., T]:
        @functools.wraps(func)
        def wrapper(*args, **kwargs) -> T:
            try:
                return func(*args, **kwargs)
            except FidelityError as e:
                # Input problems are expected, just warn
                if log_error:
                    logger.warning(f"[{func.__name__}] {type(e).__name__}: {e}")
                if reraise:
                    raise
                return default_return
            except Exception as e:
                if log_error:
                    logger.error(f"[{func.__name__}] Unexpected error: {e}", exc_info=True)
                if reraise:
                    raise FidelityError(f"Unexpected error: {e}") from e
                return default_return
        return wrapper
    return decorator


def strict_operation(func: Callable[..., T]) -> Callable[..., T]:
    """Strict error boundary - logs, wraps unexpected errors and re-raises"""
    return error_boundary(reraise=True)(func)

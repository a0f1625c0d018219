"""
FidelityEq - File Storage Layer
JSON and CSV reading/writing. Every write goes through a temp file that is
renamed into place on success.
"""

import csv
import json
import os
import tempfile
from contextlib import contextmanager
from typing import Any, Dict, Iterable, Iterator, List, Sequence, Union

from pydantic import ValidationError

from .constants import CSV_COLUMNS
from .exceptions import StorageError, logger, strict_operation
from .generator import EqualityFamilyParams, SeparableFamilyParams
from .schemas import FamilyParamsFile, SeparableParamsFile, StateFile
from .states import BipartitePureState
from .utils import format_bool, format_float


# ===================================================================
# ATOMIC WRITES
# ===================================================================

@contextmanager
def atomic_write(path: str) -> Iterator[Any]:
    """Temp dosyaya yaz, başarılıysa yerine taşı"""
    directory = os.path.dirname(os.path.abspath(path))
    if not os.path.isdir(directory):
        raise StorageError(f"Output directory does not exist: {directory}")

    try:
        fd, tmp_path = tempfile.mkstemp(prefix=".tmp_", dir=directory)
    except OSError as e:
        raise StorageError(f"Cannot write to {directory}: {e}") from e

    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
            yield f
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise


# ===================================================================
# JSON
# ===================================================================

def read_json(path: str) -> Dict[str, Any]:
    """Parse a JSON object from disk"""
    try:
        with open(path, "r", encoding="utf-8") as f:
            payload = json.load(f)
    except FileNotFoundError as e:
        raise StorageError(f"File not found: {path}") from e
    except json.JSONDecodeError as e:
        raise StorageError(f"Invalid JSON in {path}: {e}") from e
    except OSError as e:
        raise StorageError(f"Cannot read {path}: {e}") from e

    if not isinstance(payload, dict):
        raise StorageError(f"Expected a JSON object in {path}")
    return payload


def write_json(path: str, payload: Dict[str, Any]) -> None:
    try:
        with atomic_write(path) as f:
            json.dump(payload, f, indent=2)
            f.write("\n")
    except OSError as e:
        raise StorageError(f"Cannot write {path}: {e}") from e
    logger.debug(f"[storage] Wrote {path}")


def _parse(model, payload: Dict[str, Any], path: str):
    try:
        return model.model_validate(payload)
    except ValidationError as e:
        raise StorageError(f"{path} does not match the {model.__name__} layout: {e}") from e


# ===================================================================
# STATES & PARAMETERS
# ===================================================================

@strict_operation
def read_state(path: str, auto_normalize: bool = False) -> BipartitePureState:
    """State JSON -> validated BipartitePureState"""
    return _parse(StateFile, read_json(path), path).to_state(auto_normalize=auto_normalize)


@strict_operation
def write_state(path: str, state: BipartitePureState) -> None:
    write_json(path, state_payload(state))


def state_payload(state: BipartitePureState) -> Dict[str, Any]:
    return StateFile.from_state(state).model_dump(by_alias=True, mode="json")


@strict_operation
def read_params(path: str) -> Union[EqualityFamilyParams, SeparableFamilyParams]:
    """
    Family parameter JSON. A "c11" key selects the separable-psi layout,
    anything else is read as entangled-family parameters.
    """
    payload = read_json(path)
    if "c11" in payload:
        return _parse(SeparableParamsFile, payload, path).to_params()
    return _parse(FamilyParamsFile, payload, path).to_params()


# ===================================================================
# CSV
# ===================================================================

def _csv_cell(value: Any) -> str:
    if isinstance(value, bool):
        return format_bool(value)
    if isinstance(value, float):
        return format_float(value)
    return str(value)


@strict_operation
def write_csv(path: str, rows: Iterable[Sequence[Any]], columns: List[str] = CSV_COLUMNS) -> int:
    """Header plus one line per row; returns the number of data rows"""
    count = 0
    try:
        with atomic_write(path) as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(columns)
            for row in rows:
                writer.writerow([_csv_cell(v) for v in row])
                count += 1
    except OSError as e:
        raise StorageError(f"Cannot write {path}: {e}") from e
    logger.debug(f"[storage] Wrote {count} rows to {path}")
    return count


@strict_operation
def read_csv(path: str) -> List[Dict[str, str]]:
    try:
        with open(path, "r", encoding="utf-8", newline="") as f:
            return list(csv.DictReader(f))
    except FileNotFoundError as e:
        raise StorageError(f"File not found: {path}") from e
    except OSError as e:
        raise StorageError(f"Cannot read {path}: {e}") from e

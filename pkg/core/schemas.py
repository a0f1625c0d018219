"""
FidelityEq - File Schemas (pydantic)
State, family-parameter and separable-parameter JSON layouts.
"""

from typing import List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from .generator import EqualityFamilyParams, SeparableFamilyParams
from .states import BipartitePureState, new_state

# [re, im]
ComplexPair = Tuple[float, float]


def _to_complex(pairs: List[ComplexPair]) -> List[complex]:
    return [complex(re, im) for re, im in pairs]


def _to_pairs(values) -> List[ComplexPair]:
    return [(float(z.real), float(z.imag)) for z in np.asarray(values, dtype=np.complex128).reshape(-1)]


class StateFile(BaseModel):
    """{"dimB": d, "amplitudes": [[re, im], ...]} with 2*d row-major entries"""
    model_config = ConfigDict(populate_by_name=True, extra="forbid")

    dim_b: int = Field(..., alias="dimB", ge=2)
    amplitudes: List[ComplexPair]

    @model_validator(mode="after")
    def _check_count(self) -> "StateFile":
        if len(self.amplitudes) != 2 * self.dim_b:
            raise ValueError(
                f"expected {2 * self.dim_b} amplitudes for dimB={self.dim_b}, got {len(self.amplitudes)}"
            )
        return self

    def to_state(self, auto_normalize: bool = False) -> BipartitePureState:
        return new_state(self.dim_b, _to_complex(self.amplitudes), auto_normalize=auto_normalize)

    @classmethod
    def from_state(cls, state: BipartitePureState) -> "StateFile":
        return cls(dim_b=state.dim_b, amplitudes=_to_pairs(state.amplitudes()))


class FamilyParamsFile(BaseModel):
    """{"lambda": x, "k": x, "p": x, "theta01": x, "theta10": x}"""
    model_config = ConfigDict(populate_by_name=True, extra="forbid")

    lam: float = Field(..., alias="lambda")
    k: float
    p: float
    theta01: float = 0.0
    theta10: float = 0.0

    def to_params(self) -> EqualityFamilyParams:
        return EqualityFamilyParams(
            lam=self.lam,
            k=self.k,
            p=self.p,
            theta01=self.theta01,
            theta10=self.theta10,
        )


class SeparableParamsFile(BaseModel):
    """{"c11": [re, im], "tail": [[re, im], ...]}"""
    model_config = ConfigDict(extra="forbid")

    c11: ComplexPair
    tail: List[ComplexPair] = Field(..., min_length=2)

    def to_params(self) -> SeparableFamilyParams:
        return SeparableFamilyParams(c11=complex(*self.c11), tail=_to_complex(self.tail))

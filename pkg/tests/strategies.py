"""Hypothesis strategies for coefficient matrices and states"""

import numpy as np
from hypothesis import assume
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from core import BipartitePureState

unit_floats = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False, allow_infinity=False)
dims = st.integers(min_value=2, max_value=8)
seeds = st.integers(min_value=0, max_value=2**32 - 1)


@st.composite
def coefficient_matrices(draw, dim_b=None):
    """Normalized 2 x d complex matrices"""
    d = draw(dims) if dim_b is None else dim_b
    re = draw(arrays(np.float64, (2, d), elements=unit_floats))
    im = draw(arrays(np.float64, (2, d), elements=unit_floats))
    c = re + 1j * im
    norm = np.linalg.norm(c)
    assume(norm > 1e-3)
    return c / norm


@st.composite
def state_pairs(draw):
    d = draw(dims)
    psi = BipartitePureState(draw(coefficient_matrices(dim_b=d)))
    phi = BipartitePureState(draw(coefficient_matrices(dim_b=d)))
    return psi, phi

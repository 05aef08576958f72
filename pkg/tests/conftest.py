import cmath

import numpy as np
from hypothesis import strategies as st


def rand_c(rng, size):
    return rng.standard_normal(size) + 1j * rng.standard_normal(size)


@st.composite
def unit_band(draw, r_lo=0.5, r_hi=2.0, phase=3.0):
    """Complex numbers with modulus in [r_lo, r_hi] and |phase| below ``phase``."""
    r = draw(st.floats(r_lo, r_hi))
    t = draw(st.floats(-phase, phase))
    return cmath.rect(r, t)


@st.composite
def seeds(draw):
    return np.random.default_rng(draw(st.integers(0, 2**32 - 1)))

"""Hypothesis strategies for normalized polynomials."""

import numpy as np
from hypothesis import strategies as st

from momentmap.poly import NormalizedPoly, Poly

finite = st.floats(-1.0, 1.0, allow_nan=False, allow_infinity=False)
complex_unit = st.builds(complex, finite, finite)


@st.composite
def normalized_polys(draw, n_min=1, n_max=5):
    n = draw(st.integers(n_min, n_max))
    a1 = draw(st.floats(0.5, 2.0))
    rest = draw(st.lists(complex_unit, min_size=n - 1, max_size=n - 1))
    if n > 1 and abs(rest[-1]) < 1e-2:
        rest[-1] = 0.5
    return NormalizedPoly(np.array([a1, *rest], dtype=complex))


@st.composite
def polys(draw, deg_min=0, deg_max=5, monic_floor=0.1):
    deg = draw(st.integers(deg_min, deg_max))
    c = draw(st.lists(complex_unit, min_size=deg + 1, max_size=deg + 1))
    if abs(c[-1]) < monic_floor:
        c[-1] = 1.0
    return Poly(np.array(c, dtype=complex), deg)


def _disk_poly(rng, deg):
    c = np.sqrt(rng.uniform(0, 1, deg + 1)) * np.exp(2j * np.pi * rng.uniform(0, 1, deg + 1))
    if abs(c[-1]) < 0.1:
        c[-1] = 1.0
    return Poly(c, deg)


@st.composite
def random_poly_tuples(draw, count, deg_min=1, deg_max=5):
    """``count`` polynomials with coefficients uniform in the unit disk.

    Hypothesis picks one seed; the coefficients come from that numpy stream.
    Shrinking therefore cannot steer toward shared roots, where a relative
    comparison of a vanishing resultant is meaningless.
    """
    rng = np.random.default_rng(draw(st.integers(0, 2**32 - 1)))
    return tuple(_disk_poly(rng, int(rng.integers(deg_min, deg_max + 1))) for _ in range(count))

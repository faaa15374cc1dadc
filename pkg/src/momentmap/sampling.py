"""Seeded random polynomials for tests, the verify harness and scripts."""

from __future__ import annotations

import numpy as np

from .poly import NormalizedPoly


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    # one independent stream per (seed, trial), whatever the execution order
    return np.random.default_rng([seed, trial])


def unit_disk(rng: np.random.Generator, size: int) -> np.ndarray:
    r = np.sqrt(rng.uniform(0.0, 1.0, size))
    return r * np.exp(2j * np.pi * rng.uniform(0.0, 1.0, size))


def random_poly(rng: np.random.Generator, n: int) -> NormalizedPoly:
    """a_1 uniform in [0.5, 2]; a_2..a_n uniform in the unit disk, |a_n| >= 1e-3."""
    a = np.empty(n, dtype=complex)
    a[0] = rng.uniform(0.5, 2.0)
    a[1:] = unit_disk(rng, n - 1)
    if n > 1 and abs(a[-1]) < 1e-3:
        a[-1] = 1e-3
    return NormalizedPoly(a)


def random_real_poly(rng: np.random.Generator, n: int) -> NormalizedPoly:
    a = rng.uniform(-1.0, 1.0, n)
    a[0] = rng.uniform(0.5, 2.0)
    if n > 1 and abs(a[-1]) < 1e-3:
        a[-1] = 1e-3
    return NormalizedPoly(a.astype(complex))


def random_univalent_poly(
    rng: np.random.Generator, n: int, rmin: float = 1.2, rmax: float = 3.0
) -> NormalizedPoly:
    """P with every root of P' at modulus in [rmin, rmax] (so locally univalent on the closed disk)."""
    a1 = rng.uniform(0.5, 2.0)
    roots = rng.uniform(rmin, rmax, n - 1) * np.exp(2j * np.pi * rng.uniform(0.0, 1.0, n - 1))
    # P' = a1 * prod(1 - z/alpha), ascending coefficients
    q = np.array([a1], dtype=complex)
    for alpha in roots:
        q = np.convolve(q, [1.0, -1.0 / alpha])
    a = q / np.arange(1, n + 1)
    a[0] = a1
    return NormalizedPoly(a)


def perturb(rng: np.random.Generator, p: NormalizedPoly, rel: float = 0.05) -> NormalizedPoly:
    """Multiply each coefficient by 1 + rel*u, u uniform in the unit disk (a_1 by a real factor)."""
    factors = 1.0 + rel * unit_disk(rng, p.n)
    factors[0] = 1.0 + rel * rng.uniform(-1.0, 1.0)
    return NormalizedPoly(p.a * factors)


def round_trip_case(rng: np.random.Generator, n: int, rel: float = 0.05, max_cond: float = 1e4):
    """(p, init) for inversion tests.

    ``p`` is locally univalent with a real-coordinate Jacobian of condition
    number <= max_cond; ``init`` is a ``rel`` perturbation of ``p`` that is
    itself locally univalent (local injectivity only holds on that set).
    """
    from .critical import local_univalence_check
    from .moments import real_coordinate_jacobian

    while True:
        p = random_univalent_poly(rng, n)
        if np.linalg.cond(real_coordinate_jacobian(p)) <= max_cond:
            break
    while True:
        init = perturb(rng, p, rel)
        if local_univalence_check(init):
            return p, init

"""Search Hurwitz-minor conventions for the real-slice Jacobian product formula.

Prints, per n and per (order, direction) candidate, the range of
real_jacobian / formula over random real polynomials.  A second table tests
an observation made while calibrating: the minor that would be needed equals,
up to sign, the order n-2 minor of the Cayley transform
(1 - w)^(n-1) P'((1 + w) / (1 - w)) read in descending coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from _config import parse_config
from momentmap.moments import calibrate_hurwitz, real_jacobian
from momentmap.moments.real import _prefactor
from momentmap.poly import Poly, derivative
from momentmap.resultant import hurwitz_determinant
from momentmap.sampling import random_real_poly


@dataclass
class Config:
    seed: int = 0
    samples: int = 50
    n_max: int = 6


def cayley(q: Poly) -> Poly:
    """(1 - w)^m q((1 + w) / (1 - w)) at formal degree m = q.degree."""
    m = q.degree
    out = np.zeros(m + 1, dtype=complex)
    for j, c in enumerate(q.coeffs):
        term = np.array([c], dtype=complex)
        for _ in range(j):
            term = np.convolve(term, [1.0, 1.0])
        for _ in range(m - j):
            term = np.convolve(term, [1.0, -1.0])
        out += term
    return Poly(out, m)


def main(cfg: Config):
    cal = calibrate_hurwitz(seed=cfg.seed, samples=cfg.samples)
    print(f"calibrated candidate: {cal.candidate.label if cal.candidate else None}")
    for n, table in sorted(cal.mismatch.items()):
        for label, (lo, hi) in sorted(table.items()):
            print(f"  n={n} {label:24s} ratio in [{lo:+.6g}, {hi:+.6g}]")

    print("\nrequired minor / Cayley minor (order n-2, descending)")
    rng = np.random.default_rng(cfg.seed)
    for n in range(2, cfg.n_max + 1):
        ratios = []
        for _ in range(cfg.samples):
            p = random_real_poly(rng, n)
            needed = real_jacobian(p) / _prefactor(p)
            minor = hurwitz_determinant(cayley(derivative(p.poly)), n - 2, "descending").real
            if abs(minor) > 1e-12:
                ratios.append(needed / minor)
        print(f"  n={n}: ratio in [{min(ratios):+.12g}, {max(ratios):+.12g}]")


if __name__ == "__main__":
    main(parse_config(Config, __doc__.splitlines()[0]))

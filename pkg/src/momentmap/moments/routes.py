"""Complex moments of normalized polynomials and the Jacobian of the moment map.

For P = a_1 z + ... + a_n z^n the k-th moment is

    mu_k = (1/pi) * integral over the unit disk of P^k |P'|^2 dA,

which vanishes for k >= n.  Three independent routes are provided
(multi-index summation, Laurent coefficients of polynomial products, and
tensor quadrature).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..poly import (
    NormalizedPoly,
    Poly,
    coefficient_of,
    derivative,
    evaluate,
    mirror_conjugate,
    multiply,
    power,
)

MAX_RICHARDSON_TERMS = 10**8
LAURENT_RTOL = 1e-11


class InconsistentMomentError(ArithmeticError):
    pass


@dataclass(frozen=True, eq=False)
class MomentVector:
    n: int
    mu0: float
    mu: np.ndarray  # mu_1 .. mu_{n-1}

    def __post_init__(self):
        mu = np.array(self.mu, dtype=complex).reshape(-1)
        if mu.size != self.n - 1:
            raise ValueError(f"expected {self.n - 1} higher moments, got {mu.size}")
        if not self.mu0 > 0:
            raise ValueError(f"mu0 must be positive, got {self.mu0}")
        mu.setflags(write=False)
        object.__setattr__(self, "mu", mu)

    def as_array(self) -> np.ndarray:
        """(mu_0, mu_1, ..., mu_{n-1}) as a complex array."""
        return np.concatenate([[self.mu0], self.mu])

    def embed(self) -> np.ndarray:
        """Real coordinates (mu0, Re mu1, Im mu1, ...)."""
        out = [self.mu0]
        for z in self.mu:
            out.extend([z.real, z.imag])
        return np.array(out, dtype=float)


@dataclass(frozen=True)
class QuadratureRule:
    radial_nodes: int
    angular_nodes: int

    @classmethod
    def exact_for(cls, n: int, k: int) -> "QuadratureRule":
        return cls(radial_nodes=n * (k + 1) + 2, angular_nodes=2 * n * (k + 1) + 1)


# --- moments ---------------------------------------------------------------


def _compositions_count(n: int, parts: int) -> int:
    # tuples of `parts` positive integers with sum <= n
    return math.comb(n, parts)


def _compositions(total_max: int, parts: int):
    if parts == 0:
        yield ()
        return
    for first in range(1, total_max - parts + 2):
        for rest in _compositions(total_max - first, parts - 1):
            yield (first,) + rest


def moment_richardson(p: NormalizedPoly, k: int) -> complex:
    """Sum of s_1 a_{s_1} ... a_{s_{k+1}} conj(a_{s_1+...+s_{k+1}}) over index tuples."""
    if k < 0:
        raise ValueError(f"moment index must be >= 0, got {k}")
    n = p.n
    if k >= n:
        return 0j
    terms = _compositions_count(n, k + 1)
    if terms > MAX_RICHARDSON_TERMS:
        raise ValueError(f"Richardson sum would need {terms} terms")
    a = np.concatenate([[0.0], p.a])
    total = 0j
    for idx in _compositions(n, k + 1):
        term = idx[0] * np.conj(a[sum(idx)])
        for s in idx:
            term *= a[s]
        total += term
    return complex(total)


def _laurent_pair(p: NormalizedPoly, k: int) -> tuple[complex, complex]:
    n = p.n
    P = p.poly
    Q = derivative(P)
    first = coefficient_of(multiply(power(P, k + 1), mirror_conjugate(Q, n - 1)), n) / (k + 1)
    second = coefficient_of(multiply(multiply(Q, power(P, k)), mirror_conjugate(P, n)), n - 1)
    return first, second


def moment_laurent(p: NormalizedPoly, k: int) -> complex:
    """mu_k from Laurent coefficients, checked against the second expression."""
    if k < 0:
        raise ValueError(f"moment index must be >= 0, got {k}")
    first, second = _laurent_pair(p, k)
    if abs(first - second) > LAURENT_RTOL * (1.0 + _term_bound(p, k)):
        raise InconsistentMomentError(
            f"Laurent expressions disagree for k={k}: {first} vs {second}"
        )
    return first


def _term_bound(p: NormalizedPoly, k: int) -> float:
    # sum of |terms| in the Richardson expansion is at most this
    mags = np.abs(p.a)
    return float(np.sum(np.arange(1, p.n + 1) * mags) * np.sum(mags) ** (k + 1))


@lru_cache(maxsize=64)
def _gauss_legendre_unit(nodes: int):
    x, w = np.polynomial.legendre.leggauss(nodes)
    return (x + 1.0) / 2.0, w / 2.0


def moment_quadrature(p: NormalizedPoly, k: int, rule: QuadratureRule | None = None) -> complex:
    """(1/pi) * double integral of P^k |P'|^2 r dr dtheta over the unit disk.

    Gauss-Legendre in r, trapezoid in theta; exact up to rounding when the
    rule meets the degree bounds of the integrand.
    """
    n = p.n
    if rule is None:
        rule = QuadratureRule.exact_for(n, k)
    need = QuadratureRule.exact_for(n, k)
    if rule.angular_nodes < need.angular_nodes or rule.radial_nodes < need.radial_nodes:
        raise ValueError(f"quadrature rule {rule} too coarse for n={n}, k={k}; need {need}")
    r, wr = _gauss_legendre_unit(rule.radial_nodes)
    theta = 2.0 * np.pi * np.arange(rule.angular_nodes) / rule.angular_nodes
    z = r[:, None] * np.exp(1j * theta)[None, :]
    P = p.poly
    integrand = evaluate(P, z) ** k * np.abs(evaluate(derivative(P), z)) ** 2
    # (1/pi) * sum_r w_r r * (2 pi / M) sum_theta f
    radial = integrand.mean(axis=1) * 2.0
    return complex(np.sum(wr * r * radial))


def moment_vector(p: NormalizedPoly) -> MomentVector:
    mus = [moment_laurent(p, k) for k in range(p.n)]
    mu0 = mus[0]
    if abs(mu0.imag) > 1e-12 * max(1.0, abs(mu0)):
        raise InconsistentMomentError(f"mu0 has imaginary part {mu0.imag}")
    return MomentVector(p.n, mu0.real, np.array(mus[1:], dtype=complex))

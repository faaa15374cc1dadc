"""Dense complex polynomials with a declared (formal) degree.

Coefficients are stored in ascending powers.  The degree is declared by the
caller and never inferred from trailing zeros, because resultant and
Sylvester constructions depend on the formal degree.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def _frozen(values) -> np.ndarray:
    arr = np.array(values, dtype=complex).reshape(-1)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Poly:
    coeffs: np.ndarray
    degree: int

    def __post_init__(self):
        coeffs = _frozen(self.coeffs)
        if self.degree < 0:
            raise ValueError(f"declared degree must be >= 0, got {self.degree}")
        if coeffs.size != self.degree + 1:
            raise ValueError(
                f"expected {self.degree + 1} coefficients for degree {self.degree}, got {coeffs.size}"
            )
        if not np.all(np.isfinite(coeffs)):
            raise ValueError("polynomial coefficients must be finite")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, coeffs) -> "Poly":
        coeffs = np.atleast_1d(np.asarray(coeffs, dtype=complex))
        return cls(coeffs, coeffs.size - 1)

    @classmethod
    def constant(cls, c: complex) -> "Poly":
        return cls([c], 0)

    def __getitem__(self, s: int) -> complex:
        return coefficient_of(self, s)

    def __call__(self, z):
        return evaluate(self, z)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.degree == other.degree and np.array_equal(self.coeffs, other.coeffs)

    def __repr__(self):
        return f"Poly({self.coeffs.tolist()!r}, degree={self.degree})"


def derivative(p: Poly) -> Poly:
    if p.degree == 0:
        return Poly([0.0], 0)
    return Poly(p.coeffs[1:] * np.arange(1, p.degree + 1), p.degree - 1)


def multiply(p: Poly, q: Poly) -> Poly:
    return Poly(np.convolve(p.coeffs, q.coeffs), p.degree + q.degree)


def power(p: Poly, k: int) -> Poly:
    if k < 0:
        raise ValueError(f"power must be non-negative, got {k}")
    result = Poly([1.0], 0)
    for _ in range(k):
        result = multiply(result, p)
    return result


def mirror_conjugate(p: Poly, m: int | None = None) -> Poly:
    """Return z**m * conj(p)(1/z): the coefficient list reversed and conjugated.

    ``m`` defaults to the declared degree and may exceed it (the extra
    trailing zeros of ``p`` become leading zeros of the image).
    """
    if m is None:
        m = p.degree
    if m < p.degree:
        raise ValueError(f"mirror degree {m} is below the declared degree {p.degree}")
    padded = np.zeros(m + 1, dtype=complex)
    padded[: p.degree + 1] = p.coeffs
    return Poly(np.conj(padded[::-1]), m)


def coefficient_of(p: Poly, s: int) -> complex:
    """Laurent coefficient of z**s; zero outside 0..degree."""
    if 0 <= s <= p.degree:
        return complex(p.coeffs[s])
    return 0j


def evaluate(p: Poly, z):
    # Horner, works for scalars and numpy arrays alike
    acc = np.zeros_like(np.asarray(z, dtype=complex))
    for c in p.coeffs[::-1]:
        acc = acc * z + c
    if acc.ndim == 0:
        return complex(acc)
    return acc


@dataclass(frozen=True, eq=False)
class NormalizedPoly:
    """P = a_1 z + ... + a_n z^n with a_1 real positive and a_n != 0.

    ``a[j - 1]`` holds the coefficient of z**j.
    """

    a: np.ndarray

    def __post_init__(self):
        a = _frozen(self.a)
        if a.size < 1:
            raise ValueError("a normalized polynomial needs degree n >= 1")
        if not np.all(np.isfinite(a)):
            raise ValueError("coefficients must be finite")
        if a[0].imag != 0.0 or not a[0].real > 0.0:
            raise ValueError(f"a_1 must be real and positive, got {a[0]}")
        if a[-1] == 0:
            raise ValueError("leading coefficient a_n must be nonzero")
        object.__setattr__(self, "a", a)

    @property
    def n(self) -> int:
        return int(self.a.size)

    @property
    def a1(self) -> float:
        return float(self.a[0].real)

    @property
    def poly(self) -> Poly:
        return Poly(np.concatenate([[0.0], self.a]), self.n)

    @property
    def dpoly(self) -> Poly:
        return derivative(self.poly)

    def is_real(self) -> bool:
        return bool(np.all(self.a.imag == 0.0))

    def __eq__(self, other):
        if not isinstance(other, NormalizedPoly):
            return NotImplemented
        return np.array_equal(self.a, other.a)

    def __repr__(self):
        return f"NormalizedPoly({self.a.tolist()!r})"

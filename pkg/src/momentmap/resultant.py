"""Sylvester matrices, resultants by two independent routes, Hurwitz minors."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .linalg import determinant
from .poly import NormalizedPoly, Poly, derivative, mirror_conjugate


class IllPosedError(ArithmeticError):
    pass


@dataclass(frozen=True, eq=False)
class SylvesterLayout:
    a_poly: Poly
    a_degree: int
    b_poly: Poly
    b_degree: int
    matrix: np.ndarray


def _padded(p: Poly, m: int) -> np.ndarray:
    out = np.zeros(m + 1, dtype=complex)
    out[: p.degree + 1] = p.coeffs
    return out


def sylvester_matrix(a: Poly, m: int, b: Poly, k: int) -> SylvesterLayout:
    """Banded (m+k)x(m+k) Sylvester matrix at formal degrees m and k.

    The first k rows carry shifted copies of A, the next m rows copies of B.
    Within each band coefficients run from the leading one down to the
    constant term; with this ordering the determinant equals
    a_m^k b_k^m prod(alpha_i - beta_j) (ascending bands would flip the sign
    for, e.g., two linear polynomials).
    """
    if m < a.degree or k < b.degree:
        raise ValueError(
            f"formal degrees ({m}, {k}) below declared degrees ({a.degree}, {b.degree})"
        )
    size = m + k
    mat = np.zeros((size, size), dtype=complex)
    a_desc = _padded(a, m)[::-1]
    b_desc = _padded(b, k)[::-1]
    for i in range(k):
        mat[i, i : i + m + 1] = a_desc
    for i in range(m):
        mat[k + i, i : i + k + 1] = b_desc
    return SylvesterLayout(a, m, b, k, mat)


def resultant_det(a: Poly, m: int, b: Poly, k: int) -> complex:
    return determinant(sylvester_matrix(a, m, b, k).matrix)


def poly_roots(p: Poly) -> np.ndarray:
    """All roots of ``p`` at its declared degree (companion eigenvalues)."""
    from .critical import polished_roots

    return polished_roots(p)


def resultant_from_roots(a: Poly, b: Poly) -> complex:
    """Root-product definition of Res(A, B) at the declared degrees."""
    for p in (a, b):
        lead = p.coeffs[-1]
        if abs(lead) <= 1e-12 * float(np.max(np.abs(p.coeffs))):
            raise IllPosedError(f"leading coefficient of {p!r} is numerically zero")
    ra = poly_roots(a)
    rb = poly_roots(b)
    value = complex(a.coeffs[-1]) ** b.degree * complex(b.coeffs[-1]) ** a.degree
    if ra.size and rb.size:
        value *= complex(np.prod(ra[:, None] - rb[None, :]))
    return value


def mirror_resultant(p: NormalizedPoly) -> complex:
    """Res(P', P'*) with both factors at formal degree n-1."""
    q = derivative(p.poly)
    m = p.n - 1
    return resultant_det(q, m, mirror_conjugate(q, m), m)


class HurwitzConvention(str, Enum):
    ASCENDING = "ascending"
    DESCENDING = "descending"


def hurwitz_matrix(q: Poly, order: int, convention="descending") -> np.ndarray:
    """Leading order x order block of the Hurwitz matrix H_ij = c_(2j-i).

    ``c`` lists the coefficients of ``q`` at its declared degree, starting
    from the leading one (descending) or from the constant term (ascending).
    Indices are 1-based as in the usual layout; out-of-range c vanish.
    """
    convention = HurwitzConvention(convention)
    if not 0 <= order <= q.degree:
        raise ValueError(f"Hurwitz order {order} outside 0..{q.degree}")
    c = np.asarray(q.coeffs)
    if convention is HurwitzConvention.DESCENDING:
        c = c[::-1]
    mat = np.zeros((order, order), dtype=complex)
    for i in range(1, order + 1):
        for j in range(1, order + 1):
            idx = 2 * j - i
            if 0 <= idx <= q.degree:
                mat[i - 1, j - 1] = c[idx]
    return mat


def hurwitz_determinant(q: Poly, order: int, convention="descending") -> complex:
    return determinant(hurwitz_matrix(q, order, convention))

"""Roots of P' and the root-pair description of the critical set.

The moment map degenerates exactly when P' has roots alpha_i, alpha_j with
alpha_i * conj(alpha_j) == 1 (i == j allowed), i.e. when P' and its mirror
conjugate share a root.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .poly import NormalizedPoly, Poly, derivative, evaluate

MAX_POLISH_ITERATIONS = 50
RESIDUAL_RTOL = 1e-10
UNIVALENCE_MARGIN = 1e-12


class RootFindingError(ArithmeticError):
    pass


def companion_matrix(p: Poly) -> np.ndarray:
    c = np.asarray(p.coeffs)
    m = p.degree
    comp = np.zeros((m, m), dtype=complex)
    if m > 1:
        comp[1:, :-1] = np.eye(m - 1)
    comp[:, -1] = -c[:m] / c[m]
    return comp


def _residual_bound(p: Poly, z: np.ndarray) -> np.ndarray:
    scale = float(np.max(np.abs(p.coeffs)))
    return RESIDUAL_RTOL * scale * (1.0 + np.abs(z)) ** p.degree


def polished_roots(p: Poly) -> np.ndarray:
    """Companion-matrix eigenvalues refined by Newton's method.

    Each root must end with |p(z)| <= 1e-10 * max|c| * (1+|z|)**deg.
    A Newton step is only kept when it lowers the residual, so clustered
    roots cannot hop onto a neighbour.
    """
    if p.degree == 0:
        return np.zeros(0, dtype=complex)
    if p.coeffs[-1] == 0:
        raise RootFindingError("leading coefficient vanishes at the declared degree")
    roots = np.linalg.eigvals(companion_matrix(p)).astype(complex)
    dp = derivative(p)
    for i, z in enumerate(roots):
        res = abs(evaluate(p, z))
        for it in range(MAX_POLISH_ITERATIONS):
            if it >= 2 and res <= _residual_bound(p, z):
                break
            d = evaluate(dp, z)
            if d == 0:
                break
            cand = z - evaluate(p, z) / d
            cand_res = abs(evaluate(p, cand))
            if not cand_res < res:
                break
            z, res = cand, cand_res
        if res > _residual_bound(p, z):
            raise RootFindingError(
                f"root {z} did not polish: residual {res:.3e} > {_residual_bound(p, z):.3e}"
            )
        roots[i] = z
    return roots


def derivative_roots(p: NormalizedPoly) -> np.ndarray:
    return polished_roots(derivative(p.poly))


@dataclass(frozen=True, eq=False)
class CriticalReport:
    roots: np.ndarray
    pair_products: np.ndarray
    min_distance: float
    degenerate: bool
    locally_univalent_in_closed_disk: bool
    tol: float

    def to_dict(self) -> dict:
        def pairs(v):
            return [[float(z.real), float(z.imag)] for z in np.ravel(v)]

        return {
            "roots": pairs(self.roots),
            "pair_products": [pairs(row) for row in self.pair_products],
            "min_distance": None if np.isinf(self.min_distance) else float(self.min_distance),
            "degenerate": self.degenerate,
            "locally_univalent_in_closed_disk": self.locally_univalent_in_closed_disk,
            "tol": self.tol,
        }


def degeneracy_report(p: NormalizedPoly, tol: float = 1e-9) -> CriticalReport:
    if not 0.0 < tol <= 0.1:
        raise ValueError(f"tolerance must lie in (0, 0.1], got {tol}")
    roots = derivative_roots(p)
    products = roots[:, None] * np.conj(roots)[None, :]
    # n = 1: P' is a nonzero constant, no roots and no degeneracy
    min_distance = float(np.min(np.abs(products - 1.0))) if roots.size else float("inf")
    return CriticalReport(
        roots=roots,
        pair_products=products,
        min_distance=min_distance,
        degenerate=min_distance <= tol,
        locally_univalent_in_closed_disk=_all_outside(roots),
        tol=tol,
    )


def _all_outside(roots: np.ndarray) -> bool:
    return bool(np.all(np.abs(roots) > 1.0 + UNIVALENCE_MARGIN))


def local_univalence_check(p: NormalizedPoly) -> bool:
    """True iff P' has no zero in the closed unit disk."""
    return _all_outside(derivative_roots(p))

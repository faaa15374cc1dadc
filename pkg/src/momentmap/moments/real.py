"""Real-coefficient slice: the n x n real Jacobian and its resultant identities.

On real polynomials all moments are real, and

    J_R^2 = 4 (-1)^(n-1) a_1^(n(n-1)) Res(P', P'*) P'(-1) P'(1).

The companion product formula

    J_R = 2^(-n(n-3)/2) a_1^(n(n-1)/2) P'(1) P'(-1) Delta(P'*)

leaves the Hurwitz minor Delta underdetermined (which order, which
coefficient direction).  ``calibrate_hurwitz`` searches the candidates
against ``real_jacobian`` and reports mismatch factors when none fits.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..linalg import determinant
from ..poly import NormalizedPoly, derivative, evaluate, mirror_conjugate
from ..resultant import HurwitzConvention, hurwitz_determinant, mirror_resultant
from ..sampling import random_real_poly
from .jacobian import _moment_rows

CALIBRATION_NS = (2, 3)
VALIDATION_NS = (4, 5)
# order of the Hurwitz minor is n - 1 - offset
ORDER_OFFSETS = (0, 1)


class UncalibratedError(RuntimeError):
    pass


def _require_real(p: NormalizedPoly):
    if not p.is_real():
        raise ValueError("this operation needs real coefficients")


def real_jacobian(p: NormalizedPoly) -> float:
    """det d(mu_0..mu_{n-1}) / d(a_1..a_n) on the real slice."""
    _require_real(p)
    n = p.n
    rows = _moment_rows(p)
    J = np.zeros((n, n), dtype=complex)
    J[:, 0] = rows[:, n - 1]
    for j in range(2, n + 1):
        J[:, j - 1] = rows[:, n - 2 + j] + rows[:, n - j]
    return float(determinant(J).real)


def real_resultant_identity(p: NormalizedPoly) -> tuple[float, float]:
    """(J_R^2, 4 (-1)^(n-1) a_1^(n(n-1)) Res(P', P'*) P'(-1) P'(1))."""
    _require_real(p)
    n = p.n
    Q = derivative(p.poly)
    lhs = real_jacobian(p) ** 2
    rhs = (
        4.0
        * (-1) ** (n - 1)
        * p.a1 ** (n * (n - 1))
        * mirror_resultant(p)
        * evaluate(Q, -1.0)
        * evaluate(Q, 1.0)
    )
    return lhs, float(rhs.real)


@dataclass(frozen=True)
class HurwitzCandidate:
    order_offset: int
    convention: HurwitzConvention

    def order(self, n: int) -> int:
        return n - 1 - self.order_offset

    @property
    def label(self) -> str:
        return f"order=n-{1 + self.order_offset},{self.convention.value}"


ALL_CANDIDATES = tuple(
    HurwitzCandidate(d, c) for d in ORDER_OFFSETS for c in HurwitzConvention
)


def _prefactor(p: NormalizedPoly) -> float:
    n = p.n
    Q = derivative(p.poly)
    return (
        2.0 ** (-n * (n - 3) / 2)
        * p.a1 ** (n * (n - 1) / 2)
        * evaluate(Q, 1.0).real
        * evaluate(Q, -1.0).real
    )


def _formula(p: NormalizedPoly, cand: HurwitzCandidate) -> float:
    order = cand.order(p.n)
    q_star = mirror_conjugate(derivative(p.poly), p.n - 1)
    if not 0 <= order <= q_star.degree:
        raise ValueError(f"{cand.label} gives order {order} at n={p.n}")
    return _prefactor(p) * hurwitz_determinant(q_star, order, cand.convention).real


def real_jacobian_formula(p: NormalizedPoly, calibration: "HurwitzCalibration | None") -> float:
    _require_real(p)
    if calibration is None or calibration.candidate is None:
        raise UncalibratedError("no Hurwitz convention reproduces the real Jacobian")
    return _formula(p, calibration.candidate)


@dataclass
class HurwitzCalibration:
    candidate: HurwitzCandidate | None
    consistent: list[str]
    # n -> candidate label -> [min, max] of real_jacobian / formula
    mismatch: dict[int, dict[str, list[float]]] = field(default_factory=dict)
    # n -> max relative error of the chosen candidate
    validation: dict[int, float] = field(default_factory=dict)
    validated: bool = False

    def to_dict(self) -> dict:
        return {
            "candidate": None if self.candidate is None else self.candidate.label,
            "consistent_at_calibration": self.consistent,
            "validated": self.validated,
            "validation_max_rel_error": {str(k): v for k, v in self.validation.items()},
            "mismatch_factors": {
                str(n): {lab: list(r) for lab, r in d.items()} for n, d in self.mismatch.items()
            },
        }


def _ratios(cand: HurwitzCandidate, polys) -> list[float]:
    out = []
    for p in polys:
        try:
            f = _formula(p, cand)
        except ValueError:
            return []
        if f != 0.0:
            out.append(real_jacobian(p) / f)
    return out


def calibrate_hurwitz(seed: int = 0, samples: int = 50, rtol: float = 1e-6) -> HurwitzCalibration:
    """Pick the unique (order, direction) pair matching real_jacobian at n=2,3.

    The pick is then validated at n=4,5.  Per-n ratio ranges
    real_jacobian / formula are recorded for every candidate either way.
    """
    rng = np.random.default_rng(seed)
    polys = {
        n: [random_real_poly(rng, n) for _ in range(samples)]
        for n in CALIBRATION_NS + VALIDATION_NS
    }
    mismatch: dict[int, dict[str, list[float]]] = {}
    consistent = []
    for cand in ALL_CANDIDATES:
        fits = True
        for n, ps in polys.items():
            r = _ratios(cand, ps)
            if r:
                mismatch.setdefault(n, {})[cand.label] = [min(r), max(r)]
            if n in CALIBRATION_NS and (
                not r or max(abs(x - 1.0) for x in r) > rtol
            ):
                fits = False
        if fits:
            consistent.append(cand)
    if len(consistent) != 1:
        return HurwitzCalibration(None, [c.label for c in consistent], mismatch)
    chosen = consistent[0]
    validation = {}
    for n in VALIDATION_NS:
        r = _ratios(chosen, polys[n])
        validation[n] = max(abs(x - 1.0) for x in r) if r else float("inf")
    ok = all(v <= rtol for v in validation.values())
    return HurwitzCalibration(chosen if ok else None, [chosen.label], mismatch, validation, ok)

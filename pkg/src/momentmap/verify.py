"""Batch harness: every route and identity checked on seeded random polynomials.

Each trial yields one JSON-ready record; records are ordered by trial index
and carry no timing data, so a (seed, trials, n_max) triple always produces
the same bytes.  Two fixed golden polynomials run ahead of the random ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .critical import degeneracy_report
from .moments import (
    calibrate_hurwitz,
    closed_form_exponent,
    real_resultant_identity,
    jacobian_analytic,
    jacobian_finite_difference,
    jacobian_matrix,
    jacobian_y_matrix,
    moment_laurent,
    moment_quadrature,
    moment_richardson,
)
from .poly import NormalizedPoly, derivative, mirror_conjugate
from .resultant import mirror_resultant, resultant_det, resultant_from_roots
from .sampling import random_poly, trial_rng

GOLDEN = {
    "golden-n2": NormalizedPoly([1.0, 0.3]),
    "golden-n3": NormalizedPoly([1.0, 0.0, 0.2]),
}

FAULTS = ("closed-form-exponent",)

TOL = {
    "richardson~laurent": 1e-11,
    "laurent~quadrature": 1e-9,
    "vanishing": 1e-12,
    "top_moment": 1e-12,
    "closed_form_identity": 1e-9,
    "imaginary_part": 1e-9,
    "y_route": 1e-9,
    "finite_difference": 1e-5,
    "resultant_oracle": 1e-8,
    "real_identity": 1e-8,
    "roots_reconstruct": 1e-8,
    "critical_degenerate": 1e-6,
    "critical_far": 1e-8,
}


def _pair(z) -> list[float]:
    z = complex(z)
    return [float(z.real), float(z.imag)]


def _rel(x, y) -> float:
    return float(abs(x - y) / (1.0 + max(abs(x), abs(y))))


@dataclass
class TrialResult:
    trial: str
    n: int
    a: list
    values: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)

    def check(self, name: str, measured: float, tol: float):
        ok = bool(measured <= tol)
        self.checks[name] = {"measured": float(measured), "tol": tol, "pass": ok}

    @property
    def passed(self) -> bool:
        return all(c["pass"] for c in self.checks.values())

    def to_dict(self) -> dict:
        return {
            "trial": self.trial,
            "n": self.n,
            "a": self.a,
            "values": self.values,
            "checks": self.checks,
            "pass": self.passed,
        }


def _closed_form(p: NormalizedPoly, fault: str | None) -> complex:
    exponent = closed_form_exponent(p.n)
    if fault == "closed-form-exponent":
        exponent += 1
    return 2.0 * p.a1**exponent * mirror_resultant(p)


def run_trial(name: str, p: NormalizedPoly, fault: str | None = None) -> TrialResult:
    n = p.n
    res = TrialResult(name, n, [_pair(z) for z in p.a])

    # moment routes
    rl = lq = 0.0
    for k in range(n):
        lau = moment_laurent(p, k)
        rl = max(rl, abs(moment_richardson(p, k) - lau) / (1.0 + abs(lau)))
        lq = max(lq, abs(moment_quadrature(p, k) - lau) / (1.0 + abs(lau)))
    res.check("richardson~laurent", rl, TOL["richardson~laurent"])
    res.check("laurent~quadrature", lq, TOL["laurent~quadrature"])
    total = float(np.sum(np.abs(p.a)))
    # Laurent and Richardson vanish structurally for k >= n; quadrature
    # is the route that exercises floating point here
    van = max(
        max(abs(moment_laurent(p, k)), abs(moment_richardson(p, k)), abs(moment_quadrature(p, k)))
        / max(total ** (k + 1), 1e-300)
        for k in range(n, n + 4)
    )
    res.check("vanishing", van, TOL["vanishing"])

    # top moment: a_1^n conj(a_n), with no factor n; the ratio to the
    # n-scaled variant is recorded so the discrepancy stays visible
    top = moment_laurent(p, n - 1) if n > 1 else None
    if top is not None:
        expected = p.a1**n * np.conj(p.a[-1])
        res.check("top_moment", abs(top - expected) / abs(expected), TOL["top_moment"])
        res.values["top_moment_over_n_scaled"] = _pair(top / (n * expected))

    # Jacobian routes
    ja = jacobian_analytic(p)
    jc = _closed_form(p, fault)
    jy = jacobian_y_matrix(p)
    fd = jacobian_finite_difference(p)
    res.values.update(
        analytic=_pair(ja), closed_form=_pair(jc), y_matrix=_pair(jy), finite_diff=fd
    )
    res.check("closed_form_identity", _rel(ja, jc), TOL["closed_form_identity"])
    imag = max(abs(ja.imag) / (1.0 + abs(ja)), abs(jc.imag) / (1.0 + abs(jc)))
    res.check("imaginary_part", imag, TOL["imaginary_part"])
    res.check("y_route", _rel(ja, jy), TOL["y_route"])
    res.check("finite_difference", _rel(abs(ja), abs(fd)), TOL["finite_difference"])
    M = jacobian_matrix(p)
    mirror_ok = np.array_equal(M[::-1, ::-1], np.conj(M))
    res.check("mirror_symmetry", 0.0 if mirror_ok else 1.0, 0.0)

    # resultant by roots vs Sylvester determinant
    q = derivative(p.poly)
    if n > 1:
        q_star = mirror_conjugate(q, n - 1)
        rd = resultant_det(q, n - 1, q_star, n - 1)
        rr = resultant_from_roots(q, q_star)
        res.check("resultant_oracle", abs(rd - rr) / max(abs(rd), abs(rr), 1e-300), TOL["resultant_oracle"])

    # real slice identity, on the real projection of the trial polynomial
    a_real = p.a.real.astype(complex)
    if a_real[-1] != 0:
        lhs, rhs = real_resultant_identity(NormalizedPoly(a_real))
        res.values["real_identity"] = [lhs, rhs]
        res.check("real_identity", abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-300), TOL["real_identity"])

    # critical set
    rep = degeneracy_report(p)
    res.values["min_distance"] = None if np.isinf(rep.min_distance) else rep.min_distance
    res.values["degenerate"] = rep.degenerate
    if n > 1:
        rebuilt = q.coeffs[-1] * np.poly(rep.roots)[::-1]
        res.check(
            "roots_reconstruct",
            float(np.max(np.abs(rebuilt - q.coeffs)) / np.max(np.abs(q.coeffs))),
            TOL["roots_reconstruct"],
        )
    scale = (
        2.0
        * p.a1 ** closed_form_exponent(n)
        * float(np.prod((1.0 + np.abs(rep.roots)) ** 2))
        * abs(q.coeffs[-1]) ** 2
    )
    if rep.degenerate:
        res.check("critical_degenerate", abs(jc) / scale, TOL["critical_degenerate"])
    elif rep.min_distance >= 0.1:
        # |J| must stay bounded away from zero: report 1e-8*scale / |J|
        res.check("critical_far", TOL["critical_far"] * scale / max(abs(jc), 1e-300), 1.0)
    return res


def trial_polys(n_max: int, trials: int, seed: int):
    """(name, polynomial) pairs: the golden cases, then random ones (n cycles 1..n_max)."""
    if trials <= 0:
        return []
    out = list(GOLDEN.items())
    for t in range(trials):
        n = 1 + t % n_max
        out.append((f"random-{t}", random_poly(trial_rng(seed, t), n)))
    return out


def run_verify(n_max: int = 6, trials: int = 100, seed: int = 7, fault: str | None = None):
    """Yield per-trial records followed by one summary record."""
    if not 1 <= n_max <= 10:
        raise ValueError(f"n-max must lie in 1..10, got {n_max}")
    if not 0 <= trials <= 10**4:
        raise ValueError(f"trials must lie in 0..10000, got {trials}")
    if fault is not None and fault not in FAULTS:
        raise ValueError(f"unknown fault {fault!r}")
    failures = []
    count = 0
    for name, p in trial_polys(n_max, trials, seed):
        result = run_trial(name, p, fault)
        count += 1
        if not result.passed:
            failures.append(
                {"trial": name, "checks": [c for c, v in result.checks.items() if not v["pass"]]}
            )
        yield result.to_dict()
    if count == 0:
        return
    calibration = calibrate_hurwitz(seed=seed)
    yield {
        "summary": True,
        "trials": count,
        "failures": failures,
        "pass": not failures,
        "hurwitz_calibration": {
            "status": "calibrated" if calibration.candidate is not None else "fallback",
            **calibration.to_dict(),
        },
    }

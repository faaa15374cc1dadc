"""Newton inversion of the moment map and a Hele-Shaw driver built on it.

Moments depend on both a and conj(a), so Newton runs on the real embedding
(a_1, Re a_2, Im a_2, ...) -> (mu_0, Re mu_1, Im mu_1, ...).  Under injection
at rate r, mu_0 grows like mu_0(0) + r t while every higher moment is
conserved; each time step is one inversion seeded by the previous shape.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .critical import degeneracy_report, local_univalence_check
from .linalg import SingularMatrixError, solve
from .moments import (
    MomentVector,
    embed_coefficients,
    moment_vector,
    real_coordinate_jacobian,
    restore_coefficients,
)
from .poly import NormalizedPoly, evaluate

MIN_DAMPING = 1e-6
ARMIJO = 1e-4


@dataclass(frozen=True)
class NewtonOptions:
    max_iterations: int = 25
    residual_tol: float = 1e-10
    step_damping: float = 1.0
    min_jacobian_modulus: float = 1e-12

    def __post_init__(self):
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")
        if not self.residual_tol > 0:
            raise ValueError("residual_tol must be positive")
        if not 0.0 < self.step_damping <= 1.0:
            raise ValueError("step_damping must lie in (0, 1]")


@dataclass
class NewtonTrace:
    iterates: list[NormalizedPoly] = field(default_factory=list)
    residual_norms: list[float] = field(default_factory=list)
    jacobian_moduli: list[float] = field(default_factory=list)
    converged: bool = False

    @property
    def solution(self) -> NormalizedPoly:
        return self.iterates[-1]

    @property
    def iterations(self) -> int:
        return len(self.iterates) - 1

    def to_dict(self) -> dict:
        from .fileio import poly_to_dict

        return {
            "converged": self.converged,
            "iterations": self.iterations,
            "residual_norms": self.residual_norms,
            "jacobian_moduli": self.jacobian_moduli,
            "iterates": [poly_to_dict(p) for p in self.iterates],
        }


class NewtonError(ArithmeticError):
    tag = "newton-failure"

    def __init__(self, message: str, trace: NewtonTrace):
        super().__init__(message)
        self.trace = trace


class SingularJacobianError(NewtonError):
    tag = "singular-jacobian"


class NoConvergenceError(NewtonError):
    tag = "no-convergence"


class A1CollapseError(NewtonError):
    tag = "a1-collapse"


def embed_real(p: NormalizedPoly) -> np.ndarray:
    return embed_coefficients(p)


def restore_real(x) -> NormalizedPoly:
    return restore_coefficients(x)


def newton_invert(
    target: MomentVector, init: NormalizedPoly, opts: NewtonOptions | None = None
) -> NewtonTrace:
    """Solve moment_vector(P) == target starting from ``init``.

    Steps are halved until a_1 stays positive and the residual norm
    decreases sufficiently.  Raises a NewtonError subclass (carrying the partial trace)
    on a singular Jacobian, an exhausted budget or stalled line search, or
    when no damped step keeps a_1 > 0.
    """
    opts = opts or NewtonOptions()
    if target.n != init.n:
        raise ValueError(f"target has n={target.n}, init has n={init.n}")
    goal = target.embed()
    trace = NewtonTrace()
    p = init
    x = embed_real(p)
    for it in range(opts.max_iterations + 1):
        F = moment_vector(p).embed() - goal
        res = float(np.max(np.abs(F)))
        trace.iterates.append(p)
        trace.residual_norms.append(res)
        if res <= opts.residual_tol:
            trace.converged = True
            return trace
        if it == opts.max_iterations:
            break
        J = real_coordinate_jacobian(p)
        det = abs(float(np.linalg.det(J)))
        trace.jacobian_moduli.append(det)
        # reciprocal condition number: insensitive to the a_1^(n^2-n+1)
        # scaling of |det J|
        rcond = 1.0 / float(np.linalg.cond(J))
        if not rcond >= opts.min_jacobian_modulus:
            raise SingularJacobianError(
                f"|J| = {det:.3e}, 1/cond = {rcond:.3e} at iteration {it}", trace
            )
        try:
            dx = solve(J, -F).real
        except SingularMatrixError as exc:
            raise SingularJacobianError(str(exc), trace) from exc
        # halve until a_1 stays positive and the squared residual norm passes
        # an Armijo test; near the root full steps pass, so the quadratic rate
        # is kept
        merit = float(F @ F)
        t = opts.step_damping
        a1_ok = False
        while t >= MIN_DAMPING:
            cand = x + t * dx
            if cand[0] > 0.0 and (cand.size == 1 or cand[-2:].any()):
                a1_ok = True
                q = restore_real(cand)
                Fq = moment_vector(q).embed() - goal
                if float(Fq @ Fq) <= (1.0 - ARMIJO * t) * merit:
                    break
            t /= 2.0
        else:
            if not a1_ok:
                raise A1CollapseError(f"no step keeps a_1 > 0 at iteration {it}", trace)
            raise NoConvergenceError(f"line search stalled at residual {res:.3e}", trace)
        x, p = cand, q
    raise NoConvergenceError(
        f"residual {trace.residual_norms[-1]:.3e} after {opts.max_iterations} iterations", trace
    )


@dataclass
class HeleShawTrace:
    times: list[float] = field(default_factory=list)
    polynomials: list[NormalizedPoly] = field(default_factory=list)
    moment_errors: list[float] = field(default_factory=list)
    mu0_errors: list[float] = field(default_factory=list)
    areas: list[float] = field(default_factory=list)
    newton_iterations: list[int] = field(default_factory=list)
    moments: list[MomentVector] = field(default_factory=list)
    error: str | None = None

    def to_dict(self) -> dict:
        from .fileio import moments_to_dict, poly_to_dict

        return {
            "times": self.times,
            "areas": self.areas,
            "moment_errors": self.moment_errors,
            "mu0_errors": self.mu0_errors,
            "newton_iterations": self.newton_iterations,
            "polynomials": [poly_to_dict(p) for p in self.polynomials],
            "moments": [moments_to_dict(m) for m in self.moments],
            "error": self.error,
        }


class HeleShawStepError(RuntimeError):
    def __init__(self, message: str, time: float, tag: str, trace: HeleShawTrace):
        super().__init__(message)
        self.time = time
        self.tag = tag
        self.trace = trace


def _record(trace: HeleShawTrace, t: float, p: NormalizedPoly, m0: MomentVector, rate: float, iters: int):
    m = moment_vector(p)
    trace.times.append(t)
    trace.polynomials.append(p)
    trace.moment_errors.append(float(np.max(np.abs(m.mu - m0.mu))) if m.n > 1 else 0.0)
    trace.mu0_errors.append(abs(m.mu0 - (m0.mu0 + rate * t)))
    trace.areas.append(math.pi * m.mu0)
    trace.newton_iterations.append(iters)
    trace.moments.append(m)


def heleshaw_evolve(
    p0: NormalizedPoly,
    rate: float,
    t_end: float,
    steps: int,
    opts: NewtonOptions | None = None,
) -> HeleShawTrace:
    """Injection-driven evolution with mu_0 = mu_0(0) + rate*t and mu_k frozen.

    ``rate`` is d(mu_0)/dt, i.e. area/pi per unit time.  On failure a
    HeleShawStepError carries the trace up to the last good step.
    """
    opts = opts or NewtonOptions()
    if rate < 0:
        raise ValueError("suction (rate < 0) is not supported")
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if degeneracy_report(p0).degenerate:
        raise ValueError("initial polynomial lies on the critical set")
    if not local_univalence_check(p0):
        raise ValueError("initial polynomial is not locally univalent in the closed disk")
    m0 = moment_vector(p0)
    trace = HeleShawTrace()
    _record(trace, 0.0, p0, m0, rate, 0)
    p = p0
    for i in range(1, steps + 1):
        t = i * t_end / steps
        target = MomentVector(m0.n, m0.mu0 + rate * t, m0.mu)
        try:
            sol = newton_invert(target, p, opts)
        except NewtonError as exc:
            trace.error = exc.tag
            raise HeleShawStepError(f"step at t={t}: {exc}", t, exc.tag, trace) from exc
        p = sol.solution
        if not local_univalence_check(p):
            trace.error = "lost-local-univalence"
            raise HeleShawStepError(
                f"P'(t={t}) vanishes in the closed unit disk", t, trace.error, trace
            )
        _record(trace, t, p, m0, rate, sol.iterations)
    return trace


def boundary_samples(p: NormalizedPoly, count: int) -> np.ndarray:
    """Rows (theta, x, y) of P(e^{i theta}) at ``count`` uniform angles."""
    if count < 3:
        raise ValueError("need at least 3 boundary samples")
    theta = 2.0 * np.pi * np.arange(count) / count
    w = evaluate(p.poly, np.exp(1j * theta))
    return np.column_stack([theta, w.real, w.imag])

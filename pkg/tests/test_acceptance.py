"""Acceptance criteria 1-10, one test each, one PASS/FAIL line each.

Run under pytest (lines are printed even without -s) or directly:
    python3 tests/test_acceptance.py
"""

from __future__ import annotations

import math
import sys
import time

import numpy as np
import pytest

from momentmap.critical import degeneracy_report, local_univalence_check
from momentmap.inverse import heleshaw_evolve, newton_invert
from momentmap.moments import (
    calibrate_hurwitz,
    real_resultant_identity,
    jacobian_analytic,
    jacobian_closed_form,
    jacobian_finite_difference,
    jacobian_y_matrix,
    moment_laurent,
    moment_quadrature,
    moment_richardson,
    moment_vector,
    real_jacobian,
)
from momentmap.poly import NormalizedPoly, Poly, multiply
from momentmap.resultant import resultant_det, resultant_from_roots
from momentmap.sampling import (
    random_poly,
    random_real_poly,
    random_univalent_poly,
    round_trip_case,
    trial_rng,
)

SEED = 2024
# observed convergence order log(r2/r1) / log(r1/r0) on the last residual
# triple above the roundoff floor: about 1 for linear decay, 2 for quadratic
RESIDUAL_FLOOR = 1e-13
MIN_ORDER = 1.5


def _rel(x, y):
    return abs(x - y) / max(abs(x), abs(y), 1e-300)


def _disk_poly(rng, deg):
    c = np.sqrt(rng.uniform(0, 1, deg + 1)) * np.exp(2j * np.pi * rng.uniform(0, 1, deg + 1))
    if abs(c[-1]) < 0.1:
        c[-1] = 1.0
    return Poly(c, deg)


def criterion_1():
    p = NormalizedPoly([1.0, 0.3])
    hand = 8 * 1.0**3 * 0.3**2 - 2 * 1.0**5
    ja, jc = jacobian_analytic(p), jacobian_closed_form(p)
    fd = jacobian_finite_difference(p)
    errs = [_rel(ja, -1.28), _rel(jc, -1.28), _rel(ja, hand), _rel(jc, hand)]
    ok = max(errs) <= 1e-12 and abs(abs(fd) - 1.28) <= 1e-5
    return ok, f"J={ja.real:.15g}, closed={jc.real:.15g}, |fd|={abs(fd):.9g}, max rel err {max(errs):.1e}"


def criterion_2():
    p = NormalizedPoly([1.0, 0.0, 0.2])
    t = 0.2
    target = 2 * (9 * t**2 - 1) ** 2
    exact = [jacobian_analytic(p), jacobian_closed_form(p), jacobian_y_matrix(p)]
    fd = jacobian_finite_difference(p)
    err = max(_rel(v, target) for v in exact)
    err_fd = _rel(abs(fd), target)
    ok = abs(target - 0.8192) < 1e-15 and err <= 1e-9 and err_fd <= 1e-5
    return ok, f"target {target:.6g}; exact routes rel err {err:.1e}; fd rel err {err_fd:.1e}"


def criterion_3():
    start = time.perf_counter()
    worst = worst_imag = 0.0
    for n in range(1, 9):
        for trial in range(200):
            p = random_poly(trial_rng(SEED + n, trial), n)
            ja, jc = jacobian_analytic(p), jacobian_closed_form(p)
            scale = 1 + abs(ja)
            worst = max(worst, abs(ja - jc) / scale)
            worst_imag = max(worst_imag, abs(ja.imag) / scale, abs(jc.imag) / (1 + abs(jc)))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-9 and worst_imag <= 1e-9 and elapsed <= 10.0
    return ok, f"1600 polys: max |Ja-Jc|/(1+|J|) {worst:.1e}, max imag {worst_imag:.1e}, {elapsed:.1f}s"


def criterion_4():
    rl = lq = van = 0.0
    for n in range(1, 7):
        for trial in range(100):
            p = random_poly(trial_rng(SEED + 10 + n, trial), n)
            for k in range(n):
                lau = moment_laurent(p, k)
                rl = max(rl, abs(moment_richardson(p, k) - lau) / (1 + abs(lau)))
                lq = max(lq, abs(moment_quadrature(p, k) - lau) / (1 + abs(lau)))
            scale = float(np.sum(np.abs(p.a)))
            for k in range(n, n + 4):
                bound = scale ** (k + 1)
                # the Laurent and Richardson routes vanish structurally here;
                # quadrature is the one that exercises floating point
                van = max(
                    van,
                    abs(moment_laurent(p, k)) / bound,
                    abs(moment_richardson(p, k)) / bound,
                    abs(moment_quadrature(p, k)) / bound,
                )
    ok = rl <= 1e-11 and lq <= 1e-9 and van <= 1e-12
    return ok, f"richardson~laurent {rl:.1e}, laurent~quadrature {lq:.1e}, vanishing {van:.1e}"


def criterion_5():
    rng = np.random.default_rng(SEED + 20)
    anti = mult = mono = oracle = 0.0
    for _ in range(200):
        a, b, c = (_disk_poly(rng, int(rng.integers(1, 5))) for _ in range(3))
        m, k = a.degree, b.degree
        anti = max(anti, _rel(resultant_det(b, k, a, m), (-1) ** (k * m) * resultant_det(a, m, b, k)))
        ac = multiply(a, c)
        mult = max(
            mult,
            _rel(resultant_det(ac, ac.degree, b, k), resultant_det(a, m, b, k) * resultant_det(c, c.degree, b, k)),
        )
        n = int(rng.integers(1, 5))
        zn = Poly(np.eye(n + 1)[n], n)
        mono = max(mono, _rel(resultant_det(zn, n, a, m), a.coeffs[0] ** n))
        oracle = max(oracle, _rel(resultant_det(a, m, b, k), resultant_from_roots(a, b)))
    ok = max(anti, mult, mono) <= 1e-9 and oracle <= 1e-8
    return ok, f"antisymmetry {anti:.1e}, multiplicativity {mult:.1e}, monomial {mono:.1e}, oracle {oracle:.1e}"


def criterion_6():
    p = NormalizedPoly([1.0, 0.25])
    jr = real_jacobian(p)
    lhs, rhs = real_resultant_identity(p)
    hand = 4 * (-1) * 1 * (-0.75) * 0.5 * 1.5
    golden = abs(jr - 1.5) <= 1e-12 and abs(lhs - 2.25) <= 1e-12 and abs(rhs - hand) <= 1e-12
    worst = 0.0
    for n in range(1, 7):
        for trial in range(100):
            lhs, rhs = real_resultant_identity(random_real_poly(trial_rng(SEED + 30 + n, trial), n))
            worst = max(worst, _rel(lhs, rhs))
    ok = golden and worst <= 1e-8
    return ok, f"golden J_R={jr:.15g}; randomized max rel err {worst:.1e}"


def criterion_7():
    """Returns (status, detail); status is PASS, FALLBACK or FAIL."""
    cal = calibrate_hurwitz(seed=SEED, samples=50, rtol=1e-6)
    d = cal.to_dict()
    if cal.candidate is not None and cal.validated:
        return "PASS", f"{d['candidate']} validated, max rel err {d['validation_max_rel_error']}"
    have = set(d["mismatch_factors"])
    if have >= {"2", "3", "4", "5"}:
        spans = []
        for n in ("2", "3", "4", "5"):
            best = min(d["mismatch_factors"][n].items(), key=lambda kv: kv[1][1] - kv[1][0])
            spans.append(f"n={n} {best[0]} ratio in [{best[1][0]:.3g}, {best[1][1]:.3g}]")
        return "FALLBACK", "no convention fits n=2,3; tightest per n: " + "; ".join(spans)
    return "FAIL", f"no candidate and mismatch factors missing for n in {sorted({'2', '3', '4', '5'} - have)}"


def criterion_8():
    flagged = []
    for a in ([1.0, 0.5], [1.0, 0.0, 1 / 3]):
        p = NormalizedPoly(a)
        rep = degeneracy_report(p)
        j = max(abs(jacobian_closed_form(p)), abs(jacobian_analytic(p)))
        flagged.append(rep.degenerate and rep.min_distance <= 1e-10 and j <= 1e-9)
    rng = trial_rng(SEED, 40)
    bad = 0
    for trial in range(100):
        p = random_univalent_poly(rng, 1 + trial % 6)
        if not local_univalence_check(p) or degeneracy_report(p).degenerate:
            bad += 1
    ok = all(flagged) and bad == 0
    return ok, f"golden flagged {flagged}; {bad}/100 random univalent polys degenerate"


def _observed_order(residuals):
    """Order estimate on the last usable triple, or None if fewer than three residuals clear the floor."""
    r = [x for x in residuals if x > RESIDUAL_FLOOR]
    if len(r) < 3 or not r[-3] > r[-2] > r[-1]:
        return None
    return math.log(r[-1] / r[-2]) / math.log(r[-2] / r[-3])


def criterion_9():
    worst_err = 0.0
    orders = []
    max_iters = 0
    failures = 0
    for trial in range(50):
        n = 2 + trial % 5
        p, init = round_trip_case(trial_rng(SEED + 50, trial), n)
        try:
            trace = newton_invert(moment_vector(p), init)
        except ArithmeticError:
            failures += 1
            continue
        worst_err = max(worst_err, float(np.max(np.abs(trace.solution.a - p.a))))
        max_iters = max(max_iters, trace.iterations)
        order = _observed_order(trace.residual_norms)
        if order is not None:
            orders.append(order)
    quadratic = bool(orders) and min(orders) >= MIN_ORDER
    ok = failures == 0 and worst_err <= 1e-8 and max_iters <= 25 and quadratic
    low = f"{min(orders):.2f}" if orders else "n/a"
    return ok, (
        f"{50 - failures}/50 converged, max coef err {worst_err:.1e}, max iterations {max_iters}, "
        f"observed order >= {low} on {len(orders)} traces"
    )


def criterion_10():
    tr = heleshaw_evolve(NormalizedPoly([1.0]), 1.0, 3.0, 12)
    law = max(abs(p.a1 - math.sqrt(1 + t)) for t, p in zip(tr.times, tr.polynomials))
    tr2 = heleshaw_evolve(NormalizedPoly([1.0, 0.1]), 1.0, 1.0, 10)
    mu1 = max(abs(m.mu[0] - 0.1) for m in tr2.moments)
    affine = max(tr2.mu0_errors)
    ok = law <= 1e-10 and mu1 <= 1e-8 and affine <= 1e-8
    return ok, f"n=1 max |a1 - sqrt(1+t)| {law:.1e}; n=2 mu1 drift {mu1:.1e}, mu0 affine err {affine:.1e}"


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
    10: criterion_10,
}


def _status(result):
    ok, detail = result
    if isinstance(ok, str):
        return ok, detail
    return ("PASS" if ok else "FAIL"), detail


def _line(k, status, detail):
    return f"[criterion {k:2d}] {status:8s} {detail}"


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k, capsys):
    status, detail = _status(CRITERIA[k]())
    with capsys.disabled():
        print("\n" + _line(k, status, detail), flush=True)
    assert status in ("PASS", "FALLBACK"), detail


if __name__ == "__main__":
    failed = 0
    for k in sorted(CRITERIA):
        status, detail = _status(CRITERIA[k]())
        failed += status == "FAIL"
        print(_line(k, status, detail), flush=True)
    sys.exit(1 if failed else 0)

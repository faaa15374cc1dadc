"""Command-line entry point.

Exit codes: 0 success, 1 bad input, 2 numerical failure, 3 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import fileio
from .critical import RootFindingError, degeneracy_report
from .inverse import (
    HeleShawStepError,
    NewtonError,
    NewtonOptions,
    boundary_samples,
    heleshaw_evolve,
    newton_invert,
)
from .linalg import SingularMatrixError
from .moments import (
    InconsistentMomentError,
    MomentVector,
    jacobian_analytic,
    jacobian_closed_form,
    jacobian_finite_difference,
    jacobian_report,
    jacobian_y_matrix,
    moment_laurent,
    moment_quadrature,
    moment_richardson,
)
from .resultant import IllPosedError
from .sampling import random_poly, random_univalent_poly
from .verify import FAULTS, run_verify

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC, EXIT_VERIFY = 0, 1, 2, 3

NUMERIC_ERRORS = (
    RootFindingError,
    SingularMatrixError,
    InconsistentMomentError,
    IllPosedError,
    NewtonError,
    HeleShawStepError,
)

MOMENT_ROUTES = {
    "laurent": moment_laurent,
    "richardson": moment_richardson,
    "quadrature": moment_quadrature,
}

JACOBIAN_ROUTES = {
    "analytic": jacobian_analytic,
    "closed": jacobian_closed_form,
    "ymatrix": jacobian_y_matrix,
    "fd": jacobian_finite_difference,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def _emit(obj, out=None):
    text = fileio.dumps(obj)
    print(text, file=out or sys.stdout)


def cmd_moments(args) -> int:
    p = fileio.load_poly(args.input)
    route = MOMENT_ROUTES[args.method]
    mus = [route(p, k) for k in range(p.n)]
    _emit(fileio.moments_to_dict(MomentVector(p.n, mus[0].real, mus[1:])))
    return EXIT_OK


def cmd_jacobian(args) -> int:
    p = fileio.load_poly(args.input)
    if args.all:
        _emit(jacobian_report(p, args.step).to_dict())
        return EXIT_OK
    route = JACOBIAN_ROUTES[args.method]
    value = route(p, args.step) if args.method == "fd" else route(p)
    z = complex(value)
    _emit({"method": args.method, "value": [z.real, z.imag]})
    return EXIT_OK


def cmd_critical(args) -> int:
    p = fileio.load_poly(args.input)
    _emit(degeneracy_report(p, args.tol).to_dict())
    return EXIT_OK


def cmd_verify(args) -> int:
    ok = True
    for record in run_verify(args.n_max, args.trials, args.seed, args.inject_fault):
        _emit(record)
        if record.get("summary"):
            ok = record["pass"]
    return EXIT_OK if ok else EXIT_VERIFY


def _newton_options(args) -> NewtonOptions:
    return NewtonOptions(max_iterations=args.max_iterations, residual_tol=args.tol)


def cmd_invert(args) -> int:
    target = fileio.load_moments(args.target)
    init = fileio.load_poly(args.init)
    try:
        trace = newton_invert(target, init, _newton_options(args))
    except NewtonError as exc:
        _emit({"error": exc.tag, "message": str(exc), "trace": exc.trace.to_dict()})
        return EXIT_NUMERIC
    _emit({"poly": fileio.poly_to_dict(trace.solution), "trace": trace.to_dict()})
    return EXIT_OK


def _write_heleshaw(trace, out: Path, samples: int, svg: bool):
    curves = []
    for i, p in enumerate(trace.polynomials):
        rows = boundary_samples(p, samples)
        curves.append(rows)
        fileio.atomic_write(out / f"boundary_{i:04d}.csv", fileio.boundary_csv(rows))
    if svg and curves:
        fileio.atomic_write(out / "overlay.svg", fileio.svg_overlay(curves))
    fileio.atomic_write(out / "trace.json", fileio.dumps(trace.to_dict()) + "\n")


def cmd_heleshaw(args) -> int:
    p0 = fileio.load_poly(args.input)
    out = Path(args.out) if args.out else None
    status = EXIT_OK
    try:
        trace = heleshaw_evolve(p0, args.rate, args.t_end, args.steps, _newton_options(args))
    except HeleShawStepError as exc:
        trace = exc.trace
        status = EXIT_NUMERIC
    if out is not None:
        _write_heleshaw(trace, out, args.boundary_samples, args.svg)
    summary = {
        "steps": len(trace.times) - 1,
        "max_moment_error": max(trace.moment_errors),
        "max_mu0_error": max(trace.mu0_errors),
        "error": trace.error,
    }
    _emit(summary if out is not None else {**summary, "trace": trace.to_dict()})
    return status


def cmd_random(args) -> int:
    rng = np.random.default_rng(args.seed)
    p = random_univalent_poly(rng, args.n) if args.univalent else random_poly(rng, args.n)
    _emit(fileio.poly_to_dict(p))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="momentmap", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("moments", help="moments of a polynomial file")
    s.add_argument("input")
    s.add_argument("--method", choices=sorted(MOMENT_ROUTES), default="laurent")
    s.set_defaults(func=cmd_moments)

    s = sub.add_parser("jacobian", help="Jacobian determinant of the moment map")
    s.add_argument("input")
    s.add_argument("--method", choices=sorted(JACOBIAN_ROUTES), default="closed")
    s.add_argument("--all", action="store_true", help="every route plus discrepancies")
    s.add_argument("--step", type=float, default=1e-6, help="finite-difference step")
    s.set_defaults(func=cmd_jacobian)

    s = sub.add_parser("critical", help="roots of P' and degeneracy report")
    s.add_argument("input")
    s.add_argument("--tol", type=float, default=1e-9)
    s.set_defaults(func=cmd_critical)

    s = sub.add_parser("verify", help="randomized verification of all identities")
    s.add_argument("--n-max", type=int, default=6)
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--seed", type=int, default=7)
    s.add_argument("--inject-fault", choices=FAULTS, default=None, help=argparse.SUPPRESS)
    s.set_defaults(func=cmd_verify)

    for name, helptext in (("invert", "Newton inversion of a moment file"),
                           ("heleshaw", "injection-driven Hele-Shaw evolution")):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("--max-iterations", type=int, default=25)
        s.add_argument("--tol", type=float, default=1e-10)
        if name == "invert":
            s.add_argument("target")
            s.add_argument("--init", required=True)
            s.set_defaults(func=cmd_invert)
        else:
            s.add_argument("input")
            s.add_argument("--rate", type=float, default=1.0)
            s.add_argument("--t-end", type=float, default=1.0)
            s.add_argument("--steps", type=int, default=10)
            s.add_argument("--out", default=None)
            s.add_argument("--boundary-samples", type=int, default=256)
            s.add_argument("--svg", action="store_true", help="also write overlay.svg")
            s.set_defaults(func=cmd_heleshaw)

    s = sub.add_parser("random", help="emit a seeded random polynomial file")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--univalent", action="store_true", help="all roots of P' outside the closed disk")
    s.set_defaults(func=cmd_random)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NUMERIC_ERRORS as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ValueError, OSError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())

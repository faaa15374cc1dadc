"""Wirtinger partials of the moments and the Jacobian determinant by four routes.

Coordinates are a_2..a_n together with their conjugates, plus the real a_1.
The closed form is 2 a_1^(n^2-n+1) Res(P', P'*).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..linalg import determinant
from ..poly import NormalizedPoly, coefficient_of, derivative, mirror_conjugate, multiply, power
from ..resultant import mirror_resultant
from .routes import moment_laurent

# --- Wirtinger partials and the Jacobian -----------------------------------


class _PowerCache:
    """Q, Q* and the powers P^k shared by all partials of one polynomial."""

    def __init__(self, p: NormalizedPoly):
        self.n = p.n
        P = p.poly
        self.Q = derivative(P)
        self.Qstar = mirror_conjugate(self.Q, self.n - 1)
        self.powers = [power(P, 0)]
        for _ in range(1, self.n):
            self.powers.append(multiply(self.powers[-1], P))

    def partial_a(self, k: int, j: int) -> complex:
        return coefficient_of(multiply(self.Qstar, self.powers[k]), self.n - j)

    def partial_abar(self, k: int, j: int) -> complex:
        return coefficient_of(multiply(self.Q, self.powers[k]), j - 1)


def _check_kj(p: NormalizedPoly, k: int, j: int):
    if not 0 <= k <= p.n - 1:
        raise ValueError(f"k={k} outside 0..{p.n - 1}")
    if not 1 <= j <= p.n:
        raise ValueError(f"j={j} outside 1..{p.n}")


def wirtinger_partial_a(p: NormalizedPoly, k: int, j: int) -> complex:
    """d mu_k / d a_j = lambda_{n-j}(Q* P^k).

    (k, j) = (0, 1) is excluded: a_1 is real and mu_0 also depends on
    conj(a_1); jacobian_matrix supplies 2*a_1 for that entry.
    """
    _check_kj(p, k, j)
    if (k, j) == (0, 1):
        raise ValueError("(k, j) = (0, 1) is not a Wirtinger entry; use 2*a_1")
    return _PowerCache(p).partial_a(k, j)


def wirtinger_partial_abar(p: NormalizedPoly, k: int, j: int) -> complex:
    """d mu_k / d conj(a_j) = lambda_{j-1}(P' P^k), for j >= 2."""
    _check_kj(p, k, j)
    if j == 1:
        raise ValueError("conj(a_1) is not an independent coordinate")
    return _PowerCache(p).partial_abar(k, j)


def _moment_rows(p: NormalizedPoly) -> np.ndarray:
    """Rows mu_0..mu_{n-1} over columns (conj a_n..conj a_2, a_1, a_2..a_n)."""
    n = p.n
    cache = _PowerCache(p)
    rows = np.zeros((n, 2 * n - 1), dtype=complex)
    for k in range(n):
        for j in range(2, n + 1):
            rows[k, n - j] = cache.partial_abar(k, j)
            rows[k, n - 2 + j] = cache.partial_a(k, j)
        rows[k, n - 1] = 2.0 * p.a1 if k == 0 else cache.partial_a(k, 1)
    return rows


def jacobian_matrix(p: NormalizedPoly) -> np.ndarray:
    """(2n-1)x(2n-1) Wirtinger Jacobian.

    Rows: conj(mu_{n-1}) .. conj(mu_1), mu_0, mu_1 .. mu_{n-1}.
    Columns: conj(a_n) .. conj(a_2), a_1, a_2 .. a_n.
    A conjugate-moment row is the reversed conjugate of its moment row.
    """
    n = p.n
    rows = _moment_rows(p)
    mat = np.zeros((2 * n - 1, 2 * n - 1), dtype=complex)
    mat[n - 1 :] = rows
    for k in range(1, n):
        mat[n - 1 - k] = np.conj(rows[k][::-1])
    return mat


def jacobian_analytic(p: NormalizedPoly) -> complex:
    return determinant(jacobian_matrix(p))


def closed_form_exponent(n: int) -> int:
    return n * n - n + 1


def jacobian_closed_form(p: NormalizedPoly) -> complex:
    """2 a_1^(n^2-n+1) Res(P', P'*)."""
    return 2.0 * p.a1 ** closed_form_exponent(p.n) * mirror_resultant(p)


def y_matrix(p: NormalizedPoly) -> np.ndarray:
    """The (2n-1)x(2n-1) matrix assembled column by column from q_j = (j+1) a_{j+1}."""
    n = p.n
    q = np.asarray(derivative(p.poly).coeffs)
    size = 2 * n - 1
    Y = np.zeros((size, size), dtype=complex)
    low = np.concatenate([[q[0]], np.conj(q[1:])])  # q_0, conj q_1 .. conj q_{n-1}
    high = q[::-1]  # q_{n-1} .. q_1, q_0
    for j in range(1, n):
        Y[j - 1 : j - 1 + n, j - 1] = low
    Y[:, n - 1] = np.concatenate([q[:0:-1], [2.0 * q[0]], np.conj(q[1:])])
    for j in range(n + 1, size + 1):
        Y[j - n : j, j - 1] = high
    return Y


def y_route_sign(n: int) -> int:
    # row order of Y is the reversal of the Jacobian's; calibrated against
    # jacobian_analytic
    return -1 if (n - 1) % 2 else 1


def jacobian_y_matrix(p: NormalizedPoly) -> complex:
    n = p.n
    return y_route_sign(n) * p.a1 ** (n * n - n) * determinant(y_matrix(p))


# --- real coordinates ------------------------------------------------------


def embed_coefficients(p: NormalizedPoly) -> np.ndarray:
    out = [p.a1]
    for z in p.a[1:]:
        out.extend([z.real, z.imag])
    return np.array(out, dtype=float)


def restore_coefficients(x) -> NormalizedPoly:
    x = np.asarray(x, dtype=float)
    if x.size % 2 != 1:
        raise ValueError(f"real embedding has odd length 2n-1, got {x.size}")
    a = np.concatenate([[complex(x[0])], x[1::2] + 1j * x[2::2]])
    return NormalizedPoly(a)


def real_coordinate_jacobian(p: NormalizedPoly) -> np.ndarray:
    """Jacobian of (a_1, Re a_2, Im a_2, ...) -> (mu_0, Re mu_1, Im mu_1, ...).

    Built from the Wirtinger rows: d/dx = d/da + d/d(conj a),
    d/dy = i (d/da - d/d(conj a)).
    """
    n = p.n
    rows = _moment_rows(p)
    dim = 2 * n - 1
    D = np.zeros((n, dim), dtype=complex)
    D[:, 0] = rows[:, n - 1]
    for j in range(2, n + 1):
        da = rows[:, n - 2 + j]
        dab = rows[:, n - j]
        D[:, 2 * j - 3] = da + dab
        D[:, 2 * j - 2] = 1j * (da - dab)
    J = np.zeros((dim, dim))
    J[0] = D[0].real
    for k in range(1, n):
        J[2 * k - 1] = D[k].real
        J[2 * k] = D[k].imag
    return J


def _moment_embedding(p: NormalizedPoly) -> np.ndarray:
    mus = [moment_laurent(p, k) for k in range(p.n)]
    out = [mus[0].real]
    for z in mus[1:]:
        out.extend([z.real, z.imag])
    return np.array(out)


def finite_difference_matrix(p: NormalizedPoly, step: float = 1e-6) -> np.ndarray:
    if not 1e-8 <= step <= 1e-3:
        raise ValueError(f"step {step} outside [1e-8, 1e-3]")
    x0 = embed_coefficients(p)
    dim = x0.size
    J = np.zeros((dim, dim))
    for c in range(dim):
        h = step * max(1.0, abs(x0[c]))
        xp, xm = x0.copy(), x0.copy()
        xp[c] += h
        xm[c] -= h
        J[:, c] = (_moment_embedding(restore_coefficients(xp)) - _moment_embedding(restore_coefficients(xm))) / (2 * h)
    return J


def jacobian_finite_difference(p: NormalizedPoly, step: float = 1e-6) -> float:
    """Determinant of the central-difference Jacobian in real coordinates.

    Its modulus equals |J_C|; the sign depends on coordinate orientation.
    """
    return float(np.linalg.det(finite_difference_matrix(p, step)))


@dataclass
class JacobianReport:
    n: int
    analytic: complex
    closed_form: complex
    y_matrix: complex
    finite_diff: float
    pairwise_rel_errors: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        def pair(z):
            return [float(complex(z).real), float(complex(z).imag)]

        return {
            "n": self.n,
            "analytic": pair(self.analytic),
            "closed_form": pair(self.closed_form),
            "y_matrix": pair(self.y_matrix),
            "finite_diff": float(self.finite_diff),
            "pairwise_rel_errors": dict(self.pairwise_rel_errors),
        }


def _rel(x: complex, y: complex) -> float:
    return float(abs(x - y) / (1.0 + max(abs(x), abs(y))))


def jacobian_report(p: NormalizedPoly, step: float = 1e-6) -> JacobianReport:
    values = {
        "analytic": jacobian_analytic(p),
        "closed_form": jacobian_closed_form(p),
        "y_matrix": jacobian_y_matrix(p),
    }
    fd = jacobian_finite_difference(p, step)
    errors = {}
    names = list(values)
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            errors[f"{a}~{b}"] = _rel(values[a], values[b])
    # finite differences only determine the modulus
    for a in names:
        errors[f"{a}~finite_diff"] = _rel(abs(values[a]), abs(fd))
    return JacobianReport(p.n, finite_diff=fd, pairwise_rel_errors=errors, **values)

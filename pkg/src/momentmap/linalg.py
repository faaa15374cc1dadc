"""Determinant and linear solve for small dense complex matrices.

Matrices are plain 2-D numpy arrays.  Both routines run LU factorization with
partial pivoting by largest modulus; the Sylvester and Y matrices carry
structured zeros, so pivoting is not optional.
"""

from __future__ import annotations

import numpy as np

MAX_DIM = 4096
SINGULAR_RTOL = 1e-13


class SingularMatrixError(ArithmeticError):
    pass


def _square(m) -> np.ndarray:
    a = np.array(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] > MAX_DIM:
        raise ValueError(f"dimension {a.shape[0]} exceeds {MAX_DIM}")
    return a


def lu_factor(m):
    """In-place style LU with row pivoting.

    Returns ``(lu, perm, sign)`` where ``lu`` packs unit-lower L and U, or
    ``None`` for ``lu`` when some pivot column is entirely zero.
    """
    a = _square(m)
    size = a.shape[0]
    perm = np.arange(size)
    sign = 1
    for col in range(size):
        piv = col + int(np.argmax(np.abs(a[col:, col])))
        if a[piv, col] == 0:
            return None, perm, sign
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
            perm[[col, piv]] = perm[[piv, col]]
            sign = -sign
        a[col + 1 :, col] /= a[col, col]
        a[col + 1 :, col + 1 :] -= np.outer(a[col + 1 :, col], a[col, col + 1 :])
    return a, perm, sign


def determinant(m) -> complex:
    a = _square(m)
    if a.shape[0] == 0:
        return 1.0 + 0j
    lu, _, sign = lu_factor(a)
    if lu is None:
        return 0j
    return complex(sign * np.prod(np.diag(lu)))


def solve(m, rhs) -> np.ndarray:
    a = _square(m)
    b = np.array(rhs, dtype=complex).reshape(-1)
    size = a.shape[0]
    if b.size != size:
        raise ValueError(f"rhs has length {b.size}, matrix has {size} rows")
    if size == 0:
        return b
    scale = float(np.max(np.abs(a)))
    lu, perm, _ = lu_factor(a)
    if lu is None:
        raise SingularMatrixError("matrix has an all-zero pivot column")
    pivots = np.abs(np.diag(lu))
    if scale == 0.0 or pivots.min() < SINGULAR_RTOL * scale:
        raise SingularMatrixError(
            f"pivot modulus {pivots.min():.3e} below {SINGULAR_RTOL:g} x max entry {scale:.3e}"
        )
    y = b[perm].copy()
    for i in range(1, size):
        y[i] -= lu[i, :i] @ y[:i]
    for i in range(size - 1, -1, -1):
        y[i] = (y[i] - lu[i, i + 1 :] @ y[i + 1 :]) / lu[i, i]
    return y

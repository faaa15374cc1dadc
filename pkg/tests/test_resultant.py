import numpy as np
import pytest
from hypothesis import given

from momentmap.poly import NormalizedPoly, Poly, multiply
from momentmap.resultant import (
    HurwitzConvention,
    IllPosedError,
    hurwitz_determinant,
    hurwitz_matrix,
    mirror_resultant,
    resultant_det,
    resultant_from_roots,
    sylvester_matrix,
)

from strategies import random_poly_tuples


def _rel(x, y):
    return abs(x - y) / max(abs(x), abs(y), 1e-300)


def test_two_linear_factors():
    # (z - 2) and (z - 5): Res = 2 - 5
    a = Poly.from_coeffs([-2, 1])
    b = Poly.from_coeffs([-5, 1])
    assert resultant_det(a, 1, b, 1) == pytest.approx(-3)


def test_sylvester_shape_and_bands():
    a = Poly.from_coeffs([1, 2, 3])
    b = Poly.from_coeffs([4, 5])
    s = sylvester_matrix(a, 2, b, 1).matrix
    assert s.shape == (3, 3)
    assert np.array_equal(s[0], [3, 2, 1])
    assert np.array_equal(s[1], [5, 4, 0])
    assert np.array_equal(s[2], [0, 5, 4])


def test_formal_degree_below_declared_rejected():
    with pytest.raises(ValueError):
        sylvester_matrix(Poly.from_coeffs([1, 2, 3]), 1, Poly.constant(1), 0)


def test_common_root_gives_zero():
    a = Poly.from_coeffs([-1, 0, 1])  # z^2 - 1
    b = Poly.from_coeffs([1, 1])  # z + 1
    assert abs(resultant_det(a, 2, b, 1)) < 1e-14


@given(random_poly_tuples(2, 1, 4))
def test_antisymmetry(pair):
    a, b = pair
    m, k = a.degree, b.degree
    assert _rel(resultant_det(b, k, a, m), (-1) ** (k * m) * resultant_det(a, m, b, k)) <= 1e-9


@given(random_poly_tuples(3, 1, 3))
def test_multiplicativity(triple):
    a, c, b = triple
    ac = multiply(a, c)
    lhs = resultant_det(ac, ac.degree, b, b.degree)
    rhs = resultant_det(a, a.degree, b, b.degree) * resultant_det(c, c.degree, b, b.degree)
    assert _rel(lhs, rhs) <= 1e-9


@given(random_poly_tuples(1, 0, 5))
def test_monomial_rule(single):
    (a,) = single
    for n in (1, 2, 3):
        zn = Poly(np.eye(n + 1)[n], n)
        assert _rel(resultant_det(zn, n, a, a.degree), a.coeffs[0] ** n) <= 1e-9


@given(random_poly_tuples(2, 1, 5))
def test_determinant_matches_root_oracle(pair):
    a, b = pair
    assert _rel(resultant_det(a, a.degree, b, b.degree), resultant_from_roots(a, b)) <= 1e-8


def test_root_oracle_rejects_vanishing_lead():
    with pytest.raises(IllPosedError):
        resultant_from_roots(Poly([1, 0], 1), Poly.from_coeffs([1, 1]))


def test_mirror_resultant_n1_is_one():
    assert mirror_resultant(NormalizedPoly([3.0])) == 1


def test_hurwitz_layout():
    # cubic c0 + c1 z + c2 z^2 + c3 z^3, descending reading (c3, c2, c1, c0)
    q = Poly.from_coeffs([4, 3, 2, 1])
    h = hurwitz_matrix(q, 3, HurwitzConvention.DESCENDING)
    assert np.array_equal(h, [[2, 4, 0], [1, 3, 0], [0, 2, 4]])
    h = hurwitz_matrix(q, 3, "ascending")
    assert np.array_equal(h, [[3, 1, 0], [4, 2, 0], [0, 3, 1]])


def test_hurwitz_stable_cubic_minors_positive():
    # (z+1)(z+2)(z+3) is Hurwitz stable
    q = Poly.from_coeffs([6, 11, 6, 1])
    for order in range(1, 4):
        assert hurwitz_determinant(q, order).real > 0


def test_hurwitz_order_range():
    with pytest.raises(ValueError):
        hurwitz_matrix(Poly.from_coeffs([1, 1]), 2)
    assert hurwitz_determinant(Poly.from_coeffs([1, 1]), 0) == 1

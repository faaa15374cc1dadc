import numpy as np
import pytest
from hypothesis import given

from momentmap.critical import (
    companion_matrix,
    degeneracy_report,
    derivative_roots,
    local_univalence_check,
    polished_roots,
)
from momentmap.moments import jacobian_closed_form
from momentmap.poly import NormalizedPoly, Poly
from momentmap.sampling import random_univalent_poly

from strategies import polys


def test_companion_eigenvalues():
    p = Poly.from_coeffs([6, -5, 1])  # (z-2)(z-3)
    assert np.allclose(sorted(np.linalg.eigvals(companion_matrix(p)).real), [2, 3])


@given(polys(1, 6))
def test_polished_roots_are_roots(p):
    r = polished_roots(p)
    assert r.size == p.degree
    assert np.allclose(p.coeffs[-1] * np.poly(r)[::-1], p.coeffs, atol=1e-8 * np.abs(p.coeffs).max())


def test_n1_has_no_critical_points():
    rep = degeneracy_report(NormalizedPoly([1.5]))
    assert rep.roots.size == 0
    assert rep.min_distance == np.inf and not rep.degenerate
    assert rep.locally_univalent_in_closed_disk
    assert rep.to_dict()["min_distance"] is None


def test_boundary_root_is_degenerate():
    rep = degeneracy_report(NormalizedPoly([1.0, 0.5]))
    assert rep.degenerate and rep.min_distance <= 1e-12
    assert not rep.locally_univalent_in_closed_disk


def test_conjugate_pair_on_circle():
    rep = degeneracy_report(NormalizedPoly([1.0, 0.0, 1 / 3]))
    assert np.allclose(sorted(rep.roots, key=lambda z: z.imag), [-1j, 1j])
    assert rep.degenerate


def test_nondegenerate_example():
    rep = degeneracy_report(NormalizedPoly([1.0, 0.3]))
    assert not rep.degenerate
    assert rep.min_distance == pytest.approx(1.0 / 0.36 - 1.0)


def test_reciprocal_pair_inside_and_outside():
    # P' = (1 - z/2)(1 - 2 z / conj) -> roots 2 and 1/2 have product 1
    q = np.convolve([1, -0.5], [1, -2.0])
    a = q / np.arange(1, 4)
    p = NormalizedPoly(a)
    assert degeneracy_report(p).degenerate
    assert abs(jacobian_closed_form(p)) < 1e-12


@pytest.mark.parametrize("tol", [0.0, -1.0, 0.5])
def test_tolerance_range(tol):
    with pytest.raises(ValueError):
        degeneracy_report(NormalizedPoly([1.0, 0.3]), tol)


def test_random_univalent_polys_are_nondegenerate():
    rng = np.random.default_rng(3)
    for n in range(1, 7):
        for _ in range(5):
            p = random_univalent_poly(rng, n)
            assert local_univalence_check(p)
            assert not degeneracy_report(p).degenerate


def test_derivative_roots_count():
    assert derivative_roots(NormalizedPoly([1.0, 0.1, 0.1, 0.1])).size == 3

import numpy as np
import pytest

from hirota.errors import BranchPointDegeneracy, ValidationError
from hirota.scattering import (TruncatedPotential, a_values, jost_adjoint_product,
                               locate_eigenvalues, scattering_coeffs, window_product)
from hirota.solutions import SolutionSpec
from hirota.spectral import Params

P = Params()


def _potential(zs, L=40):
    spec = SolutionSpec(family="nfold", params=P, points=tuple((z, 0) for z in zs),
                        peak_tuned=True)
    return TruncatedPotential(-L, spec.evaluator()(np.arange(-L, L + 1), 0.0), P)


@pytest.fixture(scope="module")
def one():
    return _potential([1.8])


@pytest.fixture(scope="module")
def background():
    return TruncatedPotential(-20, np.full(41, P.A), P)


def test_background_is_reflectionless(background):
    for z in (1.2j, np.exp(0.4j), 2.0 + 0.5j):
        d = scattering_coeffs(background, z)
        assert d.a_coeff == pytest.approx(1, abs=1e-12)
    assert scattering_coeffs(background, np.exp(0.4j)).b_coeff == pytest.approx(0, abs=1e-12)


def test_eigenvalues_recovered(one):
    found = sorted(locate_eigenvalues(one, (1.52, 3.0)), key=lambda z: z.real)
    assert found == pytest.approx([-1.8, 1.8], abs=1e-10)


def test_two_soliton_eigenvalues():
    pot = _potential([1.8, 2.25])
    found = sorted(locate_eigenvalues(pot, (1.52, 3.5)), key=lambda z: z.real)
    assert found == pytest.approx([-2.25, -1.8, 1.8, 2.25], abs=1e-9)


def test_a_vanishes_at_planted_point(one):
    assert abs(a_values(one, np.array([1.8]))[0]) < 1e-10


def test_symmetry(one):
    for z in (1.2j, 0.6 + 0.8j, 2 - 0.4j):
        p, m = scattering_coeffs(one, z), scattering_coeffs(one, -z)
        assert p.a_coeff == pytest.approx(m.a_coeff, abs=1e-12)
        assert p.b_coeff == pytest.approx(-m.b_coeff, abs=1e-12)


def test_site_independence(one):
    a = [scattering_coeffs(one, 1.2j, site=k, check_sites=False).a_coeff for k in (-30, 0, 30)]
    assert a == pytest.approx([a[0]] * 3, rel=1e-10)


def test_det_s_on_unit_circle(one):
    d = scattering_coeffs(one, np.exp(1.1j))
    assert d.det_S * window_product(one) == pytest.approx(1, abs=1e-12)


def test_adjoint_pairing_on_unit_circle(one):
    M = jost_adjoint_product(one, np.exp(0.9j), 5)
    assert M == pytest.approx(np.eye(2), abs=1e-12)


def test_edge_and_validation():
    with pytest.raises(ValidationError):
        TruncatedPotential(0, np.array([1.0, P.A, P.A]), P)
    with pytest.raises(ValidationError):
        TruncatedPotential(0, np.full(5, 0.0), Params(A=0.0))
    with pytest.raises(ValidationError):
        TruncatedPotential(0, np.full(2, P.A), P)


def test_branch_point_degenerate(background):
    with pytest.raises(BranchPointDegeneracy):
        scattering_coeffs(background, 1.5, side="+")

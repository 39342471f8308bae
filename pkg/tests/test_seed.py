import numpy as np
import pytest
from helpers import cauchy_taylor, weighted_relative

from hirota.darboux import rogue_spec
from hirota.errors import BranchPointEigenvector, NearBranchPoint, NonremovableSingularity
from hirota.lax import shift_matrix
from hirota.seed import CTilde, direction_constant, eigenvector, phi_elementary
from hirota.seed import taylor_coefficients
from hirota.spectral import Params

P = Params()


def test_phi_is_identity_at_normalization():
    spec = rogue_spec(P, n0=3, t0=0.5)
    assert phi_elementary(3, 0.5, 2 + 0.3j, spec) == pytest.approx(np.eye(2), abs=1e-14)


def test_phi_solves_shift_equation():
    spec = rogue_spec(P)
    z = 1.7 + 0.4j
    lhs = phi_elementary(1, 0.2, z, spec)
    rhs = shift_matrix(z, P.A) @ phi_elementary(0, 0.2, z, spec)
    assert lhs == pytest.approx(rhs, abs=1e-12)


def test_eigenvector_solves_shift_equation():
    z = 2.1 - 0.6j
    e0, e1 = eigenvector(0, 0.3, z, 0.2, P), eigenvector(1, 0.3, z, 0.2, P)
    y1 = shift_matrix(z, P.A) @ np.array([e0.f, e0.g])
    # eigenvectors are determined up to a scalar
    assert y1[0] * e1.g - y1[1] * e1.f == pytest.approx(0, abs=1e-12)


def test_direction_constant_aligns():
    z = 1.9 + 0.2j
    y = np.array([1.0, 0.5 - 0.25j])
    c = direction_constant(z, y, P)
    e = eigenvector(0, 0, z, c, P)
    assert e.f * y[1] - e.g * y[0] == pytest.approx(0, abs=1e-12)


def test_branch_point_guards():
    with pytest.raises(BranchPointEigenvector):
        eigenvector(0, 0, 1.5, 0, P, side="+")
    with pytest.raises(NearBranchPoint):
        phi_elementary(0, 0, 1.5 + 1e-10, rogue_spec(P))


@pytest.mark.parametrize("n,t", [(0, 0.0), (7, 1.1), (-25, -2.5)])
def test_taylor_matches_quadrature(n, t):
    spec = rogue_spec(Params(b=0.3, A=23 / 60))
    f, g = taylor_coefficients(n, t, spec, 6)
    fo, go = cauchy_taylor(n, t, spec, 6)
    assert weighted_relative(f, g, fo, go, 0.15) < 1e-12


def test_eta_offset_is_removable():
    spec = rogue_spec(P, c_tilde=CTilde(eta_series=(0, 10j)))
    f, g = taylor_coefficients(2, 0.5, spec, 4)
    fo, go = cauchy_taylor(2, 0.5, spec, 4)
    assert weighted_relative(f, g, fo, go, 0.15) < 1e-12


def test_plain_offset_is_not_removable():
    spec = rogue_spec(P, c_tilde=CTilde(series=(0, 1.0)))
    with pytest.raises(NonremovableSingularity):
        taylor_coefficients(0, 0.0, spec, 3)

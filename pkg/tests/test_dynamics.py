import numpy as np
import pytest

from hirota.dynamics import (LatticeGrid, exact_boundary, lax_compatibility, propagate_rk4,
                             residual_sup, rk4_deviation, stencil_times)
from hirota.errors import Blowup, GridTooSparse, ValidationError
from hirota.solutions import SolutionSpec
from hirota.spectral import Params

P = Params()
NS = np.arange(-20, 21)


@pytest.fixture(scope="module")
def breather():
    return SolutionSpec(family="nfold", params=P, points=((1.8, 0),), peak_tuned=True).evaluator()


def test_background_residual():
    g = LatticeGrid.sample(lambda n, t: P.A + 0 * n * t, NS, stencil_times([0.0], 1e-3))
    assert residual_sup(g, P, 1e-3) < 1e-13


def test_breather_residual_and_lax(breather):
    g = LatticeGrid.sample(breather, NS, stencil_times([-0.5, 0.0, 0.5], 1e-3))
    assert residual_sup(g, P, 1e-3) < 1e-7
    assert lax_compatibility(g, 0.7 + 0.4j, P, 1e-3) < 1e-7


def test_perturbed_field_fails(breather):
    g = LatticeGrid.sample(lambda n, t: breather(n, t) * (1 + 1e-3 * np.cos(n)), NS,
                           stencil_times([0.0], 1e-3))
    assert residual_sup(g, P, 1e-3) > 1e-5


def test_rk4_tracks_exact(breather):
    assert rk4_deviation(breather, NS, 1.0, 5e-3, P, t0=-0.5) < 1e-6


def test_rk4_order(breather):
    e = [rk4_deviation(breather, NS, 1.0, dt, P) for dt in (1e-2, 5e-3)]
    assert np.log2(e[0] / e[1]) == pytest.approx(4, abs=0.3)


def test_rk4_limits():
    bc = exact_boundary(lambda n, t: P.A + 0 * n, NS)
    v0 = np.full(NS.size, P.A, dtype=complex)
    with pytest.raises(ValidationError):
        propagate_rk4(v0, bc, 0.02, 1.0, P)
    with pytest.raises(ValidationError):
        propagate_rk4(v0, bc, 0.01, 5.0, P)
    with pytest.raises(ValidationError):
        propagate_rk4(v0, bc, 0.003, 1.0, P)


def test_blowup_reported():
    v0 = np.full(NS.size, 50.0, dtype=complex)
    with pytest.raises(Blowup) as info:
        propagate_rk4(v0, lambda t: (50.0, 50.0), 0.01, 4.0, P, ns=NS)
    assert info.value.site in NS


def test_sparse_grid():
    g = LatticeGrid.sample(lambda n, t: P.A + 0 * n * t, NS, [0.0, 0.1, 0.2])
    with pytest.raises(GridTooSparse):
        residual_sup(g, P, 1e-3)


def test_grid_validation():
    with pytest.raises(ValidationError):
        LatticeGrid([0, 2], [0.0], np.zeros((1, 2)))
    with pytest.raises(ValidationError):
        LatticeGrid([0, 1], [0.0], np.zeros((2, 2)))

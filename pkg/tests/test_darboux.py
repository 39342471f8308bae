import numpy as np
import pytest

from hirota.closedform import max_amplitude_iterated, rogue_max
from hirota.darboux import (DarbouxSystem, darboux_matrix_v1, fundamental_dt, nfold_solution,
                            peak_tuned_constants, rogue_solution, rogue_spec,
                            sequential_solution)
from hirota.errors import PoleHit, ValidationError, ZeroEigenvector
from hirota.seed import eigenvector
from hirota.spectral import Params

P = Params()
ns = np.arange(-8, 9)[None, :]
ts = np.linspace(-1, 1, 5)[:, None]


def test_v1_annihilates_eigenvector():
    z1 = 2 + 0.5j
    e = eigenvector(0, 0, z1, 0.1, P)
    V = darboux_matrix_v1(z1, z1, complex(e.f), complex(e.g))
    assert V @ np.array([e.f, e.g]) == pytest.approx([0, 0], abs=1e-12)


def test_v1_pole():
    with pytest.raises(PoleHit):
        darboux_matrix_v1(1 / np.conj(2.0), 2.0, 1.0, 0.5)


def test_zero_eigenvector():
    with pytest.raises(ZeroEigenvector):
        fundamental_dt(P.A, 2.0, 0.0, 0.0)


def test_determinant_equals_sequential():
    system = DarbouxSystem(P, (1.8, 2.25 + 0.3j, -0.5 + 1.7j), (0.1, -0.2j, 0.3))
    for n, t in ((0, 0.0), (3, -0.7), (-6, 1.0)):
        assert nfold_solution(system, n, t) == pytest.approx(
            sequential_solution(system, n, t), abs=1e-10)


def test_onefold_matches_fundamental():
    system = DarbouxSystem(P, (1.8,), (0.2,))
    e = eigenvector(ns, ts, 1.8, 0.2, P)
    assert np.max(np.abs(system.field(ns, ts) - fundamental_dt(P.A, 1.8, e.f, e.g))) < 1e-12


def test_peak_tuning_reaches_recursion():
    zs = (1.25, 2.25)
    q = Params(B=np.pi / 2)
    cs, M = peak_tuned_constants(zs, q)
    assert M == pytest.approx(max_amplitude_iterated(zs, q.A))
    assert abs(DarbouxSystem(q, zs, cs).field(0, 0.0)) == pytest.approx(M, abs=1e-9)


def test_system_validation():
    with pytest.raises(ValidationError):
        DarbouxSystem(P, (0.9,), (0,))
    with pytest.raises(ValidationError):
        DarbouxSystem(P, (2.0, 2.0), (0, 0))
    with pytest.raises(ValidationError):
        DarbouxSystem(P, (2.0,), (0, 1))


@pytest.mark.parametrize("order", [1, 2, 3, 4])
def test_rogue_peak(order):
    v = rogue_solution(0, 0.0, order, rogue_spec(P))
    assert abs(v) == pytest.approx(rogue_max(order, P.A), rel=1e-9)


def test_rogue_far_field_sign():
    v = rogue_solution(np.array([-2000, 2000]), 0.0, 3, rogue_spec(P))
    assert v == pytest.approx([-P.A, -P.A], abs=1e-3)


def test_rogue_order_validated():
    with pytest.raises(ValidationError):
        rogue_solution(0, 0.0, 0, rogue_spec(P))

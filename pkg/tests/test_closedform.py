import numpy as np
import pytest

from hirota.closedform import (far_field, max_amplitude, max_amplitude_iterated, rogue_max,
                               soliton1, soliton_velocity, track_peak)
from hirota.darboux import fundamental_dt
from hirota.errors import ValidationError
from hirota.seed import eigenvector
from hirota.spectral import Params

P = Params()


def test_frozen_soliton_values():
    v = soliton1(np.array([0, 3]), np.array([0.0, 0.5]), 1.8, 0.2 + 0.1j, P)
    assert v == pytest.approx([2.13526422 - 0.69653111j, -0.36348045 - 0.07015012j], abs=1e-8)


def test_matches_darboux():
    ns = np.arange(-10, 11)[None, :]
    ts = np.linspace(-1, 1, 9)[:, None]
    for z in (1.8, 2 + 0.7j, -0.4 + 1.6j):
        e = eigenvector(ns, ts, z, 0.3, P)
        ref = fundamental_dt(P.A, z, e.f, e.g)
        assert np.max(np.abs(soliton1(ns, ts, z, 0.3, P) - ref)) < 1e-12


def test_peak_height():
    M, c = max_amplitude(1.8, P)
    assert M == pytest.approx(2.3271193415637863, abs=1e-14)
    assert abs(soliton1(0, 0.0, 1.8, c, P)) == pytest.approx(M, abs=1e-12)


def test_velocity_frozen():
    assert soliton_velocity(1.8, P) == pytest.approx(-1.3127929750480543, abs=1e-13)


def test_far_field_modulus():
    left, right = far_field(2 + 0.5j, 0.1, P)
    assert abs(left) == pytest.approx(P.A)
    assert abs(right) == pytest.approx(P.A)
    # Re ln zeta < 0, so n -> -inf sends Re kappa -> +inf
    assert abs(soliton1(-200, 0.0, 2 + 0.5j, 0.1, P) - right) < 1e-10
    assert abs(soliton1(200, 0.0, 2 + 0.5j, 0.1, P) - left) < 1e-10


def test_iterated_and_rogue_max():
    assert max_amplitude_iterated([1.25, 2.25], 5 / 12) == pytest.approx(5.890477269804527)
    assert [rogue_max(n, P.A) for n in range(1, 5)] == pytest.approx(
        [1.5393518518518519, 3.731031378600823, 8.513704918267033, 19.208673540063124])


def test_inside_unit_circle_rejected():
    with pytest.raises(ValidationError):
        soliton1(0, 0.0, 0.5, 0, P)
    with pytest.raises(ValidationError):
        max_amplitude(1.0, P)


def test_track_peak_subsite():
    ns = np.arange(-5, 6)
    col = np.exp(-(ns - 0.3) ** 2)[:, None]
    assert track_peak(col, ns)[0] == pytest.approx(0.3, abs=0.1)

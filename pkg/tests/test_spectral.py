import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hirota.errors import CutAmbiguity, ValidationError, ZeroArgument
from hirota.spectral import OTHER, Params, RegionTag, classify_region, eval_spectral

P = Params()

finite = st.floats(-4, 4, allow_nan=False)


@st.composite
def points(draw):
    z = complex(draw(finite), draw(finite))
    if abs(z) < 1e-3 or abs(z.imag) < 1e-9:
        z += 0.5j
    return z


def test_default_params():
    assert P.r == pytest.approx(13 / 12, abs=1e-15)
    assert P.branch_points[0] == pytest.approx(1.5, abs=1e-15)
    assert P.to_dict()["A"] == pytest.approx(5 / 12)


def test_frozen_values_at_two():
    s = eval_spectral(2.0, P)
    assert s.zeta == pytest.approx(0.5782065558809321, abs=1e-15)
    assert s.xi == pytest.approx(-3.2966629547095767, abs=1e-14)
    assert s.omega == pytest.approx(-0.6236095644623235, abs=1e-15)
    assert s.delta == pytest.approx(1.25 - 1.5j, abs=1e-15)


@settings(max_examples=200, deadline=None)
@given(points())
def test_identities(z):
    s = eval_spectral(z, P)
    r, A = P.r, P.A
    assert abs(s.zeta) <= 1 + 1e-12
    assert r * (s.zeta + 1 / s.zeta) == pytest.approx(z + 1 / z, rel=1e-11, abs=1e-11)
    assert A * z * (s.xi ** 2 + 1) == pytest.approx((1 - z * z) * s.xi, rel=1e-10, abs=1e-10)
    assert s.omega == pytest.approx(r * (s.zeta - 1 / s.zeta) / 2, rel=1e-12, abs=1e-12)


@settings(max_examples=100, deadline=None)
@given(points())
def test_other_sheet_is_reciprocal(z):
    a = eval_spectral(z, P).zeta
    b = eval_spectral(z, P, sheet=OTHER).zeta
    assert a * b == pytest.approx(1, abs=1e-12)


def test_unit_circle_modulus():
    for th in np.linspace(0, 2 * math.pi, 64, endpoint=False):
        z = complex(np.exp(1j * th))
        assert abs(eval_spectral(z, P, side="+").zeta) == pytest.approx(1, abs=1e-10)


def test_regions():
    assert classify_region(2.0, P) == RegionTag.Omega_out
    assert classify_region(0.5, P) == RegionTag.Omega_in
    assert classify_region(1.2, P) == RegionTag.Sigma_plus
    assert classify_region(1j, P) == RegionTag.Omega_0


def test_cut_requires_side():
    with pytest.raises(CutAmbiguity):
        eval_spectral(1.2, P)
    up = eval_spectral(1.2, P, side="+").zeta
    down = eval_spectral(1.2, P, side="-").zeta
    assert up == pytest.approx(np.conj(down), abs=1e-12)


def test_zero_rejected():
    with pytest.raises(ZeroArgument):
        eval_spectral(0.0, P)


def test_bad_sheet():
    with pytest.raises(ValidationError):
        eval_spectral(2.0, P, sheet="third")

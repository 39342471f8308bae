import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hirota.jet import Jet

coef = st.floats(-2, 2, allow_nan=False)


def _eval(j, h):
    return sum(c * h ** k for k, c in enumerate(j.coeffs))


@settings(max_examples=60, deadline=None)
@given(st.lists(coef, min_size=3, max_size=6), st.lists(coef, min_size=3, max_size=6))
def test_product_matches_polynomial_product(a, b):
    n = min(len(a), len(b))
    ja, jb = Jet(np.array(a[:n], dtype=complex)), Jet(np.array(b[:n], dtype=complex))
    full = np.convolve(a[:n], b[:n])[:n]
    assert (ja * jb).coeffs == pytest.approx(full, abs=1e-12)


def test_elementary_functions_against_taylor():
    x = Jet.variable(0.3, 8)
    h = 1e-3
    for f, ref in ((Jet.exp, np.exp), (Jet.sinh, np.sinh), (Jet.cosh, np.cosh),
                   (Jet.sqrt, np.sqrt), (Jet.log, np.log), (Jet.arcsinh, np.arcsinh)):
        assert _eval(f(x), h) == pytest.approx(ref(0.3 + h), rel=1e-14)


def test_division_inverts_product():
    x = Jet.variable(1.2, 6)
    y = x.exp() + 2
    assert ((x * y) / y).coeffs == pytest.approx(x.coeffs, abs=1e-13)


def test_shift_down_requires_zero_lead():
    x = Jet.variable(0.0, 5)
    assert (x * x).shift_down(2).coeffs[0] == pytest.approx(1)
    with pytest.raises(ZeroDivisionError):
        Jet.variable(1.0, 5).shift_down(1, tol=1e-12)

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from hirota.errors import ValidationError
from hirota.estimators import HirotaSolution, ScatteringTransform


def test_solution_estimator():
    est = HirotaSolution(points=[1.8]).fit()
    assert est.predicted_max_ == pytest.approx(2.3271193415637863)
    X = np.array([[0, 0.0], [-30, 0.0]])
    feats = est.transform(X)
    assert feats.shape == (2, 3)
    assert feats[0, 2] == pytest.approx(est.predicted_max_, abs=1e-9)
    assert feats[1, 2] == pytest.approx(5 / 12, abs=1e-6)


def test_params_and_clone():
    est = HirotaSolution(family="rogue", order=2, A=0.3)
    assert est.get_params()["order"] == 2
    twin = clone(est).set_params(order=3)
    assert twin.order == 3 and est.order == 2


def test_not_fitted_and_bad_input():
    with pytest.raises(NotFittedError):
        HirotaSolution().predict([[0, 0]])
    est = HirotaSolution(points=[1.8]).fit()
    with pytest.raises(ValidationError):
        est.predict([[0.5, 0.0]])
    with pytest.raises(ValidationError):
        est.predict([[0, 0, 0]])
    with pytest.raises(ValidationError):
        HirotaSolution(points=[0.5]).fit()


def test_scattering_estimator():
    sol = HirotaSolution(points=[1.8]).fit()
    ns = np.arange(-40, 41)
    v = sol.predict(np.column_stack([ns, np.zeros(ns.size)]))
    sc = ScatteringTransform(n_min=-40).fit(v)
    assert sorted(z.real for z in sc.eigenvalues_) == pytest.approx([-1.8, 1.8], abs=1e-9)
    out = sc.transform([1.8, 1.2j])
    assert out.shape == (2, 3)
    assert out[0, 2] < 1e-9

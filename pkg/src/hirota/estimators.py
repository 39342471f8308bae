"""scikit-learn style front ends.

``HirotaSolution`` is a transformer over lattice coordinates: ``fit``
validates the hyperparameters and prepares the solution, ``predict`` maps
rows ``(n, t)`` to the complex field, and ``transform`` returns the real
features ``(Re v, Im v, |v|)``. ``ScatteringTransform`` fits on field
samples and transforms spectral points into scattering coefficients.
"""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .errors import ValidationError
from .figures import Figure
from .scattering import OTHER, TruncatedPotential, a_values, locate_eigenvalues
from .seed import CTilde
from .solutions import SolutionSpec
from .spectral import PRINCIPAL, Params


def _coords(X):
    X = check_array(X, dtype=float, ensure_2d=True)
    if X.shape[1] != 2:
        raise ValidationError(f"expected 2 columns (n, t), got {X.shape[1]}", field="X")
    if np.any(X[:, 0] != np.round(X[:, 0])):
        raise ValidationError("lattice sites n must be integers", field="X[:, 0]")
    return X[:, 0].astype(int), X[:, 1]


class HirotaSolution(TransformerMixin, BaseEstimator):
    """Exact solution of the lattice equation as an estimator.

    Parameters mirror :class:`hirota.solutions.SolutionSpec`; ``points`` is a
    sequence of spectral points ``z`` (with ``peak_tuned``) or ``(z, c)``
    pairs, and ``c_tilde_eta`` the coefficients of ``Q`` in the rogue offset
    ``c~ = eta Q(z - z1)``.
    """

    def __init__(self, family="nfold", a=1.0, b=0.5, A=5 / 12, B=0.0, points=(), order=0,
                 c_tilde_eta=(), peak_tuned=True, sheet=PRINCIPAL, n0=0, t0=0.0):
        self.family = family
        self.a = a
        self.b = b
        self.A = A
        self.B = B
        self.points = points
        self.order = order
        self.c_tilde_eta = c_tilde_eta
        self.peak_tuned = peak_tuned
        self.sheet = sheet
        self.n0 = n0
        self.t0 = t0

    def _spec(self):
        pts = tuple(p if isinstance(p, (list, tuple)) else (p, 0) for p in self.points)
        return SolutionSpec(
            family=self.family, params=Params(a=self.a, b=self.b, A=self.A, B=self.B),
            points=pts, order=self.order, c_tilde=CTilde(eta_series=tuple(self.c_tilde_eta)),
            n0=self.n0, t0=self.t0, sheet=self.sheet,
            peak_tuned=bool(self.peak_tuned) and self.family in ("soliton1", "nfold"))

    def fit(self, X=None, y=None):
        """Validate the parameters and prepare the evaluator; ``X`` is ignored."""
        self.spec_ = self._spec()
        self.evaluator_ = self.spec_.evaluator()
        self.constants_ = (self.spec_.constants()
                           if self.spec_.family in ("soliton1", "nfold") else ())
        self.predicted_max_ = Figure("estimator", self.spec_).predicted_max()
        self.n_features_in_ = 2
        return self

    def predict(self, X):
        """Complex field ``v_n(t)`` for each row ``(n, t)`` of ``X``."""
        check_is_fitted(self, "evaluator_")
        n, t = _coords(X)
        return np.asarray(self.evaluator_(n, t), dtype=complex)

    def transform(self, X):
        v = self.predict(X)
        return np.column_stack([v.real, v.imag, np.abs(v)])


class ScatteringTransform(TransformerMixin, BaseEstimator):
    """Direct scattering of a truncated field.

    ``fit`` takes the samples ``v_n`` for ``n = n_min, n_min + 1, ...`` and
    locates the discrete eigenvalues in ``annulus``; ``transform`` maps
    spectral points ``z`` to ``(Re a, Im a, |a|)``.
    """

    def __init__(self, a=1.0, b=0.5, A=5 / 12, B=0.0, n_min=0, annulus=(1.55, 4.0),
                 sheet=OTHER, locate=True):
        self.a = a
        self.b = b
        self.A = A
        self.B = B
        self.n_min = n_min
        self.annulus = annulus
        self.sheet = sheet
        self.locate = locate

    def fit(self, X, y=None):
        v = np.asarray(X)
        if v.ndim == 2 and 1 in v.shape:
            v = v.ravel()
        if v.ndim != 1:
            raise ValidationError("expected a 1-d array of field samples", field="X")
        params = Params(a=self.a, b=self.b, A=self.A, B=self.B)
        self.potential_ = TruncatedPotential(self.n_min, v.astype(complex), params)
        self.eigenvalues_ = (locate_eigenvalues(self.potential_, self.annulus, sheet=self.sheet)
                             if self.locate else [])
        return self

    def transform(self, Z):
        check_is_fitted(self, "potential_")
        z = np.asarray(Z, dtype=complex).ravel()
        a = a_values(self.potential_, z, sheet=self.sheet)
        return np.column_stack([a.real, a.imag, np.abs(a)])

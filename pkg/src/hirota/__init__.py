"""Exact solutions of the focusing discrete Hirota equation on a nonzero background."""

from .closedform import max_amplitude, max_amplitude_iterated, rogue_max, soliton1
from .darboux import determinant_field, rogue_solution
from .dynamics import LatticeGrid, propagate_rk4, residual_sup
from .errors import HirotaError, NumericError, ValidationError
from .estimators import HirotaSolution, ScatteringTransform
from .figures import FIGURES, get_figure
from .scattering import TruncatedPotential, locate_eigenvalues, scattering_coeffs
from .solutions import Grid, SolutionSpec, evaluate_grid
from .spectral import OTHER, PRINCIPAL, Params, eval_spectral

__version__ = "0.1.0"

__all__ = [
    "FIGURES", "OTHER", "PRINCIPAL", "Grid", "HirotaError", "HirotaSolution", "LatticeGrid",
    "NumericError", "Params", "ScatteringTransform", "SolutionSpec", "TruncatedPotential",
    "ValidationError", "determinant_field", "eval_spectral", "evaluate_grid", "get_figure",
    "locate_eigenvalues", "max_amplitude", "max_amplitude_iterated", "propagate_rk4",
    "residual_sup", "rogue_max", "rogue_solution", "scattering_coeffs", "soliton1",
]

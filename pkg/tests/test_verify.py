import numpy as np
import pytest

from hirota.dynamics import LatticeGrid, stencil_times
from hirota.figures import FIGURES
from hirota.solutions import SolutionSpec
from hirota.verify import check_residual, run_checks, stencil_grid


def test_breather_passes_everything():
    spec = FIGURES["fig2b"].spec
    results = run_checks(spec)
    assert [r.name for r in results] == ["residual", "rk4", "lax", "scatter"]
    assert all(r.passed for r in results)
    assert results[-1].value < 1e-8


def test_tall_peak_uses_extrapolation():
    spec = FIGURES["fig5b"].spec
    check = run_checks(spec, ("residual",))[0]
    assert check.value > check.threshold
    assert check.passed
    assert check.detail["observed_order"] == pytest.approx(4, abs=0.5)


def test_rogue_scatter_skipped():
    results = run_checks(FIGURES["fig7a"].spec, ("scatter",))
    assert results[0].passed and "skipped" in results[0].detail


def test_wrong_field_fails():
    spec = FIGURES["fig2b"].spec
    good = stencil_grid(spec)
    bad = LatticeGrid(good.ns, good.ts, good.values * 1.01)
    assert not check_residual(bad, spec.params).passed


def test_rogue_residual_on_short_window():
    spec = SolutionSpec(family="rogue", order=3)
    spec = SolutionSpec.from_dict({**spec.to_dict(),
                                   "grid": {"n_min": -30, "n_max": 30, "t_min": -1,
                                            "t_max": 1, "t_steps": 3}})
    results = run_checks(spec, ("residual",))
    assert results[0].passed

import numpy as np
import pytest

from hirota.errors import ValidationError
from hirota.figures import CAPTIONS, FIGURES, get_figure
from hirota.solutions import Grid, SolutionSpec, evaluate_grid, grid_max, thread_count
from hirota.spectral import Params

FROZEN = {"fig2c": 0.8485185185185187, "fig2d": 2.3271193415637863,
          "fig3c": 1.0702613412228799, "fig3d": 1.7897916666666671,
          "fig4c": 4.045823870747803, "fig4d": 2.355328004080055,
          "fig5c": 9.304262432136314, "fig5d": 11.606429729492106,
          "fig6a": 5.890477269804527, "fig7a": 0.5746481481481481,
          "fig8b": 6.842628402994968, "fig9b": 9.016442763435206}


def test_spec_round_trip():
    spec = SolutionSpec(family="nfold", params=Params(B=0.3), points=((1.8, 0.1), (2 + 1j, 0)),
                        grid=Grid(-5, 5, -1, 1, 3))
    assert SolutionSpec.from_dict(spec.to_dict()) == spec


@pytest.mark.parametrize("kwargs,field", [
    ({"family": "kink"}, "family"),
    ({"family": "nfold", "points": ((0.5, 0),)}, "points[0].z"),
    ({"family": "nfold", "points": ((1.8,),)}, "points[0]"),
    ({"family": "nfold", "sheet": "x"}, "sheet"),
])
def test_spec_validation(kwargs, field):
    with pytest.raises(ValidationError) as info:
        SolutionSpec(**kwargs)
    assert info.value.field == field


def test_unknown_keys_rejected():
    d = SolutionSpec(family="background").to_dict()
    d["colour"] = 1
    with pytest.raises(ValidationError):
        SolutionSpec.from_dict(d)


def test_grid_validation():
    with pytest.raises(ValidationError):
        Grid(n_min=3, n_max=1)
    with pytest.raises(ValidationError):
        Grid(t_steps=0)


def test_threads_do_not_change_values(monkeypatch):
    spec = FIGURES["fig4a"].spec
    a = evaluate_grid(spec, threads=1).values
    b = evaluate_grid(spec, threads=4).values
    assert np.array_equal(a, b)
    monkeypatch.setenv("HIROTA_THREADS", "3")
    assert thread_count() == 3


@pytest.mark.parametrize("fid", CAPTIONS)
def test_figure_maxima_frozen(fid):
    fig = FIGURES[fid]
    assert fig.predicted_max() == pytest.approx(FROZEN[fid], rel=1e-12)
    grid, rep = fig.run()
    assert rep["pass"]
    assert grid_max(grid)[0] == pytest.approx(FROZEN[fid], rel=1e-6)


def test_split_rogue_waves_have_no_caption():
    for fid in ("fig8c", "fig9c"):
        grid, rep = FIGURES[fid].run()
        assert np.all(np.isfinite(grid.values))
        assert rep["caption"] is None


def test_unknown_figure():
    with pytest.raises(ValidationError):
        get_figure("fig10")

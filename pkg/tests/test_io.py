import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hirota import io as hio
from hirota.dynamics import LatticeGrid
from hirota.errors import ValidationError

vals = st.complex_numbers(max_magnitude=1e6, allow_nan=False, allow_infinity=False)


@settings(max_examples=50, deadline=None)
@given(st.lists(vals, min_size=6, max_size=6))
def test_csv_round_trip_is_byte_exact(v):
    grid = LatticeGrid(np.arange(-1, 2), np.array([0.0, 0.125]), np.array(v).reshape(2, 3))
    text = hio.grid_to_csv(grid)
    back = hio.csv_to_grid(text)
    assert hio.grid_to_csv(back) == text
    assert np.array_equal(back.values, grid.values)


def test_csv_layout():
    grid = LatticeGrid([0, 1], [0.5], [[1 + 2j, 3.0]])
    lines = hio.grid_to_csv(grid).split("\n")
    assert lines[0] == "n,t,re_v,im_v,abs_v"
    assert lines[1] == "0,0.5,1,2,2.2360679774997898"


@pytest.mark.parametrize("text", ["", "a,b\n", "n,t,re_v,im_v,abs_v\n",
                                  "n,t,re_v,im_v,abs_v\n0,0,1,0,1\n1,0,1,0\n",
                                  "n,t,re_v,im_v,abs_v\n0,0,1,0,1\n1,0,x,0,1\n",
                                  "n,t,re_v,im_v,abs_v\n0,0,1,0,1\n1,0,1,0,1\n0,1,1,0,1\n"])
def test_csv_rejects(text):
    with pytest.raises(ValidationError):
        hio.csv_to_grid(text)


def test_json_handles_numpy_and_complex():
    out = hio.dumps({"z": 1 + 2j, "a": np.arange(2), "x": np.float64(0.5), "b": np.bool_(True)})
    assert '"z": [\n    1.0,\n    2.0\n  ]' in out
    assert hio.finite_or_none(float("inf")) is None


def test_svg(tmp_path):
    grid = LatticeGrid(np.arange(5), np.linspace(0, 1, 3), np.arange(15).reshape(3, 5) * 1.0)
    path = tmp_path / "g.svg"
    hio.write_svg(grid, path)
    text = path.read_text()
    assert text.startswith("<svg") and text.rstrip().endswith("</svg>")
    assert ">n</text>" in text and ">t</text>" in text
    assert len(hio.PALETTE) == 256

"""Solution descriptors and grid evaluation.

A :class:`SolutionSpec` names a family (background, soliton1, nfold or
rogue), its parameters and a sampling grid. It validates every field
before any computation, and ``to_dict`` / ``from_dict`` round-trip through
JSON without loss.
"""

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .closedform import soliton1
from .darboux import DarbouxSystem, peak_tuned_constants, rogue_solution
from .dynamics import LatticeGrid
from .errors import ValidationError
from .seed import CTilde, ElementarySpec
from .spectral import SHEETS, PRINCIPAL, Params

FAMILIES = ("background", "soliton1", "nfold", "rogue")


def _complex(x, path):
    if isinstance(x, (list, tuple)) and len(x) == 2:
        x = complex(float(x[0]), float(x[1]))
    try:
        c = complex(x)
    except (TypeError, ValueError):
        raise ValidationError(f"expected a complex number, got {x!r}", field=path) from None
    if not (math.isfinite(c.real) and math.isfinite(c.imag)):
        raise ValidationError("must be finite", field=path)
    return c


def _pair(c):
    return [c.real, c.imag]


@dataclass(frozen=True)
class Grid:
    """Sites ``n_min..n_max`` and ``t_steps`` equispaced times in ``[t_min, t_max]``."""

    n_min: int = -30
    n_max: int = 30
    t_min: float = -5.0
    t_max: float = 5.0
    t_steps: int = 201

    def __post_init__(self):
        for name in ("n_min", "n_max", "t_steps"):
            value = getattr(self, name)
            if isinstance(value, bool) or int(value) != value:
                raise ValidationError("must be an integer", field=f"grid.{name}")
            object.__setattr__(self, name, int(value))
        for name in ("t_min", "t_max"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValidationError("must be finite", field=f"grid.{name}")
            object.__setattr__(self, name, value)
        if self.n_max < self.n_min:
            raise ValidationError("n_max must be >= n_min", field="grid.n_max")
        if self.t_steps < 1:
            raise ValidationError("need at least one time sample", field="grid.t_steps")
        if self.t_max < self.t_min or (self.t_steps > 1 and self.t_max == self.t_min):
            raise ValidationError("t_max must exceed t_min", field="grid.t_max")

    @property
    def ns(self):
        return np.arange(self.n_min, self.n_max + 1)

    @property
    def ts(self):
        return np.linspace(self.t_min, self.t_max, self.t_steps)

    def to_dict(self):
        return {k: getattr(self, k) for k in ("n_min", "n_max", "t_min", "t_max", "t_steps")}


@dataclass(frozen=True)
class SolutionSpec:
    """Everything needed to evaluate one exact solution on a grid.

    ``points`` holds ``(z_i, c_i)`` pairs for the soliton families; with
    ``peak_tuned`` the constants are recomputed so the peak sits at the
    origin and only the ``z_i`` matter. Rogue waves use ``order`` and
    ``c_tilde`` instead.
    """

    family: str
    params: Params = field(default_factory=Params)
    points: tuple = ()
    order: int = 0
    c_tilde: CTilde = field(default_factory=CTilde)
    n0: int = 0
    t0: float = 0.0
    grid: Grid = field(default_factory=Grid)
    sheet: str = PRINCIPAL
    peak_tuned: bool = False

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValidationError(f"unknown family {self.family!r}; choose from {FAMILIES}",
                                  field="family")
        if not isinstance(self.params, Params):
            raise ValidationError("must be a Params instance", field="params")
        if self.sheet not in SHEETS:
            raise ValidationError(f"unknown sheet {self.sheet!r}", field="sheet")
        pts = []
        for i, pt in enumerate(self.points):
            if isinstance(pt, (int, float, complex)) and self.peak_tuned:
                pt = (pt, 0)
            if not isinstance(pt, (list, tuple)) or len(pt) != 2:
                raise ValidationError("each point is a pair (z, c)", field=f"points[{i}]")
            z = _complex(pt[0], f"points[{i}].z")
            c = _complex(pt[1], f"points[{i}].c")
            if abs(z) <= 1:
                raise ValidationError(f"|z| must exceed 1, got {abs(z):.6g}",
                                      field=f"points[{i}].z")
            pts.append((z, c))
        object.__setattr__(self, "points", tuple(pts))
        if self.family in ("soliton1", "nfold"):
            if not pts:
                raise ValidationError("at least one spectral point is required", field="points")
            if self.family == "soliton1" and len(pts) != 1:
                raise ValidationError("soliton1 takes exactly one point", field="points")
            if self.params.A <= 0:
                raise ValidationError("solitons need a nonzero background", field="params.A")
        elif pts:
            raise ValidationError(f"family {self.family} takes no spectral points",
                                  field="points")
        if self.family == "rogue":
            if isinstance(self.order, bool) or int(self.order) != self.order or self.order < 1:
                raise ValidationError("rogue order must be an integer >= 1", field="order")
            if self.params.A <= 0:
                raise ValidationError("rogue waves need a nonzero background", field="params.A")
        elif self.order:
            raise ValidationError(f"family {self.family} takes no order", field="order")
        object.__setattr__(self, "order", int(self.order))
        if not isinstance(self.c_tilde, CTilde):
            raise ValidationError("must be a CTilde instance", field="c_tilde")
        if not self.c_tilde.is_zero and self.family != "rogue":
            raise ValidationError("c_tilde applies to rogue waves only", field="c_tilde")
        if not isinstance(self.grid, Grid):
            raise ValidationError("must be a Grid instance", field="grid")

    @property
    def zs(self):
        return tuple(z for z, _ in self.points)

    def constants(self):
        """Translation constants, peak-tuned if requested."""
        if self.peak_tuned:
            return peak_tuned_constants(self.zs, self.params, sheet=self.sheet)[0]
        return tuple(c for _, c in self.points)

    def evaluator(self):
        """A function ``(n, t) -> v`` broadcasting over arrays."""
        p = self.params
        if self.family == "background":
            return lambda n, t: np.full(np.broadcast(np.asarray(n), np.asarray(t)).shape,
                                        p.A, dtype=complex)
        if self.family == "rogue":
            spec = ElementarySpec(p, n0=self.n0, t0=self.t0, c_tilde=self.c_tilde)
            return lambda n, t: rogue_solution(n, t, self.order, spec)
        cs = self.constants()
        if self.family == "soliton1":
            z1, c1 = self.zs[0], cs[0]
            system = DarbouxSystem(p, (z1,), (c1,), sheet=self.sheet)
            side = system.sides[0]
            return lambda n, t: soliton1(n, t, z1, c1, p, sheet=self.sheet, side=side)
        system = DarbouxSystem(p, self.zs, cs, sheet=self.sheet)
        return system.field

    def to_dict(self):
        return {
            "family": self.family,
            "params": self.params.to_dict(),
            "points": [[_pair(z), _pair(c)] for z, c in self.points],
            "order": self.order,
            "c_tilde": self.c_tilde.to_dict(),
            "n0": self.n0,
            "t0": self.t0,
            "grid": self.grid.to_dict(),
            "sheet": self.sheet,
            "peak_tuned": self.peak_tuned,
        }

    @classmethod
    def from_dict(cls, d):
        if not isinstance(d, dict):
            raise ValidationError("spec must be a JSON object", field="spec")
        known = {"family", "params", "points", "order", "c_tilde", "n0", "t0", "grid",
                 "sheet", "peak_tuned"}
        extra = set(d) - known
        if extra:
            raise ValidationError(f"unknown keys {sorted(extra)}", field="spec")
        if "family" not in d:
            raise ValidationError("missing", field="family")
        try:
            params = Params(**d.get("params", {}))
        except TypeError as exc:
            raise ValidationError(str(exc), field="params") from None
        try:
            grid = Grid(**d.get("grid", {}))
        except TypeError as exc:
            raise ValidationError(str(exc), field="grid") from None
        return cls(
            family=d["family"], params=params, points=tuple(d.get("points", ())),
            order=d.get("order", 0), c_tilde=CTilde.from_dict(d.get("c_tilde", {})),
            n0=int(d.get("n0", 0)), t0=float(d.get("t0", 0.0)), grid=grid,
            sheet=d.get("sheet", PRINCIPAL), peak_tuned=bool(d.get("peak_tuned", False)))


def thread_count():
    """Worker cap from ``HIROTA_THREADS`` (default: CPU count, at most 8)."""
    raw = os.environ.get("HIROTA_THREADS")
    if raw is None:
        return min(8, os.cpu_count() or 1)
    try:
        n = int(raw)
    except ValueError:
        raise ValidationError(f"must be a positive integer, got {raw!r}",
                              field="HIROTA_THREADS") from None
    if n < 1:
        raise ValidationError("must be a positive integer", field="HIROTA_THREADS")
    return n


def evaluate_grid(spec, threads=None):
    """Evaluate ``spec`` on its grid; rows are times, columns sites.

    Time rows are split into blocks evaluated on a thread pool. Each block
    is computed independently, so the result does not depend on the
    thread count.
    """
    func = spec.evaluator()
    ns, ts = spec.grid.ns, spec.grid.ts
    threads = threads or thread_count()
    blocks = np.array_split(np.arange(ts.size), min(threads, ts.size))

    def run(idx):
        return np.broadcast_to(func(ns[None, :], ts[idx, None]), (idx.size, ns.size))

    if threads == 1 or len(blocks) == 1:
        parts = [run(b) for b in blocks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(run, blocks))
    values = np.concatenate(parts, axis=0)
    return LatticeGrid(ns, ts, values, spec.to_dict())


def grid_max(grid):
    """``(max |v|, n, t)`` over a grid."""
    amp = np.abs(grid.values)
    i, j = np.unravel_index(np.argmax(amp), amp.shape)
    return float(amp[i, j]), int(grid.ns[j]), float(grid.ts[i])

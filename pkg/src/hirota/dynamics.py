"""Independent checks that a field solves the lattice equation.

The transformed equation is::

    i v_t = (1 + |v_n|^2) [(a + ib) e^{iB} v_{n+1} + (a - ib) e^{-iB} v_{n-1}]
            - 2 (1 + A^2) (a cos B - b sin B) v_n

Time derivatives of sampled fields are taken with the fourth-order
central stencil ``(f(-2h) - 8 f(-h) + 8 f(h) - f(2h)) / (12 h)``.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import Blowup, GridTooSparse, ValidationError
from .lax import shift_matrix, time_matrix

MAX_TIME = 4.0
MAX_DT = 0.01
BLOWUP = 1e6
_OFFSETS = np.arange(-2, 3)
_WEIGHTS = np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / 12.0


@dataclass
class LatticeGrid:
    """Samples ``values[i, j] = v_{ns[j]}(ts[i])``."""

    ns: np.ndarray
    ts: np.ndarray
    values: np.ndarray
    source: dict = field(default_factory=dict)

    def __post_init__(self):
        self.ns = np.asarray(self.ns, dtype=int)
        self.ts = np.asarray(self.ts, dtype=float)
        self.values = np.asarray(self.values, dtype=complex)
        if self.values.shape != (self.ts.size, self.ns.size):
            raise ValidationError(
                f"values must have shape {(self.ts.size, self.ns.size)}, got {self.values.shape}",
                field="values")
        if self.ns.size > 1 and np.any(np.diff(self.ns) != 1):
            raise ValidationError("sites must be consecutive", field="ns")
        if not np.all(np.isfinite(self.values)):
            raise ValidationError("values must be finite", field="values")

    @classmethod
    def sample(cls, func, ns, ts, source=None):
        """Evaluate ``func(n, t)`` (broadcasting) on the grid."""
        ns = np.asarray(ns, dtype=int)
        ts = np.asarray(ts, dtype=float)
        vals = func(ns[None, :], ts[:, None])
        vals = np.broadcast_to(vals, (ts.size, ns.size))
        return cls(ns, ts, vals, dict(source or {}))

    def edge_deviation(self, A):
        """Largest ``| |v| - A |`` on the two edge columns."""
        edges = self.values[:, [0, -1]]
        return float(np.max(np.abs(np.abs(edges) - A)))


def stencil_times(centers, h):
    """Time samples holding a five-point stencil around each center."""
    centers = np.atleast_1d(np.asarray(centers, dtype=float))
    return (centers[:, None] + h * _OFFSETS[None, :]).ravel()


def rhs(v_prev, v_cur, v_next, p):
    """``dv_n/dt`` from the three neighbouring samples."""
    eB = np.exp(1j * p.B)
    hop = (p.a + 1j * p.b) * eB * v_next + (p.a - 1j * p.b) / eB * v_prev
    onsite = 2 * (1 + p.A ** 2) * (p.a * math.cos(p.B) - p.b * math.sin(p.B))
    return -1j * ((1 + np.abs(v_cur) ** 2) * hop - onsite * v_cur)


def _stencil_rows(ts, h):
    """Indices ``i`` where ``ts[i-2 .. i+2]`` is a centered stencil of step ``h``."""
    if h <= 0:
        raise ValidationError("h must be positive", field="h")
    rows = []
    tol = 1e-9 * max(1.0, h)
    for i in range(2, ts.size - 2):
        if np.all(np.abs(ts[i - 2:i + 3] - (ts[i] + h * _OFFSETS)) <= tol):
            rows.append(i)
    if not rows:
        raise GridTooSparse(f"no five-point time stencil with step {h} in the grid", field="ts")
    return np.array(rows)


def _time_derivative(values, rows, h):
    return sum(w * values[rows + o] for w, o in zip(_WEIGHTS, _OFFSETS) if w) / h


def residual_sup(grid, p, h):
    """Sup over interior nodes of ``|i (FD v_t) - RHS|``."""
    rows = _stencil_rows(grid.ts, h)
    if grid.ns.size < 3:
        raise GridTooSparse("need at least three sites", field="ns")
    v = grid.values
    vt = _time_derivative(v, rows, h)[:, 1:-1]
    f = rhs(v[rows, :-2], v[rows, 1:-1], v[rows, 2:], p)
    return float(np.max(np.abs(1j * (vt - f))))


def lax_compatibility(grid, z, p, h):
    """Sup over interior nodes of ``|X_t + X_n T_n - T_{n+1} X_n|``."""
    rows = _stencil_rows(grid.ts, h)
    if grid.ns.size < 3:
        raise GridTooSparse("need at least three sites", field="ns")
    v = grid.values
    Xt = _time_derivative(shift_matrix(z, v), rows, h)[:, 1:-1]
    vr = v[rows]
    X = shift_matrix(z, vr[:, 1:-1])
    Tn = time_matrix(z, vr[:, 1:-1], vr[:, :-2], p)
    Tn1 = time_matrix(z, vr[:, 2:], vr[:, 1:-1], p)
    res = Xt + X @ Tn - Tn1 @ X
    return float(np.max(np.abs(res)))


def propagate_rk4(initial, boundary, dt, T, p, t0=0.0, ns=None, save_every=None):
    """Integrate from ``initial`` with Dirichlet edges ``boundary(t) -> (left, right)``.

    The edges are reset from the exact solution after every stage, so only
    interior sites evolve. Returns the samples at ``t0`` and every
    ``save_every`` steps (default: only the final time).
    """
    v = np.array(initial, dtype=complex)
    if v.ndim != 1 or v.size < 3:
        raise ValidationError("initial data must be a 1-d array of >= 3 sites", field="initial")
    if not 0 < dt <= MAX_DT:
        raise ValidationError(f"dt must lie in (0, {MAX_DT}]", field="dt")
    if not 0 < T <= MAX_TIME:
        raise ValidationError(f"T must lie in (0, {MAX_TIME}]", field="T")
    steps = int(round(T / dt))
    if abs(steps * dt - T) > 1e-9 * T:
        raise ValidationError("T must be a multiple of dt", field="T")
    save_every = save_every or steps
    ns = np.arange(v.size) if ns is None else np.asarray(ns, dtype=int)

    def force(u, t):
        left, right = boundary(t)
        u[0], u[-1] = left, right
        return u

    def deriv(u):
        d = np.zeros_like(u)
        d[1:-1] = rhs(u[:-2], u[1:-1], u[2:], p)
        return d

    times, frames = [t0], [v.copy()]
    for k in range(steps):
        t = t0 + k * dt
        k1 = deriv(v)
        k2 = deriv(force(v + 0.5 * dt * k1, t + 0.5 * dt))
        k3 = deriv(force(v + 0.5 * dt * k2, t + 0.5 * dt))
        k4 = deriv(force(v + dt * k3, t + dt))
        v = force(v + dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4), t + dt)
        big = np.abs(v) > BLOWUP
        if np.any(big) or not np.all(np.isfinite(v)):
            site = int(ns[np.argmax(big | ~np.isfinite(v))])
            raise Blowup(f"|v| exceeded {BLOWUP:g} at n = {site}, t = {t + dt:.6g}",
                         site=site, time=t + dt)
        if (k + 1) % save_every == 0:
            times.append(t0 + (k + 1) * dt)
            frames.append(v.copy())
    return LatticeGrid(ns, np.array(times), np.array(frames), {"integrator": "rk4", "dt": dt})


def exact_boundary(func, ns, t0=None, dt=None, steps=None):
    """Edge forcing ``t -> (func(n_first, t), func(n_last, t))``.

    Given ``t0``, ``dt`` and ``steps`` the values on the half-step lattice
    used by RK4 are computed up front in one vectorized call.
    """
    ends = np.array([ns[0], ns[-1]])
    if t0 is None:
        def boundary(t):
            left, right = np.asarray(func(ends, t), dtype=complex)
            return left, right
        return boundary
    times = t0 + 0.5 * dt * np.arange(2 * steps + 1)
    table = np.broadcast_to(func(ends[None, :], times[:, None]), (times.size, 2))

    def boundary(t):
        k = int(round((t - t0) / (0.5 * dt)))
        if not 0 <= k < times.size or abs(times[k] - t) > 1e-9:
            raise ValidationError(f"no precomputed edge value at t = {t}", field="t")
        return table[k, 0], table[k, 1]
    return boundary


def rk4_deviation(func, ns, T, dt, p, t0=0.0):
    """Max-norm gap at ``t0 + T`` between RK4 and the exact field ``func(n, t)``."""
    ns = np.asarray(ns, dtype=int)
    steps = int(round(T / dt))
    bc = exact_boundary(func, ns, t0=t0, dt=dt, steps=steps)
    grid = propagate_rk4(func(ns, t0), bc, dt, T, p, t0=t0, ns=ns)
    return float(np.max(np.abs(grid.values[-1] - func(ns, t0 + T))))

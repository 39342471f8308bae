"""Direct scattering on a truncated lattice.

Jost solutions are normalized as ``J(n) = psi(n) M^-n`` with
``M = diag(r zeta, r / zeta)``, so ``psi(n+1) = X_n psi(n)`` becomes::

    J(n+1) = X_n J(n) M^-1        (forward, seeded at n_min)
    J(n)   = X_n^-1 J(n+1) M      (backward, seeded at n_max)

Both seeds are the background form ``E(B) T`` with ``E(B) = diag(e^{iB/2},
e^{-iB/2})`` and ``T = [[1, xi], [xi, 1]]``. The scattering matrix is
``S = J_+^-1 J_-`` evaluated at any site; its diagonal is site independent
and ``zeta^{2n} S_21`` is the site-independent ``b``.

The default sheet is ``'other'`` (``|zeta| >= 1``), on which the discrete
eigenvalues ``|z| > 1`` appear as zeros of ``a``.
"""

import math
from dataclasses import dataclass
from types import SimpleNamespace

import numpy as np

from .errors import (BranchPointDegeneracy, NonConvergence, Overflow,
                     ValidationError)
from .lax import shift_matrix
from .spectral import OTHER, Params, eval_spectral

_EDGE_TOL = 1e-3
_SITE_TOL = 1e-7


@dataclass(frozen=True)
class TruncatedPotential:
    """Field samples ``v_n`` for ``n = n_min .. n_max``.

    ``phases = (B_minus, B_plus)`` are the asymptotic phases; when omitted
    they are read off the edge samples.
    """

    n_min: int
    values: np.ndarray
    params: Params
    phases: tuple = None

    def __post_init__(self):
        v = np.array(self.values, dtype=complex).ravel()
        if v.size < 3:
            raise ValidationError("need at least three samples", field="values")
        if not np.all(np.isfinite(v)):
            raise ValidationError("samples must be finite", field="values")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "n_min", int(self.n_min))
        A = self.params.A
        if A <= 0:
            raise ValidationError("scattering needs a nonzero background", field="params.A")
        if self.phases is None:
            object.__setattr__(self, "phases", (float(np.angle(v[0])), float(np.angle(v[-1]))))
        else:
            object.__setattr__(self, "phases", tuple(float(x) for x in self.phases))
        for name, val, B in (("values[0]", v[0], self.phases[0]),
                             ("values[-1]", v[-1], self.phases[1])):
            dev = abs(val - A * np.exp(1j * B))
            if dev >= _EDGE_TOL:
                raise ValidationError(
                    f"edge sample is {dev:.2e} from the background; widen the window",
                    field=name)

    @property
    def n_max(self):
        return self.n_min + self.values.size - 1

    @property
    def sites(self):
        return np.arange(self.n_min, self.n_max + 1)

    @classmethod
    def from_function(cls, func, n_min, n_max, params, phases=None):
        """Sample ``func(n)`` on ``n_min .. n_max``."""
        ns = np.arange(n_min, n_max + 1)
        return cls(n_min, np.asarray(func(ns), dtype=complex), params, phases)


@dataclass(frozen=True)
class ScatteringData:
    z: complex
    a_coeff: complex
    b_coeff: complex
    a_bar: complex
    b_bar: complex
    reflection: complex
    gamma_plus: float
    gamma_minus: float
    jost_minus: np.ndarray
    jost_plus: np.ndarray
    det_S: complex
    site: int


def _background(z, pot, sheet, side):
    s = eval_spectral(z, pot.params, sheet=sheet, side=side)
    if np.any(np.abs(1 - s.xi * s.xi) < 1e-8):
        raise BranchPointDegeneracy("1 - xi^2 vanishes; z is at a branch point")
    span = pot.values.size - 1
    growth = 2 * span * np.max(np.abs(np.log(np.abs(s.zeta))))
    if growth > 600:
        raise Overflow(f"|zeta|^(2 L) = e^{growth:.0f} overflows; shrink the window")
    return s


def _seed(xi, B):
    T = np.empty(np.shape(xi) + (2, 2), dtype=complex)
    T[..., 0, 0] = T[..., 1, 1] = 1
    T[..., 0, 1] = T[..., 1, 0] = xi
    E = np.array([np.exp(0.5j * B), np.exp(-0.5j * B)])
    return E[:, None] * T


def _diag(d1, d2):
    out = np.zeros(np.shape(d1) + (2, 2), dtype=complex)
    out[..., 0, 0] = d1
    out[..., 1, 1] = d2
    return out


def _sweep(pot, z, s):
    """Jost matrices at every site, shape ``(sites, *z.shape, 2, 2)``."""
    r = pot.params.r
    v = pot.values
    L = v.size
    zeta = s.zeta
    Minv = _diag(1 / (r * zeta), zeta / r)
    M = _diag(r * zeta, r / zeta)
    Jm = np.empty((L,) + np.shape(z) + (2, 2), dtype=complex)
    Jp = np.empty_like(Jm)
    Jm[0] = _seed(s.xi, pot.phases[0])
    for k in range(L - 1):
        Jm[k + 1] = shift_matrix(z, v[k]) @ Jm[k] @ Minv
    Jp[-1] = _seed(s.xi, pot.phases[1])
    for k in range(L - 2, -1, -1):
        X = shift_matrix(1 / z, -v[k]) / (1 + abs(v[k]) ** 2)
        Jp[k] = X @ Jp[k + 1] @ M
    if not (np.all(np.isfinite(Jm)) and np.all(np.isfinite(Jp))):
        raise Overflow("Jost recursion overflowed")
    return Jm, Jp


def _products(pot):
    """``Gamma^+_n = prod_{l >= n} r^2 / (1 + |v_l|^2)`` and ``Gamma^-_n`` over ``l < n``."""
    w = pot.params.r ** 2 / (1 + np.abs(pot.values[:-1]) ** 2)
    logs = np.log(w)
    plus = np.exp(np.concatenate([np.cumsum(logs[::-1])[::-1], [0.0]]))
    minus = np.exp(-np.concatenate([[0.0], np.cumsum(logs)]))
    return plus, minus


def jost_solutions(pot, z, sheet=OTHER, side=None):
    """``(J_minus, J_plus)`` at every site of the window, each ``(sites, 2, 2)``."""
    z = complex(z)
    s = _background(z, pot, sheet, side)
    return _sweep(pot, z, s)


def _wronskian_a(s, Jm, Jp, plus, k):
    """``a`` from the two columns that each sweep propagates stably."""
    w = Jm[k][..., 0, 0] * Jp[k][..., 1, 1] - Jm[k][..., 1, 0] * Jp[k][..., 0, 1]
    return w / ((1 - s.xi ** 2) * plus[k])


def _coeffs_at(pot, s, Jm, Jp, k):
    """``(b, a_bar, b_bar, S)`` from the full scattering matrix at site index ``k``.

    These use the growing columns and are accurate only while
    ``|zeta|^(2 L)`` stays moderate, e.g. near the continuous spectrum.
    """
    n = pot.n_min + k
    S = np.linalg.solve(Jp[k], Jm[k])
    twist = s.zeta ** (2 * n)
    return twist * S[..., 1, 0], S[..., 1, 1], S[..., 0, 1] / twist, S


def scattering_coeffs(pot, z, sheet=OTHER, side=None, site=None, check_sites=True):
    """Scattering data at ``z``.

    ``a`` is the Wronskian ratio ``det(J_-^(1), J_+^(2)) / ((1 - xi^2)
    Gamma^+_n)``, which equals ``S_11`` but avoids the growing columns. With ``check_sites`` the result is
    recomputed at two more sites and a :class:`NonConvergence` is raised if
    ``a`` drifts by more than ``1e-7`` relative.
    """
    z = complex(z)
    s = _background(z, pot, sheet, side)
    Jm, Jp = _sweep(pot, z, s)
    plus, minus = _products(pot)
    L = pot.values.size
    k = L // 2 if site is None else int(site) - pot.n_min
    if not 0 <= k < L:
        raise ValidationError("site outside the window", field="site")
    b, ab, bb, S = _coeffs_at(pot, s, Jm, Jp, k)
    a = _wronskian_a(s, Jm, Jp, plus, k)
    if check_sites:
        for kk in (L // 4, (3 * L) // 4):
            other = _wronskian_a(s, Jm, Jp, plus, kk)
            if abs(other - a) > _SITE_TOL * max(abs(a), 1e-300):
                raise NonConvergence(
                    f"a(z) varies across sites by {abs(other - a) / abs(a):.1e}")
    return ScatteringData(
        z=z, a_coeff=complex(a), b_coeff=complex(b), a_bar=complex(ab), b_bar=complex(bb),
        reflection=complex(b / a) if a != 0 else complex("nan"),
        gamma_plus=float(plus[k]), gamma_minus=float(minus[k]),
        jost_minus=Jm[k], jost_plus=Jp[k], det_S=complex(np.linalg.det(S)),
        site=pot.n_min + k)


def jost_adjoint_product(pot, z, site, sheet=OTHER, side=None):
    """``J_+(n, z*)^H J_+(n, z) / ((1 - xi^2) Gamma^+_n)`` with ``z* = 1 / conj(z)``.

    The root at ``z*`` is ``1 / conj(zeta(z))``, the mirror image of the
    root at ``z``. The result is the identity; off ``|zeta| = 1`` one entry
    pairs two growing columns and drifts.
    """
    z = complex(z)
    s = _background(z, pot, sheet, side)
    _, Jp = _sweep(pot, z, s)
    zs = 1 / np.conj(z)
    zeta = 1 / np.conj(s.zeta)
    mirror = SimpleNamespace(zeta=zeta, xi=(pot.params.r * zeta - zs) / pot.params.A)
    _, Jq = _sweep(pot, zs, mirror)
    k = int(site) - pot.n_min
    if not 0 <= k < pot.values.size:
        raise ValidationError("site outside the window", field="site")
    plus = _products(pot)[0]
    return np.conj(Jq[k]).T @ Jp[k] / ((1 - s.xi ** 2) * plus[k])


def window_product(pot):
    """``prod_l r^2 / (1 + |v_l|^2)`` over the transfer steps; ``det S`` is its inverse."""
    return float(_products(pot)[0][0])


def a_values(pot, z, sheet=OTHER, side=None):
    """``a(z)`` for an array of ``z`` values (middle site)."""
    z = np.asarray(z, dtype=complex)
    s = _background(z, pot, sheet, side)
    Jm, Jp = _sweep(pot, z, s)
    return _wronskian_a(s, Jm, Jp, _products(pot)[0], pot.values.size // 2)


# eigenvalue search

_GAP = 1e-2
_EDGE_POINTS = 64
_SPLIT = 0.4617


@dataclass(frozen=True)
class _Sector:
    r0: float
    r1: float
    t0: float
    t1: float

    def boundary(self, m):
        s = np.linspace(0, 1, m, endpoint=False)
        r0, r1, t0, t1 = self.r0, self.r1, self.t0, self.t1
        return np.concatenate([
            (r0 + (r1 - r0) * s) * np.exp(1j * t0),
            r1 * np.exp(1j * (t0 + (t1 - t0) * s)),
            (r1 + (r0 - r1) * s) * np.exp(1j * t1),
            r0 * np.exp(1j * (t1 + (t0 - t1) * s)),
        ])

    @property
    def center(self):
        return 0.5 * (self.r0 + self.r1) * np.exp(0.5j * (self.t0 + self.t1))

    def contains(self, z, slack=0.0):
        rho, th = abs(z), math.atan2(z.imag, z.real)
        th = self.t0 + (th - self.t0) % (2 * math.pi)
        return (self.r0 - slack <= rho <= self.r1 + slack
                and th <= self.t1 + slack)

    def split(self):
        # off-center cuts keep symmetric zeros (e.g. on the real axis) off the new edges
        f = _SPLIT
        rm, tm = self.r0 + f * (self.r1 - self.r0), self.t0 + f * (self.t1 - self.t0)
        return [_Sector(self.r0, rm, self.t0, tm), _Sector(rm, self.r1, self.t0, tm),
                _Sector(self.r0, rm, tm, self.t1), _Sector(rm, self.r1, tm, self.t1)]


def _winding(pot, sector, sheet):
    """Zero count in ``sector`` and the first moment ``sum of zeros``.

    Both come from the increments of ``log a`` along the boundary; the
    sampling doubles until no phase step exceeds ``pi / 4``.
    """
    m = _EDGE_POINTS
    while True:
        zs = sector.boundary(m)
        a = a_values(pot, zs, sheet=sheet)
        a = np.append(a, a[0])
        dlog = np.log(a[1:] / a[:-1])
        if np.max(np.abs(dlog.imag)) < np.pi / 4 or m >= 4096:
            break
        m *= 2
    count = int(round(np.sum(dlog.imag) / (2 * np.pi)))
    zz = np.append(zs, zs[0])
    moment = np.sum(0.5 * (zz[1:] + zz[:-1]) * dlog) / (2j * np.pi)
    return count, complex(moment)


def _newton(pot, sector, z, sheet, h=1e-6, maxiter=50, tol=1e-13):
    for _ in range(maxiter):
        av, ap, am = a_values(pot, np.array([z, z + h, z - h]), sheet=sheet)
        d = (ap - am) / (2 * h)
        if d == 0 or not np.isfinite(d):
            return None
        step = av / d
        z = z - step
        if not sector.contains(z):
            return None
        if abs(step) < tol * max(1.0, abs(z)):
            return z
    return None


def locate_eigenvalues(pot, search_annulus=(1.05, 4.0), sheet=OTHER, sectors=16, max_depth=8):
    """Zeros of ``a(z)`` in ``r_lo < |z| < r_hi``, off the cut.

    Sectors of the annulus are counted by the argument principle and split
    while they hold more than one zero. A lone zero is estimated by the
    contour moment and refined by Newton steps with a central-difference
    derivative. The search reports zeros; it does not
    certify that none were missed.
    """
    r_lo, r_hi = (float(x) for x in search_annulus)
    p = pot.params
    bp = p.r + p.A
    if not 1 < r_lo < r_hi:
        raise ValidationError("need 1 < r_lo < r_hi", field="search_annulus")
    if r_lo - _GAP < bp < r_hi + _GAP:
        raise ValidationError(
            f"annulus must stay {_GAP} away from the branch point radius {bp:.6f}",
            field="search_annulus")
    if r_hi < bp:
        # the cut crosses the annulus on the real axis; keep a gap around it
        todo = []
        for lo, hi in ((_GAP, math.pi - _GAP), (math.pi + _GAP, 2 * math.pi - _GAP)):
            step = (hi - lo) / (sectors // 2)
            todo += [_Sector(r_lo, r_hi, lo + i * step, lo + (i + 1) * step)
                     for i in range(sectors // 2)]
    else:
        step = 2 * math.pi / sectors
        todo = [_Sector(r_lo, r_hi, i * step - 0.5 * step, (i + 1) * step - 0.5 * step)
                for i in range(sectors)]
    found = []
    stack = [(s, 0, False) for s in todo]
    while stack:
        sec, depth, retried = stack.pop()
        count, moment = _winding(pot, sec, sheet)
        if count <= 0:
            continue
        if count > 1 and depth < max_depth:
            stack += [(c, depth + 1, retried) for c in sec.split()]
            continue
        start = moment if sec.contains(moment) else complex(sec.center)
        z = _newton(pot, sec, start, sheet)
        if z is not None and sec.contains(z, slack=1e-9):
            found.append(z)
        elif not retried and depth < max_depth:
            stack += [(c, depth + 1, True) for c in sec.split()]
        else:
            raise NonConvergence(f"Newton failed in sector around {sec.center:.4f}")
    found.sort(key=lambda w: (round(w.real, 8), round(w.imag, 8)))
    return found

"""Background eigenfunctions and branch-point Taylor data.

On the constant background ``v = A`` the Lax pair is solved in closed form.
``phi_elementary`` is the matrix solution normalized to the identity at
``(n0, t0)``; ``eigenvector`` gives the sinh-form vector solutions used by
the Darboux dressing; ``taylor_coefficients`` expands the rogue-wave seed
vector ``Phi(n, t, z) (1, (r + A) z)`` around the branch point
``z1 = r + A``.

The expansion uses the local parameter ``s`` with ``z = z1 + s**2``. In it
omega and ``eta = ln zeta`` are odd analytic series, the seed vector is
even, and the coefficient of ``(z - z1)**i`` is the ``s**(2 i)``
coefficient.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (BranchPointEigenvector, NearBranchPoint,
                     NonremovableSingularity, ValidationError, ZeroArgument)
from .jet import Jet
from .spectral import PRINCIPAL, Params, eval_spectral

_BRANCH_GUARD = 1e-8
_SMALL_OMEGA = 1e-4


@dataclass(frozen=True)
class CTilde:
    """The offset ``c~(z) = P(z - z1) + eta(z) Q(z - z1)``.

    ``series`` holds the coefficients of ``P`` and ``eta_series`` those of
    ``Q``. Only the ``eta`` part keeps the branch point removable; a nonzero
    ``P`` is reported by the Taylor extraction as non-removable.
    """

    series: tuple = ()
    eta_series: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "series", tuple(complex(c) for c in self.series))
        object.__setattr__(self, "eta_series", tuple(complex(c) for c in self.eta_series))
        if self.series and self.series[0] != 0:
            raise ValidationError("constant term of the series must be zero",
                                  field="c_tilde.series")

    @classmethod
    def eta_multiple(cls, kappa):
        """The form ``kappa * eta(z)``."""
        return cls(eta_series=(complex(kappa),))

    @property
    def is_zero(self):
        return not any(self.series) and not any(self.eta_series)

    def value(self, z, eta, z1):
        w = np.asarray(z, dtype=complex) - z1
        return np.polyval(self.series[::-1] or (0,), w) + eta * np.polyval(
            self.eta_series[::-1] or (0,), w)

    def over_omega(self, z, eta, omega, z1, r):
        """``c~ / omega`` evaluated without cancellation near the branch point."""
        w = np.asarray(z, dtype=complex) - z1
        out = np.polyval(self.series[::-1] or (0,), w) / omega
        return out + _eta_over_omega(eta, omega, r) * np.polyval(
            self.eta_series[::-1] or (0,), w)

    def jet(self, zj, eta):
        """Series of ``c~`` in the local parameter, given jets of ``z - z1`` and eta."""
        out = zj * 0
        for k, c in enumerate(self.series):
            if c:
                out = out + _jet_power(zj, k) * c
        for k, c in enumerate(self.eta_series):
            if c:
                out = out + _jet_power(zj, k) * eta * c
        return out

    def to_dict(self):
        return {"series": [[c.real, c.imag] for c in self.series],
                "eta_series": [[c.real, c.imag] for c in self.eta_series]}

    @classmethod
    def from_dict(cls, d):
        return cls(series=tuple(complex(*c) for c in d.get("series", ())),
                   eta_series=tuple(complex(*c) for c in d.get("eta_series", ())))


@dataclass(frozen=True)
class ElementarySpec:
    """Normalization of the elementary matrix solution."""

    params: Params
    n0: int = 0
    t0: float = 0.0
    c_tilde: CTilde = field(default_factory=CTilde)

    @property
    def z1(self):
        return self.params.r + self.params.A


@dataclass(frozen=True)
class Eigenfunction:
    """Vector solution ``(f, g) = (sinh(kappa + gamma), -sinh(kappa - gamma))``."""

    z: complex
    c: complex
    f: np.ndarray
    g: np.ndarray
    kappa: np.ndarray
    gamma: complex

    @property
    def vector(self):
        return np.stack([self.f, self.g], axis=-1)


def _jet_power(j, k):
    out = j * 0 + 1
    for _ in range(k):
        out = out * j
    return out


def _eta_over_omega(eta, omega, r):
    """``eta / omega``; near ``zeta = 1`` the series of ``arcsinh(w) / (r w)``."""
    eta = np.asarray(eta, dtype=complex)
    w = np.asarray(omega, dtype=complex) / r
    small = (np.abs(w) < _SMALL_OMEGA) & (np.abs(eta) < 0.5)
    safe = np.where(small, 1.0, omega)
    return np.where(small, (1 - w * w / 6) / r, eta / safe)


def _sinhc(x):
    x = np.asarray(x, dtype=complex)
    small = np.abs(x) < 1e-4
    safe = np.where(small, 1.0, x)
    return np.where(small, 1 + x * x / 6, np.sinh(safe) / safe)


def _check_branch(z, p):
    z = np.asarray(z, dtype=complex)
    if np.any(z == 0):
        raise ZeroArgument("z = 0 is not admissible", field="z")
    d = min(np.min(np.abs(z - bp)) for bp in p.branch_points)
    if d < _BRANCH_GUARD:
        raise NearBranchPoint(
            f"z within {d:.1e} of a branch point; use taylor_coefficients")


def phi_elementary(n, t, z, spec, sheet=PRINCIPAL, side=None):
    """Elementary matrix solution normalized to the identity at ``(n0, t0)``.

    Broadcasts over ``n``, ``t`` and ``z``; the matrix is in the last two
    axes. The ratio ``sinh(chi) / omega`` is formed as
    ``(chi / omega) sinhc(chi)`` so small omega costs no digits.
    """
    p = spec.params
    _check_branch(z, p)
    s = eval_spectral(z, p, sheet=sheet, side=side)
    n = np.asarray(n, dtype=float)
    t = np.asarray(t, dtype=float)
    z = np.asarray(z, dtype=complex)
    dn = n - spec.n0
    dt = t - spec.t0
    chi_over_omega = (dn * _eta_over_omega(s.eta, s.omega, p.r) + s.delta * dt
                      + spec.c_tilde.over_omega(z, s.eta, s.omega, spec.z1, p.r))
    chi = chi_over_omega * s.omega
    sh = chi_over_omega * _sinhc(chi)
    ch = np.cosh(chi)
    pref = p.r ** dn * np.exp(p.growth * dt)
    skew = (1 - z * z) / (2 * z)
    out = np.empty(np.broadcast(chi, pref).shape + (2, 2), dtype=complex)
    out[..., 0, 0] = pref * (ch - skew * sh)
    out[..., 0, 1] = pref * p.A * sh
    out[..., 1, 0] = -pref * p.A * sh
    out[..., 1, 1] = pref * (ch + skew * sh)
    return out


def gamma_of(xi):
    """``gamma`` with ``exp(-2 gamma) = -xi``."""
    return -0.5 * np.log(-np.asarray(xi, dtype=complex))


def eigenvector(n, t, z, c, p, sheet=PRINCIPAL, side=None):
    """Seed eigenvector at ``z`` with translation constant ``c``.

    ``kappa = n ln(zeta) + delta omega t + c``. Broadcasts over ``n`` and
    ``t``.
    """
    s = eval_spectral(complex(z), p, sheet=sheet, side=side)
    if abs(s.xi * s.xi - 1) < 1e-10:
        raise BranchPointEigenvector(f"xi(z)^2 = 1 at z = {z}")
    gamma = complex(gamma_of(s.xi))
    kappa = (np.asarray(n, dtype=float) * s.eta + s.delta * s.omega
             * np.asarray(t, dtype=float) + complex(c))
    f = np.sinh(kappa + gamma)
    g = -np.sinh(kappa - gamma)
    return Eigenfunction(complex(z), complex(c), f, g, kappa, gamma)


def direction_constant(z, y, p, sheet=PRINCIPAL, side=None):
    """Constant ``c`` whose eigenvector at ``(0, 0)`` is parallel to ``y``.

    The eigenvector equals ``G (p, q)`` with ``G = [[1, xi], [xi, 1]]`` and
    ``p / q = exp(2 c)``.
    """
    s = eval_spectral(complex(z), p, sheet=sheet, side=side)
    G = np.array([[1, s.xi], [s.xi, 1]])
    pq = np.linalg.solve(G, np.asarray(y, dtype=complex))
    return 0.5 * np.log(complex(pq[0] / pq[1]))


def _seed_jets(n, t, spec, order):
    """Jets in ``s`` of the seed vector ``Phi (1, (r + A) z)``, shape (K, *batch)."""
    p = spec.params
    if p.A <= 0:
        raise ValidationError("rogue waves need a nonzero background", field="A")
    r, A = p.r, p.A
    z1 = spec.z1
    M = 2 * order + 3
    z = Jet.variable(z1, M, power=2)
    zm = Jet.variable(0.0, M, power=2)
    z2 = z * z
    omega2 = ((1 + z2) * (1 + z2) - z2 * (4 * r * r)) / (z2 * 4)
    unit = omega2.shift_down(2)
    wt = unit.sqrt()                # omega / s
    omega = wt.shift_up(1).truncate(M - 2)
    eta = (omega / r).arcsinh()
    eB = complex(math.cos(p.B), math.sin(p.B))
    delta = (1 / z) * ((p.b + 1j * p.a) / eB) + z * ((p.b - 1j * p.a) * eB)

    n = np.asarray(n, dtype=float)
    t = np.asarray(t, dtype=float)
    dn = n - spec.n0
    dt = t - spec.t0
    chi = eta * np.broadcast_to(dn, np.broadcast(dn, dt).shape) + (delta * omega) * dt
    chi = chi + spec.c_tilde.jet(zm, eta)
    ch = chi.cosh()
    sh = chi.sinh().shift_down(1) / wt.truncate(M - 3)
    zz = z.truncate(M - 3)
    skew = (1 - zz * zz) / (zz * 2)
    ch = ch.truncate(M - 3)
    pref = p.r ** dn * np.exp(p.growth * dt)
    phi11 = ch - skew * sh
    phi12 = sh * A
    phi22 = ch + skew * sh
    lift = zz * (r + A)
    f = (phi11 + phi12 * lift) * pref
    g = (-phi12 + phi22 * lift) * pref
    return f, g


def taylor_coefficients(n, t, spec, order, return_odd=False):
    """Taylor coefficients of the rogue seed vector at ``z1 = r + A``.

    Returns ``(f_coeffs, g_coeffs)`` of shape ``(order + 1, *batch)`` holding
    the coefficients of ``(z - z1)**i`` for ``i = 0..order``. Raises
    ``NonremovableSingularity`` if the odd ``s`` coefficients do not vanish.
    """
    if order < 0:
        raise ValidationError("order must be >= 0", field="order")
    f, g = _seed_jets(n, t, spec, order)
    K = 2 * order + 1
    fc, gc = f.coeffs[:K], g.coeffs[:K]
    scale = np.maximum(np.max(np.abs(fc[0::2]), axis=0), np.max(np.abs(gc[0::2]), axis=0))
    odd = np.maximum(np.max(np.abs(fc[1::2]), axis=0, initial=0),
                     np.max(np.abs(gc[1::2]), axis=0, initial=0))
    if np.any(odd > 1e-6 * scale):
        raise NonremovableSingularity(
            "odd local-parameter coefficients do not vanish; "
            "the offset c~ must vanish at the branch point with odd symmetry")
    if return_odd:
        return fc[0::2], gc[0::2], odd / scale
    return fc[0::2], gc[0::2]

"""Closed-form single solitons, velocities, asymptotics and peak heights.

The one-soliton profile is written with ``u = kappa + conj(kappa)``,
``w = kappa - conj(kappa)``, ``P = gamma + conj(gamma)``,
``Q = gamma - conj(gamma)`` and ``m = |z1|^2``::

    v = -A [cosh(u + B1 + 2Q) - (r2/r1) cosh(w + B2 + 2P)]
          / [cosh(u + B1) - (r2/r1) cosh(w + B2)]

with ``p1 = m e^P + e^-P``, ``q1 = m e^-P + e^P`` (``p2, q2`` the same with
``Q``), ``B_i = ln(p_i / q_i) / 2`` and ``r_i = p_i e^-B_i``, a square root
of ``p_i q_i`` whose branch matches ``B_i``. Far from the core
``v -> -A exp(+-2Q)``, so ``|v| -> A``.
"""

import math
from dataclasses import dataclass

import numpy as np

from .darboux import DarbouxSystem, determinant_field, iterated_max_step
from .errors import StationaryPhase, TieBreak, ValidationError
from .seed import direction_constant, eigenvector
from .spectral import PRINCIPAL, eval_spectral


@dataclass(frozen=True)
class SolitonProfile:
    z1: complex
    c1: complex
    gamma1: complex
    p1: complex
    q1: complex
    p2: complex
    q2: complex
    B1: complex
    B2: complex
    r1: complex
    r2: complex


def soliton_profile(z1, c1, p, sheet=PRINCIPAL, side=None):
    e = eigenvector(0, 0, z1, c1, p, sheet=sheet, side=side)
    g = e.gamma
    P = g + np.conj(g)
    Q = g - np.conj(g)
    m = abs(z1) ** 2
    p1, q1 = m * np.exp(P) + np.exp(-P), m * np.exp(-P) + np.exp(P)
    p2, q2 = m * np.exp(Q) + np.exp(-Q), m * np.exp(-Q) + np.exp(Q)
    B1 = 0.5 * np.log(p1 / q1)
    B2 = 0.5 * np.log(p2 / q2)
    r1 = p1 * np.exp(-B1)
    r2 = p2 * np.exp(-B2)
    return SolitonProfile(complex(z1), complex(c1), g, *(complex(x) for x in (
        p1, q1, p2, q2, B1, B2, r1, r2)))


def soliton1(n, t, z1, c1, p, sheet=PRINCIPAL, side=None):
    """One-soliton field from the closed form; broadcasts over ``n`` and ``t``."""
    if abs(z1) <= 1:
        raise ValidationError("|z1| must exceed 1", field="z1")
    prof = soliton_profile(z1, c1, p, sheet=sheet, side=side)
    e = eigenvector(n, t, z1, c1, p, sheet=sheet, side=side)
    k = e.kappa
    u = k + np.conj(k)
    w = k - np.conj(k)
    g = prof.gamma1
    P = g + np.conj(g)
    Q = g - np.conj(g)
    ratio = prof.r2 / prof.r1
    num = np.cosh(u + prof.B1 + 2 * Q) - ratio * np.cosh(w + prof.B2 + 2 * P)
    den = np.cosh(u + prof.B1) - ratio * np.cosh(w + prof.B2)
    return -p.A * num / den


def far_field(z1, c1, p, sheet=PRINCIPAL, side=None):
    """Limits ``(v(-inf), v(+inf))`` of the one-soliton along ``Re kappa -> -+inf``."""
    e = eigenvector(0, 0, z1, c1, p, sheet=sheet, side=side)
    Q = e.gamma - np.conj(e.gamma)
    return -p.A * np.exp(-2 * Q), -p.A * np.exp(2 * Q)


def soliton_velocity(z1, p, sheet=PRINCIPAL, side=None):
    """Lattice velocity ``-Re(delta omega) / Re(ln zeta)`` of the soliton at ``z1``."""
    s = eval_spectral(complex(z1), p, sheet=sheet, side=side)
    re_eta = s.eta.real
    if abs(re_eta) < 1e-12:
        raise StationaryPhase(f"Re ln zeta = 0 at z1 = {z1}; the wave is not localized in n")
    return -(s.delta * s.omega).real / re_eta


def max_amplitude(z1, p, sheet=PRINCIPAL, side=None):
    """Peak height ``[(r+A)|z1|^2 - (r-A)|z1|^-2] / 2`` and the constant placing it at the origin."""
    if abs(z1) <= 1:
        raise ValidationError("|z1| must exceed 1", field="z1")
    M = iterated_max_step(p.A, z1)
    c1 = direction_constant(z1, [1.0, (p.r + p.A) * z1], p, sheet=sheet, side=side)
    return M, c1


def max_amplitude_iterated(zs, A):
    """Peak height after dressing with each ``z`` in turn, starting from height ``A``."""
    M = float(A)
    for i, z in enumerate(zs):
        if abs(z) <= 1:
            raise ValidationError(f"|z| must exceed 1, got {z}", field=f"zs[{i}]")
        M = iterated_max_step(M, z)
    return M


def rogue_max(order, A):
    """Peak height of the order-N rogue wave."""
    if order < 1:
        raise ValidationError("order must be >= 1", field="order")
    if A <= 0:
        raise ValidationError("A must be positive", field="A")
    r = math.sqrt(1 + A * A)
    M = ((r + A) ** 3 - (r - A) ** 3) / 2
    for _ in range(order - 1):
        rr = math.sqrt(1 + M * M)
        M = (r + A) ** 2 / 2 * (rr + M) - (r - A) ** 2 / 2 * (rr - M)
    return M


@dataclass(frozen=True)
class AsymptoticProfile:
    """Data of the k-th wave seen along ``n - s_k t = const``.

    ``c_k_rate`` is the rate ``4 min_i |Re(delta_i omega_i) + Re(ln zeta_i) s_k|``.
    ``leading_rate`` is half of it: the eigenvector of a point ``i`` deviates
    from its limiting direction by ``exp(-2 |Re kappa_i|)``, and that
    deviation sets the leading correction.
    """

    k: int
    s_k: float
    rates: tuple
    Gamma_plus: float
    Gamma_minus: float
    c_k_rate: float

    @property
    def leading_rate(self):
        return 0.5 * self.c_k_rate


def _drift(system):
    """Per-point ``(Re(delta omega), Re(ln zeta))``."""
    out = []
    for z, side in zip(system.zs, system.sides):
        s = eval_spectral(z, system.params, sheet=system.sheet, side=side)
        out.append(((s.delta * s.omega).real, s.eta.real))
    return out


def _velocities(system):
    vel = []
    for dw, re_eta in _drift(system):
        if abs(re_eta) < 1e-12:
            vel.append(math.copysign(math.inf, dw))
        else:
            vel.append(-dw / re_eta)
    return vel


def asymptotic_profile(k, system):
    """Velocity, phase shifts and decay rate of wave ``k`` (0-based)."""
    vel = _velocities(system)
    s_k = vel[k]
    if not math.isfinite(s_k):
        raise StationaryPhase(f"wave {k} has no finite velocity")
    for i, s in enumerate(vel):
        if i != k and math.isfinite(s) and abs(s - s_k) < 1e-10:
            raise TieBreak(f"waves {i} and {k} share velocity {s_k}")
    drift = _drift(system)
    rates = tuple(dw + re_eta * s_k for dw, re_eta in drift)
    c_rate = 4 * min(abs(rates[i]) for i in range(system.N) if i != k) if system.N > 1 else math.inf
    order = sorted(range(system.N), key=lambda i: vel[i])
    pos = order.index(k)
    gam = [eigenvector(0, 0, z, 0, system.params, sheet=system.sheet, side=sd).gamma
           for z, sd in zip(system.zs, system.sides)]
    lower = sum((1j * gam[i]).real for i in order[:pos])
    upper = sum((1j * gam[i]).real for i in order[pos + 1:])
    G = 4 * (lower - upper)
    return AsymptoticProfile(k, s_k, rates, -G, G, c_rate)


def asymptotic_soliton(k, system, n, t, sign):
    """Limit of the N-fold field near wave ``k`` as ``t -> sign * inf``.

    Every other eigenvector is replaced by its limiting direction,
    ``(1, xi_i)`` where ``Re kappa_i -> +inf`` and ``(xi_i, 1)`` where it
    tends to ``-inf``; the result is a one-soliton on a dressed background
    and carries the constant phase shift automatically.
    """
    if sign not in ("+", "-", 1, -1):
        raise ValidationError("sign must be '+' or '-'", field="sign")
    sgn = 1 if sign in ("+", 1) else -1
    prof = asymptotic_profile(k, system)
    eig = system.eigenfunctions(n, t)
    shape = np.broadcast(np.asarray(n), np.asarray(t)).shape
    F, G = [], []
    for i, (z, sd) in enumerate(zip(system.zs, system.sides)):
        if i == k:
            F.append(np.broadcast_to(eig[i].f, shape))
            G.append(np.broadcast_to(eig[i].g, shape))
            continue
        xi = eval_spectral(z, system.params, sheet=system.sheet, side=sd).xi
        up = prof.rates[i] * sgn > 0
        F.append(np.full(shape, 1.0 if up else xi, dtype=complex))
        G.append(np.full(shape, xi if up else 1.0, dtype=complex))
    return determinant_field(np.array(system.zs), np.stack(F, -1), np.stack(G, -1),
                             system.params.A)


def track_peak(values, ns):
    """Sub-site peak position of ``|v|`` along ``n`` for each column of ``values``.

    ``values`` has shape ``(len(ns), m)``; a parabola through the largest
    sample and its neighbours refines the location.
    """
    amp = np.abs(np.asarray(values))
    ns = np.asarray(ns, dtype=float)
    idx = np.clip(np.argmax(amp, axis=0), 1, len(ns) - 2)
    cols = np.arange(amp.shape[1])
    ym, y0, yp = amp[idx - 1, cols], amp[idx, cols], amp[idx + 1, cols]
    curv = ym - 2 * y0 + yp
    shift = np.where(curv != 0, 0.5 * (ym - yp) / np.where(curv != 0, curv, 1), 0.0)
    return ns[idx] + shift

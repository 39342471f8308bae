"""Independent oracles shared by the tests."""

import numpy as np

from hirota.seed import phi_elementary
from hirota.spectral import Params


def cauchy_taylor(n, t, spec, order, rho=0.15, points=128):
    """Taylor coefficients of ``Phi(z) (1, (r + A) z)`` at ``z1`` by trapezoid quadrature.

    The integrand is even in omega, hence single valued around the branch
    point, and the rule converges geometrically in ``points``. Returns
    ``(f, g)`` of shape ``(order + 1,)``.
    """
    p = spec.params
    th = 2 * np.pi * np.arange(points) / points
    z = spec.z1 + rho * np.exp(1j * th)
    Phi = phi_elementary(n, t, z, spec, side="+")
    y = np.stack([np.ones_like(z), (p.r + p.A) * z], axis=-1)
    v = np.einsum("...ij,...j->...i", Phi, y)
    k = np.arange(order + 1)
    c = (np.exp(-1j * np.outer(k, th)) @ v) / points / rho ** k[:, None]
    return c[:, 0], c[:, 1]


def weighted_relative(f, g, fo, go, rho):
    """``max_k |delta c_k| rho^k / max_k |c_k| rho^k`` over both components."""
    w = rho ** np.arange(len(f))
    err = np.maximum(np.abs(f - fo), np.abs(g - go)) * w
    size = np.maximum(np.abs(f), np.abs(g)) * w
    return float(np.max(err) / np.max(size))


def random_params(rng):
    return Params(a=rng.uniform(0.5, 2), b=rng.uniform(-1, 1), A=rng.uniform(0.1, 1),
                  B=rng.uniform(0, 2 * np.pi))


def admissible_point(rng, p, lo=1.1, hi=3.0, margin=0.05):
    """Random ``z`` with ``|z| > 1`` kept off the real axis and the branch points."""
    while True:
        z = rng.uniform(lo, hi) * np.exp(1j * rng.uniform(0, 2 * np.pi))
        if abs(z.imag) < margin:
            continue
        if min(abs(abs(z.real) - x) for x in (p.r - p.A, p.r + p.A)) < margin:
            continue
        return complex(z)

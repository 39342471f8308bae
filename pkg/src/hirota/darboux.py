"""Darboux dressing of the background: solitons, breathers and rogue waves.

Conventions: ``z* = 1/conj(z)`` (never plain conjugation), eigenvectors are
the sinh-form seed vectors of :mod:`hirota.seed`, and every determinant
formula is invariant under rescaling an eigenvector, which is used to keep
entries of order one at large ``|n|``.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import PoleHit, SingularGram, ValidationError, ZeroEigenvector
from .seed import CTilde, ElementarySpec, direction_constant, eigenvector, taylor_coefficients
from .spectral import PRINCIPAL, Params, classify_region, RegionTag

SIGMA3 = np.diag([1.0, -1.0])
# beyond this condition number the determinant keeps fewer than ~3 digits
_COND_MAX = 1e13


def star(z):
    """``z* = 1 / conj(z)``."""
    return 1 / np.conj(z)


def fundamental_dt(v, z1, f1, g1):
    """One-fold Backlund transform of the field ``v`` at ``z1``."""
    v, f1, g1 = (np.asarray(x, dtype=complex) for x in (v, f1, g1))
    if np.any((f1 == 0) & (g1 == 0)):
        raise ZeroEigenvector("eigenvector (f, g) vanishes")
    m = abs(z1) ** 2
    num = (abs(f1) ** 2 + m * abs(g1) ** 2) * v + star(z1) * (m * m - 1) * f1 * np.conj(g1)
    return num / (m * abs(f1) ** 2 + abs(g1) ** 2)


def darboux_matrix_v1(z, z1, f1, g1):
    """One-fold Darboux matrix ``V1(z)`` built from the eigenvector at ``z1``.

    ``V1 = diag(1, a1) [I - z1* K^-1 y y^H / (z - z1*) + z1* s3 K^-1 y y^H s3 / (z + z1*)]``
    with ``K = diag(alpha, beta)``; it annihilates ``(f1, g1)`` at ``z1``.
    """
    zs = star(z1)
    if min(abs(z - zs), abs(z + zs)) < 1e-12:
        raise PoleHit(f"z = {z} hits a pole of the Darboux matrix")
    m = abs(z1) ** 2
    if abs(m - 1) < 1e-14:
        raise ValidationError("|z1| = 1 is degenerate", field="z1")
    y = np.array([f1, g1], dtype=complex)
    nn = np.vdot(y, y).real
    ns = np.vdot(y, SIGMA3 @ y).real
    alpha = nn / (m - 1) - ns / (m + 1)
    beta = nn / (m - 1) + ns / (m + 1)
    kinv = np.diag([1 / alpha, 1 / beta])
    yy = np.outer(y, y.conj())
    a1 = m / (1 + 2 * abs(g1) ** 2 / beta)
    core = np.eye(2) - zs * kinv @ yy / (z - zs) + zs * SIGMA3 @ kinv @ yy @ SIGMA3 / (z + zs)
    return np.diag([1, a1]) @ core


def _admissible_side(z, p):
    return "+" if classify_region(z, p) in (RegionTag.Sigma_plus, RegionTag.Sigma_minus) else None


@dataclass
class DarbouxSystem:
    """Spectral points ``z_i`` with translation constants ``c_i``."""

    params: Params
    zs: tuple
    cs: tuple
    sheet: str = PRINCIPAL
    sides: tuple = field(default=None)

    def __post_init__(self):
        self.zs = tuple(complex(z) for z in self.zs)
        self.cs = tuple(complex(c) for c in self.cs)
        if len(self.zs) != len(self.cs):
            raise ValidationError("need one constant per spectral point", field="cs")
        if not self.zs:
            raise ValidationError("at least one spectral point is required", field="zs")
        for i, z in enumerate(self.zs):
            if abs(z) <= 1 + 1e-12:
                raise ValidationError(f"|z| must exceed 1, got {z}", field=f"zs[{i}]")
        for i in range(len(self.zs)):
            for j in range(i):
                if abs(self.zs[i] - self.zs[j]) < 1e-10:
                    raise ValidationError("spectral points must be distinct", field="zs")
        if self.sides is None:
            self.sides = tuple(_admissible_side(z, self.params) for z in self.zs)

    @property
    def N(self):
        return len(self.zs)

    def eigenfunctions(self, n, t):
        return [eigenvector(n, t, z, c, self.params, sheet=self.sheet, side=s)
                for z, c, s in zip(self.zs, self.cs, self.sides)]

    def vectors(self, n, t):
        """Eigenvectors stacked as arrays ``F, G`` of shape ``(*batch, N)``."""
        eig = self.eigenfunctions(n, t)
        F = np.stack(np.broadcast_arrays(*[e.f for e in eig]), axis=-1)
        G = np.stack(np.broadcast_arrays(*[e.g for e in eig]), axis=-1)
        return F, G

    def gram(self, n, t):
        """``alpha`` and ``beta`` Gram matrices, shape ``(*batch, N, N)``."""
        F, G = self.vectors(n, t)
        z = np.array(self.zs)
        zs = star(z)[:, None]
        zj = z[None, :]
        inner = np.conj(F)[..., :, None] * F[..., None, :] + np.conj(G)[..., :, None] * G[..., None, :]
        s3 = np.conj(F)[..., :, None] * F[..., None, :] - np.conj(G)[..., :, None] * G[..., None, :]
        alpha = inner / (zj - zs) - s3 / (zj + zs)
        beta = inner / (zj - zs) + s3 / (zj + zs)
        return alpha, beta

    def field(self, n, t):
        F, G = self.vectors(n, t)
        return determinant_field(np.array(self.zs), F, G, self.params.A)


def _normalize_columns(F, G):
    scale = np.maximum(np.abs(F), np.abs(G))
    scale = np.where(scale > 0, scale, 1.0)
    return F / scale, G / scale


def determinant_field(zs, F, G, A):
    """``A det(H) / det(T)`` for eigenvector components ``F, G`` of shape ``(*batch, N)``.

    ``T_ij = (conj(z_i) z_j conj(f_i) f_j + conj(g_i) g_j) / (conj(z_i)^2 z_j^2 - 1)`` and
    ``H_ij = (conj(f_i) f_j + conj(z_i) z_j conj(g_i) g_j) / (conj(z_i)^2 z_j^2 - 1)
    + conj(g_i) f_j / (A conj(z_i))``.
    """
    F, G = _normalize_columns(np.asarray(F, dtype=complex), np.asarray(G, dtype=complex))
    zs = np.asarray(zs, dtype=complex)
    N = zs.shape[-1]
    zb = np.conj(zs)[:, None]
    zj = zs[None, :]
    den = zb ** 2 * zj ** 2 - 1
    Fc, Gc = np.conj(F)[..., :, None], np.conj(G)[..., :, None]
    Fr, Gr = F[..., None, :], G[..., None, :]
    T = (zb * zj * Fc * Fr + Gc * Gr) / den
    H = (Fc * Fr + zb * zj * Gc * Gr) / den + Gc * Fr / (A * zb)
    detT = _checked_det(T, "Gram determinant is numerically zero; spectral points collide")
    return A * np.linalg.det(H) / detT


def _checked_det(T, message):
    """Determinant of a Gram stack, rejecting matrices singular to working precision."""
    cond = np.linalg.cond(T)
    if np.any(~np.isfinite(cond) | (cond > _COND_MAX)):
        raise SingularGram(message)
    return np.linalg.det(T)


def nfold_solution(system, n, t):
    """N-fold Darboux field ``v^[N](n, t)``; broadcasts over ``n`` and ``t``."""
    return system.field(n, t)


def sequential_solution(system, n, t):
    """The same field built by N successive one-fold transforms.

    Point ``k`` has its eigenvector dressed by the previous ``k - 1``
    Darboux matrices before its own transform. Scalar ``(n, t)`` only; used
    as an independent check of the determinant formula.
    """
    eig = system.eigenfunctions(n, t)
    ys = [np.array([complex(e.f), complex(e.g)]) for e in eig]
    v = complex(system.params.A)
    mats = []
    for k, z in enumerate(system.zs):
        y = ys[k]
        for zk, yk in mats:
            y = darboux_matrix_v1(z, zk, yk[0], yk[1]) @ y
        v = complex(fundamental_dt(v, z, y[0], y[1]))
        mats.append((z, y))
    return v


def iterated_max_step(M, z):
    """One step of the amplitude recursion on a background of height ``M``."""
    rr = np.sqrt(1 + M * M)
    m = abs(z) ** 2
    return 0.5 * ((rr + M) * m - (rr - M) / m)


def peak_tuned_constants(zs, params, sheet=PRINCIPAL):
    """Constants ``c_i`` that stack every peak at ``(n, t) = (0, 0)``.

    Each point is tuned in turn: its eigenvector, dressed by the Darboux
    matrices of the points already placed, is aligned with the maximizing
    direction ``(1, (sqrt(1 + M^2) + M) z)`` of the current background height
    ``M``. Returns the constants and the predicted peak height.
    """
    cs = []
    mats = []
    M = params.A
    for z in (complex(z) for z in zs):
        W = np.eye(2, dtype=complex)
        for zk, yk in mats:
            W = darboux_matrix_v1(z, zk, yk[0], yk[1]) @ W
        target = np.array([1.0, (np.sqrt(1 + M * M) + M) * z])
        side = _admissible_side(z, params)
        c = direction_constant(z, np.linalg.solve(W, target), params, sheet=sheet, side=side)
        cs.append(c)
        e = eigenvector(0, 0, z, c, params, sheet=sheet, side=side)
        y = np.array([complex(e.f), complex(e.g)])
        for zk, yk in mats:
            y = darboux_matrix_v1(z, zk, yk[0], yk[1]) @ y
        mats.append((z, y))
        M = iterated_max_step(M, z)
    return tuple(cs), M


# rogue waves

@dataclass(frozen=True)
class RogueMatrices:
    """Matrices of the confluent determinant at ``z1``.

    The Taylor coefficients fill upper-triangular Toeplitz matrices
    ``J1 = sum f^[j] U^j`` and ``K1 = sum g^[j] U^j`` where ``U`` is the
    superdiagonal shift; this is the transpose of the lower-shift layout and
    gives the same determinants.
    """

    mu: np.ndarray
    J1: np.ndarray
    J2: np.ndarray
    K1: np.ndarray
    K2: np.ndarray
    F: np.ndarray
    T: np.ndarray
    H: np.ndarray


def mu_matrix(z1, N):
    """``mu_ab`` = coefficient of ``(k - conj z1)^a (y - z1)^b`` in ``1 / (k^2 y^2 - 1)``."""
    zb = np.conj(z1)
    P = np.zeros(N, dtype=complex)
    Q = np.zeros(N, dtype=complex)
    for arr, c in ((P, zb), (Q, z1)):
        arr[0] = c * c
        if N > 1:
            arr[1] = 2 * c
        if N > 2:
            arr[2] = 1
    S = np.outer(P, Q)
    S[0, 0] -= 1
    mu = np.zeros((N, N), dtype=complex)
    for i in range(N):
        for j in range(N):
            acc = 0j
            for a in range(i + 1):
                for b in range(j + 1):
                    if a or b:
                        acc += S[a, b] * mu[i - a, j - b]
            mu[i, j] = (1 - acc) / S[0, 0] if (i == 0 and j == 0) else -acc / S[0, 0]
    return mu


def _upper_toeplitz(c):
    """Stack of upper-triangular Toeplitz matrices from coefficients ``(N, *batch)``."""
    N = c.shape[0]
    out = np.zeros(c.shape[1:] + (N, N), dtype=complex)
    for k in range(N):
        idx = np.arange(N - k)
        out[..., idx, idx + k] = c[k][..., None]
    return out


def taylor_scale(f, g):
    """Scale ``lam`` for the local variable ``(z - z1) = lam w`` balancing the jets.

    The determinant ratio is unchanged by this substitution, but the Gram
    matrix becomes far better conditioned where the coefficients grow like
    ``n^j``.
    """
    size = np.maximum(np.abs(f), np.abs(g))
    lead = np.maximum(size[0], 1e-300)
    lam = np.ones_like(lead)
    for j in range(1, size.shape[0]):
        with np.errstate(divide="ignore"):
            cand = (lead / size[j]) ** (1.0 / j)
        lam = np.minimum(lam, np.where(size[j] > 0, cand, 1.0))
    return lam


def rogue_matrices(f_coeffs, g_coeffs, z1, A, scale=None):
    """Build ``T`` and ``H`` of the order-N rogue determinant from Taylor data.

    ``scale`` is the variable rescaling ``lam`` (per batch element); by
    default it is chosen by :func:`taylor_scale`.
    """
    f = np.asarray(f_coeffs, dtype=complex)
    g = np.asarray(g_coeffs, dtype=complex)
    N = f.shape[0]
    lam = taylor_scale(f, g) if scale is None else np.broadcast_to(
        np.asarray(scale, dtype=float), f.shape[1:])
    powers = lam[None] ** np.arange(N).reshape((-1,) + (1,) * lam.ndim)
    f = f * powers
    g = g * powers
    norm = np.maximum(np.max(np.abs(f), axis=0), np.max(np.abs(g), axis=0))
    f = f / norm
    g = g / norm
    lam_m = lam[..., None, None]
    ab = np.add.outer(np.arange(N), np.arange(N))
    mu = mu_matrix(z1, N) * lam_m ** ab
    U = np.eye(N, k=1) * lam_m
    J1 = _upper_toeplitz(f)
    K1 = _upper_toeplitz(g)
    J2 = z1 * J1 + U @ J1
    K2 = z1 * K1 + U @ K1
    zb = np.conj(z1)
    F = sum(((-1) ** m) * zb ** (-(m + 1)) * np.eye(N, k=-m) * lam_m ** m for m in range(N))
    h = lambda M: np.conj(np.swapaxes(M, -1, -2))
    T = h(J2) @ mu @ J2 + h(K1) @ mu @ K1
    g_row = np.moveaxis(g, 0, -1)
    f_row = np.moveaxis(f, 0, -1)
    cross = (F @ np.conj(g_row)[..., :, None]) * f_row[..., None, :] / A
    H = h(J1) @ mu @ J1 + h(K2) @ mu @ K2 + cross
    return RogueMatrices(mu, J1, J2, K1, K2, F, T, H)


def rogue_solution(n, t, order, spec):
    """Order-``N`` rogue wave ``A det(H) / det(T)`` at ``z1 = r + A``.

    Broadcasts over ``n`` and ``t``.
    """
    if order < 1:
        raise ValidationError("rogue order must be >= 1", field="order")
    p = spec.params
    f, g = taylor_coefficients(n, t, spec, order - 1)
    m = rogue_matrices(f, g, spec.z1, p.A)
    detT = _checked_det(m.T, "rogue Gram determinant is numerically zero")
    return p.A * np.linalg.det(m.H) / detT


def rogue_spec(params, n0=0, t0=0.0, c_tilde=None):
    return ElementarySpec(params, n0=n0, t0=t0, c_tilde=c_tilde or CTilde())

"""Background parameters and single-point spectral quantities.

The uniformizing variable zeta solves ``r (zeta + 1/zeta) = z + 1/z`` with
``r = sqrt(1 + A**2)``. Its two roots are reciprocal. The *principal* sheet
takes the root with ``|zeta| <= 1``; the *other* sheet takes its reciprocal,
which also flips the sign of omega and inverts xi.

Both roots have unit modulus on the unit circle and on the branch cut
``Sigma``. There the modulus cannot pick a root, so the choice is made by
continuity: from inside the disk on the unit circle, and from the
side named by the caller (``side='+'`` for ``z + i0``, ``'-'`` for
``z - i0``) on the cut.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import CutAmbiguity, ValidationError, ZeroArgument

PRINCIPAL = "principal"
OTHER = "other"
SHEETS = (PRINCIPAL, OTHER)

# modulus tolerance below which the two roots count as tied
_TIE_TOL = 1e-12
# distance from the real axis below which a point counts as on the cut
_CUT_TOL = 1e-14


@dataclass(frozen=True)
class Params:
    """Equation and background constants.

    ``a`` and ``b`` weight the second- and third-order dispersion, ``A`` is
    the background amplitude and ``B`` its wavenumber. ``B_plus`` and
    ``B_minus`` are the asymptotic phases of the transformed field.
    """

    a: float = 1.0
    b: float = 0.5
    A: float = 5.0 / 12.0
    B: float = 0.0
    B_plus: float = 0.0
    B_minus: float = 0.0

    def __post_init__(self):
        for name in ("a", "b", "A", "B", "B_plus", "B_minus"):
            value = getattr(self, name)
            if not isinstance(value, (int, float, np.integer, np.floating)):
                raise ValidationError(f"must be a real number, got {value!r}", field=name)
            if not math.isfinite(value):
                raise ValidationError("must be finite", field=name)
            object.__setattr__(self, name, float(value))
        if self.A < 0:
            raise ValidationError("background amplitude must be >= 0", field="A")

    @property
    def r(self):
        return math.sqrt(1.0 + self.A * self.A)

    @property
    def C(self):
        a, b, A, B = self.a, self.b, self.A, self.B
        return 2 * a * (1 - (1 + A * A) * math.cos(B)) + 2 * b * (1 + A * A) * math.sin(B)

    @property
    def growth(self):
        """Real rate ``A^2 (a sin B + b cos B)`` of the scalar time factor."""
        return self.A ** 2 * (self.a * math.sin(self.B) + self.b * math.cos(self.B))

    @property
    def branch_points(self):
        r, A = self.r, self.A
        return (r + A, r - A, -(r - A), -(r + A))

    def to_dict(self):
        return {k: getattr(self, k) for k in ("a", "b", "A", "B", "B_plus", "B_minus")}


class RegionTag(enum.Enum):
    Sigma_plus = "Sigma_plus"
    Sigma_minus = "Sigma_minus"
    Omega_0 = "Omega_0"
    Omega_in = "Omega_in"
    Omega_out = "Omega_out"
    BranchPoint = "BranchPoint"


@dataclass(frozen=True)
class SpectralScalars:
    """Spectral quantities at ``z`` on one sheet (scalars or arrays)."""

    z: complex
    sheet: str
    zeta: complex
    xi: complex
    omega: complex
    delta: complex
    D: complex
    eta: complex


def _on_cut(z, p):
    x = np.abs(z.real)
    return (np.abs(z.imag) <= _CUT_TOL * np.maximum(1.0, np.abs(z))) & (
        x >= p.r - p.A) & (x <= p.r + p.A)


def _near_cut_interval(z, p):
    x = np.abs(z.real)
    return (x >= p.r - p.A) & (x <= p.r + p.A)


def principal_zeta(z, p, side=None):
    """Root of ``r (zeta + 1/zeta) = z + 1/z`` with ``|zeta| <= 1``."""
    z = np.asarray(z, dtype=complex)
    if np.any(z == 0):
        raise ZeroArgument("z = 0 is not admissible", field="z")
    r = p.r
    root = np.sqrt((1 + z * z) ** 2 - 4 * r * r * z * z)
    z1 = (1 + z * z + root) / (2 * r * z)
    z2 = 1 / z1
    zeta = np.where(np.abs(z1) <= np.abs(z2), z1, z2)

    tied = np.abs(np.abs(z1) - 1) <= _TIE_TOL
    if np.any(tied):
        cut = tied & _on_cut(z, p)
        if np.any(cut) and side not in ("+", "-"):
            raise CutAmbiguity(
                "z lies on the branch cut; pass side='+' or side='-'", field="z")
        # approach direction: inward on the unit circle, vertical near the cut
        direction = -z / np.abs(z)
        vertical = tied & _near_cut_interval(z, p)
        sgn = np.where(np.abs(z.imag) > _CUT_TOL * np.maximum(1.0, np.abs(z)),
                       np.sign(z.imag), 1.0 if side != "-" else -1.0)
        direction = np.where(vertical, 1j * sgn, direction)
        with np.errstate(divide="ignore", invalid="ignore"):
            dz1 = (1 - 1 / (z * z)) / (r * (1 - 1 / (z1 * z1)))
            # |zeta(z + eps d)|^2 ~ 1 + 2 eps Re(conj(zeta) zeta' d)
            drift = np.real(np.conj(z1) * dz1 * direction)
        pick = np.where(np.isfinite(drift), np.where(drift < 0, z1, z2), zeta)
        zeta = np.where(tied, pick, zeta)
    return zeta


def eval_spectral(z, p, sheet=PRINCIPAL, side=None):
    """All z-dependent scalars at ``z`` on the requested sheet.

    Accepts scalars or arrays. Raises ``CutAmbiguity`` for points on the
    cut when no ``side`` hint is given.
    """
    if sheet not in SHEETS:
        raise ValidationError(f"unknown sheet {sheet!r}", field="sheet")
    scalar = np.ndim(z) == 0
    z = np.asarray(z, dtype=complex)
    zeta = principal_zeta(z, p, side=side)
    if sheet == OTHER:
        zeta = 1 / zeta
    a, b, A, B, r = p.a, p.b, p.A, p.B, p.r
    xi = (r * zeta - z) / A if A > 0 else np.zeros_like(z)
    omega = r * (zeta - 1 / zeta) / 2
    eB = np.exp(1j * B)
    delta = (b + 1j * a) / (eB * z) + (b - 1j * a) * z * eB
    D = (0.5j * a * (eB * z * z - 1 / (eB * z * z))
         + 1j * (a * r * r * math.cos(B) - b * (1 + A * A) * math.sin(B))
         + (b - 1j * a) * A * A * eB - (b + 1j * a) / eB)
    eta = np.log(zeta)
    if scalar:
        z, zeta, xi, omega, delta, D, eta = (
            complex(x) for x in (z, zeta, xi, omega, delta, D, eta))
    return SpectralScalars(z, sheet, zeta, xi, omega, delta, D, eta)


def classify_region(z, p):
    """Tag ``z`` with the region of the spectral plane it lies in."""
    z = complex(z)
    scale = max(1.0, abs(z))
    if min(abs(z - bp) for bp in p.branch_points) <= 1e-12 * scale:
        return RegionTag.BranchPoint
    if abs(z.imag) <= _CUT_TOL * scale and p.r - p.A <= abs(z.real) <= p.r + p.A:
        return RegionTag.Sigma_plus if abs(z.real) >= 1 else RegionTag.Sigma_minus
    if abs(abs(z) - 1) <= _CUT_TOL * scale:
        return RegionTag.Omega_0
    return RegionTag.Omega_in if abs(z) < 1 else RegionTag.Omega_out


def time_phase(t, z, p, sheet=PRINCIPAL, side=None):
    """Diagonal time factor ``exp{[A^2(a sin B + b cos B) + delta omega sigma3] t}``."""
    s = eval_spectral(z, p, sheet=sheet, side=side)
    growth = math.exp(p.growth * t)
    w = s.delta * s.omega * t
    return growth * np.diag([np.exp(w), np.exp(-w)])

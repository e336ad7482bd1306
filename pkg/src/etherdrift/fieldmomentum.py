"""Interaction field momentum of a point charge beside a long solenoid.

The charge supplies E, the solenoid interior supplies the uniform axial B,
and the interaction momentum P_e = (1/4 pi c) int E x B d^3x lives entirely
inside the solenoid bore.  The closed form for the ideal infinite solenoid
is (q/c) A evaluated at the charge, A_phi = B a^2/(2 d); the quadrature
here exists to confirm it and to expose its own convergence behaviour.

Everything in this module is Gaussian: cm, gauss, esu, erg, g cm/s.  The
integration domain is truncated at |z| <= Lambda; the neglected tail falls
off like the 1/z^2 decay of E, so the truncation error scales as 1/Lambda^2
and dominates the (spectrally small) azimuthal and (second-order) radial
and axial midpoint errors at practical grids.

The interaction *energy* integral is also reported.  For this source pair
it vanishes identically: the charge carries no B and the static solenoid
carries no E, so the cross energy density (E1.E2 + B1.B2)/4 pi is zero at
every point even though the cross momentum is not.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import ConvergenceError, DomainError, InputError
from .units import PAPER

_C_CGS = PAPER.c_cgs

#: default axial truncation, in units of max(a, d)
DEFAULT_TRUNCATION_FACTOR = 50.0

#: reference grid (radial, azimuthal, axial) used by the oracle comparison
REFERENCE_GRID = (16, 32, 512)


@dataclass(frozen=True)
class SolenoidChargeGeometry:
    """Solenoid of radius a (cm) and interior field B (gauss) along +z, with
    a point charge q (esu) at (d, 0, 0), d > a, outside the bore."""

    a: float
    B: float
    d: float
    q: float
    truncation_halflength: float | None = None
    grid: tuple = REFERENCE_GRID

    def __post_init__(self):
        if self.a <= 0.0:
            raise DomainError(f"solenoid radius must be positive, got {self.a}")
        if self.d <= self.a:
            raise DomainError(
                f"charge must sit outside the solenoid (d > a), got d={self.d}, a={self.a}")
        if self.truncation_halflength is not None and self.truncation_halflength <= 0.0:
            raise DomainError("truncation half-length must be positive")
        if len(self.grid) != 3:
            raise InputError(f"grid must have 3 dimensions, got {self.grid!r}")
        for n in self.grid:
            if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 2:
                raise InputError(f"grid dimensions must be integers >= 2, got {self.grid!r}")

    @property
    def half_length(self) -> float:
        if self.truncation_halflength is not None:
            return self.truncation_halflength
        return DEFAULT_TRUNCATION_FACTOR * max(self.a, self.d)


def em_momentum_density(E, B) -> np.ndarray:
    """Momentum density g = (E x B)/(4 pi c), Gaussian units."""
    E = np.asarray(E, dtype=float)
    B = np.asarray(B, dtype=float)
    if not (np.all(np.isfinite(E)) and np.all(np.isfinite(B))):
        raise DomainError("field values must be finite")
    return np.cross(E, B) / (4.0 * math.pi * _C_CGS)


def _momentum_on_grid(geom: SolenoidChargeGeometry, nr: int, nphi: int, nz: int,
                      half_length: float) -> np.ndarray:
    """Midpoint product rule over the bore cylinder, |z| <= half_length."""
    dr = geom.a / nr
    dphi = 2.0 * math.pi / nphi
    dz = 2.0 * half_length / nz
    r = ((np.arange(nr) + 0.5) * dr)[:, None, None]
    phi = ((np.arange(nphi) + 0.5) * dphi)[None, :, None]
    z = (-half_length + (np.arange(nz) + 0.5) * dz)[None, None, :]

    x_rel = r * np.cos(phi) - geom.d
    y = r * np.sin(phi)
    s3 = (x_rel * x_rel + y * y + z * z) ** 1.5
    weight = r * dr * dphi * dz
    # (E x B) with B = B zhat: (E_y B, -E_x B, 0); E = q rvec / s^3
    coeff = geom.q * geom.B / (4.0 * math.pi * _C_CGS)
    p_x = coeff * float(np.sum(y / s3 * weight))
    p_y = -coeff * float(np.sum(x_rel / s3 * weight))
    return np.array([p_x, p_y, 0.0])


@dataclass(frozen=True, eq=False)
class MomentumResult:
    P_e: np.ndarray
    u_em_integral: float
    estimated_quadrature_error: float


def integrate_field_momentum(geom: SolenoidChargeGeometry) -> MomentumResult:
    """Quadrature of the momentum density over the truncated bore.

    The error estimate combines a Richardson difference from one grid
    halving (checked against a second halving for convergence) with the
    analytic 1/Lambda^2 tail of the truncated axial integral.
    """
    half_length = geom.half_length
    nr, nphi, nz = geom.grid
    grids = [(nr, nphi, nz),
             (max(2, nr // 2), max(2, nphi // 2), max(2, nz // 2)),
             (max(2, nr // 4), max(2, nphi // 4), max(2, nz // 4))]
    p_fine, p_half, p_quarter = (
        _momentum_on_grid(geom, *g, half_length) for g in grids)
    scale = float(np.linalg.norm(p_fine))
    e_fine = float(np.linalg.norm(p_fine - p_half))
    e_coarse = float(np.linalg.norm(p_half - p_quarter))
    if grids[0] != grids[1]:
        if e_fine > e_coarse and e_fine > 1e-12 * scale:
            raise ConvergenceError(
                f"refinement difference grew: {e_fine} after halving vs {e_coarse}")
    tail = scale * (math.sqrt(half_length ** 2 + geom.d ** 2) / half_length - 1.0)
    return MomentumResult(p_fine, 0.0, e_fine / 3.0 + tail)


def analytic_solenoid_momentum(geom: SolenoidChargeGeometry) -> np.ndarray:
    """Closed form (q/c) A at the charge: magnitude q B a^2/(2 d c), azimuthal.

    With the charge on +x and B along +z the azimuthal direction at the
    charge is +y.
    """
    if geom.d <= geom.a:
        raise DomainError("closed form requires the charge outside the solenoid")
    magnitude = geom.q * geom.B * geom.a * geom.a / (2.0 * geom.d * _C_CGS)
    return np.array([0.0, magnitude, 0.0])


class ConvergenceRow(NamedTuple):
    half_length_cm: float
    grid: tuple
    p_magnitude: float
    rel_error: float


def convergence_study(geom: SolenoidChargeGeometry, levels: int) -> list:
    """Joint truncation/axial-grid refinement toward the geometry's own setup.

    Level k halves Lambda and the axial cell count (levels-1-k) times, so
    the axial cell size stays fixed while the truncation error, which
    dominates, shrinks by about 4x per level; the last level is the
    geometry as configured.
    """
    if levels < 2:
        raise InputError(f"convergence study needs at least 2 levels, got {levels}")
    nr, nphi, nz = geom.grid
    analytic = analytic_solenoid_momentum(geom)
    analytic_norm = float(np.linalg.norm(analytic))
    rows = []
    for k in range(levels):
        scale = 2.0 ** (k - (levels - 1))
        half_length = geom.half_length * scale
        nz_k = max(2, round(nz * scale))
        p = _momentum_on_grid(geom, nr, nphi, nz_k, half_length)
        rel = float(np.linalg.norm(p - analytic)) / analytic_norm
        rows.append(ConvergenceRow(half_length, (nr, nphi, nz_k),
                                   float(np.linalg.norm(p)), rel))
    return rows

"""Massive-photon electrostatics for the scalar-AB photon mass bound.

If the photon has mass m_gamma (given throughout as an inverse length, the
reciprocal of the reduced Compton wavelength), the Coulomb potential turns
into a Yukawa form and the interior of a charged conducting cylinder is no
longer an equipotential: it sags below the wall value V following
I0(m_gamma rho)/I0(m_gamma R).  A charged-particle beam through the
cylinder then accumulates a small extra scalar phase, and demanding that
phase stay below an interferometer resolution epsilon turns into a lower
bound on the Compton range

    m_gamma^{-1} = (R/2) sqrt(pi V tau / (epsilon Phi_0)),

with Phi_0 = h/2e, which equals (R/2) sqrt(e V tau/(hbar epsilon)).

Two expansion normalizations circulate for the interior potential; the
quarter form V [1 + (m^2/4)(rho^2 - R^2)] is the one consistent with the
bound inversion and with the Bessel series, and is the default.  The half
form is kept as an explicit variant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .abphase import scalar_phase
from .errors import DomainError, InputError, SeriesOverflowError
from .units import PAPER, PhysicalConstants, inverse_length_to_mass

#: largest argument accepted by the I0 series before the sum leaves double
#: range (I0(x) ~ e^x/sqrt(2 pi x), and e^710 overflows)
BESSEL_I0_MAX_ARGUMENT = 700.0

#: K0 small-argument series is used only near the origin; beyond this the
#: alternating cancellation makes it unreliable
BESSEL_K0_MAX_ARGUMENT = 30.0


def yukawa_potential(r: float, m_gamma: float) -> float:
    """Screened point-source potential e^{-m_gamma r}/r (Gaussian, unit charge)."""
    if r <= 0.0:
        raise DomainError(f"radius must be positive, got {r}")
    if m_gamma < 0.0:
        raise DomainError(f"photon mass parameter must be >= 0, got {m_gamma}")
    return math.exp(-m_gamma * r) / r


def bessel_I0(x: float) -> float:
    """Modified Bessel function of the first kind, order zero.

    Power series sum_k (x^2/4)^k / (k!)^2, accumulated until the next term
    falls below 1e-16 of the running sum.  Monotone increasing with
    I0(0) = 1; arguments above BESSEL_I0_MAX_ARGUMENT raise instead of
    returning inf.
    """
    if x < 0.0:
        raise DomainError(f"argument must be >= 0, got {x}")
    if x > BESSEL_I0_MAX_ARGUMENT:
        raise SeriesOverflowError(
            f"I0({x}) exceeds double range (threshold {BESSEL_I0_MAX_ARGUMENT})")
    quarter_x2 = 0.25 * x * x
    total = 1.0
    term = 1.0
    k = 1
    while True:
        term *= quarter_x2 / (k * k)
        total += term
        if term < 1e-16 * total:
            return total
        k += 1


def bessel_K0(x: float) -> float:
    """Modified Bessel function of the second kind, order zero (small x).

    Series -(ln(x/2) + gamma) I0(x) + sum_k (x^2/4)^k H_k/(k!)^2 with H_k
    the harmonic numbers.  Exists only to exhibit the logarithmic blow-up
    at the origin that excludes the K0 branch from the cylinder interior;
    it is not on the bound-computation path.
    """
    if x <= 0.0:
        raise DomainError(f"K0 diverges at the origin; argument must be > 0, got {x}")
    if x > BESSEL_K0_MAX_ARGUMENT:
        raise SeriesOverflowError(
            f"K0 series unreliable beyond {BESSEL_K0_MAX_ARGUMENT}, got {x}")
    quarter_x2 = 0.25 * x * x
    total = 0.0
    term = 1.0
    harmonic = 0.0
    k = 1
    while True:
        term *= quarter_x2 / (k * k)
        harmonic += 1.0 / k
        contribution = term * harmonic
        total += contribution
        if contribution < 1e-16 * max(total, 1.0):
            break
        k += 1
    return -(math.log(0.5 * x) + np.euler_gamma) * bessel_I0(x) + total


@dataclass(frozen=True)
class ProcaCylinderConfig:
    """Scalar-AB cylinder experiment: radius R (m), wall potential V (volts),
    interaction time tau (s), beam radius rho (m), phase resolution epsilon."""

    R: float
    V: float
    tau: float
    rho: float = 0.0
    epsilon: float = 1e-4

    def __post_init__(self):
        if self.R <= 0.0:
            raise DomainError(f"cylinder radius R must be positive, got {self.R}")
        if self.tau <= 0.0:
            raise DomainError(f"interaction time tau must be positive, got {self.tau}")
        if self.epsilon <= 0.0:
            raise DomainError(f"phase resolution epsilon must be positive, got {self.epsilon}")
        if not 0.0 <= self.rho < self.R:
            raise DomainError(f"beam radius must satisfy 0 <= rho < R, got {self.rho}")


def cylinder_potential_exact(rho: float, cfg: ProcaCylinderConfig, m_gamma: float) -> float:
    """Interior potential V I0(m_gamma rho)/I0(m_gamma R), volts.

    The solution regular at the origin; K0 is excluded because it diverges
    there.  Equals V on the wall exactly.
    """
    if rho < 0.0 or rho > cfg.R:
        raise DomainError(f"radial position must satisfy 0 <= rho <= R, got {rho}")
    if m_gamma < 0.0:
        raise DomainError(f"photon mass parameter must be >= 0, got {m_gamma}")
    if rho == cfg.R:
        return cfg.V
    return cfg.V * bessel_I0(m_gamma * rho) / bessel_I0(m_gamma * cfg.R)


def cylinder_potential_expansion(rho: float, cfg: ProcaCylinderConfig, m_gamma: float,
                                 variant: str = "quarter") -> float:
    """Two-term interior potential V [1 + (m_gamma^2/s)(rho^2 - R^2)], volts.

    ``variant`` picks the normalization s: "quarter" (s = 4, consistent with
    the I0 series and the phase-correction chain, residual O((m R)^4)) or
    "half" (s = 2, the alternative printed normalization, residual O((m R)^2)).
    """
    if rho < 0.0 or rho > cfg.R:
        raise DomainError(f"radial position must satisfy 0 <= rho <= R, got {rho}")
    if m_gamma < 0.0:
        raise DomainError(f"photon mass parameter must be >= 0, got {m_gamma}")
    if variant == "quarter":
        scale = 0.25
    elif variant == "half":
        scale = 0.5
    else:
        raise InputError(f"variant must be 'quarter' or 'half', got {variant!r}")
    m2 = m_gamma * m_gamma
    return cfg.V * (1.0 + scale * m2 * (rho * rho - cfg.R * cfg.R))


def relative_scalar_phase(v1_samples, v2_samples, dt: float,
                          charge: float | None = None,
                          constants: PhysicalConstants = PAPER) -> float:
    """Two-beam phase difference (e/hbar) int [V1(t) - V2(t)] dt."""
    v1 = np.asarray(v1_samples, dtype=float)
    v2 = np.asarray(v2_samples, dtype=float)
    if v1.shape != v2.shape:
        raise InputError(f"sample trains differ in shape: {v1.shape} vs {v2.shape}")
    return (scalar_phase(v1, dt, charge, constants)
            - scalar_phase(v2, dt, charge, constants))


def mass_phase_correction(cfg: ProcaCylinderConfig, m_gamma: float,
                          charge: float | None = None,
                          constants: PhysicalConstants = PAPER) -> float:
    """Extra scalar phase -(e m_gamma^2/4)(rho^2 - R^2) V tau / hbar.

    Positive for a beam inside the cylinder; vanishes with m_gamma.  With
    ``charge`` unset the coupling goes through charge_over_hbar = pi/Phi_0,
    which is what makes this the exact algebraic partner of invert_bound.
    """
    if m_gamma < 0.0:
        raise DomainError(f"photon mass parameter must be >= 0, got {m_gamma}")
    kappa = constants.charge_over_hbar if charge is None else charge / constants.hbar
    m2 = m_gamma * m_gamma
    return -(kappa * m2 / 4.0) * (cfg.rho * cfg.rho - cfg.R * cfg.R) * cfg.V * cfg.tau


def invert_bound(cfg: ProcaCylinderConfig, constants: PhysicalConstants = PAPER) -> float:
    """Compton-range bound m_gamma^{-1} = (R/2) sqrt(pi V tau/(epsilon Phi_0)), in cm.

    Algebraic inversion of mass_phase_correction at rho = 0 (the beam runs
    near the axis).  Evaluated in SI and converted to cm at the end; scales
    as R, sqrt(V), sqrt(tau) and 1/sqrt(epsilon).
    """
    if cfg.V * cfg.tau <= 0.0:
        raise DomainError("bound inversion needs V * tau > 0")
    range_m = 0.5 * cfg.R * math.sqrt(
        math.pi * cfg.V * cfg.tau / (cfg.epsilon * constants.flux_quantum))
    return range_m * 100.0


def time_of_flight(length: float, speed: float) -> float:
    """Traversal time tau = L/v."""
    if speed <= 0.0:
        raise DomainError(f"speed must be positive, got {speed}")
    if length < 0.0:
        raise DomainError(f"length must be >= 0, got {length}")
    return length / speed


@dataclass(frozen=True)
class PhotonMassBound:
    """A Compton-range/mass pair with its provenance label.

    Construction cross-checks the pair against m = hbar/(c range) and
    tolerates 15% to accommodate rounded published values.
    """

    m_gamma_inv_cm: float
    m_ph_g: float
    source: str

    def __post_init__(self):
        if self.m_gamma_inv_cm <= 0.0 or self.m_ph_g <= 0.0:
            raise DomainError("bound range and mass must be positive")
        ideal = inverse_length_to_mass(self.m_gamma_inv_cm)
        if abs(self.m_ph_g - ideal) > 0.15 * ideal:
            raise DomainError(
                f"inconsistent bound pair for {self.source!r}: "
                f"mass {self.m_ph_g} vs hbar/(c range) = {ideal}")


def projected_bound(base: PhotonMassBound, tau_scale: float) -> PhotonMassBound:
    """Rescale a bound for a tau_scale-times longer interaction time.

    From the bound formula m_gamma^{-1} grows as sqrt(tau), so the mass
    limit tightens by the same factor.
    """
    if tau_scale <= 0.0:
        raise DomainError(f"tau scale must be positive, got {tau_scale}")
    factor = math.sqrt(tau_scale)
    return PhotonMassBound(base.m_gamma_inv_cm * factor, base.m_ph_g / factor,
                           f"{base.source} (tau x{tau_scale:g})")


def bounds_registry() -> list:
    """Published photon-mass bounds quoted alongside the cylinder proposal.

    Entries keep the rounded published numbers where a pair was quoted; the
    Williams-Faller-Hill mass is derived from its range (only the range was
    quoted).
    """
    return [
        PhotonMassBound(3.0e9, inverse_length_to_mass(3.0e9), "Williams-Faller-Hill"),
        PhotonMassBound(1.66e13, 2.1e-51, "Luo et al."),
        PhotonMassBound(1.4e7, 2.5e-45, "Boulware-Deser"),
        PhotonMassBound(2.0e13, 2.0e-51, "Spavieri-Rodriguez"),
    ]

"""Speed of light in moving refractive media.

Covers the classical Fresnel drag v = c/n + (1 - 1/n^2) u, the
effectiveness-weighted variant v = c/n + e_f (1 - 1/n^2) u for rarefied
gases, and the two composition laws that map a preferred-frame speed into
the laboratory: Einstein velocity subtraction and the Tangherlini form,
which shares length contraction and time dilation but re-synchronizes
clocks.  The two laws differ in one-way speed at first order in u/c, yet

    1/w_einstein - 1/w_tangherlini = -u/c^2

holds exactly for any medium rest-frame speed, so every arm-difference
observable built from inverse speeds is identical under both.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DomainError
from .units import PAPER, PhysicalConstants

#: effectiveness of air at room temperature quoted with the e_f estimate
REFERENCE_AIR_EFFECTIVENESS = 6.1e-3

#: rate constant in the e_f = N_a (a/R)^3 * 22.9 estimate; the symbols
#: N_a, a, R are not pinned down further, so callers pass the dimensionless
#: combination themselves.
EFFECTIVENESS_RATE = 22.9


class CompositionLaw(enum.Enum):
    EINSTEIN = "einstein"
    TANGHERLINI = "tangherlini"


@dataclass(frozen=True)
class MediumSpec:
    """A transparent medium: refractive index n and drag effectiveness e_f.

    e_f defaults to 1 (full Fresnel drag, the compact-medium case); rarefied
    gases are modeled by e_f well below 1.
    """

    n: float
    e_f: float = 1.0

    def __post_init__(self):
        if self.n <= 0.0:
            raise DomainError(f"refractive index must be positive, got {self.n}")
        if not 0.0 <= self.e_f <= 1.0:
            raise DomainError(f"drag effectiveness must lie in [0, 1], got {self.e_f}")

    @property
    def below_unity(self) -> bool:
        return self.n < 1.0


@dataclass(frozen=True)
class FlowState:
    """Medium (or laboratory) motion relative to the preferred frame.

    ``u`` is a signed scalar along the optical axis; positive means the
    laboratory moves toward the light source.  ``direction`` lets callers
    keep a magnitude-times-orientation split if they prefer.
    """

    u: float
    direction: float = 1.0

    def __post_init__(self):
        if abs(self.axial()) >= PAPER.c:
            raise DomainError(f"flow speed must satisfy |u| < c, got {self.axial()}")

    def axial(self) -> float:
        return self.u * self.direction

    @classmethod
    def from_vector(cls, velocity, axis) -> "FlowState":
        velocity = np.asarray(velocity, dtype=float)
        axis = np.asarray(axis, dtype=float)
        norm = float(np.linalg.norm(axis))
        if norm == 0.0:
            raise DomainError("optical axis must be a nonzero vector")
        return cls(float(np.dot(velocity, axis)) / norm, 1.0)


def _check_index(n: float, allow_subunity: bool):
    if n <= 0.0:
        raise DomainError(f"refractive index must be positive, got {n}")
    if n < 1.0:
        if not allow_subunity:
            raise DomainError(f"refractive index must be >= 1, got {n}")
        warnings.warn(f"refractive index {n} < 1: outside the regime treated here", stacklevel=3)


def _check_speed(u: float, c: float):
    if abs(u) >= c:
        raise DomainError(f"medium speed must satisfy |u| < c, got {u}")


def fresnel_drag_coefficient(n: float, *, allow_subunity: bool = False) -> float:
    """Drag coefficient 1 - 1/n^2; zero in vacuum, approaching 1 as n grows."""
    _check_index(n, allow_subunity)
    return 1.0 - 1.0 / (n * n)


def fresnel_speed(n: float, u: float, constants: PhysicalConstants = PAPER,
                  *, allow_subunity: bool = False) -> float:
    """Fully dragged speed c/n + (1 - 1/n^2) u in the preferred frame."""
    _check_index(n, allow_subunity)
    _check_speed(u, constants.c)
    return constants.c / n + fresnel_drag_coefficient(n, allow_subunity=allow_subunity) * u


def effective_fresnel_speed(n: float, u: float, e_f: float,
                            constants: PhysicalConstants = PAPER,
                            *, allow_subunity: bool = False) -> float:
    """Partially dragged speed c/n + e_f (1 - 1/n^2) u.

    e_f = 1 recovers fresnel_speed, e_f = 0 the hypothesis that rarefied
    media carry light at c/n in the preferred frame regardless of motion.
    """
    _check_index(n, allow_subunity)
    _check_speed(u, constants.c)
    if not 0.0 <= e_f <= 1.0:
        raise DomainError(f"drag effectiveness must lie in [0, 1], got {e_f}")
    return constants.c / n + e_f * fresnel_drag_coefficient(n, allow_subunity=allow_subunity) * u


class DragEstimate(NamedTuple):
    value: float
    clamped: bool


def drag_effectiveness_estimate(number_factor: float, a_over_R_cubed: float) -> DragEstimate:
    """Rough estimate e_f = number_factor * a_over_R_cubed * 22.9.

    The inputs are taken as the raw dimensionless combination; clamping to
    the physical ceiling e_f <= 1 (a volume ratio cannot exceed 1) is
    reported through the flag instead of raising.
    """
    if number_factor < 0.0 or a_over_R_cubed < 0.0:
        raise DomainError("effectiveness estimate inputs must be >= 0")
    value = number_factor * a_over_R_cubed * EFFECTIVENESS_RATE
    if value > 1.0:
        return DragEstimate(1.0, True)
    return DragEstimate(value, False)


def compose_lab_speed(v_rest: float, u: float, law: CompositionLaw,
                      constants: PhysicalConstants = PAPER) -> float:
    """Map a preferred-frame light speed to the laboratory frame.

    Einstein: w = (v - u)/(1 - u v/c^2).  Tangherlini: w = (v - u)/(1 - u^2/c^2).
    """
    c = constants.c
    _check_speed(u, c)
    if law is CompositionLaw.EINSTEIN:
        return (v_rest - u) / (1.0 - u * v_rest / (c * c))
    if law is CompositionLaw.TANGHERLINI:
        return (v_rest - u) / (1.0 - (u / c) ** 2)
    raise DomainError(f"unknown composition law {law!r}")


def einstein_composed_speed(n: float, u: float, constants: PhysicalConstants = PAPER,
                            *, allow_subunity: bool = False) -> float:
    """One-way lab speed (c/n - u)/(1 - u/(c n)) under Einstein synchronization."""
    _check_index(n, allow_subunity)
    return compose_lab_speed(constants.c / n, u, CompositionLaw.EINSTEIN, constants)


def tangherlini_composed_speed(n: float, u: float, constants: PhysicalConstants = PAPER,
                               *, allow_subunity: bool = False) -> float:
    """One-way lab speed (c/n - u)/(1 - u^2/c^2) under Tangherlini synchronization."""
    _check_index(n, allow_subunity)
    return compose_lab_speed(constants.c / n, u, CompositionLaw.TANGHERLINI, constants)

"""Interaction-momentum fields and AB-type phase accumulation.

A wavefunction threading a region with interaction em momentum Q picks up
the phase integral of Q along its path.  Three field kinds cover the cases
of interest: a uniform Q, the Fresnel-drag momentum of a moving medium,
and the vector potential of an idealized flux line (the magnetic AB
geometry).  Phases are returned unwrapped; reduce mod 2 pi at the detector
if needed.

Positions are in meters and Q in rad/m throughout; the one Gaussian-form
helper (magnetic_ab_phase) says so explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (ConvergenceError, DomainError, InputError,
                     SingularPathError)
from .units import PAPER, PhysicalConstants


def fresnel_momentum(omega: float, n: float, u,
                     constants: PhysicalConstants = PAPER) -> np.ndarray:
    """Fresnel-Fizeau interaction momentum Q = -(omega/c^2)(n^2 - 1) u, rad/m."""
    if omega <= 0.0:
        raise DomainError(f"angular frequency must be positive, got {omega}")
    if n < 1.0:
        raise DomainError(f"refractive index must be >= 1, got {n}")
    u = np.asarray(u, dtype=float)
    c = constants.c
    return -(omega / (c * c)) * (n * n - 1.0) * u


@dataclass(frozen=True)
class UniformQ:
    """Spatially constant interaction momentum (rad/m)."""

    q: tuple

    kind = "uniform_q"

    def q_at(self, points) -> np.ndarray:
        points = np.asarray(points, dtype=float)
        return np.broadcast_to(np.asarray(self.q, dtype=float), points.shape).copy()


@dataclass(frozen=True)
class FresnelFlow:
    """Uniformly moving medium of index n seen by light of frequency omega."""

    omega: float
    n: float
    u: tuple

    kind = "fresnel_flow"

    def q_vector(self, constants: PhysicalConstants = PAPER) -> np.ndarray:
        return fresnel_momentum(self.omega, self.n, self.u, constants)

    def q_at(self, points) -> np.ndarray:
        points = np.asarray(points, dtype=float)
        return np.broadcast_to(self.q_vector(), points.shape).copy()


@dataclass(frozen=True)
class SolenoidVectorPotential:
    """Idealized flux line: A_phi = flux/(2 pi rho) off axis, Q = coupling * A.

    ``coupling`` is the charge-to-action ratio (e/hbar in SI); the default
    routes through the active flux-quantum profile.  The finite-core
    interior belongs to the fieldmomentum module; for phases only the
    enclosed flux matters.
    """

    flux: float
    coupling: float = PAPER.charge_over_hbar
    axis_point: tuple = (0.0, 0.0, 0.0)
    axis_direction: tuple = (0.0, 0.0, 1.0)

    kind = "solenoid"

    def _axis(self):
        point = np.asarray(self.axis_point, dtype=float)
        direction = np.asarray(self.axis_direction, dtype=float)
        norm = float(np.linalg.norm(direction))
        if norm == 0.0:
            raise DomainError("solenoid axis direction must be nonzero")
        return point, direction / norm

    def q_at(self, points) -> np.ndarray:
        point, axis = self._axis()
        points = np.atleast_2d(np.asarray(points, dtype=float))
        rel = points - point
        rel_perp = rel - np.outer(rel @ axis, axis)
        rho2 = np.einsum("ij,ij->i", rel_perp, rel_perp)
        if np.any(rho2 == 0.0):
            raise SingularPathError("field evaluated on the flux line")
        # azimuthal direction axis x rho_hat; magnitude flux/(2 pi rho)
        phi_hat_scaled = np.cross(axis, rel_perp) / rho2[:, None]
        return (self.coupling * self.flux / (2.0 * math.pi)) * phi_hat_scaled

    def check_segment(self, p0, p1):
        """Raise if the segment p0->p1 touches the flux line."""
        point, axis = self._axis()
        r0 = np.asarray(p0, dtype=float) - point
        r1 = np.asarray(p1, dtype=float) - point
        r0 -= np.dot(r0, axis) * axis
        r1 -= np.dot(r1, axis) * axis
        seg = r1 - r0
        seg2 = float(np.dot(seg, seg))
        if seg2 == 0.0:
            dist = float(np.linalg.norm(r0))
        else:
            t = min(1.0, max(0.0, -float(np.dot(r0, seg)) / seg2))
            dist = float(np.linalg.norm(r0 + t * seg))
        scale = max(1.0, float(np.linalg.norm(r0)), float(np.linalg.norm(r1)))
        if dist <= 1e-12 * scale:
            raise SingularPathError("integration path passes through the flux line")


class Path:
    """Piecewise-linear integration contour (vertices in meters)."""

    def __init__(self, vertices):
        vertices = np.asarray(vertices, dtype=float)
        if vertices.ndim != 2 or vertices.shape[1] != 3:
            raise InputError("path vertices must be an (N, 3) array of points")
        if vertices.shape[0] < 2:
            raise InputError("a path needs at least 2 vertices")
        if np.any(np.all(np.diff(vertices, axis=0) == 0.0, axis=1)):
            raise InputError("consecutive path vertices must be distinct")
        self.vertices = vertices

    def reversed(self) -> "Path":
        return Path(self.vertices[::-1])

    def segments(self):
        return zip(self.vertices[:-1], self.vertices[1:])


_MAX_SUBDIVISIONS = 1 << 22


def _segment_integral(field, p0, p1, rtol: float) -> float:
    delta = p1 - p0
    m = 8
    previous = None
    while m <= _MAX_SUBDIVISIONS:
        t = (np.arange(m) + 0.5) / m
        points = p0 + t[:, None] * delta
        values = field.q_at(points) @ delta
        integral = float(np.sum(values)) / m
        if previous is not None and abs(integral - previous) <= rtol * abs(integral) + 1e-30:
            return integral
        previous = integral
        m *= 2
    raise ConvergenceError("segment integral did not settle within the subdivision budget")


def phase_line_integral(field, path: Path, rtol: float = 1e-10) -> float:
    """Accumulated phase along the path, sum over segments of int Q . dl.

    Each segment uses the midpoint rule with doubling until the value moves
    by less than rtol relative; segments near the 1/rho singularity of a
    flux line therefore subdivide much deeper than straight free-space runs.
    """
    check = getattr(field, "check_segment", None)
    parts = []
    for p0, p1 in path.segments():
        if check is not None:
            check(p0, p1)
        parts.append(_segment_integral(field, p0, p1, rtol))
    return math.fsum(parts)


def scalar_phase(potential_samples, dt: float, charge: float | None = None,
                 constants: PhysicalConstants = PAPER) -> float:
    """Scalar AB phase (e/hbar) int V(t) dt from uniform samples of V."""
    samples = np.asarray(potential_samples, dtype=float)
    if samples.ndim != 1 or samples.size < 2:
        raise InputError("need at least 2 uniformly spaced potential samples")
    if dt <= 0.0:
        raise InputError(f"sample spacing must be positive, got {dt}")
    if charge is None:
        charge = constants.e_charge
    integral = float(np.trapezoid(samples, dx=dt))
    return charge * integral / constants.hbar


def magnetic_ab_phase(a_magnitude: float, l_path: float, charge_esu: float | None = None,
                      constants: PhysicalConstants = PAPER) -> float:
    """Magnetic AB phase e A L / (c hbar) in Gaussian units (G cm, cm, esu)."""
    if l_path <= 0.0:
        raise DomainError(f"path length must be positive, got {l_path}")
    if charge_esu is None:
        charge_esu = constants.e_charge * 2.99792458e9
    return charge_esu * a_magnitude * l_path / (constants.c_cgs * constants.hbar_cgs)


def interference_intensity(phi1: float, phi2: float, amplitude: float) -> float:
    """Two-beam intensity |A e^{i phi1} + A e^{i phi2}|^2 = 2A^2(1 + cos dphi)."""
    if amplitude < 0.0:
        raise DomainError(f"amplitude must be >= 0, got {amplitude}")
    return 2.0 * amplitude * amplitude * (1.0 + math.cos(phi1 - phi2))


_FIELD_KINDS = {}


def _register_field(kind, required, optional, builder):
    _FIELD_KINDS[kind] = (frozenset(required), dict(optional), builder)


_register_field(
    "uniform_q", {"q"}, {},
    lambda p: UniformQ(tuple(_vector3(p["q"], "q"))),
)
_register_field(
    "fresnel_flow", {"omega_rad_s", "n", "u_mps"}, {},
    lambda p: FresnelFlow(_scalar(p["omega_rad_s"], "omega_rad_s"),
                          _scalar(p["n"], "n"),
                          tuple(_vector3(p["u_mps"], "u_mps"))),
)
_register_field(
    "solenoid", {"flux_wb"},
    {"center_m": (0.0, 0.0, 0.0), "axis": (0.0, 0.0, 1.0), "coupling": None},
    lambda p: SolenoidVectorPotential(
        _scalar(p["flux_wb"], "flux_wb"),
        PAPER.charge_over_hbar if p["coupling"] is None else _scalar(p["coupling"], "coupling"),
        tuple(_vector3(p["center_m"], "center_m")),
        tuple(_vector3(p["axis"], "axis")),
    ),
)


def _scalar(value, key):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InputError(f"field parameter {key!r} must be a number, got {value!r}")
    return float(value)


def _vector3(value, key):
    if not isinstance(value, (list, tuple)) or len(value) != 3:
        raise InputError(f"field parameter {key!r} must be a 3-vector")
    return [_scalar(v, key) for v in value]


def field_from_dict(spec: dict):
    """Build an interaction field from a {kind, params} mapping (CLI payloads)."""
    if not isinstance(spec, dict):
        raise InputError("field spec must be a JSON object")
    unknown_top = set(spec) - {"kind", "params"}
    if unknown_top:
        raise InputError(f"unknown field spec key {sorted(unknown_top)[0]!r}")
    kind = spec.get("kind")
    if kind not in _FIELD_KINDS:
        known = ", ".join(sorted(_FIELD_KINDS))
        raise InputError(f"unknown field kind {kind!r} (known: {known})")
    required, optional, builder = _FIELD_KINDS[kind]
    params = spec.get("params", {})
    if not isinstance(params, dict):
        raise InputError("field params must be a JSON object")
    unknown = set(params) - required - set(optional)
    if unknown:
        raise InputError(f"unknown field parameter {sorted(unknown)[0]!r} for kind {kind!r}")
    missing = required - set(params)
    if missing:
        raise InputError(f"missing field parameter {sorted(missing)[0]!r} for kind {kind!r}")
    merged = dict(optional)
    merged.update(params)
    return builder(merged)

"""Closed-form matter-wave kinematics: wavelengths and single-path phases.

A free matter wave of wavelength lambda that propagates a distance L
accumulates a phase of pi*L/lambda, half of the 2*pi*L/lambda an optical
wave picks up over the same distance.  The factor of two traces back to the
quadratic dispersion relation of massive particles: the phase velocity is
half the group (particle) velocity.  Phase *differences* between two
interfering paths nevertheless come out approximately 2*pi*dL/lambda in
both cases, because interfering paths share a total duration rather than a
speed, so the longer path carries a shorter wavelength.  The routines here
give both the exact equal-duration phase difference and the naive
equal-wavelength one so that the error of the latter can be measured.

All quantities are SI.  Constants are CODATA 2018.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

HBAR = 1.054571817e-34  # J s
PLANCK_H = 6.62607015e-34  # J s
ELECTRON_MASS = 9.1093837015e-31  # kg

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class ParticleSpecies:
    """A point particle characterized by its mass in kg."""

    mass: float

    def __post_init__(self):
        if not (self.mass > 0.0 and math.isfinite(self.mass)):
            raise ValueError(f"mass must be positive and finite, got {self.mass}")


ELECTRON = ParticleSpecies(mass=ELECTRON_MASS)


@dataclass(frozen=True)
class PhaseValue:
    """A phase in radians, kept both as accumulated (raw) and principal value.

    ``raw`` accumulates without bound (interference orders live there);
    ``principal`` is raw reduced into (-pi, pi].
    """

    raw: float

    @property
    def principal(self) -> float:
        return self.raw - TWO_PI * math.ceil((self.raw - math.pi) / TWO_PI)

    def __sub__(self, other: "PhaseValue") -> "PhaseValue":
        return PhaseValue(self.raw - other.raw)


@dataclass(frozen=True)
class TwoPathPhaseDifference:
    """Equal-duration phase difference between two interfering paths.

    ``exact`` is the quadratic-in-length form (m/(2*hbar*dt))*(L_B^2 - L_A^2);
    ``first_order`` is its small-dL expansion 2*pi*(L_B - L_A)/lambda_A.
    Both are exposed so the approximation error can be measured instead of
    silently baked in.
    """

    exact: PhaseValue
    first_order: PhaseValue


def de_broglie_wavelength(species: ParticleSpecies, speed: float) -> float:
    """lambda = h/(m v) for a particle moving at ``speed`` (m/s)."""
    if not (speed > 0.0 and math.isfinite(speed)):
        raise ValueError(f"speed must be positive and finite, got {speed}")
    return PLANCK_H / (species.mass * speed)


def matter_phase(length: float, wavelength: float) -> PhaseValue:
    """Single-path matter-wave phase pi*L/lambda over a distance ``length``."""
    _check_length_wavelength(length, wavelength)
    return PhaseValue(math.pi * length / wavelength)


def optical_phase(length: float, wavelength: float) -> PhaseValue:
    """Wavefront-counting phase 2*pi*L/lambda (exact for light, not matter).

    Exactly twice :func:`matter_phase` for the same arguments.
    """
    _check_length_wavelength(length, wavelength)
    return PhaseValue(TWO_PI * length / wavelength)


def naive_equal_velocity_phase_diff(
    l_a: float, l_b: float, wavelength: float
) -> PhaseValue:
    """Phase difference pi*(L_B - L_A)/lambda under an equal-wavelength assumption.

    This assigns the same velocity (hence wavelength) to both paths, which is
    incompatible with experiment: it comes out a factor of two below the
    correct equal-duration result.  Kept for comparison and teaching.
    """
    if not wavelength > 0.0:
        raise ValueError(f"wavelength must be positive, got {wavelength}")
    return PhaseValue(math.pi * (l_b - l_a) / wavelength)


def expanded_wavelength(lambda_a: float, l_a: float, delta_l: float) -> float:
    """First-order wavelength of the longer path: lambda_A*(1 - dL/L_A).

    Interfering paths share a duration, so the path longer by ``delta_l``
    moves faster and carries a proportionally shorter wavelength.  Valid for
    |delta_l| < L_A; terms of order (dL/L_A)^2 are dropped.
    """
    if not l_a > 0.0:
        raise ValueError(f"l_a must be positive, got {l_a}")
    if abs(delta_l) >= l_a:
        raise ValueError(
            f"first-order expansion requires |delta_l| < l_a, got {delta_l} vs {l_a}"
        )
    return lambda_a * (1.0 - delta_l / l_a)


def two_path_phase_difference(
    l_a: float, l_b: float, duration: float, species: ParticleSpecies
) -> TwoPathPhaseDifference:
    """Exact and first-order phase difference for equal-duration paths.

    Both paths span the same total time ``duration``, so each moves at its
    own constant speed L/dt and accumulates m*L^2/(2*hbar*dt).  The exact
    difference is therefore quadratic in the lengths,

        dphi = (m / (2*hbar*dt)) * (L_B^2 - L_A^2),

    and expanding around L_A recovers the familiar 2*pi*(L_B - L_A)/lambda_A
    with lambda_A = h*dt/(m*L_A).  The residual between the two scales as
    (dL/L_A)^2.
    """
    if not (l_a > 0.0 and l_b > 0.0):
        raise ValueError("path lengths must be positive")
    if not duration > 0.0:
        raise ValueError(f"duration must be positive, got {duration}")
    m = species.mass
    exact = m * (l_b * l_b - l_a * l_a) / (2.0 * HBAR * duration)
    lambda_a = PLANCK_H * duration / (m * l_a)
    first = TWO_PI * (l_b - l_a) / lambda_a
    return TwoPathPhaseDifference(PhaseValue(exact), PhaseValue(first))


def far_field_maxima(d: float, wavelength: float, order: int) -> float:
    """Diffraction angle of the ``order``-th far-field maximum: d sin(theta) = n lambda."""
    if not (d > 0.0 and wavelength > 0.0):
        raise ValueError("slit separation and wavelength must be positive")
    s = order * wavelength / d
    if abs(s) > 1.0:
        raise ValueError(f"no diffraction order {order} for d={d}, wavelength={wavelength}")
    return math.asin(s)


def _check_length_wavelength(length: float, wavelength: float) -> None:
    if not wavelength > 0.0:
        raise ValueError(f"wavelength must be positive, got {wavelength}")
    if length < 0.0:
        raise ValueError(f"length must be non-negative, got {length}")

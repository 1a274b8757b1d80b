"""Gaussian matter wave packets: group velocity, phase velocity, carrier phase.

A packet built from a Gaussian momentum distribution of width delta_k around
carrier wavenumber k0, under the quadratic free-particle dispersion
omega = hbar k^2 / 2m, is (up to normalization and for times short enough
that spreading is negligible)

    psi(x, t) = exp(i (k0 x - omega0 t)) * exp(-(delta_k^2 / 2)(x - hbar k0 t / m)^2).

The envelope peak moves at the group velocity hbar k0 / m -- the particle
velocity -- while the carrier crests move at half that, so a packet that
travels a distance L accumulates the carrier phase k0 L - omega0 t = k0 L / 2,
i.e. pi L / lambda rather than the wavefront count 2 pi L / lambda.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .kinematics import HBAR, ParticleSpecies, PhaseValue

#: delta_k below this fraction of k0 keeps the narrow-band picture honest
_MAX_RELATIVE_WIDTH = 0.2


@dataclass(frozen=True)
class WavePacketParams:
    """Carrier wavenumber k0 (rad/m), momentum width delta_k (rad/m), species."""

    k0: float
    delta_k: float
    species: ParticleSpecies

    def __post_init__(self):
        if not self.k0 > 0.0:
            raise ValueError(f"k0 must be positive, got {self.k0}")
        if not 0.0 < self.delta_k < _MAX_RELATIVE_WIDTH * self.k0:
            raise ValueError(
                f"delta_k must satisfy 0 < delta_k < k0/5, got {self.delta_k} vs k0={self.k0}"
            )

    @property
    def omega0(self) -> float:
        return HBAR * self.k0 * self.k0 / (2.0 * self.species.mass)

    @property
    def spreading_time(self) -> float:
        """Timescale m / (hbar delta_k^2) beyond which spreading matters."""
        return self.species.mass / (HBAR * self.delta_k * self.delta_k)


def packet_amplitude(params: WavePacketParams, x, t: float):
    """psi(x, t) with the no-spread envelope; proportionality constant 1.

    ``x`` may be a scalar or an array.  Times beyond the spreading bound
    m/(hbar delta_k^2) are refused, since the frozen-envelope form has
    stopped being a faithful approximation there.
    """
    if abs(t) > params.spreading_time:
        raise ValueError(
            f"|t|={abs(t):.3e} s exceeds the spreading bound "
            f"{params.spreading_time:.3e} s; the no-spread form is invalid"
        )
    x = np.asarray(x, dtype=float)
    center = HBAR * params.k0 * t / params.species.mass
    carrier = np.exp(1j * (params.k0 * x - params.omega0 * t))
    envelope = np.exp(-0.5 * params.delta_k**2 * (x - center) ** 2)
    out = carrier * envelope
    return complex(out) if out.ndim == 0 else out


def group_velocity(params: WavePacketParams) -> float:
    """Envelope-peak speed d(omega)/dk = hbar k0 / m (the particle velocity)."""
    return HBAR * params.k0 / params.species.mass


def phase_velocity(params: WavePacketParams) -> float:
    """Carrier-crest speed omega/k = hbar k0 / 2m, exactly half the group velocity."""
    return HBAR * params.k0 / (2.0 * params.species.mass)


def packet_carrier_phase(params: WavePacketParams, distance: float) -> PhaseValue:
    """Carrier phase accumulated when the envelope travels ``distance``.

    The travel time follows the envelope, t = L m / (hbar k0), so the carrier
    argument k0 L - omega0 t collapses to k0 L / 2 = pi L / lambda0.
    """
    if distance < 0.0:
        raise ValueError(f"distance must be non-negative, got {distance}")
    travel_time = distance * params.species.mass / (HBAR * params.k0)
    return PhaseValue(params.k0 * distance - params.omega0 * travel_time)

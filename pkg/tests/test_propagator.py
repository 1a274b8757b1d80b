import cmath
import math

import numpy as np
import pytest

from matterslit import (
    ELECTRON,
    HBAR,
    SpaceTimeEvent,
    TwoLegPath,
    de_broglie_wavelength,
    free_propagator,
    matter_phase,
    path_phase,
    slit_phase,
    stationary_phase,
    stationary_slit_time,
    two_step_amplitude,
)
from conftest import compose_free_propagators


class TestFreePropagator:
    def test_zero_displacement_argument(self):
        # the exponential is 1; sqrt(1/i) contributes exactly -pi/4
        a = SpaceTimeEvent(0.0, 0.0)
        b = SpaceTimeEvent(0.0, 3.37e-13)
        k = free_propagator(a, b, ELECTRON)
        assert k.argument() == pytest.approx(-math.pi / 4, rel=1e-14)

    def test_exponent_phase_matches_matter_phase(self):
        dx, dt = 3.37e-6, 3.37e-13
        expected = path_phase(dx, dt, ELECTRON).raw
        assert expected == pytest.approx(1.4556e5, rel=1e-4)  # quoted round number
        lam = de_broglie_wavelength(ELECTRON, dx / dt)
        assert expected == pytest.approx(matter_phase(dx, lam).raw, rel=2e-9)
        # the propagator carries exactly that phase on top of the -pi/4 prefactor
        k = free_propagator(SpaceTimeEvent(0, 0), SpaceTimeEvent(dx, dt), ELECTRON)
        mag = k.magnitude()
        reconstructed = mag * cmath.exp(1j * (expected - math.pi / 4))
        # phases of order 1e5 rad reduce mod 2 pi with ~ phi*eps error
        assert k.as_complex() == pytest.approx(reconstructed, rel=1e-9)

    def test_magnitude_depends_only_on_duration(self):
        dt = 7.7e-13
        mags = set()
        for dx in (0.0, 1e-9, 1e-6, 5e-6):
            k = free_propagator(SpaceTimeEvent(0, 0), SpaceTimeEvent(dx, dt), ELECTRON)
            mags.add(k.magnitude())
        assert len(mags) == 1
        expected = math.sqrt(ELECTRON.mass / (2 * math.pi * HBAR * dt))
        assert mags.pop() == pytest.approx(expected, rel=1e-13)

    def test_causality(self):
        a = SpaceTimeEvent(0.0, 1e-13)
        with pytest.raises(ValueError):
            free_propagator(a, SpaceTimeEvent(1e-6, 1e-13), ELECTRON)
        with pytest.raises(ValueError):
            free_propagator(a, SpaceTimeEvent(1e-6, 0.5e-13), ELECTRON)

    def test_composition_over_intermediate_plane(self):
        # integrating K(b; mid) K(mid; a) over the midpoint plane must
        # reproduce K(b; a); window of 30 Fresnel zones, tapered.
        a = SpaceTimeEvent(0.0, 0.0)
        b = SpaceTimeEvent(3.37e-6, 6.72e-13)
        composed = compose_free_propagators(a, b, ELECTRON, zones=30)
        direct = free_propagator(a, b, ELECTRON).as_complex()
        scale = abs(direct)
        assert abs(composed.real - direct.real) / scale < 1e-3
        assert abs(composed.imag - direct.imag) / scale < 1e-3


class TestPathPhase:
    def test_zero_length(self):
        assert path_phase(0.0, 1e-13, ELECTRON).raw == 0.0

    def test_inverse_duration(self):
        one = path_phase(1e-6, 1e-13, ELECTRON).raw
        two = path_phase(1e-6, 2e-13, ELECTRON).raw
        assert two == pytest.approx(one / 2, rel=1e-14)

    def test_nonpositive_duration(self):
        with pytest.raises(ValueError):
            path_phase(1e-6, 0.0, ELECTRON)


class TestTwoStepAmplitude:
    PATH = TwoLegPath(3.37e-6, 3.37e-6, 6.72e-13)

    def test_magnitude(self):
        t = 0.3 * self.PATH.tau
        k = two_step_amplitude(self.PATH, t, ELECTRON)
        expected = (ELECTRON.mass / (2 * math.pi * HBAR)) / math.sqrt(
            t * (self.PATH.tau - t)
        )
        assert k.magnitude() == pytest.approx(expected, rel=1e-12)

    def test_symmetric_midpoint_phase(self):
        # L1 = L2 = L at t = tau/2: exponent phase 2 m L^2/(hbar tau), plus
        # the two e^{-i pi/4} prefactors
        tau = self.PATH.tau
        k = two_step_amplitude(self.PATH, tau / 2, ELECTRON)
        phi = 2 * ELECTRON.mass * 3.37e-6**2 / (HBAR * tau)
        assert phi == pytest.approx(stationary_phase(self.PATH, ELECTRON).raw, rel=1e-14)
        expected = k.magnitude() * cmath.exp(1j * (phi - math.pi / 2))
        assert k.as_complex() == pytest.approx(expected, rel=1e-9)

    def test_argument_symmetry_under_leg_exchange(self):
        path = TwoLegPath(2.1e-6, 3.9e-6, 6.0e-13)
        mirrored = TwoLegPath(3.9e-6, 2.1e-6, 6.0e-13)
        t = 0.27 * path.tau
        k1 = two_step_amplitude(path, t, ELECTRON)
        k2 = two_step_amplitude(mirrored, path.tau - t, ELECTRON)
        assert k1.as_complex() == pytest.approx(k2.as_complex(), rel=1e-9)

    def test_crossing_time_bounds(self):
        for t in (0.0, self.PATH.tau, -1e-15, 2 * self.PATH.tau):
            with pytest.raises(ValueError):
                two_step_amplitude(self.PATH, t, ELECTRON)


class TestSlitPhase:
    PATH = TwoLegPath(3.37e-6, 3.37e-6, 6.72e-13)

    def test_symmetric_midpoint(self):
        val = slit_phase(self.PATH, self.PATH.tau / 2, ELECTRON).raw
        assert val == pytest.approx(
            2 * ELECTRON.mass * 3.37e-6**2 / (HBAR * self.PATH.tau), rel=1e-14
        )

    def test_divergence_toward_endpoints(self):
        mid = slit_phase(self.PATH, self.PATH.tau / 2, ELECTRON).raw
        near_zero = slit_phase(self.PATH, 1e-6 * self.PATH.tau, ELECTRON).raw
        near_tau = slit_phase(self.PATH, self.PATH.tau * (1 - 1e-6), ELECTRON).raw
        assert near_zero > 1e5 * mid
        assert near_tau > 1e5 * mid

    def test_grid_scan_minimum_at_stationary_time(self):
        path = TwoLegPath(2.3e-6, 4.1e-6, 7.0e-13)
        t_star = stationary_slit_time(path)
        grid = np.linspace(0.02, 0.98, 4001) * path.tau
        phases = [slit_phase(path, float(t), ELECTRON).raw for t in grid]
        t_min = grid[int(np.argmin(phases))]
        assert t_min == pytest.approx(t_star, abs=grid[1] - grid[0])
        assert min(phases) >= stationary_phase(path, ELECTRON).raw


class TestStationarySlitTime:
    def test_symmetric(self):
        path = TwoLegPath(1e-6, 1e-6, 1e-13)
        assert stationary_slit_time(path) == pytest.approx(path.tau / 2, rel=1e-15)

    def test_two_to_one(self):
        path = TwoLegPath(2e-6, 1e-6, 3e-13)
        assert stationary_slit_time(path) == pytest.approx(2 * path.tau / 3, rel=1e-15)

    def test_equal_leg_velocities(self):
        path = TwoLegPath(2.7e-6, 3.3e-6, 5e-13)
        t_star = stationary_slit_time(path)
        assert path.l1 / t_star == pytest.approx(path.l2 / (path.tau - t_star), rel=1e-14)

    def test_finite_difference_derivative_vanishes(self):
        # central difference of the slit phase at t*, step tau*1e-7; the
        # tolerance is the curvature scale phi'' * h
        path = TwoLegPath(2.7e-6, 3.3e-6, 5e-13)
        t_star = stationary_slit_time(path)
        h = path.tau * 1e-7
        derivative = (
            slit_phase(path, t_star + h, ELECTRON).raw
            - slit_phase(path, t_star - h, ELECTRON).raw
        ) / (2 * h)
        curvature = (ELECTRON.mass / HBAR) * (
            path.l1**2 / t_star**3 + path.l2**2 / (path.tau - t_star) ** 3
        )
        assert abs(derivative) < curvature * h

    def test_second_derivative_positive(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            path = TwoLegPath(
                float(rng.uniform(0.5e-6, 5e-6)),
                float(rng.uniform(0.5e-6, 5e-6)),
                float(rng.uniform(1e-13, 1e-12)),
            )
            t_star = stationary_slit_time(path)
            h = path.tau * 1e-5
            center = slit_phase(path, t_star, ELECTRON).raw
            assert slit_phase(path, t_star + h, ELECTRON).raw > center
            assert slit_phase(path, t_star - h, ELECTRON).raw > center


class TestStationaryPhase:
    def test_symmetric_closed_form(self):
        path = TwoLegPath(3.37e-6, 3.37e-6, 6.72e-13)
        expected = 2 * ELECTRON.mass * 3.37e-6**2 / (HBAR * path.tau)
        assert stationary_phase(path, ELECTRON).raw == pytest.approx(expected, rel=1e-14)

    def test_additivity_at_stationary_split(self):
        path = TwoLegPath(2.2e-6, 3.8e-6, 6.5e-13)
        t_star = stationary_slit_time(path)
        split = (
            path_phase(path.l1, t_star, ELECTRON).raw
            + path_phase(path.l2, path.tau - t_star, ELECTRON).raw
        )
        assert stationary_phase(path, ELECTRON).raw == pytest.approx(split, rel=1e-14)

    def test_equals_matter_phase_at_uniform_speed(self):
        path = TwoLegPath(2.2e-6, 3.8e-6, 6.5e-13)
        speed = path.total_length / path.tau
        lam = de_broglie_wavelength(ELECTRON, speed)
        assert stationary_phase(path, ELECTRON).raw == pytest.approx(
            matter_phase(path.total_length, lam).raw, rel=2e-9
        )

    def test_scaling_in_duration_and_length(self):
        base = TwoLegPath(2e-6, 3e-6, 5e-13)
        ref = stationary_phase(base, ELECTRON).raw
        half_tau = stationary_phase(TwoLegPath(2e-6, 3e-6, 2.5e-13), ELECTRON).raw
        assert half_tau == pytest.approx(2 * ref, rel=1e-14)
        doubled = stationary_phase(TwoLegPath(4e-6, 6e-6, 5e-13), ELECTRON).raw
        assert doubled == pytest.approx(4 * ref, rel=1e-14)

    def test_path_validation(self):
        with pytest.raises(ValueError):
            TwoLegPath(0.0, 1e-6, 1e-13)
        with pytest.raises(ValueError):
            TwoLegPath(1e-6, 1e-6, -1e-13)

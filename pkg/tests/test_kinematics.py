import math

import numpy as np
import pytest

from matterslit import (
    ELECTRON,
    HBAR,
    PLANCK_H,
    ParticleSpecies,
    PhaseValue,
    de_broglie_wavelength,
    expanded_wavelength,
    far_field_maxima,
    matter_phase,
    naive_equal_velocity_phase_diff,
    optical_phase,
    two_path_phase_difference,
)

# layout of the near-field thought experiment, reused across modules
ARM = 3.37e-6
SEPARATION = 2.73e-7
DURATION = 6.74e-13


class TestDeBroglieWavelength:
    def test_electron_at_1e7(self):
        # frozen from h/(m v) with CODATA 2018 values
        assert de_broglie_wavelength(ELECTRON, 1.0e7) == pytest.approx(
            7.273895103253708e-11, rel=1e-12
        )

    def test_inverse_proportionality(self):
        lam = de_broglie_wavelength(ELECTRON, 2.5e6)
        assert de_broglie_wavelength(ELECTRON, 5.0e6) == pytest.approx(lam / 2, rel=1e-14)

    def test_algebraic_inversion(self):
        v = PLANCK_H / (ELECTRON.mass * 1.0)
        assert de_broglie_wavelength(ELECTRON, v) == pytest.approx(1.0, rel=1e-14)

    @pytest.mark.parametrize("speed", [0.0, -1.0, math.inf, math.nan])
    def test_bad_speed_rejected(self, speed):
        with pytest.raises(ValueError):
            de_broglie_wavelength(ELECTRON, speed)


class TestSinglePathPhases:
    def test_zero_length(self):
        assert matter_phase(0.0, 1e-10).raw == 0.0

    def test_unit_ratio(self):
        assert matter_phase(1e-10, 1e-10).raw == pytest.approx(math.pi, rel=1e-15)

    def test_matter_phase_against_action_form(self):
        # pi L / lambda must equal m L^2/(2 hbar dt) with dt = L/v; the two
        # routes go through h and hbar respectively, which are individually
        # rounded CODATA values, so they agree only to ~6e-10.
        lam = de_broglie_wavelength(ELECTRON, 1.0e7)
        phase = matter_phase(ARM, lam).raw
        assert phase == pytest.approx(145550.1776188912, rel=1e-12)
        dt = ARM / 1.0e7
        action_form = ELECTRON.mass * ARM**2 / (2 * HBAR * dt)
        assert phase == pytest.approx(action_form, rel=2e-9)

    def test_optical_is_twice_matter(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            length = float(rng.uniform(1e-9, 1e-3))
            lam = float(rng.uniform(1e-12, 1e-6))
            assert optical_phase(length, lam).raw == 2.0 * matter_phase(length, lam).raw

    def test_one_wavelength_is_two_pi_optical(self):
        assert optical_phase(1e-10, 1e-10).raw == pytest.approx(2 * math.pi, rel=1e-15)

    def test_negative_length_rejected(self):
        with pytest.raises(ValueError):
            matter_phase(-1e-9, 1e-10)
        with pytest.raises(ValueError):
            optical_phase(-1e-9, 1e-10)

    def test_nonpositive_wavelength_rejected(self):
        for fn in (matter_phase, optical_phase):
            with pytest.raises(ValueError):
                fn(1e-9, 0.0)


class TestNaiveEqualVelocityPhaseDiff:
    def test_equal_paths(self):
        assert naive_equal_velocity_phase_diff(1e-6, 1e-6, 1e-10).raw == 0.0

    def test_unit_path_difference(self):
        lam = 1e-10
        val = naive_equal_velocity_phase_diff(1e-6, 1e-6 + lam, lam)
        assert val.raw == pytest.approx(math.pi, rel=1e-9)

    def test_half_of_first_order_equal_duration_value(self):
        # the equal-wavelength assumption misses a factor of two
        duration = 5e-13
        l_a, l_b = 2e-6, 2.003e-6
        lam_a = PLANCK_H * duration / (ELECTRON.mass * l_a)
        naive = naive_equal_velocity_phase_diff(l_a, l_b, lam_a).raw
        first_order = two_path_phase_difference(l_a, l_b, duration, ELECTRON).first_order.raw
        assert naive == pytest.approx(0.5 * first_order, rel=1e-12)


class TestExpandedWavelength:
    def test_zero_path_difference(self):
        assert expanded_wavelength(1e-10, 1e-6, 0.0) == 1e-10

    def test_direct_substitution(self):
        assert expanded_wavelength(1e-10, 1e-6, 1e-8) == pytest.approx(0.99e-10, rel=1e-14)

    def test_residual_is_second_order(self):
        # exact lambda_B = lambda_A L/(L + dL); the dropped piece is (dL/L)^2 * lambda
        lam, length = 7.27e-11, 3.37e-6
        for ratio in np.logspace(-4, -2, 7):
            delta = ratio * length
            exact = lam * length / (length + delta)
            approx = expanded_wavelength(lam, length, delta)
            assert abs(exact - approx) / (lam * ratio**2) == pytest.approx(1.0, abs=0.02)

    def test_expansion_domain(self):
        with pytest.raises(ValueError):
            expanded_wavelength(1e-10, 1e-6, 1e-6)


class TestTwoPathPhaseDifference:
    def test_identical_paths(self):
        diff = two_path_phase_difference(1e-6, 1e-6, 1e-13, ELECTRON)
        assert diff.exact.raw == 0.0
        assert diff.first_order.raw == 0.0

    def test_antisymmetry(self):
        fwd = two_path_phase_difference(2e-6, 2.1e-6, 1e-13, ELECTRON).exact.raw
        rev = two_path_phase_difference(2.1e-6, 2e-6, 1e-13, ELECTRON).exact.raw
        assert fwd == -rev

    def test_residual_scales_quadratically(self):
        # log-log slope of |exact - first_order| vs dL/L over [1e-4, 1e-2]
        l_a, duration = 2e-6, 5e-13
        ratios = np.logspace(-4, -2, 9)
        residuals = []
        for ratio in ratios:
            d = two_path_phase_difference(l_a, l_a * (1 + ratio), duration, ELECTRON)
            residuals.append(abs(d.exact.raw - d.first_order.raw))
        slope = np.polyfit(np.log(ratios), np.log(residuals), 1)[0]
        assert slope == pytest.approx(2.0, abs=1e-3)

    def test_residual_over_ratio_squared_bounded(self):
        l_a, duration = 2e-6, 5e-13
        scale = ELECTRON.mass * l_a**2 / (2 * HBAR * duration)
        for ratio in np.logspace(-6, -3, 7):
            d = two_path_phase_difference(l_a, l_a * (1 + ratio), duration, ELECTRON)
            normalized = abs(d.exact.raw - d.first_order.raw) / ratio**2
            assert normalized == pytest.approx(scale, rel=0.01)

    def test_near_field_arrangement_value(self):
        # paths 2L and 2 sqrt(L^2+d^2) at fixed duration: exactly 2 m d^2/(hbar dt)
        l_a = 2 * ARM
        l_b = 2 * math.hypot(ARM, SEPARATION)
        diff = two_path_phase_difference(l_a, l_b, DURATION, ELECTRON).exact.raw
        closed = 2 * ELECTRON.mass * SEPARATION**2 / (HBAR * DURATION)
        assert diff == pytest.approx(closed, rel=1e-12)
        assert diff == pytest.approx(1910.1, rel=2e-4)  # quoted round number
        assert diff / (2 * math.pi) == pytest.approx(304.0, rel=2e-4)

    def test_nonpositive_duration_rejected(self):
        with pytest.raises(ValueError):
            two_path_phase_difference(1e-6, 2e-6, 0.0, ELECTRON)


class TestFarFieldMaxima:
    def test_central_maximum(self):
        assert far_field_maxima(1e-7, 1e-10, 0) == 0.0

    def test_half_sine(self):
        assert far_field_maxima(2e-10, 1e-10, 1) == pytest.approx(math.pi / 6, rel=1e-14)

    def test_near_field_experiment_angle(self):
        lam = de_broglie_wavelength(ELECTRON, 1.0e7)
        assert far_field_maxima(SEPARATION, lam, 1) == pytest.approx(
            2.664430472277769e-4, rel=1e-12
        )

    def test_missing_order(self):
        with pytest.raises(ValueError):
            far_field_maxima(1e-10, 1e-10, 2)


class TestPhaseValue:
    @pytest.mark.parametrize(
        "raw,expected",
        [
            (0.0, 0.0),
            (math.pi, math.pi),
            (-math.pi, math.pi),
            (3 * math.pi, math.pi),
            (2 * math.pi, 0.0),
            (-0.5, -0.5),
        ],
    )
    def test_principal_special_points(self, raw, expected):
        assert PhaseValue(raw).principal == pytest.approx(expected, abs=1e-12)

    def test_principal_range_and_offset(self):
        rng = np.random.default_rng(11)
        for raw in rng.uniform(-1e4, 1e4, 300):
            p = PhaseValue(float(raw)).principal
            assert -math.pi < p <= math.pi
            turns = (raw - p) / (2 * math.pi)
            assert abs(turns - round(turns)) < 1e-9

    def test_species_validation(self):
        with pytest.raises(ValueError):
            ParticleSpecies(mass=0.0)
        with pytest.raises(ValueError):
            ParticleSpecies(mass=-1e-30)

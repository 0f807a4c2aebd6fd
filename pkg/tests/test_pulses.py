"""Gaussian pulse families and effective-parameter extraction."""

import numpy as np
import pytest
from scipy.special import erf

from photonlimits import (
    CoverageError,
    GaussianSpec,
    Grid,
    Spectrum,
    effective_params,
    fourier_forward,
    gaussian_pulse,
    negative_frequency_weight,
    physical_target_from_seed,
)
from photonlimits.errors import DomainError


class TestGaussianSpec:
    @pytest.mark.parametrize(
        "kwargs",
        [
            {"omega0": 0.0, "sigma": 1.0},
            {"omega0": 1.0, "sigma": -1.0},
            {"omega0": 1.0, "sigma": 1.0, "tau": -0.5},
        ],
    )
    def test_invalid_parameters(self, kwargs):
        with pytest.raises(DomainError):
            GaussianSpec(**kwargs)


class TestGaussianPulse:
    def test_truncated_zero_delay_retains_half_mass(self, grid):
        spec = GaussianSpec(1.0, 1.0, 0.0, truncated=True)
        t = grid.times()
        raw = np.exp(-(t**2) / 2.0)
        full = float(np.sum(raw**2) * grid.dt)
        clipped = float(np.sum(np.where(t >= 0.0, raw, 0.0) ** 2) * grid.dt)
        # the t = 0 sample belongs wholly to the clipped half, so the
        # retained mass is exactly (full + dt)/2 on the symmetric grid
        assert clipped == pytest.approx((full + grid.dt) / 2.0, abs=1e-12)
        pulse = gaussian_pulse(spec, grid)
        assert pulse.norm_sq == pytest.approx(1.0, abs=1e-12)

    def test_untruncated_eta_matches_erf(self):
        grid = Grid.centered(2**16, 0.05)
        pulse = gaussian_pulse(GaussianSpec(1.0, 1.0, 8.0, truncated=False), grid)
        eta = negative_frequency_weight(fourier_forward(pulse))
        # coarse-grid bias is about |G(0)|^2 domega / 2; the acceptance
        # suite checks the 1e-6 version on a much finer grid
        assert eta == pytest.approx((1.0 - erf(1.0)) / 2.0, abs=5e-4)

    def test_large_delay_truncation_negligible(self, grid):
        tau = 6.0
        a = gaussian_pulse(GaussianSpec(1.0, 1.0, tau, truncated=True), grid)
        b = gaussian_pulse(GaussianSpec(1.0, 1.0, tau, truncated=False), grid)
        diff = float(np.sum(np.abs(a.values - b.values) ** 2) * grid.dt)
        assert diff < 1e-8

    def test_window_coverage_enforced(self):
        small = Grid.centered(2**8, 0.01)
        with pytest.raises(CoverageError):
            gaussian_pulse(GaussianSpec(1.0, 1.0, 10.0), small)

    @pytest.mark.parametrize("ws", [0.5, 1.0, 2.0])
    def test_unit_norm(self, grid, ws):
        pulse = gaussian_pulse(GaussianSpec(1.0, ws, 2.0 * ws, truncated=True), grid)
        assert pulse.norm_sq == pytest.approx(1.0, abs=1e-12)


class TestPhysicalTargetFromSeed:
    def test_wide_seed_barely_clipped(self):
        grid = Grid.centered(2**15, 0.03)
        pre = GaussianSpec(1.0, 10.0, 30.0, truncated=False)
        xi = physical_target_from_seed(pre, grid)
        full = fourier_forward(gaussian_pulse(pre, grid))
        diff = float(
            np.sum(np.abs(xi.values - full.values) ** 2) * grid.domega
        )
        assert diff < 1e-10

    def test_exactly_zero_at_nonpositive_frequency(self, grid):
        xi = physical_target_from_seed(
            GaussianSpec(1.0, 0.5, 1.5, truncated=False), grid
        )
        w = grid.omegas()
        assert np.all(xi.values[w <= 0.0] == 0.0)

    def test_rejects_truncated_seed(self, grid):
        with pytest.raises(DomainError):
            physical_target_from_seed(GaussianSpec(1.0, 1.0, 3.0, truncated=True), grid)

    def test_narrow_seed_width_ratio_near_floor(self):
        # squeezing the seed below the positive-frequency limit pins the
        # product omega0_eff * sigma_eff at a constant near 1.3
        grid = Grid.centered(2**14, np.pi / (1.0 + 12.0 / 0.08 + 5.0))
        xi = physical_target_from_seed(
            GaussianSpec(1.0, 0.08, 0.24, truncated=False), grid
        )
        eff = effective_params(xi)
        assert eff.omega0_eff * eff.sigma_eff == pytest.approx(1.3, abs=0.1)


class TestEffectiveParams:
    def test_wide_seed_recovers_parameters(self):
        grid = Grid.centered(2**15, 0.02)
        sigma = 8.0
        xi = physical_target_from_seed(
            GaussianSpec(1.0, sigma, 3.0 * sigma, truncated=False), grid
        )
        eff = effective_params(xi)
        assert eff.omega0_eff == pytest.approx(1.0, rel=0.02)
        assert eff.sigma_eff == pytest.approx(sigma, rel=0.02)
        assert eff.tau_eff == pytest.approx(3.0 * sigma, rel=0.02)

    def test_linear_phase_shifts_tau_only(self, grid):
        xi = physical_target_from_seed(
            GaussianSpec(1.0, 1.0, 4.0, truncated=False), grid
        )
        base = effective_params(xi)
        dtau = 2.0
        shifted = Spectrum(grid, xi.values * np.exp(1j * grid.omegas() * dtau))
        eff = effective_params(shifted)
        assert eff.omega0_eff == pytest.approx(base.omega0_eff, abs=1e-9)
        # tau_eff integrates over t > 0 only, so the acausal tail of the
        # positive-frequency pulse perturbs the shift at the percent level
        assert eff.tau_eff == pytest.approx(base.tau_eff + dtau, rel=1e-2)

    def test_global_phase_invariance(self, grid):
        xi = physical_target_from_seed(
            GaussianSpec(1.0, 1.0, 3.0, truncated=False), grid
        )
        rotated = Spectrum(grid, np.exp(1.2j) * xi.values)
        a, b = effective_params(xi), effective_params(rotated)
        assert a.omega0_eff == b.omega0_eff
        assert a.tau_eff == pytest.approx(b.tau_eff, abs=1e-12)
        assert a.sigma_eff == pytest.approx(b.sigma_eff, abs=1e-12)

    def test_narrow_seed_width_bounded_below(self):
        # positive-frequency-only pulses cannot be made arbitrarily short
        widths = []
        for s_pre in (0.05, 0.1, 0.2):
            grid = Grid.centered(2**14, np.pi / (1.0 + 12.0 / s_pre + 5.0))
            xi = physical_target_from_seed(
                GaussianSpec(1.0, s_pre, 3.0 * s_pre, truncated=False), grid
            )
            widths.append(effective_params(xi).sigma_eff)
        assert min(widths) > 0.05

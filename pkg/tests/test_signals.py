"""Signal-core tests: transforms, tail weights, mode time functions."""

import numpy as np
import pytest

from photonlimits import (
    Grid,
    InvalidGridError,
    NormalizationError,
    SampledSignal,
    Spectrum,
    fourier_forward,
    fourier_inverse,
    max_abs,
    negative_frequency_weight,
    negative_time_weight,
    nu_constant,
    pulse_mode_time_function,
    split_causal,
)
from photonlimits.errors import DomainError


def gaussian_signal(grid, tau=0.0, sigma=1.0, omega0=0.0):
    t = grid.times()
    vals = np.exp(-((t - tau) ** 2) / (2.0 * sigma**2)) * np.exp(-1j * omega0 * t)
    return SampledSignal(grid, vals).normalized()


class TestGrid:
    @pytest.mark.parametrize("n", [3, 6, 100, 1000])
    def test_rejects_non_power_of_two(self, n):
        with pytest.raises(InvalidGridError):
            Grid(n, 0.1, 0.0)

    def test_rejects_nonpositive_step(self):
        with pytest.raises(InvalidGridError):
            Grid(16, 0.0, 0.0)

    def test_centered_has_zero_sample(self):
        g = Grid.centered(64, 0.25)
        assert 0.0 in g.times()
        assert 0.0 in g.omegas()

    def test_frequency_step(self):
        g = Grid.centered(256, 0.1)
        assert g.domega == pytest.approx(2.0 * np.pi / (256 * 0.1))


class TestFourier:
    def test_unit_gaussian_self_transform(self, grid):
        sig = gaussian_signal(grid)
        spec = fourier_forward(sig)
        w = grid.omegas()
        expected = np.exp(-(w**2) / 2.0)
        expected /= np.sqrt(np.sum(expected**2) * grid.domega)
        assert max_abs(spec.values - expected) < 1e-10

    def test_shift_theorem(self, grid):
        tau = 1.75
        base = fourier_forward(gaussian_signal(grid))
        shifted = fourier_forward(gaussian_signal(grid, tau=tau))
        w = grid.omegas()
        assert max_abs(shifted.values - np.exp(1j * w * tau) * base.values) < 1e-10

    def test_one_sided_exponential_pointwise(self, grid):
        # theta(t) e^{-t} transforms to (1/sqrt(2 pi)) / (1 - i omega); the
        # Riemann sum carries a jump bias of dt/(2 sqrt(2 pi)) at the t = 0
        # discontinuity, which the tolerance must admit.
        t = grid.times()
        sig = SampledSignal(grid, np.where(t >= 0.0, np.exp(-t), 0.0))
        spec = fourier_forward(sig)
        w = grid.omegas()
        bias = grid.dt / (2.0 * np.sqrt(2.0 * np.pi))
        for wq in (0.0, 1.0, -1.0):
            idx = int(np.argmin(np.abs(w - wq)))
            exact = 1.0 / (np.sqrt(2.0 * np.pi) * (1.0 - 1j * w[idx]))
            assert abs(spec.values[idx] - exact) < 1.2 * bias

    def test_round_trip_random_band_limited(self, grid, rng):
        t = grid.times()
        vals = np.exp(-(t**2) / 18.0) * (
            rng.standard_normal(t.size) + 1j * rng.standard_normal(t.size)
        )
        sig = SampledSignal(grid, vals)
        back = fourier_inverse(fourier_forward(sig))
        assert max_abs(back.values - sig.values) <= 1e-12 * max_abs(sig.values)

    def test_plancherel(self, grid, rng):
        t = grid.times()
        sig = SampledSignal(
            grid, np.exp(-(t**2) / 8.0) * rng.standard_normal(t.size)
        ).normalized()
        assert abs(sig.norm_sq - fourier_forward(sig).norm_sq) <= 1e-10

    def test_positive_spectrum_has_negative_time_tail(self, grid):
        # Paley-Wiener witness: a spectrum supported on omega > 0 cannot
        # produce a signal vanishing on t < 0.
        w = grid.omegas()
        vals = np.where(w > 0.0, np.exp(-((w - 2.0) ** 2)), 0.0)
        spec = Spectrum(grid, vals).normalized()
        sig = fourier_inverse(spec)
        mu = negative_time_weight(sig)
        assert mu > 1e-14


class TestTailWeights:
    def test_causal_signal_mu_zero(self, grid):
        t = grid.times()
        sig = SampledSignal(
            grid, np.where(t >= 0.0, np.exp(-((t - 3.0) ** 2)), 0.0)
        ).normalized()
        assert negative_time_weight(sig) == 0.0

    def test_symmetric_pulse_mu_half(self, grid):
        sig = gaussian_signal(grid)
        # the t = 0 sample counts as positive time, so mu sits just under 1/2
        assert negative_time_weight(sig) == pytest.approx(0.5, abs=1e-2)

    def test_unnormalized_input_rejected(self, grid):
        sig = gaussian_signal(grid)
        bad = SampledSignal(grid, 2.0 * sig.values)
        with pytest.raises(NormalizationError):
            negative_time_weight(bad)
        with pytest.raises(NormalizationError):
            negative_frequency_weight(fourier_forward(bad))

    def test_real_signal_eta_half(self, grid):
        t = grid.times()
        sig = SampledSignal(grid, np.exp(-(t**2) / 2.0)).normalized()
        eta = negative_frequency_weight(fourier_forward(sig))
        # strict omega < 0 sum excludes the omega = 0 bin, which holds
        # about |G(0)|^2 domega of the shared mass
        assert eta == pytest.approx(0.5, abs=1e-2)
        assert eta < 0.5

    def test_positive_spectrum_eta_zero(self, grid):
        w = grid.omegas()
        spec = Spectrum(
            grid, np.where(w > 0.0, np.exp(-((w - 3.0) ** 2)), 0.0)
        ).normalized()
        assert negative_frequency_weight(spec) == 0.0

    def test_nu_zero_for_causal_real(self, grid):
        t = grid.times()
        sig = SampledSignal(
            grid, np.where(t >= 0.0, np.exp(-((t - 3.0) ** 2)), 0.0)
        ).normalized()
        assert nu_constant(sig) == 0.0

    def test_nu_equals_mu_for_real_negative_tail(self, grid):
        sig = gaussian_signal(grid)
        nu = nu_constant(sig)
        mu = negative_time_weight(sig)
        assert nu.imag == pytest.approx(0.0, abs=1e-15)
        assert nu.real == pytest.approx(mu, abs=1e-12)

    def test_nu_bounded_by_mu(self, grid):
        sig = gaussian_signal(grid, tau=2.0, omega0=1.0)
        assert abs(nu_constant(sig)) <= negative_time_weight(sig) + 1e-12

    def test_mu_plus_positive_weight_is_one(self, grid):
        sig = gaussian_signal(grid, omega0=2.0)
        mu = negative_time_weight(sig)
        t = grid.times()
        pos = float(np.sum(np.abs(sig.values[t >= 0.0]) ** 2) * grid.dt)
        assert mu + pos == pytest.approx(1.0, abs=1e-12)


class TestSplitCausal:
    def test_causal_input(self, grid):
        t = grid.times()
        sig = SampledSignal(grid, np.where(t >= 0.0, np.exp(-t), 0.0))
        h_plus, h_minus = split_causal(sig)
        assert max_abs(h_minus.values) == 0.0
        assert np.array_equal(h_plus.values, sig.values)

    def test_anticausal_input(self, grid):
        t = grid.times()
        sig = SampledSignal(grid, np.where(t < 0.0, np.exp(t), 0.0))
        h_plus, h_minus = split_causal(sig)
        assert max_abs(h_plus.values) == 0.0
        assert np.array_equal(h_minus.values, sig.values)

    def test_parts_sum_to_whole(self, grid, rng):
        sig = SampledSignal(grid, rng.standard_normal(grid.n_samples))
        h_plus, h_minus = split_causal(sig)
        assert max_abs(h_plus.values + h_minus.values - sig.values) == 0.0

    def test_symmetric_gaussian_halves(self, grid):
        sig = gaussian_signal(grid)
        h_plus, h_minus = split_causal(sig)
        assert h_minus.norm_sq == pytest.approx(0.5, abs=1e-2)
        assert h_plus.norm_sq == pytest.approx(0.5, abs=1e-2)


class TestPulseModeTimeFunction:
    def positive_mode(self, grid):
        w = grid.omegas()
        vals = np.where(w > 0.0, np.exp(-((w - 3.0) ** 2)), 0.0)
        return Spectrum(grid, vals).normalized()

    def test_field_has_negative_time_tail(self, grid, weights):
        mode = self.positive_mode(grid)
        e_t = pulse_mode_time_function(mode, weights, "field")
        t = grid.times()
        assert max_abs(e_t.values[t < 0.0]) > 0.0

    def test_field_vs_potential_ratio(self, grid, weights):
        mode = self.positive_mode(grid)
        w = grid.omegas()
        assert max_abs(
            weights.field(w) - 1j * w * weights.amplitude(w)
        ) < 1e-14

    def test_linearity_in_phase(self, grid, weights):
        mode = self.positive_mode(grid)
        theta = 0.7
        rotated = Spectrum(grid, np.exp(1j * theta) * mode.values)
        a = pulse_mode_time_function(mode, weights, "potential")
        b = pulse_mode_time_function(rotated, weights, "potential")
        assert max_abs(b.values - np.exp(1j * theta) * a.values) < 1e-10

    def test_rejects_negative_frequency_mode(self, grid, weights):
        w = grid.omegas()
        spec = Spectrum(grid, np.exp(-(w**2))).normalized()
        with pytest.raises(DomainError):
            pulse_mode_time_function(spec, weights, "field")

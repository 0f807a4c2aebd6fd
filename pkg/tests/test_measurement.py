"""Smearing construction, overlap identity, Hermite-function machinery."""

from math import e, pi, sqrt

import numpy as np
import pytest
from scipy.integrate import simpson
from scipy.special import erf

from photonlimits import (
    DegenerateMeasurementError,
    GaussianSpec,
    Grid,
    HermiteTable,
    SampledSignal,
    build_smearing,
    fourier_inverse,
    hermite_integral_bound_check,
    hermite_psi,
    indicator_distance,
    max_abs,
    negative_time_weight,
    nu_constant,
    optimal_phase,
    physical_target_from_seed,
    projector_density_n_photon,
    spectral_overlap_c_xi,
)
from photonlimits.errors import DomainError


@pytest.fixture
def target(weights):
    grid = Grid.centered(2**15, 0.02)
    xi = physical_target_from_seed(
        GaussianSpec(1.0, 1.0, 3.0, truncated=False), grid
    )
    return xi, fourier_inverse(xi)


class TestBuildSmearing:
    def test_f_real_and_anticausal(self, target, weights):
        xi, xi_t = target
        smear = build_smearing(xi_t, 0.0, weights)
        t = xi.grid.times()
        assert max_abs(np.imag(smear.f_signal.values)) == 0.0
        assert max_abs(smear.f_signal.values[t >= 0.0]) == 0.0

    def test_phi_zero_doubles_real_tail(self, target, weights):
        xi, xi_t = target
        smear = build_smearing(xi_t, 0.0, weights)
        t = xi.grid.times()
        neg = t < 0.0
        expected = 2.0 * smear.f0 * np.real(xi_t.values[neg])
        assert max_abs(smear.f_signal.values[neg] - expected) < 1e-12

    def test_phase_periodicity(self, target, weights):
        # phi enters through e^{i phi/2}, so a 2 pi shift flips the sign
        # of f; every measurable quantity is invariant
        xi, xi_t = target
        a = build_smearing(xi_t, 0.3, weights)
        b = build_smearing(xi_t, 0.3 + 2.0 * pi, weights)
        assert max_abs(a.f_signal.values + b.f_signal.values) < 1e-12
        ca = spectral_overlap_c_xi(xi, a, weights)
        cb = spectral_overlap_c_xi(xi, b, weights)
        assert abs(ca) ** 2 == pytest.approx(abs(cb) ** 2, abs=1e-14)

    def test_zeta_anticausal(self, target, weights):
        xi, xi_t = target
        smear = build_smearing(xi_t, 0.0, weights)
        t = xi.grid.times()
        zt = np.abs(smear.zeta_signal.values)
        assert float(zt[t >= 0.0].max()) <= 1e-6 * float(zt.max())

    def test_zeta_conjugate_symmetry(self, target, weights):
        xi, xi_t = target
        smear = build_smearing(xi_t, 0.0, weights)
        zv = smear.zeta_spec.values
        refl = np.empty_like(zv)
        refl[0] = zv[0]
        refl[1:] = zv[1:][::-1]
        assert max_abs(zv - np.conj(refl)) <= 1e-10 * max_abs(zv)

    def test_normalization(self, target, weights):
        xi, xi_t = target
        smear = build_smearing(xi_t, 0.0, weights)
        assert smear.normalization_residual() <= 1e-9

    def test_causal_target_rejected(self, weights, grid):
        t = grid.times()
        sig = SampledSignal(
            grid, np.where(t >= 0.0, np.exp(-((t - 5.0) ** 2)), 0.0)
        ).normalized()
        with pytest.raises(DegenerateMeasurementError):
            build_smearing(sig, 0.0, weights)


class TestSpectralOverlap:
    def test_optimal_phase_identity(self, target, weights):
        xi, xi_t = target
        mu = negative_time_weight(xi_t)
        nu = nu_constant(xi_t)
        smear = build_smearing(xi_t, optimal_phase(nu), weights)
        c = spectral_overlap_c_xi(xi, smear, weights)
        assert abs(c) ** 2 == pytest.approx(mu + abs(nu), abs=1e-6)

    @pytest.mark.parametrize("phi", np.linspace(-3.0, 3.0, 20))
    def test_generic_phase_formula(self, target, weights, phi):
        xi, xi_t = target
        mu = negative_time_weight(xi_t)
        nu = nu_constant(xi_t)
        theta = float(np.angle(nu))
        smear = build_smearing(xi_t, float(phi), weights)
        c = spectral_overlap_c_xi(xi, smear, weights)
        # c = f0 (e^{-i phi/2} mu + e^{i phi/2} nu) with f0 fixed by the
        # normalization f0^2 (mu + |nu| cos(phi + theta)) = 1
        cos_term = np.cos(phi + theta)
        expected = (mu**2 + abs(nu) ** 2 + 2.0 * mu * abs(nu) * cos_term) / (
            mu + abs(nu) * cos_term
        )
        assert abs(c) ** 2 == pytest.approx(expected, abs=1e-6)


class TestHermite:
    def test_psi0_at_origin(self):
        assert hermite_psi(0, 0.0) == pytest.approx(pi ** (-0.25), abs=1e-15)

    def test_psi1_recurrence_base(self):
        x = 1.0
        assert hermite_psi(1, x) == pytest.approx(
            sqrt(2.0) * x * hermite_psi(0, x), abs=1e-15
        )

    def test_psi15_local_maximum(self):
        xs = np.linspace(0.6, 1.1, 2001)
        vals = hermite_psi(15, xs)
        peak = int(np.argmax(vals))
        assert vals[peak] < 0.35
        assert abs(xs[peak] - 0.85) < 0.1

    def test_orthonormality(self):
        x = np.linspace(-15.0, 15.0, 2**13 + 1)
        table = HermiteTable(20, x)
        gram = simpson(table.values[:, None, :] * table.values[None, :, :], x=x)
        assert np.max(np.abs(gram - np.eye(21))) <= 1e-8

    def test_negative_order_rejected(self):
        with pytest.raises(DomainError):
            hermite_psi(-1, 0.0)


class TestProjectorDensity:
    def test_full_overlap_is_psi1_squared(self):
        x = np.linspace(-3.0, 3.0, 101)
        assert np.max(
            np.abs(projector_density_n_photon(1, 1.0, x) - hermite_psi(1, x) ** 2)
        ) < 1e-14

    def test_zero_overlap_is_vacuum(self):
        x = np.linspace(-3.0, 3.0, 101)
        assert np.max(
            np.abs(projector_density_n_photon(1, 0.0, x) - hermite_psi(0, x) ** 2)
        ) < 1e-14

    @pytest.mark.parametrize("n,c2", [(1, 0.3), (2, 0.5), (3, 0.8)])
    def test_unit_mass_and_nonnegative(self, n, c2):
        x = np.linspace(-12.0, 12.0, 2**12 + 1)
        dens = projector_density_n_photon(n, c2, x)
        assert np.all(dens >= 0.0)
        assert float(simpson(dens, x=x)) == pytest.approx(1.0, abs=1e-8)


class TestIndicatorDistance:
    def test_full_overlap_closed_form(self):
        assert indicator_distance(1, 1.0) == pytest.approx(
            sqrt(2.0 / (pi * e)), abs=1e-10
        )

    def test_zero_overlap(self):
        assert indicator_distance(1, 0.0) == pytest.approx(0.0, abs=1e-14)

    def test_linear_in_overlap(self):
        cs = np.linspace(0.0, 1.0, 11)
        vals = np.array([indicator_distance(1, float(c)) for c in cs])
        slope = sqrt(2.0 / (pi * e))
        assert np.max(np.abs(vals - slope * cs)) <= 1e-10

    def test_n_photon_chain_consistency(self):
        n, c2 = 3, 0.3
        val = indicator_distance(n, c2)
        floor = sqrt(2.0 / (pi * e)) * (1.0 - (1.0 - c2) ** n)
        # the n-photon distance with this indicator is bounded by the
        # worst-case single-mode expression entering the physical bound
        assert 0.0 < val <= floor + 1e-10


class TestHermiteIntegralBound:
    def test_bound_holds_to_100(self):
        assert hermite_integral_bound_check(100)

    def test_equality_at_k_one(self):
        x = np.linspace(-1.0 / sqrt(2.0), 1.0 / sqrt(2.0), 2**12 + 1)
        val = float(simpson(hermite_psi(1, x) ** 2, x=x))
        ceiling = float(erf(1.0 / sqrt(2.0))) - sqrt(2.0 / (pi * e))
        assert val == pytest.approx(ceiling, abs=1e-12)

    def test_invalid_k_max(self):
        with pytest.raises(DomainError):
            hermite_integral_bound_check(0)

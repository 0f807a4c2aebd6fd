"""Gaussian pulse families and effective pulse-parameter extraction."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CoverageError, DegenerateTargetError, DomainError
from .signals import (
    Grid,
    SampledSignal,
    Spectrum,
    fourier_forward,
    fourier_inverse,
)

# A squared Gaussian of standard deviation sigma drops to 5% of its peak at
# +- sigma * sqrt(ln 20), so its 5%-of-peak width is 2 sigma sqrt(ln 20).
_WIDTH_FACTOR = 2.0 * np.sqrt(np.log(20.0))


@dataclass(frozen=True)
class GaussianSpec:
    """Gaussian envelope around a carrier, optionally truncated at t = 0."""

    omega0: float
    sigma: float
    tau: float = 0.0
    truncated: bool = True

    def __post_init__(self):
        if not self.omega0 > 0:
            raise DomainError("omega0 must be positive")
        if not self.sigma > 0:
            raise DomainError("sigma must be positive")
        if self.tau < 0:
            raise DomainError("tau must be nonnegative")


@dataclass(frozen=True)
class EffectiveParams:
    """Mean frequency, mean time, and 5%-of-peak width of a target pulse."""

    omega0_eff: float
    tau_eff: float
    sigma_eff: float


def gaussian_pulse(spec: GaussianSpec, grid: Grid) -> SampledSignal:
    """Normalized Gaussian pulse, truncated at t = 0 when requested."""
    t_lo, t_hi = grid.window
    need_lo = 0.0 if spec.truncated else spec.tau - 8.0 * spec.sigma
    need_hi = spec.tau + 8.0 * spec.sigma
    if t_lo > need_lo or t_hi < need_hi:
        raise CoverageError(
            f"grid window [{t_lo:.3g}, {t_hi:.3g}] does not cover "
            f"[{need_lo:.3g}, {need_hi:.3g}]"
        )
    t = grid.times()
    vals = np.exp(-((t - spec.tau) ** 2) / (2.0 * spec.sigma**2)) * np.exp(
        -1j * spec.omega0 * t
    )
    if spec.truncated:
        vals = np.where(t >= 0.0, vals, 0.0)
    return SampledSignal(grid, vals).normalized()


def physical_target_from_seed(pre: GaussianSpec, grid: Grid) -> Spectrum:
    """Physical photon spectrum: positive-frequency part of a Gaussian seed.

    The seed must be untruncated; its spectrum is clipped to omega > 0 and
    renormalized.
    """
    if pre.truncated:
        raise DomainError("seed for a physical target must be untruncated")
    seed = gaussian_pulse(pre, grid)
    spec = fourier_forward(seed)
    w = grid.omegas()
    clipped = np.where(w > 0.0, spec.values, 0.0)
    pos_mass = float(np.sum(np.abs(clipped) ** 2) * grid.domega)
    if pos_mass < 1e-12:
        raise DegenerateTargetError(
            f"seed has vanishing positive-frequency mass ({pos_mass:.3g})"
        )
    return Spectrum(grid, clipped / np.sqrt(pos_mass))


def _outermost_crossings(x: np.ndarray, y: np.ndarray, level: float) -> tuple[float, float]:
    """Outermost crossings of y(x) with a threshold, linearly interpolated."""
    above = y >= level
    idx = np.nonzero(above)[0]
    i_l, i_r = idx[0], idx[-1]
    if i_l == 0:
        x_l = x[0]
    else:
        f = (level - y[i_l - 1]) / (y[i_l] - y[i_l - 1])
        x_l = x[i_l - 1] + f * (x[i_l] - x[i_l - 1])
    if i_r == len(x) - 1:
        x_r = x[-1]
    else:
        f = (level - y[i_r + 1]) / (y[i_r] - y[i_r + 1])
        x_r = x[i_r + 1] - f * (x[i_r + 1] - x[i_r])
    return float(x_l), float(x_r)


def effective_params(xi_spec: Spectrum) -> EffectiveParams:
    """Effective carrier, delay, and width of a physical target spectrum.

    omega0 and tau are first moments of |xi(omega)|^2 and |xi(t)|^2 (over
    t > 0); sigma matches the 5%-of-peak width of |xi(t)|^2 to that of a
    squared Gaussian, using the outermost threshold crossings (robust to
    ripple in multimodal pulses).
    """
    w = xi_spec.grid.omegas()
    pw = np.abs(xi_spec.values) ** 2 * xi_spec.grid.domega
    omega0_eff = float(np.sum(w * pw))
    if omega0_eff <= 0:
        raise DomainError("spectrum must have positive mean frequency")

    xi_t = fourier_inverse(xi_spec)
    t = xi_spec.grid.times()
    dens = np.abs(xi_t.values) ** 2
    pos = t > 0.0
    tau_eff = float(np.sum(t[pos] * dens[pos]) * xi_spec.grid.dt)

    level = 0.05 * float(np.max(dens))
    x_l, x_r = _outermost_crossings(t, dens, level)
    sigma_eff = (x_r - x_l) / _WIDTH_FACTOR
    return EffectiveParams(omega0_eff, tau_eff, sigma_eff)

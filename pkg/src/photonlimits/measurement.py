"""Local-measurement machinery: smearing functions, quadrature statistics.

A real smearing function f(t) supported on t < 0 defines a field
observable that can only see the negative-time tail of a target photon
pulse.  The associated normalized mode has spectrum F(omega), and the
overlap c_xi between that mode and the target controls how well a local
measurement distinguishes the target from vacuum.  The quadrature
outcome densities are built from Hermite functions, and the indicator
set [-1/sqrt(2), 1/sqrt(2)] gives the distinguishability witness used
by the physical upper bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import e, pi, sqrt

import numpy as np
from scipy.integrate import simpson
from scipy.signal import fftconvolve
from scipy.special import erf

from .errors import DegenerateMeasurementError, DomainError
from .signals import (
    TWO_PI,
    SampledSignal,
    Spectrum,
    VacuumModeWeights,
    fourier_forward,
    negative_time_weight,
)

SIMPSON_NODES = 2**12 + 1


@dataclass(frozen=True)
class SmearingResult:
    """Smearing function f, its spectrum, and the derived zeta profile."""

    f_signal: SampledSignal
    f_spec: Spectrum
    zeta_spec: Spectrum
    zeta_signal: SampledSignal
    phi: float
    f0: float

    def normalization_residual(self) -> float:
        """|sum over omega > 0 of |E zeta|^2 domega - 1| in the shared-bin measure.

        |E(omega) zeta(omega)| = |F(omega)|, so the sum is evaluated from
        the smearing spectrum with the omega = 0 and aliased edge bins at
        half weight, the same convention that fixes f0.
        """
        grid = self.f_spec.grid
        return abs(
            _positive_half_mass(self.f_spec.values, grid.omegas(), grid.domega)
            - 1.0
        )


def _positive_half_mass(values: np.ndarray, omega: np.ndarray, domega: float) -> float:
    """Positive-frequency squared mass, sharing the omega = 0 and edge bins.

    The bin at -pi/dt aliases onto +pi/dt, so like the omega = 0 bin it
    belongs half to each half-axis.  For a real time signal this makes
    the positive mass exactly half the total squared norm.
    """
    wt = np.ones_like(omega)
    wt[omega < 0.0] = 0.0
    wt[omega == 0.0] = 0.5
    wt[0] = 0.5
    return float(np.sum(wt * np.abs(values) ** 2) * domega)


def _anticausal_sqrt_kernel(n_samples: int, dt: float) -> np.ndarray:
    """Cell-averaged values of sqrt(2) theta(-u) |u|^{-1/2} on negative lags.

    Entry m holds the exact integral of the kernel over the cell
    [-(m+1/2) dt, -(m-1/2) dt] divided by dt, so a discrete convolution
    against piecewise-constant samples reproduces the continuum integral
    including the integrable endpoint singularity.
    """
    m = np.arange(n_samples, dtype=float)
    upper = np.minimum(-(m - 0.5) * dt, 0.0)
    lower = -(m + 0.5) * dt
    cells = 2.0 * (np.sqrt(-lower) - np.sqrt(-upper))
    return sqrt(2.0) * cells / dt


def build_smearing(
    xi_sig: SampledSignal, phi: float, weights: VacuumModeWeights
) -> SmearingResult:
    """Anticausal real smearing f(t) = [f0 e^{i phi/2} xi(t) + c.c.] for t < 0.

    f0 is fixed so the associated mode F(omega) has unit norm over
    omega > 0, equivalently sum over omega > 0 of |E|^2 |zeta|^2 domega = 1.

    zeta(t) is not obtained by an inverse FFT of F/E*: the omega^{-1/2}
    singularity of zeta at omega = 0 converges far too slowly on a
    uniform grid.  Instead zeta is the convolution of f with the kernel
    -(K sqrt(2 pi))^{-1} sqrt(2) theta(-u) |u|^{-1/2}, which is exact in
    the anticausality (both factors vanish for nonnegative argument).
    """
    mu = negative_time_weight(xi_sig)
    if mu <= 0.0:
        raise DegenerateMeasurementError(
            "target has no negative-time tail; smearing mode is undefined"
        )
    grid = xi_sig.grid
    t = grid.times()
    half = np.exp(0.5j * phi) * xi_sig.values
    f_raw = np.real(np.where(t < 0.0, half + np.conj(half), 0.0))
    spec_unit = fourier_forward(SampledSignal(grid, f_raw))

    w = grid.omegas()
    pos_mass = _positive_half_mass(spec_unit.values, w, grid.domega)
    if pos_mass <= 0.0:
        raise DegenerateMeasurementError("smearing spectrum has no omega > 0 mass")
    f0 = 1.0 / sqrt(pos_mass)

    f_vals = f0 * f_raw
    f_signal = SampledSignal(grid, f_vals)
    f_spec = Spectrum(grid, f0 * spec_unit.values)
    e_conj = np.conj(weights.field(w))
    with np.errstate(divide="ignore", invalid="ignore"):
        zeta_vals = np.where(w != 0.0, f_spec.values / e_conj, 0.0)
    zeta_vals[0] = 0.0
    zeta_spec = Spectrum(grid, zeta_vals)

    kernel = _anticausal_sqrt_kernel(grid.n_samples, grid.dt)
    # full convolution, negative lags only: zeta(t_i) collects f(t_j) with
    # j >= i, so the anticausal support is preserved index by index.
    conv = fftconvolve(f_vals, kernel[::-1])[grid.n_samples - 1 :]
    zeta_t = -conv * grid.dt / (weights.k_const * sqrt(TWO_PI))
    zeta_signal = SampledSignal(grid, zeta_t)
    return SmearingResult(f_signal, f_spec, zeta_spec, zeta_signal, phi, f0)


def spectral_overlap_c_xi(
    xi_spec: Spectrum, smear: SmearingResult, weights: VacuumModeWeights
) -> complex:
    """c_xi = integral over omega > 0 of F*(omega) xi(omega) domega."""
    if xi_spec.grid != smear.f_spec.grid:
        raise DomainError("target and smearing must share one grid")
    w = xi_spec.grid.omegas()
    pos = w > 0.0
    return complex(
        np.sum(np.conj(smear.f_spec.values[pos]) * xi_spec.values[pos])
        * xi_spec.grid.domega
    )


def optimal_phase(nu: complex) -> float:
    """Phase phi with cos(phi + theta_nu) = 1, i.e. phi = -arg(nu)."""
    return -float(np.angle(nu))


def hermite_psi(k: int, x) -> np.ndarray | float:
    """k-th Hermite function via the stable three-term recurrence."""
    if k < 0:
        raise DomainError(f"order must be nonnegative, got {k}")
    xv = np.asarray(x, dtype=float)
    psi_prev = np.zeros_like(xv)
    psi = pi ** (-0.25) * np.exp(-0.5 * xv**2)
    for j in range(k):
        psi, psi_prev = (
            sqrt(2.0 / (j + 1)) * xv * psi - sqrt(j / (j + 1)) * psi_prev,
            psi,
        )
    return psi if psi.shape else float(psi)


@dataclass(frozen=True)
class HermiteTable:
    """Hermite functions psi_0..psi_max_order sampled on a fixed grid."""

    max_order: int
    x: np.ndarray = field(repr=False)
    values: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        if self.max_order < 0:
            raise DomainError("max_order must be nonnegative")
        xv = np.asarray(self.x, dtype=float)
        object.__setattr__(self, "x", xv)
        table = np.empty((self.max_order + 1, xv.size))
        table[0] = pi ** (-0.25) * np.exp(-0.5 * xv**2)
        if self.max_order >= 1:
            table[1] = sqrt(2.0) * xv * table[0]
        for k in range(1, self.max_order):
            table[k + 1] = (
                sqrt(2.0 / (k + 1)) * xv * table[k]
                - sqrt(k / (k + 1)) * table[k - 1]
            )
        object.__setattr__(self, "values", table)

    def psi(self, k: int) -> np.ndarray:
        if not 0 <= k <= self.max_order:
            raise DomainError(f"order {k} outside table range {self.max_order}")
        return self.values[k]


def projector_density_n_photon(n: int, c_xi_abs2: float, x) -> np.ndarray | float:
    """Quadrature outcome density of an n-photon state with mode overlap c_xi.

    Binomial mixture sum over k of C(n,k) |c|^{2k} (1-|c|^2)^{n-k} psi_k^2(x).
    """
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    if not 0.0 <= c_xi_abs2 <= 1.0:
        raise DomainError(f"|c_xi|^2 must be in [0, 1], got {c_xi_abs2}")
    xv = np.asarray(x, dtype=float)
    table = HermiteTable(n, xv)
    out = np.zeros_like(xv)
    binom = 1.0
    for k in range(n + 1):
        weight = binom * c_xi_abs2**k * (1.0 - c_xi_abs2) ** (n - k)
        out += weight * table.psi(k) ** 2
        binom *= (n - k) / (k + 1)
    return out if out.shape else float(out)


def indicator_distance(n: int, c_xi_abs2: float) -> float:
    """Vacuum-vs-target probability gap on the window [-1/sqrt(2), 1/sqrt(2)].

    For n = 1 this equals sqrt(2/(pi e)) |c_xi|^2 exactly.
    """
    x = np.linspace(-1.0 / sqrt(2.0), 1.0 / sqrt(2.0), SIMPSON_NODES)
    psi0_sq = hermite_psi(0, x) ** 2
    dens = projector_density_n_photon(n, c_xi_abs2, x)
    return float(simpson(psi0_sq - dens, x=x))


def hermite_window_integral(k: int) -> float:
    """Integral of psi_k^2 over [-1/sqrt(2), 1/sqrt(2)]."""
    x = np.linspace(-1.0 / sqrt(2.0), 1.0 / sqrt(2.0), SIMPSON_NODES)
    return float(simpson(hermite_psi(k, x) ** 2, x=x))


def hermite_integral_bound_check(k_max: int) -> bool:
    """True iff the window integral of psi_k^2 stays below the k = 1 value.

    The shared ceiling is erf(1/sqrt(2)) - sqrt(2/(pi e)), attained at
    k = 1 (the integrand there has antiderivative proportional to
    erf(X) - X e^{-X^2} up to constants).
    """
    if k_max < 1:
        raise DomainError(f"k_max must be at least 1, got {k_max}")
    ceiling = float(erf(1.0 / sqrt(2.0))) - sqrt(2.0 / (pi * e))
    table = HermiteTable(
        k_max, np.linspace(-1.0 / sqrt(2.0), 1.0 / sqrt(2.0), SIMPSON_NODES)
    )
    for k in range(1, k_max + 1):
        val = float(simpson(table.psi(k) ** 2, x=table.x))
        if val > ceiling + 1e-10:
            return False
    return True

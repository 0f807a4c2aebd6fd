"""Uniform-grid time/frequency representations and tail-weight functionals.

Transform convention: unitary, kernel e^{+i omega t} forward (time to
frequency) and e^{-i omega t} inverse.  With this choice Plancherel holds
with no extra factors and a carrier e^{-i omega0 t} appears at positive
frequency omega0, matching the e^{-i omega t} mode expansions used for the
field operators.

All integrals are Riemann sums with dt (domega) weights.  Tail weights
(mu, eta, nu) sum strictly over t < 0 (omega < 0); the t = 0 sample counts
as positive time.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    ConsistencyError,
    DomainError,
    InvalidGridError,
    NormalizationError,
)

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class Grid:
    """Uniform sampling grid shared by a signal and its spectrum.

    The frequency grid spans the symmetric band [-pi/dt, pi/dt) with step
    domega = 2 pi / (n_samples * dt), in ascending order.
    """

    n_samples: int
    dt: float
    t0: float

    def __post_init__(self):
        n = self.n_samples
        if n < 2 or (n & (n - 1)) != 0:
            raise InvalidGridError(f"n_samples must be a power of two >= 2, got {n}")
        if not self.dt > 0:
            raise InvalidGridError(f"dt must be positive, got {self.dt}")

    @classmethod
    def centered(cls, n_samples: int, dt: float) -> "Grid":
        """Grid symmetric about t = 0, with t = 0 an exact sample."""
        return cls(n_samples, dt, -(n_samples // 2) * dt)

    @property
    def domega(self) -> float:
        return TWO_PI / (self.n_samples * self.dt)

    @property
    def window(self) -> tuple[float, float]:
        return self.t0, self.t0 + (self.n_samples - 1) * self.dt

    def times(self) -> np.ndarray:
        return self.t0 + np.arange(self.n_samples) * self.dt

    def omegas(self) -> np.ndarray:
        m = np.arange(self.n_samples) - self.n_samples // 2
        return m * self.domega


def _as_complex(values, n: int) -> np.ndarray:
    v = np.asarray(values, dtype=complex)
    if v.shape != (n,):
        raise InvalidGridError(f"expected {n} samples, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise InvalidGridError("signal values must be finite")
    return v


@dataclass(frozen=True)
class SampledSignal:
    """Complex time-domain samples g(t_k) on a uniform grid."""

    grid: Grid
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "values", _as_complex(self.values, self.grid.n_samples))

    @property
    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.values) ** 2) * self.grid.dt)

    def normalized(self) -> "SampledSignal":
        n2 = self.norm_sq
        if n2 <= 0.0:
            raise NormalizationError("cannot normalize a zero signal")
        return SampledSignal(self.grid, self.values / np.sqrt(n2))


@dataclass(frozen=True)
class Spectrum:
    """Complex frequency-domain samples G(omega_k), ascending in omega."""

    grid: Grid
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "values", _as_complex(self.values, self.grid.n_samples))

    @property
    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.values) ** 2) * self.grid.domega)

    def normalized(self) -> "Spectrum":
        n2 = self.norm_sq
        if n2 <= 0.0:
            raise NormalizationError("cannot normalize a zero spectrum")
        return Spectrum(self.grid, self.values / np.sqrt(n2))


@dataclass(frozen=True)
class VacuumModeWeights:
    """Vacuum mode-weight functions of the 1D single-polarization field.

    amplitude(omega) = K / sqrt(-i omega) with the principal square-root
    branch, and field(omega) = i omega * amplitude(omega), so that
    |field(omega)|^2 = K^2 |omega| on the real axis.  The omega = 0 bin is
    mapped to 0 (removable, measure-zero on any refinement sequence).
    """

    k_const: float = 1.0

    def __post_init__(self):
        if not self.k_const > 0:
            raise DomainError("k_const must be positive")

    def amplitude(self, omega) -> np.ndarray:
        w = np.asarray(omega, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            out = self.k_const / np.sqrt(-1j * w)
        return np.where(w == 0.0, 0.0, out)

    def field(self, omega) -> np.ndarray:
        w = np.asarray(omega, dtype=float)
        return 1j * w * self.amplitude(w)


def fourier_forward(sig: SampledSignal) -> Spectrum:
    """G(omega) = (1/sqrt(2 pi)) * integral g(t) e^{+i omega t} dt."""
    g = sig.grid
    raw = np.fft.fftshift(np.fft.ifft(sig.values)) * g.n_samples
    phase = np.exp(1j * g.omegas() * g.t0)
    return Spectrum(g, (g.dt / np.sqrt(TWO_PI)) * phase * raw)


def fourier_inverse(spec: Spectrum) -> SampledSignal:
    """g(t) = (1/sqrt(2 pi)) * integral G(omega) e^{-i omega t} domega."""
    g = spec.grid
    h = spec.values * np.exp(-1j * g.omegas() * g.t0)
    vals = (g.domega / np.sqrt(TWO_PI)) * np.fft.fft(np.fft.ifftshift(h))
    return SampledSignal(g, vals)


def reflected(spec: Spectrum) -> Spectrum:
    """Spectrum with values G(-omega).

    The edge bin at omega = -pi/dt maps to +pi/dt, which aliases back
    onto itself on the periodic grid, so it is kept in place.  With that
    convention the inverse transform of conj(reflected(G)) reproduces
    conj(g(t)) exactly on grids centered at t = 0.
    """
    v = spec.values
    out = np.empty_like(v)
    out[0] = v[0]
    out[1:] = v[1:][::-1]
    return Spectrum(spec.grid, out)


def _check_unit_norm(norm_sq: float, what: str):
    if abs(norm_sq - 1.0) > 1e-9:
        raise NormalizationError(f"{what} must be normalized, got squared-norm {norm_sq!r}")


def negative_time_weight(sig: SampledSignal) -> float:
    """Weight mu of the negative-time tail of a normalized signal."""
    _check_unit_norm(sig.norm_sq, "signal")
    mask = sig.grid.times() < 0.0
    return float(np.sum(np.abs(sig.values[mask]) ** 2) * sig.grid.dt)


def negative_frequency_weight(spec: Spectrum) -> float:
    """Weight eta of the negative frequencies of a normalized spectrum."""
    _check_unit_norm(spec.norm_sq, "spectrum")
    mask = spec.grid.omegas() < 0.0
    return float(np.sum(np.abs(spec.values[mask]) ** 2) * spec.grid.domega)


def nu_constant(sig: SampledSignal) -> complex:
    """nu = integral over t < 0 of xi(t)^2 dt (no conjugation)."""
    mask = sig.grid.times() < 0.0
    return complex(np.sum(sig.values[mask] ** 2) * sig.grid.dt)


def split_causal(sig: SampledSignal) -> tuple[SampledSignal, SampledSignal]:
    """Split into (h_plus, h_minus) supported on t >= 0 and t < 0."""
    pos = sig.grid.times() >= 0.0
    h_plus = np.where(pos, sig.values, 0.0)
    h_minus = sig.values - h_plus
    return SampledSignal(sig.grid, h_plus), SampledSignal(sig.grid, h_minus)


def max_abs(values: np.ndarray) -> float:
    return float(np.max(np.abs(values)))


def is_causal(sig: SampledSignal, rel_tol: float = 1e-12) -> bool:
    """True if the signal vanishes for t < 0 up to rel_tol of its peak."""
    peak = max_abs(sig.values)
    if peak == 0.0:
        return True
    mask = sig.grid.times() < 0.0
    if not np.any(mask):
        return True
    return max_abs(sig.values[mask]) <= rel_tol * peak


def warn_if_infrared_divergent(spec: Spectrum, threshold: float = 1e6, band: float = 1.0):
    """Warn when |G|^2/|omega| accumulates a large Riemann sum near omega = 0.

    Seeds with almost-diverging norm at omega = 0 invalidate the causal
    tail argument for the mode functions; the exact excluded class is not
    pinned down, so this is a warning rather than an error.
    """
    w = spec.grid.omegas()
    mask = (w != 0.0) & (np.abs(w) < band)
    s = np.sum(np.abs(spec.values[mask]) ** 2 / np.abs(w[mask])) * spec.grid.domega
    if s > threshold:
        warnings.warn(
            f"spectrum has near-divergent weight at omega = 0 (sum {s:.3g}); "
            "causal-tail arguments may be unreliable",
            RuntimeWarning,
            stacklevel=2,
        )


def pulse_mode_time_function(
    mode: Spectrum, weights: VacuumModeWeights, kind: str
) -> SampledSignal:
    """Time-domain mode function A_n(t) or E_n(t) of a pulse mode.

    Returns integral over omega > 0 of weight(omega) * xi(omega)
    e^{-i omega t} domega, with weight the vacuum amplitude ('potential')
    or field ('field') function.  The mode must be normalized and
    supported on omega > 0.
    """
    if kind not in ("potential", "field"):
        raise DomainError(f"kind must be 'potential' or 'field', got {kind!r}")
    _check_unit_norm(mode.norm_sq, "mode spectrum")
    w = mode.grid.omegas()
    neg_mass = np.sum(np.abs(mode.values[w <= 0.0]) ** 2) * mode.grid.domega
    if neg_mass > 1e-12:
        raise DomainError(
            f"mode spectrum carries weight {neg_mass:.3g} at omega <= 0"
        )
    wfun = weights.amplitude(w) if kind == "potential" else weights.field(w)
    prod = np.where(w > 0.0, wfun * mode.values, 0.0)
    out = fourier_inverse(Spectrum(mode.grid, prod))
    vals = np.sqrt(TWO_PI) * out.values
    mask = mode.grid.times() < 0.0
    if np.any(mask) and max_abs(vals[mask]) == 0.0:
        raise ConsistencyError(
            "mode time function has an exactly vanishing negative-time tail"
        )
    return SampledSignal(mode.grid, vals)

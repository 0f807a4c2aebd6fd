"""Seed-spectrum modification into a localized near-photon state.

Given a normalized causal seed g(t) with negative-frequency weight
eta < 1/2, the algorithm removes part of the negative-frequency content
by forming Gt(omega) = G(omega) - beta G*(-omega), then splits the
normalized Gt into two orthonormal positive-frequency modes xi1, xi2
whose two-mode squeezed combination carries the target overlap.  The
closed-form fidelities F and F_n are evaluated here as well.

Discrete sums that feed the algebraic identities (I, eta, eta_tilde)
use a symmetric measure: the omega = 0 bin gets half weight on each
half-axis and the unpaired edge bin at -pi/dt is excluded.  The seed
spectrum is renormalized in that measure before the algebra starts.
With this convention the identities 2 I* beta = 1 - J, the eta_tilde
relation, and the orthogonality of xi1 and xi2 hold at the discrete
level to rounding error, not just in the continuum limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np

from .errors import (
    CausalityError,
    ConsistencyError,
    ConvergenceError,
    DomainError,
    InfeasibleSeedError,
)
from .signals import SampledSignal, Spectrum, fourier_forward, max_abs, reflected


@dataclass(frozen=True)
class ConstructionResult:
    """Scalars and spectra produced by the localization construction."""

    overlap_I: complex
    beta: complex
    j_const: float
    eta: float
    eta_tilde: float
    gamma: float
    g_tilde: Spectrum
    xi1: Spectrum
    xi2: Spectrum
    fidelity_F: float
    degenerate: bool = False


def _half_axis_weights(omega: np.ndarray) -> np.ndarray:
    """Riemann weights for half-axis sums: omega = 0 shared between halves.

    The unpaired bin at omega = -pi/dt has no positive-frequency partner
    and is dropped so that every reflection identity pairs up exactly.
    """
    w = np.ones_like(omega)
    w[omega == 0.0] = 0.5
    w[0] = 0.0
    return w


def _full_line_weights(omega: np.ndarray) -> np.ndarray:
    """Riemann weights for full-line sums in the same measure."""
    w = np.ones_like(omega)
    w[0] = 0.0
    return w


def overlap_integral(g_spec: Spectrum) -> complex:
    """I = integral over omega > 0 of G(omega) G(-omega) domega."""
    w = g_spec.grid.omegas()
    gv = g_spec.values
    gr = reflected(g_spec).values
    wt = _half_axis_weights(w)
    mask = w >= 0.0
    return complex(np.sum(wt[mask] * gv[mask] * gr[mask]) * g_spec.grid.domega)


def _eta_symmetric(spec_values: np.ndarray, omega: np.ndarray, domega: float) -> float:
    wt = _half_axis_weights(omega)
    mask = omega <= 0.0
    return float(np.sum(wt[mask] * np.abs(spec_values[mask]) ** 2) * domega)


def construct_localized_state(g: SampledSignal) -> ConstructionResult:
    """Run the full modification: beta, Gt, xi1/xi2, eta_tilde, gamma, F."""
    peak = max_abs(g.values)
    if peak == 0.0:
        raise DomainError("seed signal is identically zero")
    neg_t = g.grid.times() < 0.0
    if np.any(neg_t) and max_abs(g.values[neg_t]) > 1e-12 * peak:
        raise CausalityError("seed signal must vanish for t < 0")
    if abs(g.norm_sq - 1.0) > 1e-9:
        raise DomainError(f"seed must be normalized, got squared-norm {g.norm_sq!r}")

    g_spec_raw = fourier_forward(g)
    w = g.grid.omegas()
    domega = g.grid.domega
    wt_full = _full_line_weights(w)
    sym_norm = float(np.sum(wt_full * np.abs(g_spec_raw.values) ** 2) * domega)
    g_spec = Spectrum(g.grid, g_spec_raw.values / np.sqrt(sym_norm))
    eta = _eta_symmetric(g_spec.values, w, domega)
    if eta >= 0.5:
        raise InfeasibleSeedError(
            f"seed has negative-frequency weight eta = {eta:.4g} >= 1/2"
        )

    overlap = overlap_integral(g_spec)
    abs_i2 = abs(overlap) ** 2
    if abs_i2 > 0.25:
        raise ConsistencyError(f"|I|^2 = {abs_i2:.4g} exceeds 1/4")
    j_const = sqrt(1.0 - 4.0 * abs_i2)
    # beta = (1 - J) / (2 I*) rewritten to avoid cancellation for small I.
    beta = 2.0 * overlap / (1.0 + j_const) if overlap != 0.0 else 0.0 + 0.0j

    gt_raw = g_spec.values - beta * np.conj(reflected(g_spec).values)
    gt_norm_sq = float(np.sum(wt_full * np.abs(gt_raw) ** 2) * domega)
    gt_vals = gt_raw / np.sqrt(gt_norm_sq)
    g_tilde = Spectrum(g.grid, gt_vals)

    eta_tilde = _eta_symmetric(gt_vals, w, domega)
    eta_tilde_rel = eta - (1.0 - j_const) * (1.0 - 2.0 * eta) / (2.0 * j_const)
    if abs(eta_tilde - eta_tilde_rel) > 1e-9:
        raise ConsistencyError(
            f"eta_tilde mismatch: direct {eta_tilde!r} vs relation {eta_tilde_rel!r}"
        )

    degenerate = eta_tilde < 1e-14
    pos = w > 0.0
    zero = w == 0.0
    xi1_vals = np.zeros_like(gt_vals)
    xi2_vals = np.zeros_like(gt_vals)
    # xi1 is the positive-frequency part of Gt; xi2 its reflected
    # negative-frequency part, rescaled to unit norm.  The shared omega = 0
    # bin enters each mode with amplitude weight 1/sqrt(2).
    xi1_vals[pos] = gt_vals[pos]
    xi1_vals[zero] = gt_vals[zero] / np.sqrt(2.0)
    gt_reflected_conj = np.conj(reflected(g_tilde).values)
    if degenerate:
        gamma = 0.0
        fidelity = 1.0
    else:
        scale = np.sqrt((1.0 - eta_tilde) / eta_tilde)
        xi2_vals[pos] = scale * gt_reflected_conj[pos]
        xi2_vals[zero] = scale * gt_reflected_conj[zero] / np.sqrt(2.0)
        gamma = float(np.arctanh(np.sqrt(eta_tilde / (1.0 - eta_tilde))))
        fidelity = closed_form_fidelity(eta_tilde)
    norm1 = float(np.sum(np.abs(xi1_vals) ** 2) * domega)
    xi1_vals = xi1_vals / np.sqrt(norm1)
    if not degenerate:
        norm2 = float(np.sum(np.abs(xi2_vals) ** 2) * domega)
        xi2_vals = xi2_vals / np.sqrt(norm2)

    return ConstructionResult(
        overlap_I=overlap,
        beta=complex(beta),
        j_const=j_const,
        eta=eta,
        eta_tilde=eta_tilde,
        gamma=gamma,
        g_tilde=g_tilde,
        xi1=Spectrum(g.grid, xi1_vals),
        xi2=Spectrum(g.grid, xi2_vals),
        fidelity_F=fidelity,
        degenerate=degenerate,
    )


def polylog_neg_half(z: float) -> float:
    """Li_{-1/2}(z) = sum over k >= 1 of sqrt(k) z^k, for 0 <= z < 1."""
    if not 0.0 <= z < 1.0:
        raise DomainError(f"polylog argument must be in [0, 1), got {z}")
    if z >= 1.0 - 1e-9:
        raise ConvergenceError(f"series converges too slowly at z = {z}")
    if z == 0.0:
        return 0.0
    total = 0.0
    term = z
    k = 1
    while True:
        contrib = sqrt(k) * term
        total += contrib
        if contrib < 1e-16 * total:
            return total
        k += 1
        term *= z
        if k > 10_000_000:
            raise ConvergenceError("polylog series failed to converge")


def closed_form_fidelity(eta_tilde: float) -> float:
    """F = sqrt((1-2e)^3/(e^2-e^3)) Li_{-1/2}(e/(1-e)) for e = eta_tilde."""
    if not 0.0 <= eta_tilde < 0.5:
        raise DomainError(f"eta_tilde must be in [0, 1/2), got {eta_tilde}")
    if eta_tilde >= 0.5 - 1e-12:
        raise ConvergenceError("eta_tilde too close to 1/2")
    if eta_tilde == 0.0:
        return 1.0
    z = eta_tilde / (1.0 - eta_tilde)
    # Rewrite the prefactor in z: sqrt((1-2e)^3/(e^2 - e^3)) = (1-z)^{3/2}/z.
    return (1.0 - z) ** 1.5 / z * polylog_neg_half(z)


def closed_form_fidelity_n(eta_tilde: float, n: int) -> float:
    """F_n, the n-photon analogue of the closed-form fidelity."""
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    if not 0.0 <= eta_tilde < 0.5:
        raise DomainError(f"eta_tilde must be in [0, 1/2), got {eta_tilde}")
    if eta_tilde >= 0.5 - 1e-12:
        raise ConvergenceError("eta_tilde too close to 1/2")
    z = eta_tilde / (1.0 - eta_tilde)
    prefac = (1.0 - z) ** (1.0 + 0.5 * n)
    if z == 0.0:
        return prefac
    total = 0.0
    # sqrt(C(n+k, n)) via a running product, avoiding factorial overflow.
    root_binom = 1.0
    zk = 1.0
    k = 0
    while True:
        contrib = zk * root_binom
        total += contrib
        if contrib < 1e-16 * total:
            return prefac * total
        k += 1
        root_binom *= sqrt((n + k) / k)
        zk *= z
        if k > 10_000_000:
            raise ConvergenceError("F_n series failed to converge")

"""Fidelity bounds for causal and physical n-photon targets.

Two entry points cover the two target classes: a causal pulse shape g(t)
(vanishing for t < 0, so unphysical as a photon spectrum) and a physical
photon spectrum xi(omega) supported on omega > 0 (so acausal in time).
Both funnel through a shared record of (mu, eta, |nu|, J, F_n) so that a
sweep can never mix inconsistent intermediate values, and the pure
formula evaluators are exposed separately for extrapolation tests that
feed synthetic records.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import e, pi, sqrt

import numpy as np

from .construction import closed_form_fidelity_n, construct_localized_state
from .errors import DomainError, InfeasibleSeedError
from .signals import (
    SampledSignal,
    Spectrum,
    fourier_inverse,
    negative_time_weight,
    nu_constant,
    split_causal,
)

FIRST_ORDER_THRESHOLD = 0.1


@dataclass(frozen=True)
class BoundInputs:
    """Shared scalar record all bound formulas are evaluated from."""

    mu: float
    eta: float
    nu_abs: float
    j_const: float
    f_n: float


@dataclass(frozen=True)
class BoundReport:
    target_kind: str
    n_photon: int
    upper: float
    lower: float
    upper_first_order: float | None
    lower_first_order: float | None
    inputs: BoundInputs


def causal_upper(eta: float, n: int) -> float:
    return (1.0 - eta) ** (0.5 * n)


def causal_lower(eta: float, j_const: float, f_n: float, n: int) -> float:
    factor = (1.0 + j_const) * (1.0 + j_const - 2.0 * eta) / (4.0 * j_const)
    return f_n * factor ** (0.5 * n)


def physical_upper(mu: float, nu_abs: float, n: int) -> float:
    dist = 1.0 - (1.0 - mu - nu_abs) ** n
    return sqrt(max(0.0, 1.0 - (2.0 / (pi * e)) * dist**2))


def physical_lower(
    mu: float, eta: float, j_const: float, f_n: float, n: int
) -> float:
    factor = (1.0 - mu) * j_const * (1.0 + j_const) / (1.0 + j_const - 2.0 * eta)
    return f_n * factor ** (0.5 * n)


def evaluate_causal(rec: BoundInputs, n: int) -> tuple[float, float]:
    """(upper, lower) for a causal target from a scalar record."""
    return causal_upper(rec.eta, n), causal_lower(rec.eta, rec.j_const, rec.f_n, n)


def evaluate_physical(rec: BoundInputs, n: int) -> tuple[float, float]:
    """(upper, lower) for a physical target from a scalar record."""
    return (
        physical_upper(rec.mu, rec.nu_abs, n),
        physical_lower(rec.mu, rec.eta, rec.j_const, rec.f_n, n),
    )


def bounds_causal_target(g: SampledSignal, n: int) -> BoundReport:
    """Bound report for a causal pulse-shape target |n_g>."""
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    res = construct_localized_state(g)
    f_n = 1.0 if res.degenerate else closed_form_fidelity_n(res.eta_tilde, n)
    rec = BoundInputs(
        mu=0.0, eta=res.eta, nu_abs=0.0, j_const=res.j_const, f_n=f_n
    )
    upper, lower = evaluate_causal(rec, n)
    fo_upper = fo_lower = None
    if res.eta < FIRST_ORDER_THRESHOLD:
        fo_upper = 1.0 - 0.5 * n * res.eta
        fo_lower = 1.0 - (n + 1.0 - sqrt(n + 1.0)) * res.eta
    return BoundReport("causal_g", n, upper, lower, fo_upper, fo_lower, rec)


def bounds_physical_target(xi_spec: Spectrum, n: int) -> BoundReport:
    """Bound report for a physical photon-spectrum target |n_xi>."""
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    w = xi_spec.grid.omegas()
    neg_mass = float(
        np.sum(np.abs(xi_spec.values[w <= 0.0]) ** 2) * xi_spec.grid.domega
    )
    if neg_mass > 1e-12:
        raise DomainError(
            f"physical target carries weight {neg_mass:.3g} at omega <= 0"
        )
    xi_t = fourier_inverse(xi_spec)
    mu = negative_time_weight(xi_t)
    nu = nu_constant(xi_t)
    h_plus, _ = split_causal(xi_t)
    if mu >= 1.0:
        raise InfeasibleSeedError("target has no positive-time support")
    seed = SampledSignal(xi_t.grid, h_plus.values / sqrt(1.0 - mu))
    res = construct_localized_state(seed)
    if mu > 0.0 and not res.eta < mu / (1.0 - mu):
        raise InfeasibleSeedError(
            f"derived seed violates eta < mu/(1-mu): eta = {res.eta:.4g}, "
            f"mu = {mu:.4g}"
        )
    f_n = 1.0 if res.degenerate else closed_form_fidelity_n(res.eta_tilde, n)
    rec = BoundInputs(
        mu=mu, eta=res.eta, nu_abs=abs(nu), j_const=res.j_const, f_n=f_n
    )
    upper, lower = evaluate_physical(rec, n)
    fo_upper = fo_lower = None
    if mu < FIRST_ORDER_THRESHOLD:
        fo_upper = 1.0 - n**2 * (mu + abs(nu)) ** 2 / (pi * e)
        fo_lower = 1.0 - n * mu
    return BoundReport("physical_xi", n, upper, lower, fo_upper, fo_lower, rec)


def first_order_check(exact: float, approx: float, small_param: float) -> float:
    """Residual ratio |exact - approx| / small_param^2."""
    if not 0.0 < small_param < FIRST_ORDER_THRESHOLD:
        raise DomainError(
            f"small_param must be in (0, {FIRST_ORDER_THRESHOLD}), got {small_param}"
        )
    return abs(exact - approx) / small_param**2

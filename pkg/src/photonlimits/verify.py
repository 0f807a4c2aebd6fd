"""Self-contained consistency checks behind the `verify` CLI command.

Each check recomputes a claim two independent ways (closed form against
oracle, identity against direct sum, construction against witness) and
reports a single pass/fail line.  The suites mirror the module split:
signal (transforms, pulse families, construction, sweeps), fock,
measurement, and demos.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import e, pi, sqrt

import numpy as np
from scipy.special import erf

from .bounds import bounds_causal_target, bounds_physical_target
from .construction import closed_form_fidelity_n, construct_localized_state
from .errors import PhotonLimitsError
from .fock import (
    commutator_residuals,
    default_truncation,
    eigenvector_overlap,
    gamma_for_eta_tilde,
    isometry_residual,
    position_operator_check,
    state_coefficients,
)
from .measurement import (
    build_smearing,
    hermite_integral_bound_check,
    hermite_psi,
    optimal_phase,
    spectral_overlap_c_xi,
)
from .pulses import GaussianSpec, gaussian_pulse, physical_target_from_seed
from .signals import (
    Grid,
    SampledSignal,
    VacuumModeWeights,
    fourier_forward,
    fourier_inverse,
    max_abs,
    negative_frequency_weight,
    negative_time_weight,
    nu_constant,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _check(name: str, value: float, bound: float) -> CheckResult:
    return CheckResult(name, value <= bound, f"{value:.3g} (limit {bound:.3g})")


def checks_signal() -> list[CheckResult]:
    out = []
    grid = Grid.centered(2**14, 0.05)
    t = grid.times()
    rng = np.random.default_rng(7)
    sig = SampledSignal(grid, np.exp(-(t**2) / 8) * rng.standard_normal(t.size))
    spec = fourier_forward(sig)
    back = fourier_inverse(spec)
    out.append(
        _check(
            "fourier round trip",
            max_abs(back.values - sig.values) / max_abs(sig.values),
            1e-12,
        )
    )
    out.append(_check("plancherel", abs(sig.norm_sq - spec.norm_sq), 1e-10))

    fine = Grid.centered(2**22, 0.35)
    worst = 0.0
    for ws in (0.5, 1.0, 2.0):
        pulse = gaussian_pulse(GaussianSpec(1.0, ws, 4.0 * ws, truncated=False), fine)
        eta = negative_frequency_weight(fourier_forward(pulse))
        worst = max(worst, abs(eta - 0.5 * (1.0 - erf(ws))))
    out.append(_check("gaussian eta closed form", worst, 1e-6))

    worst = 0.0
    for ws in (0.5, 1.0, 2.0):
        for ratio in (0.0, 1.0, 3.0):
            grid = Grid.centered(2**14, np.pi / (1.0 + 12.0 / ws + 5.0))
            pulse = gaussian_pulse(GaussianSpec(1.0, ws, ratio * ws, truncated=True), grid)
            res = construct_localized_state(pulse)
            gt = fourier_inverse(res.g_tilde)
            leak = max_abs(gt.values[grid.times() < 0]) / max_abs(gt.values)
            worst = max(worst, leak)
    out.append(_check("modified seed causality", worst, 1e-6))

    out.extend(checks_sweeps())
    return out


def checks_sweeps() -> list[CheckResult]:
    from .cli import SweepConfig, run_figure_sweep
    import os
    import tempfile

    out = []
    with tempfile.TemporaryDirectory() as tmp:
        tables = {}
        for fid in ("fig2", "fig3", "fig4", "fig5", "fig6"):
            tables[fid] = run_figure_sweep(
                SweepConfig(fid, os.path.join(tmp, fid + ".csv"))
            )

    def series(table, col_prefix, status_offset):
        cols = [i for i, h in enumerate(table.header) if h.startswith(col_prefix)]
        return [
            np.array(
                [row[c] for row in table.rows if row[c + status_offset] == "ok"],
                dtype=float,
            )
            for c in cols
        ]

    ordered_ok = True
    for fid in ("fig2", "fig3", "fig5", "fig6"):
        for row in tables[fid].rows:
            for c, h in enumerate(tables[fid].header):
                if h.startswith("status") and row[c] == "ok":
                    if row[c - 3] < row[c - 2] - 1e-12:
                        ordered_ok = False
    out.append(
        CheckResult(
            "sweep bound ordering", ordered_ok, "lower <= upper at every feasible row"
        )
    )

    sat_ok = True
    for fid in ("fig2", "fig5"):
        for vals in series(tables[fid], "lower", 2):
            if np.any(np.diff(vals) < -1e-4):
                sat_ok = False
            if abs(vals[-1] - vals[-5]) > 1e-3:
                sat_ok = False
    out.append(
        CheckResult("delay sweeps saturate", sat_ok, "nondecreasing, flat tail")
    )

    plat_ok = True
    for fid in ("fig3", "fig6"):
        finals = [vals[-1] for vals in series(tables[fid], "lower", 2)]
        if not all(f2 >= f1 - 1e-9 for f1, f2 in zip(finals, finals[1:])):
            plat_ok = False
    out.append(
        CheckResult("width sweeps ordered by delay", plat_ok, "plateaus rise with tau/sigma")
    )

    prods = np.array([row[1] for row in tables["fig4"].rows])
    plateau = prods[np.array([row[0] for row in tables["fig4"].rows]) < 0.3]
    out.append(
        _check("effective width floor", float(np.max(np.abs(plateau - 1.3))), 0.1)
    )
    return out


def checks_fock() -> list[CheckResult]:
    out = []
    worst = 0.0
    for eta_tilde in (0.01, 0.05, 0.1, 0.2, 0.3):
        gamma = gamma_for_eta_tilde(eta_tilde)
        trunc = default_truncation(gamma)
        for n in (1, 2, 3):
            c1 = abs(state_coefficients(gamma, n, trunc)[0])
            worst = max(worst, abs(c1 - closed_form_fidelity_n(eta_tilde, n)))
    out.append(_check("oracle vs closed-form fidelity", worst, 1e-8))

    for eta_tilde, trunc in ((0.05, 48), (0.2, 80)):
        gamma = gamma_for_eta_tilde(eta_tilde)
        iso = isometry_residual(gamma, trunc, 12)
        cb, cbd = commutator_residuals(gamma, eta_tilde, trunc, 12)
        out.append(_check(f"isometry witness eta_tilde={eta_tilde}", iso, 1e-10))
        out.append(
            _check(f"commutator witness eta_tilde={eta_tilde}", max(cb, cbd), 1e-10)
        )

    worst = 0.0
    for n in range(11):
        for x in (0.0, 0.5, -0.5, 2.0, -2.0):
            worst = max(
                worst, abs(eigenvector_overlap(n, x, 40) - hermite_psi(n, x))
            )
    out.append(_check("eigenvector overlaps", worst, 1e-10))
    out.append(_check("position eigen-equation", position_operator_check(30), 1e-8))
    return out


def checks_measurement() -> list[CheckResult]:
    out = []
    weights = VacuumModeWeights()
    worst_c = 0.0
    worst_zeta = 0.0
    worst_norm = 0.0
    for ws, ratio in ((0.5, 3.0), (1.0, 3.0), (2.0, 2.0)):
        grid = Grid.centered(2**16, 0.02)
        xi = physical_target_from_seed(
            GaussianSpec(1.0, ws, ratio * ws, truncated=False), grid
        )
        xi_t = fourier_inverse(xi)
        mu = negative_time_weight(xi_t)
        nu = nu_constant(xi_t)
        smear = build_smearing(xi_t, optimal_phase(nu), weights)
        c_xi = spectral_overlap_c_xi(xi, smear, weights)
        worst_c = max(worst_c, abs(abs(c_xi) ** 2 - (mu + abs(nu))))
        zt = np.abs(smear.zeta_signal.values)
        worst_zeta = max(worst_zeta, float(zt[grid.times() >= 0].max() / zt.max()))
        worst_norm = max(worst_norm, smear.normalization_residual())
    out.append(_check("overlap identity |c|^2 = mu + |nu|", worst_c, 1e-6))
    out.append(_check("zeta anticausality", worst_zeta, 1e-6))
    out.append(_check("smearing normalization", worst_norm, 1e-9))

    out.append(
        CheckResult(
            "hermite window bound k <= 100",
            hermite_integral_bound_check(100),
            "all window integrals below the k = 1 ceiling",
        )
    )
    xs = np.linspace(0.5, 1.2, 2001)
    vals = hermite_psi(15, xs)
    peak_idx = int(np.argmax(vals))
    peak_ok = vals[peak_idx] < 0.35 and abs(xs[peak_idx] - 0.85) < 0.1
    out.append(
        CheckResult(
            "psi_15 local maximum", peak_ok, f"{vals[peak_idx]:.4f} at x = {xs[peak_idx]:.3f}"
        )
    )
    return out


def checks_demos() -> list[CheckResult]:
    from .demos import (
        coherent_localization_check,
        instantaneous_localized_spectrum,
        photon_energy_envelope,
    )

    out = []
    weights = VacuumModeWeights()
    grid = Grid.centered(2**13, 0.02)
    half = 1.0
    g_of_k = instantaneous_localized_spectrum(grid, half, weights)
    x = np.linspace(-8.0, 8.0, 1601)
    fld = photon_energy_envelope(g_of_k, weights, x, np.array([0.0, 2.0 * half]))
    outside = np.abs(x) > half
    s0 = np.abs(fld.s_values[0])
    s1 = np.abs(fld.s_values[1])
    out.append(_check("instantaneous localization", float(s0[outside].max() / s0.max()), 1e-6))
    out.append(
        CheckResult(
            "later delocalization",
            bool(s1[outside].max() / s1.max() > 1e-3),
            f"{s1[outside].max() / s1.max():.3g} of peak outside",
        )
    )

    t = grid.times()
    z = SampledSignal(grid, np.where(t >= 0, t * np.exp(-t), 0.0))
    try:
        xi = coherent_localization_check(z, 1.0 + 0.0j, weights)
        w = grid.omegas()
        neg = float(np.sum(np.abs(xi.values[w <= 0]) ** 2) * grid.domega)
        out.append(_check("coherent localization spectrum", neg, 1e-12))
    except PhotonLimitsError as exc:
        out.append(CheckResult("coherent localization spectrum", False, str(exc)))
    return out


SUITES = {
    "signal": checks_signal,
    "fock": checks_fock,
    "measurement": checks_measurement,
    "demos": checks_demos,
}


def run_suite(suite: str) -> list[CheckResult]:
    if suite == "all":
        results = []
        for fn in SUITES.values():
            results.extend(fn())
        return results
    if suite not in SUITES:
        raise PhotonLimitsError(f"unknown suite {suite!r}")
    return SUITES[suite]()

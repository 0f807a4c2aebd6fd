"""Command-line front end: figure sweeps, target reports, verify suite.

Sweeps are expressed in the dimensionless combinations omega0*sigma and
omega0*tau (the carrier is fixed at omega0 = 1), so the CSV output is
unit-free.  All CSV is written with 12 significant digits, '\n' line
endings and UTF-8, so identical flags give byte-identical files.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

import numpy as np

from .bounds import BoundReport, bounds_causal_target, bounds_physical_target
from .errors import InfeasibleSeedError, PhotonLimitsError
from .pulses import (
    GaussianSpec,
    effective_params,
    gaussian_pulse,
    physical_target_from_seed,
)
from .signals import Grid, SampledSignal, fourier_forward

FIGURE_IDS = ("fig2", "fig3", "fig4", "fig5", "fig6")
TAU_GRID = np.linspace(0.0, 12.0, 49)
SIGMA_SERIES = (0.5, 1.0, 2.0)
SIGMA_GRID = np.geomspace(0.2, 10.0, 41)
TAU_OVER_SIGMA_SERIES = (1.0, 2.0, 3.0)
SEED_WIDTH_GRID = np.geomspace(0.05, 10.0, 41)


def default_grid(sigma: float, n_exp: int = 14, dt: float | None = None) -> Grid:
    """Grid sized for unit-carrier Gaussian families of width sigma.

    The Nyquist band covers the carrier plus twelve spectral widths; the
    window of 2^n_exp samples is then far wider than any swept delay.
    """
    if dt is None:
        dt = np.pi / (1.0 + 12.0 / sigma + 5.0)
    return Grid.centered(2**n_exp, dt)


@dataclass(frozen=True)
class SweepConfig:
    figure_id: str
    out_path: str
    n_exp: int = 14
    dt: float | None = None
    n_photon: int = 1

    def __post_init__(self):
        if self.figure_id not in FIGURE_IDS:
            raise PhotonLimitsError(f"unknown figure id {self.figure_id!r}")


@dataclass
class SweepTable:
    """Column-ordered sweep results ready for CSV serialization."""

    header: list[str]
    rows: list[list] = field(default_factory=list)

    def to_csv(self) -> str:
        lines = [",".join(self.header)]
        for row in self.rows:
            lines.append(
                ",".join(
                    v if isinstance(v, str) else f"{v:.12g}" for v in row
                )
            )
        return "\n".join(lines) + "\n"


def _series_tag(value: float) -> str:
    return f"{value:g}".replace(".", "p")


def _bound_cells(report: BoundReport | None, physical: bool) -> list:
    if report is None:
        return ["nan", "nan", "nan", "infeasible"]
    small = report.inputs.mu if physical else report.inputs.eta
    return [report.upper, report.lower, small, "ok"]


def _causal_report(sigma: float, tau: float, cfg: SweepConfig) -> BoundReport | None:
    grid = default_grid(sigma, cfg.n_exp, cfg.dt)
    pulse = gaussian_pulse(GaussianSpec(1.0, sigma, tau, truncated=True), grid)
    try:
        return bounds_causal_target(pulse, cfg.n_photon)
    except InfeasibleSeedError:
        return None


def _physical_report(sigma: float, tau: float, cfg: SweepConfig) -> BoundReport | None:
    grid = default_grid(sigma, cfg.n_exp, cfg.dt)
    xi = physical_target_from_seed(GaussianSpec(1.0, sigma, tau, truncated=False), grid)
    try:
        return bounds_physical_target(xi, cfg.n_photon)
    except InfeasibleSeedError:
        return None


def _delay_sweep(cfg: SweepConfig, physical: bool) -> SweepTable:
    small = "mu" if physical else "eta"
    header = ["omega0_tau"]
    for s in SIGMA_SERIES:
        tag = f"ws{_series_tag(s)}"
        header += [f"upper_{tag}", f"lower_{tag}", f"{small}_{tag}", f"status_{tag}"]
    table = SweepTable(header)
    builder = _physical_report if physical else _causal_report
    for tau in TAU_GRID:
        row: list = [float(tau)]
        for s in SIGMA_SERIES:
            row += _bound_cells(builder(s, float(tau), cfg), physical)
        table.rows.append(row)
    return table


def _width_sweep(cfg: SweepConfig, physical: bool) -> SweepTable:
    small = "mu" if physical else "eta"
    header = ["omega0_sigma"]
    for r in TAU_OVER_SIGMA_SERIES:
        tag = f"ts{_series_tag(r)}"
        header += [f"upper_{tag}", f"lower_{tag}", f"{small}_{tag}", f"status_{tag}"]
    table = SweepTable(header)
    builder = _physical_report if physical else _causal_report
    for sigma in SIGMA_GRID:
        row: list = [float(sigma)]
        for r in TAU_OVER_SIGMA_SERIES:
            row += _bound_cells(builder(float(sigma), float(r * sigma), cfg), physical)
        table.rows.append(row)
    return table


def _effective_width_sweep(cfg: SweepConfig) -> SweepTable:
    table = SweepTable(
        ["omega0_sigma_pre", "omega0_eff_sigma_eff", "omega0_eff", "sigma_eff", "status"]
    )
    for s_pre in SEED_WIDTH_GRID:
        grid = default_grid(float(s_pre), cfg.n_exp, cfg.dt)
        xi = physical_target_from_seed(
            GaussianSpec(1.0, float(s_pre), 3.0 * float(s_pre), truncated=False), grid
        )
        eff = effective_params(xi)
        table.rows.append(
            [
                float(s_pre),
                eff.omega0_eff * eff.sigma_eff,
                eff.omega0_eff,
                eff.sigma_eff,
                "ok",
            ]
        )
    return table


def run_figure_sweep(cfg: SweepConfig) -> SweepTable:
    if cfg.figure_id == "fig2":
        table = _delay_sweep(cfg, physical=False)
    elif cfg.figure_id == "fig3":
        table = _width_sweep(cfg, physical=False)
    elif cfg.figure_id == "fig4":
        table = _effective_width_sweep(cfg)
    elif cfg.figure_id == "fig5":
        table = _delay_sweep(cfg, physical=True)
    else:
        table = _width_sweep(cfg, physical=True)
    with open(cfg.out_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(table.to_csv())
    return table


def _signal_from_file(path: str) -> SampledSignal:
    rows = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            parts = line.split(",")
            try:
                rows.append([float(p) for p in parts[:3]])
            except ValueError:
                continue
    if not rows:
        raise PhotonLimitsError(f"no numeric rows in {path}")
    arr = np.asarray(rows)
    t = arr[:, 0]
    steps = np.diff(t)
    if steps.size == 0 or np.max(np.abs(steps - steps[0])) > 1e-9 * abs(steps[0]):
        raise PhotonLimitsError("signal file must have a uniform time grid")
    n = len(t)
    if n & (n - 1) != 0:
        raise PhotonLimitsError(f"signal file length must be a power of two, got {n}")
    grid = Grid(n, float(steps[0]), float(t[0]))
    return SampledSignal(grid, arr[:, 1] + 1j * arr[:, 2]).normalized()


def report_target(args) -> int:
    if args.n < 1:
        print("error: --n must be a positive integer", file=sys.stderr)
        return 2
    sigma = args.omega0_sigma
    tau = args.tau_over_sigma * sigma
    try:
        if args.kind == "causal":
            if args.signal_file:
                pulse = _signal_from_file(args.signal_file)
            else:
                pulse = gaussian_pulse(
                    GaussianSpec(1.0, sigma, tau, truncated=True), default_grid(sigma)
                )
            report = bounds_causal_target(pulse, args.n)
        else:
            if args.signal_file:
                xi = fourier_forward(_signal_from_file(args.signal_file))
            else:
                xi = physical_target_from_seed(
                    GaussianSpec(1.0, sigma, tau, truncated=False), default_grid(sigma)
                )
            report = bounds_physical_target(xi, args.n)
    except PhotonLimitsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    rec = report.inputs
    print(f"target_kind   {report.target_kind}")
    print(f"n_photon      {report.n_photon}")
    print(f"upper         {report.upper:.12g}")
    print(f"lower         {report.lower:.12g}")
    if report.upper_first_order is not None:
        print(f"upper_1st     {report.upper_first_order:.12g}")
        print(f"lower_1st     {report.lower_first_order:.12g}")
    print(f"mu            {rec.mu:.12g}")
    print(f"eta           {rec.eta:.12g}")
    print(f"nu_abs        {rec.nu_abs:.12g}")
    print(f"j_const       {rec.j_const:.12g}")
    print(f"f_n           {rec.f_n:.12g}")
    if args.out:
        header = "target_kind,n_photon,upper,lower,mu,eta,nu_abs,j_const,f_n"
        row = (
            f"{report.target_kind},{report.n_photon},{report.upper:.12g},"
            f"{report.lower:.12g},{rec.mu:.12g},{rec.eta:.12g},"
            f"{rec.nu_abs:.12g},{rec.j_const:.12g},{rec.f_n:.12g}"
        )
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(header + "\n" + row + "\n")
    return 0


def run_verify(suite: str) -> int:
    from . import verify as verify_mod

    try:
        results = verify_mod.run_suite(suite)
    except PhotonLimitsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    failed = 0
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(f"{status} {res.name}: {res.detail}")
        failed += 0 if res.passed else 1
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 0 if failed == 0 else 1


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="photonlimits",
        description="Fidelity bounds for on-demand near-photon states",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_fig = sub.add_parser("figure", help="run a parameter sweep, write CSV")
    p_fig.add_argument("figure_id", choices=FIGURE_IDS)
    p_fig.add_argument("--out", default=None)
    p_fig.add_argument("--n-exp", type=int, default=14, help="log2 of grid samples")
    p_fig.add_argument("--dt", type=float, default=None, help="grid step override")

    p_rep = sub.add_parser("report", help="bound report for one target")
    p_rep.add_argument("kind", choices=("causal", "physical"))
    p_rep.add_argument("--omega0-sigma", type=float, default=1.0)
    p_rep.add_argument("--tau-over-sigma", type=float, default=3.0)
    p_rep.add_argument("--n", type=int, default=1)
    p_rep.add_argument("--signal-file", default=None)
    p_rep.add_argument("--out", default=None)

    p_ver = sub.add_parser("verify", help="run consistency check suites")
    p_ver.add_argument(
        "suite",
        nargs="?",
        default="all",
        choices=("all", "fock", "measurement", "signal", "demos"),
    )

    args = parser.parse_args(argv)
    if args.command == "figure":
        out = args.out or f"{args.figure_id}.csv"
        cfg = SweepConfig(args.figure_id, out, n_exp=args.n_exp, dt=args.dt)
        run_figure_sweep(cfg)
        print(f"wrote {out}")
        return 0
    if args.command == "report":
        return report_target(args)
    return run_verify(args.suite)


if __name__ == "__main__":
    sys.exit(main())

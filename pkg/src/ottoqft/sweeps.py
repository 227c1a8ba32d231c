"""Grid evaluation and CSV emission for the sweep front end.

Rows are produced in declared grid order regardless of how many workers
evaluate them, and every number is rendered with 17 significant digits so
the emitted text re-parses to the exact binary value.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

from .algebra import MomentSet
from .config import SweepSpec
from .cycle import CycleConfig, InteractionEvent, WorkReport, stroke_ledger, theta
from .minkowski import MinkowskiParams, minkowski_moments

__all__ = ["run_sweep", "run_point", "CURVE_COLUMNS", "GRID_COLUMNS"]

CURVE_COLUMNS = (
    "tau2_over_sigma", "theta", "nu1", "nu2", "E12", "mu12",
    "p_cyclic", "p1", "w_ext_sigma", "pwc",
)
GRID_COLUMNS = ("lambda1_over_sigma", "lambda2_over_sigma", "w_ext_sigma", "pwc")


def _render(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return format(value, ".17g")


def _cycle_quantities(
    omega1: float, omega2: float, tau1: float, tau2: float,
    lambda1: float, lambda2: float,
) -> tuple[MomentSet, WorkReport]:
    m = minkowski_moments(MinkowskiParams(lambda1=lambda1, lambda2=lambda2, dtau=tau2 - tau1))
    config = CycleConfig(
        first=InteractionEvent(tau=tau1, gap=omega1, coupling=lambda1),
        second=InteractionEvent(tau=tau2, gap=omega2, coupling=lambda2),
    )
    return m, stroke_ledger(config, m)


def _curve_row(args: tuple) -> tuple:
    omega1, omega2, tau1, lambda1, lambda2, tau2 = args
    m, report = _cycle_quantities(omega1, omega2, tau1, tau2, lambda1, lambda2)
    th = omega1 * tau1 - omega2 * tau2
    w = report.w_ext if report.w_ext is not None else 0.0
    return (tau2, th, m.nu1, m.nu2, m.e12, m.mu12, report.p, report.p1, w, report.pwc)


def _grid_row(args: tuple) -> tuple:
    omega1, omega2, tau1, lambda1, lambda2, tau2 = args
    _, report = _cycle_quantities(omega1, omega2, tau1, tau2, lambda1, lambda2)
    w = report.w_ext if report.w_ext is not None else 0.0
    return (lambda1, lambda2, w, report.pwc)


def _evaluate(func, items: list[tuple], jobs: int | None) -> list[tuple]:
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs!r}")
    if jobs == 1 or len(items) < 2 * jobs:
        return [func(item) for item in items]
    chunk = max(1, len(items) // (4 * jobs))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, items, chunksize=chunk))


def run_sweep(spec: SweepSpec, jobs: int | None = None) -> str:
    """Evaluate the grid described by spec and return the CSV document."""
    if spec.mode == "curve-tau2":
        header = CURVE_COLUMNS
        items = [
            (spec.omega1, spec.omega2, spec.tau1, spec.lambda1, spec.lambda2, tau2)
            for tau2 in spec.tau2_axis.points()
        ]
        rows = _evaluate(_curve_row, items, jobs)
    elif spec.mode == "grid-couplings":
        header = GRID_COLUMNS
        items = [
            (spec.omega1, spec.omega2, spec.tau1, lambda1, lambda2, spec.tau2)
            for lambda1 in spec.lambda1_axis.points()
            for lambda2 in spec.lambda2_axis.points()
        ]
        rows = _evaluate(_grid_row, items, jobs)
    else:
        raise ValueError(f"run_sweep supports sweep modes only, got mode {spec.mode!r}")
    lines = [",".join(header)]
    lines.extend(",".join(_render(value) for value in row) for row in rows)
    return "\n".join(lines) + "\n"


def run_point(spec: SweepSpec) -> str:
    """Single-cycle report as ``key = value`` lines."""
    if spec.mode != "single-point":
        raise ValueError(f"run_point requires mode 'single-point', got {spec.mode!r}")
    m = minkowski_moments(
        MinkowskiParams(lambda1=spec.lambda1, lambda2=spec.lambda2, dtau=spec.tau2 - spec.tau1)
    )
    config = CycleConfig(
        first=InteractionEvent(tau=spec.tau1, gap=spec.omega1, coupling=spec.lambda1),
        second=InteractionEvent(tau=spec.tau2, gap=spec.omega2, coupling=spec.lambda2),
        initial_p=spec.initial_p,
    )
    report = stroke_ledger(config, m)
    pairs: list[tuple[str, object]] = [
        ("theta", theta(config)),
        ("nu1", m.nu1), ("nu2", m.nu2), ("e12", m.e12), ("mu12", m.mu12),
        ("p", report.p), ("p1", report.p1), ("p2", report.p2),
        ("w1", report.w1), ("w3", report.w3),
        ("q2", report.q2), ("q4", report.q4),
        ("q_total", report.q_total),
    ]
    if report.w_ext is not None:
        pairs.append(("w_ext", report.w_ext))
    if report.efficiency is not None:
        pairs.append(("efficiency", report.efficiency))
    pairs.extend(
        [("pwc", report.pwc), ("degenerate", report.degenerate), ("closed", report.closed)]
    )
    return "\n".join(f"{key} = {_render(value)}" for key, value in pairs) + "\n"

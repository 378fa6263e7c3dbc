"""Command-line experiment runner.

Subcommands:
  measures         report every measure for one state file
  random-study     per-state reports over a seeded random ensemble
  ground-sweep     coupled ground state versus coupling or detuning
  thermal-sweep    coupled thermal state versus temperature or detuning
  asymmetry-sweep  one-sided measures versus oscillator detuning

All sweeps emit one row per parameter value in parameter order, regardless of
--jobs.  Exit codes: 0 success, 1 invalid physics or parameter values,
2 unreadable input or malformed arguments, 3 quadrature non-convergence.
"""

from __future__ import annotations

import argparse
import functools
import math
import multiprocessing
import sys

from .causal import quantum_asymmetry, tomographic_asymmetry
from .circuits import (
    CircuitParams,
    QuadratureNotConverged,
    UnstableCoupling,
    ground_state_2qb,
    normal_modes,
    overlap_coefficients,
    thermal_state_2qb,
)
from .measures import (
    GridSpec,
    canonical_discord,
    diagonalizing_scheme,
    entanglement_of_formation,
    full_report,
    optimal_scheme,
    symmetrizing_scheme,
    x_optimal_discord,
)
from .qstate import StateValidationError, XState, quantum_mutual_information
from .randgen import random_mixed_state, random_x_state, substream
from .stateio import StateFileError, format_value, load_state_file, write_report
from .tomography import DIAG_SETTING, tomogram


def _parse_range(text: str) -> list[float]:
    parts = text.split(":")
    try:
        if len(parts) == 1:
            return [float(parts[0])]
        if len(parts) != 3:
            raise ValueError("expected START:STOP:STEP")
        start, stop, step = (float(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad range {text!r}: {exc}") from exc
    if step <= 0.0:
        raise argparse.ArgumentTypeError(f"bad range {text!r}: step must be positive")
    if stop < start:
        raise argparse.ArgumentTypeError(f"bad range {text!r}: stop is below start")
    count = int(math.floor((stop - start) / step + 1e-9))
    return [start + k * step for k in range(count + 1)]


def _grid_from_args(args) -> GridSpec:
    if args.grid_theta < 4 or args.grid_phi < 4:
        raise ValueError("--grid-theta and --grid-phi must be at least 4")
    return GridSpec(
        theta_step=math.pi / args.grid_theta, phi_step=2.0 * math.pi / args.grid_phi
    )


def _map_rows(worker, items, jobs: int) -> list:
    if jobs <= 1:
        return [worker(item) for item in items]
    with multiprocessing.Pool(processes=jobs) as pool:
        return pool.map(worker, list(items))


def _string_rows(fieldnames, rows) -> list[dict]:
    return [dict(zip(fieldnames, (format_value(v) for v in row))) for row in rows]


def _maybe_figure(args, kind: str, fieldnames, rows, x_name, y_names) -> None:
    if not getattr(args, "fig", None):
        return
    from . import plots

    srows = _string_rows(fieldnames, rows)
    if kind == "scatter":
        plots.render_study_figure(srows, args.fig, x_name, y_names[0])
    else:
        plots.render_sweep_figure(srows, args.fig, x_name, y_names)


# ---------------------------------------------------------------------------
# measures

_MEASURES_FIELDS = (
    "label",
    "mutual_information",
    "discord_optimal",
    "discord_diagonalizing",
    "discord_symmetrizing",
    "discord_measured_a",
    "discord_measured_b",
    "entanglement",
    "asymmetry_quantum",
    "asymmetry_diag",
    "asymmetry_optimal",
    "subclass",
    "theta_a",
    "phi_a",
    "theta_b",
    "phi_b",
)


def _run_measures(args) -> int:
    state, label = load_state_file(args.state)
    rep = full_report(state, _grid_from_args(args))
    row = (
        label,
        rep.mutual_information,
        rep.discord_optimal,
        rep.discord_diagonalizing,
        rep.discord_symmetrizing,
        rep.discord_measured_a,
        rep.discord_measured_b,
        rep.entanglement,
        rep.asymmetry_quantum,
        rep.asymmetry_diag,
        rep.asymmetry_optimal,
        rep.subclass,
        rep.optimal_setting.theta_a,
        rep.optimal_setting.phi_a,
        rep.optimal_setting.theta_b,
        rep.optimal_setting.phi_b,
    )
    for name, value in zip(_MEASURES_FIELDS, row):
        print(f"{name}={format_value(value)}")
    if args.out:
        write_report(args.out, "measures-v1", _MEASURES_FIELDS, [row])
    if args.fig:
        from . import plots

        named = [
            ("diagonalizing", tomogram(state, diagonalizing_scheme(state).setting).probs),
            ("symmetrizing", tomogram(state, symmetrizing_scheme(state).setting).probs),
            ("optimal", tomogram(state, rep.optimal_setting).probs),
        ]
        plots.render_scheme_tomograms(named, args.fig)
    return 0


# ---------------------------------------------------------------------------
# random-study

_STUDY_X_FIELDS = (
    "index",
    "rho11",
    "rho22",
    "rho33",
    "rho44",
    "rho14",
    "rho23",
    "mutual_information",
    "discord_optimal",
    "discord_diagonalizing",
    "discord_symmetrizing",
    "asymmetry_optimal",
    "asymmetry_diag",
    "min_rule_residual",
    "scheme",
    "subclass",
)

_STUDY_MIXED_FIELDS = (
    "index",
    "mutual_information",
    "discord_optimal",
    "discord_diagonalizing",
    "discord_symmetrizing",
    "asymmetry_optimal",
    "asymmetry_diag",
)


def _study_x_row(index: int, seed: int, grid: GridSpec):
    x = random_x_state(substream(seed, index))
    state = x.to_state()
    searched = optimal_scheme(state, grid)
    rule = x_optimal_discord(x)
    return (
        index,
        x.rho11,
        x.rho22,
        x.rho33,
        x.rho44,
        x.rho14,
        x.rho23,
        quantum_mutual_information(state),
        searched.discord,
        rule.discord_diagonalizing,
        rule.discord_symmetrizing,
        tomographic_asymmetry(state, searched.setting).asymmetry,
        tomographic_asymmetry(state, DIAG_SETTING).asymmetry,
        abs(searched.discord - rule.discord),
        rule.scheme,
        rule.subclass,
    )


def _study_mixed_row(index: int, seed: int, grid: GridSpec):
    state = random_mixed_state(substream(seed, index))
    searched = optimal_scheme(state, grid)
    diag = diagonalizing_scheme(state, grid)
    sym = symmetrizing_scheme(state, grid)
    return (
        index,
        quantum_mutual_information(state),
        searched.discord,
        diag.discord,
        sym.discord,
        tomographic_asymmetry(state, searched.setting).asymmetry,
        tomographic_asymmetry(state, diag.setting).asymmetry,
    )


def _run_random_study(args) -> int:
    grid = _grid_from_args(args)
    if args.kind == "x":
        fields = _STUDY_X_FIELDS
        worker = functools.partial(_study_x_row, seed=args.seed, grid=grid)
    else:
        fields = _STUDY_MIXED_FIELDS
        worker = functools.partial(_study_mixed_row, seed=args.seed, grid=grid)
    rows = _map_rows(worker, range(args.samples), args.jobs)
    write_report(args.out, f"random-study-{args.kind}-v1", fields, rows)
    _maybe_figure(args, "scatter", fields, rows, "discord_optimal", ["discord_diagonalizing"])
    return 0


# ---------------------------------------------------------------------------
# circuit sweeps

_SWEEP_MEASURES = (
    "mutual_information",
    "discord_optimal",
    "discord_diagonalizing",
    "discord_symmetrizing",
    "discord_measured_a",
    "discord_measured_b",
    "entanglement",
    "asymmetry_quantum",
    "asymmetry_diag",
    "alpha",
    "subclass",
    "warning",
)

_GROUND_FIELDS = ("g", "delta_omega") + _SWEEP_MEASURES
_THERMAL_FIELDS = ("g", "delta_omega", "temperature") + _SWEEP_MEASURES

_ASYM_FIELDS = (
    "delta_omega",
    "g",
    "temperature",
    "asymmetry_quantum",
    "asymmetry_diag",
    "discord_measured_a",
    "discord_measured_b",
    "alpha",
    "warning",
)

_UNDEFINED_SWEEP_TAIL = tuple([None] * 11)


def _sweep_measures(x: XState, alpha: float, warning: str):
    state = x.to_state()
    searched = optimal_scheme(state)
    rule = x_optimal_discord(x)
    return (
        quantum_mutual_information(state),
        searched.discord,
        rule.discord_diagonalizing,
        rule.discord_symmetrizing,
        canonical_discord(state, "A").discord,
        canonical_discord(state, "B").discord,
        entanglement_of_formation(state),
        quantum_asymmetry(state).asymmetry,
        tomographic_asymmetry(state, DIAG_SETTING).asymmetry,
        alpha,
        rule.subclass,
        warning,
    )


def _ground_row(point, sweep: str, fixed: float, max_level: int, nodes: int):
    g, domega = (point, fixed) if sweep == "g" else (fixed, point)
    params = CircuitParams(1.0, domega, g, 0.0)
    try:
        normal_modes(params)
    except UnstableCoupling:
        return (g, domega) + _UNDEFINED_SWEEP_TAIL + ("unstable-coupling",)
    result = ground_state_2qb(params, max_level=max_level, nodes=nodes)
    return (g, domega) + _sweep_measures(result.state, result.alpha, "")


def _run_ground_sweep(args) -> int:
    if args.g_range is not None:
        points, sweep, fixed = args.g_range, "g", args.domega
        x_name = "g"
    else:
        points, sweep, fixed = args.domega_range, "domega", args.g
        x_name = "delta_omega"
    worker = functools.partial(
        _ground_row, sweep=sweep, fixed=fixed, max_level=args.max_level, nodes=args.quad_nodes
    )
    rows = _map_rows(worker, points, args.jobs)
    write_report(args.out, "ground-sweep-v1", _GROUND_FIELDS, rows)
    _maybe_figure(
        args,
        "sweep",
        _GROUND_FIELDS,
        rows,
        x_name,
        ["mutual_information", "discord_optimal", "entanglement"],
    )
    return 0


def _thermal_row_t(temperature: float, base: CircuitParams, table, max_level: int, nodes: int):
    params = CircuitParams(base.omega1, base.delta_omega, base.g, temperature)
    result = thermal_state_2qb(params, max_level=max_level, nodes=nodes, table=table)
    warning = "ground-limit" if result.ground_limit else ""
    return (base.g, base.delta_omega, temperature) + _sweep_measures(
        result.state, result.alpha, warning
    )


def _thermal_row_dw(domega: float, g: float, temperature: float, max_level: int, nodes: int):
    params = CircuitParams(1.0, domega, g, temperature)
    result = thermal_state_2qb(params, max_level=max_level, nodes=nodes)
    warning = "ground-limit" if result.ground_limit else ""
    return (g, domega, temperature) + _sweep_measures(result.state, result.alpha, warning)


def _run_thermal_sweep(args) -> int:
    if args.T_range is not None:
        base = CircuitParams(1.0, args.domega, args.g, 0.0)
        # one overlap table serves the whole temperature sweep
        table = overlap_coefficients(base, max_level=args.max_level, nodes=args.quad_nodes)
        worker = functools.partial(
            _thermal_row_t, base=base, table=table, max_level=args.max_level, nodes=args.quad_nodes
        )
        points, x_name = args.T_range, "temperature"
    else:
        normal_modes(CircuitParams(1.0, args.domega_range[0], args.g, 0.0))
        worker = functools.partial(
            _thermal_row_dw,
            g=args.g,
            temperature=args.T,
            max_level=args.max_level,
            nodes=args.quad_nodes,
        )
        points, x_name = args.domega_range, "delta_omega"
    rows = _map_rows(worker, points, args.jobs)
    write_report(args.out, "thermal-sweep-v1", _THERMAL_FIELDS, rows)
    _maybe_figure(
        args,
        "sweep",
        _THERMAL_FIELDS,
        rows,
        x_name,
        ["mutual_information", "discord_optimal", "entanglement"],
    )
    return 0


def _asym_row(domega: float, g: float, temperature: float, max_level: int, nodes: int):
    params = CircuitParams(1.0, domega, g, temperature)
    result = thermal_state_2qb(params, max_level=max_level, nodes=nodes)
    state = result.state.to_state()
    return (
        domega,
        g,
        temperature,
        quantum_asymmetry(state).asymmetry,
        tomographic_asymmetry(state, DIAG_SETTING).asymmetry,
        canonical_discord(state, "A").discord,
        canonical_discord(state, "B").discord,
        result.alpha,
        "ground-limit" if result.ground_limit else "",
    )


def _run_asymmetry_sweep(args) -> int:
    normal_modes(CircuitParams(1.0, args.domega_range[0], args.g, 0.0))
    worker = functools.partial(
        _asym_row, g=args.g, temperature=args.T, max_level=args.max_level, nodes=args.quad_nodes
    )
    rows = _map_rows(worker, args.domega_range, args.jobs)
    write_report(args.out, "asymmetry-sweep-v1", _ASYM_FIELDS, rows)
    _maybe_figure(
        args,
        "sweep",
        _ASYM_FIELDS,
        rows,
        "delta_omega",
        ["discord_measured_a", "discord_measured_b", "asymmetry_quantum"],
    )
    return 0


# ---------------------------------------------------------------------------
# parser

def _add_common_output(sub, with_fig: bool = True) -> None:
    sub.add_argument("--out", default=None, help="report file (default: stdout)")
    if with_fig:
        sub.add_argument("--fig", default=None, help="also render a figure to this file")
    sub.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")


def _add_grid(sub) -> None:
    sub.add_argument(
        "--grid-theta", type=int, default=60, help="theta subdivisions of [0, pi]"
    )
    sub.add_argument(
        "--grid-phi", type=int, default=60, help="phi subdivisions of [0, 2*pi)"
    )


def _add_circuit(sub) -> None:
    sub.add_argument("--max-level", type=int, default=12, help="bare levels kept per mode")
    sub.add_argument("--quad-nodes", type=int, default=80, help="quadrature nodes per axis")


_RANGE_HELP = (
    "inclusive range START:STOP:STEP (both ends kept when STEP divides evenly); "
    "write --flag=-0.5:0.5:0.1 when START is negative"
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tomocorr", description="Two-qubit correlation reports and sweeps"
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("measures", help="all measures for one state file")
    p.add_argument("state", help="JSON state file")
    _add_grid(p)
    p.add_argument("--out", default=None, help="also write the report as CSV")
    p.add_argument("--fig", default=None, help="render scheme tomograms to this image file")
    p.set_defaults(run=_run_measures)

    p = subs.add_parser("random-study", help="measure reports over a seeded ensemble")
    p.add_argument("--kind", choices=("x", "mixed"), required=True)
    p.add_argument("--samples", type=int, required=True, help="ensemble size")
    p.add_argument("--seed", type=int, default=0, help="ensemble seed (default 0)")
    _add_grid(p)
    _add_common_output(p)
    p.set_defaults(run=_run_random_study)

    p = subs.add_parser("ground-sweep", help="ground state versus coupling or detuning")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--g-range", type=_parse_range, metavar="A:B:STEP", help=_RANGE_HELP)
    mode.add_argument("--domega-range", type=_parse_range, metavar="A:B:STEP", help=_RANGE_HELP)
    p.add_argument("--g", type=float, default=0.0, help="coupling when sweeping detuning")
    p.add_argument("--domega", type=float, default=0.0, help="detuning when sweeping coupling")
    _add_circuit(p)
    _add_common_output(p)
    p.set_defaults(run=_run_ground_sweep, g_range=None, domega_range=None)

    p = subs.add_parser("thermal-sweep", help="thermal state versus temperature or detuning")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument(
        "--T-range", dest="T_range", type=_parse_range, metavar="A:B:STEP", help=_RANGE_HELP
    )
    mode.add_argument("--domega-range", type=_parse_range, metavar="A:B:STEP", help=_RANGE_HELP)
    p.add_argument("--g", type=float, default=0.0, help="coupling strength")
    p.add_argument("--domega", type=float, default=0.0, help="detuning when sweeping temperature")
    p.add_argument("--T", type=float, default=0.0, help="temperature when sweeping detuning")
    _add_circuit(p)
    _add_common_output(p)
    p.set_defaults(run=_run_thermal_sweep, T_range=None, domega_range=None)

    p = subs.add_parser("asymmetry-sweep", help="one-sided measures versus detuning")
    p.add_argument(
        "--domega-range", dest="domega_range", type=_parse_range, required=True,
        metavar="A:B:STEP", help=_RANGE_HELP,
    )
    p.add_argument("--g", type=float, default=0.0, help="coupling strength")
    p.add_argument("--T", type=float, default=0.0, help="temperature")
    _add_circuit(p)
    _add_common_output(p)
    p.set_defaults(run=_run_asymmetry_sweep)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.run(args)
    except StateFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QuadratureNotConverged as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (StateValidationError, UnstableCoupling, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands: ``times`` (single-point evaluation), ``sweep`` (1D/2D grids to
CSV/JSON plus optional SVG), ``spectrum`` (spectral density and power
spectrum tables, optionally with the discrete-bath oracle column) and
``validate`` (configuration and regime checks). Exit codes: 0 success, 2
invalid configuration, 3 computation error, 4 unwritable output.
"""

from __future__ import annotations

import argparse
import dataclasses
import math
import os
import sys

import numpy as np

from . import constants
from .bath import Temperature, power_spectrum, spectral_density
from .config import (
    RESULT_COLUMNS,
    RunConfig,
    Variant,
    dump_config,
    load_config,
)
from .errors import ConfigError, DegenerateLevels, DotPhononError
from .oracle import sample_discrete_bath, spectrum_from_correlator
from .output import format_float, spectrum_csv, sweep_csv, sweep_json
from .qubit import diagonalize, qubit_energy, validate_regime
from .redfield import compute_times
from .svgplot import heatmap_panels, line_panels
from .sweep import SweepAxis, fit_dephasing_line, sweep

_COLUMN_GETTERS = {
    "T1_ns": lambda r: r.t1_ns,
    "Tphi_ns": lambda r: r.tphi_ns,
    "T2_ns": lambda r: r.t2_ns,
    "EQ_ueV": lambda r: r.eq_ueV,
    "dEQ_deps": lambda r: r.deq_deps,
    "chi10_sq": lambda r: r.chi10_sq,
    "chi11_minus_chi00": lambda r: r.chi_diag_diff,
}


def _add_common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", metavar="PATH", help="read a .cfg recipe file")
    p.add_argument("--eps", type=float, help="detuning, ueV")
    p.add_argument("--d1", type=float, help="tunnel coupling delta1, ueV")
    p.add_argument("--d2", type=float, help="tunnel coupling delta2, ueV")
    p.add_argument("--dr", type=float, help="right-dot splitting deltaR, ueV")
    p.add_argument("--s", type=float, help="bath regime exponent")
    p.add_argument("--eta", type=float, help="dimensionless bath coupling")
    p.add_argument("--omega-c", type=float, help="high-energy cutoff, rad/ns")
    p.add_argument(
        "--omega-c-factor", type=float,
        help="derive omega_c as this multiple of delta1 (default 10)",
    )
    p.add_argument("--f-cutoff", type=float, help="low-frequency cutoff, Hz")
    p.add_argument(
        "--temp", action="append", metavar="K",
        help="temperature in K (repeat or comma-separate for several)",
    )
    p.add_argument("--omega-eval", type=float, help="dc-limit evaluation frequency, rad/ns")
    p.add_argument("--regime-factor", type=float, help="threshold factor for E_Q >> eta*kB*T")
    p.add_argument("--output", metavar="PATH", help="output file (default stdout)")
    p.add_argument("--format", choices=("csv", "json"), help="output format")
    p.add_argument("--dump-config", metavar="PATH", help="write the effective config and exit")


def _parse_axis(spec: str) -> SweepAxis:
    parts = spec.split(":")
    if len(parts) not in (4, 5):
        raise ConfigError(
            f"axis spec must be name:start:stop:count[:scale], got {spec!r}"
        )
    try:
        return SweepAxis(
            name=parts[0],
            start=float(parts[1]),
            stop=float(parts[2]),
            count=int(parts[3]),
            scale=parts[4] if len(parts) == 5 else "linear",
        )
    except ValueError as exc:
        raise ConfigError(f"bad axis spec {spec!r}: {exc}") from exc


def _parse_temps(raw_list) -> tuple[float, ...]:
    temps = []
    for raw in raw_list:
        for part in str(raw).split(","):
            part = part.strip()
            if part:
                try:
                    temps.append(float(part))
                except ValueError as exc:
                    raise ConfigError(f"bad temperature {part!r}") from exc
    return tuple(temps)


def _build_config(args) -> RunConfig:
    cfg = load_config(args.config) if args.config else RunConfig()

    qubit = cfg.qubit
    q_updates = {}
    for flag, field in (("eps", "eps"), ("d1", "delta1"), ("d2", "delta2"), ("dr", "deltaR")):
        value = getattr(args, flag, None)
        if value is not None:
            q_updates[field] = value
    if q_updates:
        try:
            qubit = dataclasses.replace(qubit, **q_updates)
        except DotPhononError as exc:
            raise ConfigError(str(exc)) from exc

    updates: dict = {"qubit": qubit}
    for flag, field in (
        ("s", "s"), ("eta", "eta"), ("omega_c", "omega_c"),
        ("omega_c_factor", "omega_c_factor"), ("f_cutoff", "f_cutoff_hz"),
        ("omega_eval", "omega_eval"), ("regime_factor", "regime_factor"),
        ("output", "output"), ("format", "fmt"),
    ):
        value = getattr(args, flag, None)
        if value is not None:
            updates[field] = value
    if getattr(args, "temp", None):
        updates["temps"] = _parse_temps(args.temp)
    if getattr(args, "axis", None):
        updates["axes"] = tuple(_parse_axis(spec) for spec in args.axis)
    if getattr(args, "plot", None) is not None:
        updates["plot"] = args.plot
    if getattr(args, "plot_vars", None) is not None:
        updates["plot_vars"] = tuple(
            part.strip() for part in args.plot_vars.split(",") if part.strip()
        )
    if getattr(args, "fit_dephasing", False):
        updates["fit_dephasing"] = True
    try:
        return dataclasses.replace(cfg, **updates)
    except DotPhononError as exc:
        raise ConfigError(str(exc)) from exc


def _resolve_threads(args) -> int:
    value = getattr(args, "threads", None)
    if value is None:
        raw = os.environ.get("DOTPHONON_THREADS", "").strip()
        if not raw:
            return 1
        try:
            value = int(raw)
        except ValueError as exc:
            raise ConfigError(f"DOTPHONON_THREADS must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ConfigError(f"thread count must be >= 1, got {value}")
    return value


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    parent = os.path.dirname(path)
    if parent:
        os.makedirs(parent, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _maybe_dump(args, cfg: RunConfig) -> bool:
    if getattr(args, "dump_config", None):
        _write_text(args.dump_config, dump_config(cfg))
        return True
    return False


# -- subcommands -----------------------------------------------------------------


def _cmd_times(args) -> int:
    cfg = _build_config(args)
    if _maybe_dump(args, cfg):
        return 0
    if cfg.axes:
        raise ConfigError("'times' evaluates a single point; remove the sweep axes")
    if cfg.variants:
        raise ConfigError("'times' does not take variants")
    if len(cfg.temps) != 1:
        raise ConfigError("'times' needs exactly one temperature")
    # degeneracy is a compute error (exit 3), so detect it before bath
    # resolution can reject a zero delta1 as a config problem (exit 2)
    qubit = cfg.effective_qubit()
    if qubit_energy(diagonalize(qubit)) <= constants.DEGENERACY_TOL_UEV:
        raise DegenerateLevels(
            "the two lowest levels are degenerate at this parameter point"
        )
    qubit, bath = cfg.effective_point()
    result = compute_times(
        qubit, bath, Temperature(cfg.temps[0]),
        omega_eval=cfg.omega_eval, regime_factor=cfg.regime_factor,
    )
    for warning in result.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    fields = [(name, getter(result)) for name, getter in _COLUMN_GETTERS.items()]
    if cfg.fmt == "json":
        import json

        doc = {name: (format_float(v) if math.isinf(v) else v) for name, v in fields}
        doc["warnings"] = list(result.warnings)
        text = json.dumps(doc, indent=2) + "\n"
    else:
        width = max(len(name) for name, _ in fields) + 2
        text = "".join(f"{name:<{width}}{format_float(v)}\n" for name, v in fields)
    _write_text(cfg.output, text)
    return 0


def _tagged_runs(cfg: RunConfig) -> list[tuple[Variant | None, float, str]]:
    runs = []
    variants: tuple = cfg.variants if cfg.variants else (None,)
    for variant in variants:
        for temp in cfg.temps:
            tags = []
            if variant is not None:
                tags.append(variant.label)
            if len(cfg.temps) > 1:
                tags.append(f"T{temp:g}K")
            runs.append((variant, temp, "_".join(tags)))
    return runs


def _tagged_path(base: str, tag: str, ext: str | None = None) -> str:
    root, old_ext = os.path.splitext(base)
    if ext is None:
        ext = old_ext
    return f"{root}_{tag}{ext}" if tag else f"{root}{ext}"


def _render_plot(cfg: RunConfig, result) -> str:
    if cfg.plot == "heatmap":
        ax1, ax2 = result.axes
        xs = ax1.values()
        ys = ax2.values()
        panels = []
        for var in cfg.plot_vars:
            getter = _COLUMN_GETTERS[var]
            z = np.full((ax1.count, ax2.count), np.nan)
            for i1 in range(ax1.count):
                for i2 in range(ax2.count):
                    row = result.rows[i1 * ax2.count + i2]
                    if row.result is not None:
                        z[i1, i2] = getter(row.result)
            panels.append((var, xs, ys, z))
        return heatmap_panels(panels, xlabel=ax1.name, ylabel=ax2.name)

    # line plot: last axis is the abscissa, an optional first axis fans out curves
    axes = result.axes
    x_axis = axes[-1]
    xs = x_axis.values()
    panels = []
    for var in cfg.plot_vars:
        getter = _COLUMN_GETTERS[var]
        series = []
        if len(axes) == 1:
            ys = [
                getter(row.result) if row.result is not None else math.nan
                for row in result.rows
            ]
            series.append((var, xs, ys))
        else:
            for i1, v1 in enumerate(axes[0].values()):
                ys = []
                for i2 in range(x_axis.count):
                    row = result.rows[i1 * x_axis.count + i2]
                    ys.append(getter(row.result) if row.result is not None else math.nan)
                series.append((f"{axes[0].name}={v1:g}", xs, ys))
        panels.append((var, series))
    return line_panels(panels, xlabel=x_axis.name, logx=x_axis.scale == "log")


def _cmd_sweep(args) -> int:
    cfg = _build_config(args)
    if _maybe_dump(args, cfg):
        return 0
    if not cfg.axes:
        raise ConfigError("'sweep' needs one or two --axis specs (or [axis1] in the config)")
    threads = _resolve_threads(args)
    runs = _tagged_runs(cfg)
    if len(runs) > 1 and cfg.output is None:
        raise ConfigError("several runs (variants/temperatures) need --output")
    if cfg.plot and cfg.output is None:
        raise ConfigError("an SVG plot needs --output to name the file")

    for variant, temp, tag in runs:
        qubit, bath = cfg.effective_point(variant)
        result = sweep(
            qubit, bath, Temperature(temp), cfg.axes,
            omega_eval=cfg.omega_eval, regime_factor=cfg.regime_factor,
            threads=threads,
        )
        fit = fit_dephasing_line(result) if cfg.fit_dephasing else None
        text = sweep_json(result, fit) if cfg.fmt == "json" else sweep_csv(result, fit)
        path = _tagged_path(cfg.output, tag) if cfg.output else None
        _write_text(path, text)
        if cfg.plot and path:
            _write_text(_tagged_path(path, "", ".svg"), _render_plot(cfg, result))
        errors = result.error_count()
        where = path if path else "stdout"
        print(
            f"wrote {where}: {len(result.rows)} rows, {errors} error rows",
            file=sys.stderr,
        )
    return 0


def _cmd_spectrum(args) -> int:
    cfg = _build_config(args)
    if _maybe_dump(args, cfg):
        return 0
    if len(cfg.temps) != 1:
        raise ConfigError("'spectrum' needs exactly one temperature")
    qubit, bath = cfg.effective_point()
    temperature = Temperature(cfg.temps[0])

    if args.wmin is None or args.wmax is None:
        eq = qubit_energy(diagonalize(qubit))
        if eq <= constants.DEGENERACY_TOL_UEV:
            raise ConfigError(
                "the default grid spans the qubit frequency but the levels are "
                "degenerate; give --wmin/--wmax explicitly"
            )
        omega_q = eq / constants.HBAR_UEV_NS
    wmin = args.wmin if args.wmin is not None else -5.0 * omega_q
    wmax = args.wmax if args.wmax is not None else 5.0 * omega_q
    if not wmin < wmax:
        raise ConfigError("--wmin must be below --wmax")
    grid = np.linspace(wmin, wmax, args.wcount)
    grid = grid[np.abs(grid) >= 1e-15]

    j_col = [spectral_density(bath, abs(w)) for w in grid]
    s_col = [power_spectrum(bath, temperature, w) for w in grid]
    oracle_col = None
    if args.oracle:
        db = sample_discrete_bath(bath, args.oracle, 20.0 * bath.omega_c)
        oracle_col = spectrum_from_correlator(
            db, temperature, grid, window_time=args.window_time
        )
    _write_text(cfg.output, spectrum_csv(grid, j_col, s_col, oracle_col))
    return 0


def _cmd_validate(args) -> int:
    cfg = _build_config(args)
    if _maybe_dump(args, cfg):
        return 0
    lines = []
    for variant, temp, tag in _tagged_runs(cfg):
        qubit, bath = cfg.effective_point(variant)
        es = diagonalize(qubit)
        warnings = validate_regime(es, bath, Temperature(temp), cfg.regime_factor)
        label = tag if tag else "base"
        eq = qubit_energy(es)
        thermal = bath.eta * constants.KB_UEV_PER_K * temp
        lines.append(
            f"{label}: E_Q = {eq:.6g} ueV, eta*kB*T = {thermal:.6g} ueV"
            + (f", warnings: {', '.join(warnings)}" if warnings else "")
        )
    lines.append("config OK")
    _write_text(cfg.output, "\n".join(lines) + "\n")
    return 0


# -- entry point -------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dotphonon",
        description=(
            "Phonon-induced relaxation (T1), pure dephasing (Tphi) and "
            "decoherence (T2) times of a three-level double-dot qubit in a "
            "bosonic thermal bath."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_times = sub.add_parser("times", help="evaluate T1/Tphi/T2 at one parameter point")
    _add_common_flags(p_times)
    p_times.set_defaults(func=_cmd_times)

    p_sweep = sub.add_parser("sweep", help="evaluate a 1D/2D parameter grid")
    _add_common_flags(p_sweep)
    p_sweep.add_argument(
        "--axis", action="append", metavar="NAME:START:STOP:COUNT[:SCALE]",
        help="sweep axis (repeat for a second axis)",
    )
    p_sweep.add_argument("--plot", choices=("line", "heatmap"), help="write an SVG next to the output")
    p_sweep.add_argument("--plot-vars", metavar="COLS", help=f"columns to plot, from {', '.join(RESULT_COLUMNS)}")
    p_sweep.add_argument("--threads", type=int, help="grid evaluation threads (or DOTPHONON_THREADS)")
    p_sweep.add_argument("--fit-dephasing", action="store_true", help="append the dephasing-line fit")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_spec = sub.add_parser("spectrum", help="tabulate J(w) and S(w), optionally with the oracle")
    _add_common_flags(p_spec)
    p_spec.add_argument("--wmin", type=float, help="grid start, rad/ns (default -5 E_Q/hbar)")
    p_spec.add_argument("--wmax", type=float, help="grid stop, rad/ns (default +5 E_Q/hbar)")
    p_spec.add_argument("--wcount", type=int, default=200, help="grid points (default 200)")
    p_spec.add_argument("--oracle", type=int, metavar="N", help="add a discrete-bath column with N modes")
    p_spec.add_argument("--window-time", type=float, help="oracle Fourier window half-width, ns")
    p_spec.set_defaults(func=_cmd_spectrum)

    p_val = sub.add_parser("validate", help="check a configuration and report regime warnings")
    _add_common_flags(p_val)
    p_val.set_defaults(func=_cmd_validate)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return 4
    except DotPhononError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

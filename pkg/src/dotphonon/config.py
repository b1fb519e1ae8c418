"""Run configuration: defaults, .cfg (INI) parsing, validation and dumping.

A configuration fully describes one CLI invocation: the base qubit and bath,
one or more temperatures, optional sweep axes, optional parameter-override
variants (named corner sets swept one after another), and the output/plot
options. Files written by ``dump_config`` re-parse to an equal RunConfig.
Unknown sections or keys are rejected.
"""

from __future__ import annotations

import configparser
import io
import math
from dataclasses import dataclass

from .bath import BathParams
from .constants import HBAR_UEV_NS, hz_to_rad_per_ns
from .errors import ConfigError, DotPhononError
from .qubit import QubitParams
from .sweep import SweepAxis

__all__ = [
    "Variant",
    "RunConfig",
    "parse_config",
    "load_config",
    "dump_config",
    "RESULT_COLUMNS",
]

# result columns a plot may select
RESULT_COLUMNS = (
    "T1_ns",
    "Tphi_ns",
    "T2_ns",
    "EQ_ueV",
    "dEQ_deps",
    "chi10_sq",
    "chi11_minus_chi00",
)

_VARIANT_KEYS = ("eps", "delta1", "delta2", "deltaR", "s", "eta")


@dataclass(frozen=True)
class Variant:
    """A named override of base qubit/bath scalars, e.g. one corner set."""

    label: str
    overrides: tuple[tuple[str, float], ...]

    def as_dict(self) -> dict[str, float]:
        return dict(self.overrides)


@dataclass(frozen=True)
class RunConfig:
    qubit: QubitParams = QubitParams(eps=225.0, delta1=19.27, delta2=12.20, deltaR=54.18)
    s: float = 1.0
    eta: float = 0.5
    omega_c: float | None = None  # explicit value in rad/ns wins over the factor
    omega_c_factor: float = 10.0  # omega_c = factor * delta1 / hbar
    f_cutoff_hz: float = 1.0
    temps: tuple[float, ...] = (0.1,)
    axes: tuple[SweepAxis, ...] = ()
    variants: tuple[Variant, ...] = ()
    output: str | None = None
    fmt: str = "csv"
    plot: str | None = None
    plot_vars: tuple[str, ...] = ("T1_ns", "Tphi_ns", "T2_ns")
    omega_eval: float | None = None
    regime_factor: float = 10.0
    fit_dephasing: bool = False

    def __post_init__(self) -> None:
        if self.fmt not in ("csv", "json"):
            raise ConfigError(f"format must be csv or json, got {self.fmt!r}")
        if self.plot not in (None, "line", "heatmap"):
            raise ConfigError(f"plot must be line or heatmap, got {self.plot!r}")
        if len(self.axes) > 2:
            raise ConfigError("at most two sweep axes are supported")
        names = [ax.name for ax in self.axes]
        if len(set(names)) != len(names):
            raise ConfigError(f"sweep axes must be distinct, got {names}")
        if not self.temps:
            raise ConfigError("at least one temperature is required")
        for t in self.temps:
            if not (math.isfinite(t) and t > 0.0):
                raise ConfigError(f"temperatures must be finite and > 0 K, got {t!r}")
        if "temp" in names and len(self.temps) > 1:
            raise ConfigError("a temp axis and a temperature list cannot be combined")
        if self.plot == "heatmap" and len(self.axes) != 2:
            raise ConfigError("a heatmap needs exactly two sweep axes")
        if self.plot == "line" and len(self.axes) == 0:
            raise ConfigError("a line plot needs at least one sweep axis")
        for var in self.plot_vars:
            if var not in RESULT_COLUMNS:
                raise ConfigError(
                    f"unknown plot variable {var!r}; choose from {RESULT_COLUMNS}"
                )
        seen: set[str] = set()
        for v in self.variants:
            if not v.label or v.label in seen:
                raise ConfigError(
                    f"variant labels must be unique and non-empty: {v.label!r}"
                )
            seen.add(v.label)
            for key, _ in v.overrides:
                if key not in _VARIANT_KEYS:
                    raise ConfigError(
                        f"variant {v.label!r}: unknown override {key!r}; "
                        f"allowed: {_VARIANT_KEYS}"
                    )
        if self.omega_c is not None and self.omega_c <= 0.0:
            raise ConfigError("omega_c must be positive")
        if self.omega_c_factor <= 0.0:
            raise ConfigError("omega_c_factor must be positive")
        if self.f_cutoff_hz <= 0.0:
            raise ConfigError("f_cutoff_hz must be positive")
        if self.omega_eval is not None and self.omega_eval <= 0.0:
            raise ConfigError("omega_eval must be positive")
        if self.regime_factor <= 0.0:
            raise ConfigError("regime_factor must be positive")

    # -- effective parameters -------------------------------------------------

    def effective_qubit(self, variant: Variant | None = None) -> QubitParams:
        """Qubit parameters after applying a variant's overrides."""
        over = variant.as_dict() if variant is not None else {}
        try:
            return QubitParams(
                eps=over.get("eps", self.qubit.eps),
                delta1=over.get("delta1", self.qubit.delta1),
                delta2=over.get("delta2", self.qubit.delta2),
                deltaR=over.get("deltaR", self.qubit.deltaR),
            )
        except DotPhononError as exc:
            raise ConfigError(str(exc)) from exc

    def effective_point(self, variant: Variant | None = None) -> tuple[QubitParams, BathParams]:
        """Qubit and bath after applying a variant's overrides."""
        over = variant.as_dict() if variant is not None else {}
        qubit = self.effective_qubit(variant)
        return qubit, self._bath(qubit, over.get("s", self.s), over.get("eta", self.eta))

    def _bath(self, qubit: QubitParams, s: float, eta: float) -> BathParams:
        if self.omega_c is not None:
            omega_c = self.omega_c
        else:
            if qubit.delta1 <= 0.0:
                raise ConfigError(
                    "omega_c is derived from delta1 (factor rule) but delta1 is 0; "
                    "set omega_c explicitly"
                )
            omega_c = self.omega_c_factor * qubit.delta1 / HBAR_UEV_NS
        try:
            return BathParams(
                s=s,
                eta=eta,
                omega_c=omega_c,
                omega_cutoff=hz_to_rad_per_ns(self.f_cutoff_hz),
            )
        except DotPhononError as exc:
            raise ConfigError(str(exc)) from exc


# -- parsing -------------------------------------------------------------------

_SCHEMA = {
    "qubit": {"eps": float, "delta1": float, "delta2": float, "deltaR": float},
    "bath": {
        "s": float,
        "eta": float,
        "omega_c": float,
        "omega_c_factor": float,
        "f_cutoff_hz": float,
    },
    "run": {
        "temps": "float_list",
        "output": str,
        "format": str,
        "plot": str,
        "plot_vars": "str_list",
        "omega_eval": float,
        "regime_factor": float,
        "fit_dephasing": bool,
    },
    "axis1": {"name": str, "start": float, "stop": float, "count": int, "scale": str},
    "axis2": {"name": str, "start": float, "stop": float, "count": int, "scale": str},
}


def _convert(section: str, key: str, raw: str, kind):
    try:
        if kind is float:
            return float(raw)
        if kind is int:
            return int(raw)
        if kind is bool:
            lowered = raw.strip().lower()
            if lowered in ("true", "yes", "on", "1"):
                return True
            if lowered in ("false", "no", "off", "0"):
                return False
            raise ValueError(raw)
        if kind == "float_list":
            return tuple(float(part) for part in raw.split(",") if part.strip())
        if kind == "str_list":
            return tuple(part.strip() for part in raw.split(",") if part.strip())
        return raw.strip()
    except ValueError as exc:
        raise ConfigError(f"[{section}] {key}: cannot parse {raw!r}") from exc


def parse_config(text: str) -> RunConfig:
    """Parse .cfg content into a validated RunConfig."""
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str  # keep key case (deltaR)
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(f"malformed config: {exc}") from exc

    values: dict[str, dict] = {}
    variants: list[Variant] = []
    for section in parser.sections():
        if section.startswith("variant."):
            label = section[len("variant."):]
            overrides = []
            for key, raw in parser.items(section):
                if key not in _VARIANT_KEYS:
                    raise ConfigError(f"[{section}] unknown key {key!r}")
                overrides.append((key, _convert(section, key, raw, float)))
            variants.append(Variant(label=label, overrides=tuple(overrides)))
            continue
        schema = _SCHEMA.get(section)
        if schema is None:
            raise ConfigError(f"unknown config section [{section}]")
        parsed = {}
        for key, raw in parser.items(section):
            if key not in schema:
                raise ConfigError(f"[{section}] unknown key {key!r}")
            parsed[key] = _convert(section, key, raw, schema[key])
        values[section] = parsed

    kwargs: dict = {}
    if "qubit" in values:
        base = RunConfig.__dataclass_fields__["qubit"].default
        q = values["qubit"]
        try:
            kwargs["qubit"] = QubitParams(
                eps=q.get("eps", base.eps),
                delta1=q.get("delta1", base.delta1),
                delta2=q.get("delta2", base.delta2),
                deltaR=q.get("deltaR", base.deltaR),
            )
        except DotPhononError as exc:
            raise ConfigError(str(exc)) from exc
    if "bath" in values:
        b = values["bath"]
        for src, dst in (
            ("s", "s"), ("eta", "eta"), ("omega_c", "omega_c"),
            ("omega_c_factor", "omega_c_factor"), ("f_cutoff_hz", "f_cutoff_hz"),
        ):
            if src in b:
                kwargs[dst] = b[src]
    if "run" in values:
        r = values["run"]
        if "temps" in r:
            kwargs["temps"] = r["temps"]
        if "output" in r:
            kwargs["output"] = r["output"]
        if "format" in r:
            kwargs["fmt"] = r["format"]
        if "plot" in r:
            kwargs["plot"] = r["plot"]
        if "plot_vars" in r:
            kwargs["plot_vars"] = r["plot_vars"]
        if "omega_eval" in r:
            kwargs["omega_eval"] = r["omega_eval"]
        if "regime_factor" in r:
            kwargs["regime_factor"] = r["regime_factor"]
        if "fit_dephasing" in r:
            kwargs["fit_dephasing"] = r["fit_dephasing"]

    axes = []
    for section in ("axis1", "axis2"):
        if section in values:
            spec = values[section]
            for needed in ("name", "start", "stop", "count"):
                if needed not in spec:
                    raise ConfigError(f"[{section}] is missing {needed!r}")
            try:
                axes.append(
                    SweepAxis(
                        name=spec["name"],
                        start=spec["start"],
                        stop=spec["stop"],
                        count=spec["count"],
                        scale=spec.get("scale", "linear"),
                    )
                )
            except DotPhononError as exc:
                raise ConfigError(str(exc)) from exc
    if "axis2" in values and "axis1" not in values:
        raise ConfigError("[axis2] given without [axis1]")
    if axes:
        kwargs["axes"] = tuple(axes)
    if variants:
        kwargs["variants"] = tuple(variants)

    return RunConfig(**kwargs)


def load_config(path: str) -> RunConfig:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path!r}: {exc}") from exc
    return parse_config(text)


# -- dumping -------------------------------------------------------------------

def dump_config(cfg: RunConfig) -> str:
    """Render a RunConfig as .cfg text that parses back to an equal value."""
    out = configparser.ConfigParser(interpolation=None)
    out.optionxform = str  # keep key case (deltaR)
    out["qubit"] = {
        "eps": repr(cfg.qubit.eps),
        "delta1": repr(cfg.qubit.delta1),
        "delta2": repr(cfg.qubit.delta2),
        "deltaR": repr(cfg.qubit.deltaR),
    }
    bath: dict[str, str] = {"s": repr(cfg.s), "eta": repr(cfg.eta)}
    if cfg.omega_c is not None:
        bath["omega_c"] = repr(cfg.omega_c)
    bath["omega_c_factor"] = repr(cfg.omega_c_factor)
    bath["f_cutoff_hz"] = repr(cfg.f_cutoff_hz)
    out["bath"] = bath

    run: dict[str, str] = {"temps": ", ".join(repr(t) for t in cfg.temps)}
    if cfg.output is not None:
        run["output"] = cfg.output
    run["format"] = cfg.fmt
    if cfg.plot is not None:
        run["plot"] = cfg.plot
    run["plot_vars"] = ", ".join(cfg.plot_vars)
    if cfg.omega_eval is not None:
        run["omega_eval"] = repr(cfg.omega_eval)
    run["regime_factor"] = repr(cfg.regime_factor)
    run["fit_dephasing"] = "true" if cfg.fit_dephasing else "false"
    out["run"] = run

    for i, ax in enumerate(cfg.axes, start=1):
        out[f"axis{i}"] = {
            "name": ax.name,
            "start": repr(ax.start),
            "stop": repr(ax.stop),
            "count": str(ax.count),
            "scale": ax.scale,
        }
    for variant in cfg.variants:
        out[f"variant.{variant.label}"] = {
            key: repr(value) for key, value in variant.overrides
        }

    buffer = io.StringIO()
    out.write(buffer)
    return buffer.getvalue()

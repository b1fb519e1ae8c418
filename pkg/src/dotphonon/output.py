"""CSV and JSON emission for sweep and spectrum results.

The sweep CSV schema is fixed: ``axis1_name, axis1_value, axis2_name,
axis2_value, T1_ns, Tphi_ns, T2_ns, EQ_ueV, dEQ_deps, chi10_sq,
chi11_minus_chi00, status``. A missing second axis leaves its two fields
empty, infinite times are written as ``inf``, floats use the shortest
round-trip decimal, and error rows leave the value fields empty with the
error name in ``status``. Optional regression summaries are appended as
``#``-prefixed comment lines.
"""

from __future__ import annotations

import json
import math
from typing import Iterable

from .sweep import FitResult, SweepResult

__all__ = [
    "SWEEP_COLUMNS",
    "SPECTRUM_COLUMNS",
    "format_float",
    "sweep_csv",
    "sweep_json",
    "spectrum_csv",
]

SWEEP_COLUMNS = (
    "axis1_name",
    "axis1_value",
    "axis2_name",
    "axis2_value",
    "T1_ns",
    "Tphi_ns",
    "T2_ns",
    "EQ_ueV",
    "dEQ_deps",
    "chi10_sq",
    "chi11_minus_chi00",
    "status",
)

SPECTRUM_COLUMNS = ("omega_rad_ns", "J_rad_ns", "S_rad_ns", "S_oracle_rad_ns")


def format_float(value: float) -> str:
    """Shortest decimal that round-trips; infinities as bare words."""
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return repr(float(value))


def _row_fields(result: SweepResult, index: int) -> list[str]:
    point = result.rows[index]
    fields = [result.axes[0].name, format_float(point.values[0])]
    if len(result.axes) == 2:
        fields += [result.axes[1].name, format_float(point.values[1])]
    else:
        fields += ["", ""]
    r = point.result
    if r is None:
        fields += [""] * 7 + [point.error or "error"]
    else:
        fields += [
            format_float(r.t1_ns),
            format_float(r.tphi_ns),
            format_float(r.t2_ns),
            format_float(r.eq_ueV),
            format_float(r.deq_deps),
            format_float(r.chi10_sq),
            format_float(r.chi_diag_diff),
            "ok",
        ]
    return fields


def sweep_csv(result: SweepResult, fit: FitResult | None = None) -> str:
    """Render a SweepResult as CSV text (with trailing newline)."""
    lines = [",".join(SWEEP_COLUMNS)]
    for i in range(len(result.rows)):
        lines.append(",".join(_row_fields(result, i)))
    if fit is not None:
        lines.append(
            "# fit_dephasing slope={} intercept={} r_squared={} n_points={}".format(
                format_float(fit.slope),
                format_float(fit.intercept),
                format_float(fit.r_squared),
                fit.n_points,
            )
        )
    return "\n".join(lines) + "\n"


def _json_value(value: float):
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return value


def sweep_json(result: SweepResult, fit: FitResult | None = None) -> str:
    """Render a SweepResult as JSON with the same fields as the CSV."""
    rows = []
    for point in result.rows:
        entry: dict = {
            "axis1_name": result.axes[0].name,
            "axis1_value": point.values[0],
        }
        if len(result.axes) == 2:
            entry["axis2_name"] = result.axes[1].name
            entry["axis2_value"] = point.values[1]
        if point.result is None:
            entry["status"] = point.error
        else:
            r = point.result
            entry.update(
                T1_ns=_json_value(r.t1_ns),
                Tphi_ns=_json_value(r.tphi_ns),
                T2_ns=_json_value(r.t2_ns),
                EQ_ueV=r.eq_ueV,
                dEQ_deps=r.deq_deps,
                chi10_sq=r.chi10_sq,
                chi11_minus_chi00=r.chi_diag_diff,
                status="ok",
                warnings=list(r.warnings),
            )
        rows.append(entry)
    doc: dict = {
        "axes": [
            {
                "name": ax.name, "start": ax.start, "stop": ax.stop,
                "count": ax.count, "scale": ax.scale,
            }
            for ax in result.axes
        ],
        "base": {
            "eps": result.qubit.eps,
            "delta1": result.qubit.delta1,
            "delta2": result.qubit.delta2,
            "deltaR": result.qubit.deltaR,
            "s": result.bath.s,
            "eta": result.bath.eta,
            "omega_c": result.bath.omega_c,
            "omega_cutoff": result.bath.omega_cutoff,
            "temp_K": result.temp.kelvin,
        },
        "rows": rows,
    }
    if fit is not None:
        doc["fit_dephasing"] = {
            "slope": _json_value(fit.slope),
            "intercept": _json_value(fit.intercept),
            "r_squared": fit.r_squared,
            "n_points": fit.n_points,
        }
    return json.dumps(doc, indent=2) + "\n"


def spectrum_csv(
    omegas: Iterable[float],
    j_values: Iterable[float],
    s_values: Iterable[float],
    oracle_values: Iterable[float] | None = None,
) -> str:
    """Render spectrum samples as CSV; oracle column empty when not computed."""
    lines = [",".join(SPECTRUM_COLUMNS)]
    oracle_list = list(oracle_values) if oracle_values is not None else None
    for i, (w, j, s) in enumerate(zip(omegas, j_values, s_values)):
        oracle_field = format_float(oracle_list[i]) if oracle_list is not None else ""
        lines.append(
            ",".join([format_float(w), format_float(j), format_float(s), oracle_field])
        )
    return "\n".join(lines) + "\n"

"""Grid sweeps of the characteristic times over qubit and bath parameters.

A sweep takes one or two axes over any of the seven sweepable parameters,
evaluates the full rate pipeline at every grid point through the active
kernel backend, and collects rows in row-major order (first axis outer).
Failures at individual points (level crossings) become error-tagged rows
instead of aborting the grid. Results are bit-identical regardless of how
many threads evaluate the grid, because every point is independent and rows
are assembled by grid index.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import constants, kernels
from .bath import BathParams, Temperature
from .errors import EmptyGrid, InsufficientData, InvalidAxis, NotA2DSweep
from .qubit import (
    HAMILTONIAN_DOMINATED_VIOLATED,
    LEVELS_NEAR_DEGENERATE,
    QubitParams,
)
from .redfield import RatesResult

__all__ = [
    "AXIS_NAMES",
    "SweepAxis",
    "SweepPoint",
    "SweepResult",
    "FitResult",
    "RidgePoint",
    "sweep",
    "fit_dephasing_line",
    "find_dephasing_ridge",
]

AXIS_NAMES = ("eps", "delta1", "delta2", "deltaR", "temp", "s", "eta")

# lower/upper domain bounds per axis (inclusive start bound where closed)
_AXIS_DOMAIN = {
    "eps": (-math.inf, math.inf),
    "delta1": (0.0, math.inf),
    "delta2": (0.0, math.inf),
    "deltaR": (0.0, math.inf),
    "temp": (0.0, math.inf),  # start must be > 0, checked separately
    "s": (0.0, 4.0),
    "eta": (0.0, math.inf),
}


@dataclass(frozen=True)
class SweepAxis:
    """One sweep dimension: a named parameter on a linear or log grid."""

    name: str
    start: float
    stop: float
    count: int
    scale: str = "linear"

    def __post_init__(self) -> None:
        if self.name not in AXIS_NAMES:
            raise InvalidAxis(
                f"unknown axis {self.name!r}; valid names: {', '.join(AXIS_NAMES)}"
            )
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise InvalidAxis(f"axis {self.name}: bounds must be finite")
        if not self.start < self.stop:
            raise InvalidAxis(f"axis {self.name}: start must be < stop")
        if self.count < 2:
            raise InvalidAxis(f"axis {self.name}: count must be >= 2")
        if self.scale not in ("linear", "log"):
            raise InvalidAxis(f"axis {self.name}: scale must be linear or log")
        if self.scale == "log" and self.start <= 0.0:
            raise InvalidAxis(f"axis {self.name}: log scale needs start > 0")
        lo, hi = _AXIS_DOMAIN[self.name]
        if self.start < lo or self.stop > hi:
            raise InvalidAxis(
                f"axis {self.name}: range [{self.start}, {self.stop}] leaves "
                f"the parameter domain [{lo}, {hi}]"
            )
        if self.name in ("temp", "s") and self.start <= 0.0:
            raise InvalidAxis(f"axis {self.name}: start must be > 0")

    def values(self) -> np.ndarray:
        if self.scale == "log":
            return np.geomspace(self.start, self.stop, self.count)
        return np.linspace(self.start, self.stop, self.count)


@dataclass(frozen=True, eq=False)
class SweepPoint:
    """One grid point: axis values plus either a result or an error tag."""

    values: tuple[float, ...]
    result: RatesResult | None
    error: str | None

    @property
    def ok(self) -> bool:
        return self.result is not None


@dataclass(frozen=True, eq=False)
class SweepResult:
    """All grid rows in row-major order plus the held-fixed base point."""

    axes: tuple[SweepAxis, ...]
    rows: tuple[SweepPoint, ...]
    qubit: QubitParams
    bath: BathParams
    temp: Temperature

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(ax.count for ax in self.axes)

    def error_count(self) -> int:
        return sum(1 for r in self.rows if not r.ok)


def sweep(
    qubit: QubitParams,
    bath: BathParams,
    temp: Temperature,
    axes,
    omega_eval: float | None = None,
    regime_factor: float = constants.DEFAULT_REGIME_FACTOR,
    threads: int = 1,
) -> SweepResult:
    """Evaluate the rate pipeline over a 1D or 2D parameter grid."""
    axes = tuple(axes)
    if len(axes) == 0:
        raise EmptyGrid("a sweep needs at least one axis")
    if len(axes) > 2:
        raise InvalidAxis("at most two sweep axes are supported")
    if len(axes) == 2 and axes[0].name == axes[1].name:
        raise InvalidAxis(f"sweep axes must be distinct, got {axes[0].name} twice")

    grids = [ax.values() for ax in axes]
    if len(axes) == 1:
        columns = {axes[0].name: grids[0]}
        n = grids[0].size
        value_tuples = [(float(v),) for v in grids[0]]
    else:
        g1, g2 = np.meshgrid(grids[0], grids[1], indexing="ij")
        columns = {axes[0].name: g1.ravel(), axes[1].name: g2.ravel()}
        n = g1.size
        value_tuples = [
            (float(a), float(b)) for a, b in zip(g1.ravel(), g2.ravel())
        ]

    base = {
        "eps": qubit.eps,
        "delta1": qubit.delta1,
        "delta2": qubit.delta2,
        "deltaR": qubit.deltaR,
        "temp": temp.kelvin,
        "s": bath.s,
        "eta": bath.eta,
    }
    arrays = {
        name: columns.get(name, np.full(n, value)) for name, value in base.items()
    }
    for name in columns:
        arrays[name] = np.ascontiguousarray(arrays[name], dtype=float)

    resolved_eval = bath.omega_cutoff if omega_eval is None else omega_eval
    out = _run_grid(arrays, bath, resolved_eval, regime_factor, n, max(1, threads))
    t1, tphi, t2, eq, deq, chi10_sq, chi_diag_diff, status, warn = out

    rows = []
    for i in range(n):
        if status[i] != kernels.STATUS_OK:
            rows.append(
                SweepPoint(
                    values=value_tuples[i],
                    result=None,
                    error=kernels.STATUS_NAMES[int(status[i])],
                )
            )
            continue
        warnings = []
        if warn[i] & kernels.WARN_REGIME:
            warnings.append(HAMILTONIAN_DOMINATED_VIOLATED)
        if warn[i] & kernels.WARN_NEAR_DEGENERATE:
            warnings.append(LEVELS_NEAR_DEGENERATE)
        rows.append(
            SweepPoint(
                values=value_tuples[i],
                result=RatesResult(
                    t1_ns=float(t1[i]),
                    tphi_ns=float(tphi[i]),
                    t2_ns=float(t2[i]),
                    eq_ueV=float(eq[i]),
                    deq_deps=float(deq[i]),
                    chi10_sq=float(chi10_sq[i]),
                    chi_diag_diff=float(chi_diag_diff[i]),
                    warnings=tuple(warnings),
                ),
                error=None,
            )
        )
    return SweepResult(axes=axes, rows=tuple(rows), qubit=qubit, bath=bath, temp=temp)


def _run_grid(arrays, bath, omega_eval, regime_factor, n, threads):
    """Dispatch the grid to the kernel backend, chunked across threads."""
    ordered = [
        arrays["eps"], arrays["delta1"], arrays["delta2"], arrays["deltaR"],
        arrays["temp"], arrays["s"], arrays["eta"],
    ]

    def run(lo: int, hi: int):
        return kernels.rates_grid(
            *(np.ascontiguousarray(col[lo:hi]) for col in ordered),
            bath.omega_c,
            bath.omega_cutoff,
            omega_eval,
            regime_factor,
        )

    if threads == 1 or n < 2 * threads:
        return run(0, n)
    bounds = np.linspace(0, n, threads + 1).astype(int)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(
            pool.map(lambda be: run(be[0], be[1]), zip(bounds[:-1], bounds[1:]))
        )
    return tuple(np.concatenate(cols) for cols in zip(*parts))


@dataclass(frozen=True)
class FitResult:
    """Least-squares line through (dEq/deps)^2 versus the dephasing rate."""

    slope: float
    intercept: float
    r_squared: float
    n_points: int


def fit_dephasing_line(result: SweepResult) -> FitResult:
    """Regress the pure dephasing rate on the squared detuning derivative.

    Uses rows with finite Tphi. The model predicts an exact line through the
    origin with slope ``pi * S(0)``; the fit quantifies how exactly the swept
    data realizes it.
    """
    xs = []
    ys = []
    for row in result.rows:
        if row.result is None or not math.isfinite(row.result.tphi_ns):
            continue
        xs.append(row.result.deq_deps**2)
        ys.append(1.0 / row.result.tphi_ns)
    if len(xs) < 3:
        raise InsufficientData(
            f"need at least 3 rows with finite Tphi, got {len(xs)}"
        )
    x = np.array(xs)
    y = np.array(ys)
    if x.min() == x.max():
        raise InsufficientData("all points share one abscissa; regression degenerate")
    if y.min() == y.max():
        raise InsufficientData("all points share one ordinate; regression degenerate")
    xm = x.mean()
    ym = y.mean()
    sxx = float(((x - xm) ** 2).sum())
    sstot = float(((y - ym) ** 2).sum())
    slope = float(((x - xm) * (y - ym)).sum()) / sxx
    intercept = ym - slope * xm
    ssres = float(((y - (slope * x + intercept)) ** 2).sum())
    return FitResult(
        slope=slope,
        intercept=float(intercept),
        r_squared=1.0 - ssres / sstot,
        n_points=len(xs),
    )


@dataclass(frozen=True)
class RidgePoint:
    """Per-detuning-column maximum of Tphi over the splitting axis."""

    eps: float
    delta_r: float
    tphi_ns: float
    chi_diag_diff: float
    interior: bool

    @property
    def narrow_coupling(self) -> bool:
        """Whether the maximum sits where the diagonal coupling nearly cancels."""
        return abs(self.chi_diag_diff) < 0.05


def find_dephasing_ridge(result: SweepResult) -> list[RidgePoint]:
    """Locate, per detuning column, the splitting that maximizes Tphi.

    Requires a 2D sweep over (eps, deltaR) in either axis order. The maximum
    is the discrete argmax over valid rows (ties keep the lowest splitting);
    ``interior`` records whether it is detached from both grid ends.
    """
    names = tuple(ax.name for ax in result.axes)
    if len(result.axes) != 2 or set(names) != {"eps", "deltaR"}:
        raise NotA2DSweep(f"need a 2D (eps, deltaR) sweep, got axes {names}")
    eps_axis = names.index("eps")
    dr_axis = 1 - eps_axis
    inner = result.axes[1].count  # row-major: second axis is the fast index

    n_eps = result.axes[eps_axis].count
    n_dr = result.axes[dr_axis].count
    ridge = []
    for ie in range(n_eps):
        best = None  # (tphi, grid index, row)
        for idr in range(n_dr):
            flat = ie * inner + idr if eps_axis == 0 else idr * inner + ie
            row = result.rows[flat]
            if row.result is None:
                continue
            tphi = row.result.tphi_ns
            if best is None or tphi > best[0]:
                best = (tphi, idr, row)
        if best is None:
            continue
        tphi, idr, row = best
        ridge.append(
            RidgePoint(
                eps=row.values[eps_axis],
                delta_r=row.values[dr_axis],
                tphi_ns=tphi,
                chi_diag_diff=row.result.chi_diag_diff,
                interior=0 < idr < n_dr - 1,
            )
        )
    return ridge

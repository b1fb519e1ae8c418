"""Pure-Python/NumPy fallback for the hot kernels.

Same contracts as the compiled extension ``_fastkern``: a grid evaluator
that runs the scalar pipeline point by point, and the mode-sum accumulator
for the discrete-bath correlation function done as chunked outer products.
Used automatically when the extension is unavailable (or when
``DOTPHONON_BACKEND=pure``); the compiled backend is tested against this
one.
"""

from __future__ import annotations

import numpy as np

from .bath import BathParams, Temperature
from .errors import (
    DegenerateLevels,
    DotPhononError,
    NonPositiveQubitEnergy,
)
from .qubit import (
    HAMILTONIAN_DOMINATED_VIOLATED,
    LEVELS_NEAR_DEGENERATE,
    QubitParams,
)
from .redfield import compute_times

NAME = "pure"

STATUS_OK = 0
STATUS_DEGENERATE = 1
STATUS_NONPOSITIVE_EQ = 2
STATUS_INVALID = 3

WARN_REGIME = 1
WARN_NEAR_DEGENERATE = 2

_CORR_CHUNK = 256


def rates_grid(
    eps,
    delta1,
    delta2,
    delta_r,
    temp,
    s,
    eta,
    omega_c: float,
    omega_cutoff: float,
    omega_eval: float,
    regime_factor: float,
):
    """Evaluate the full rate pipeline at every grid point.

    All seven leading arguments are float64 arrays of one common length; the
    scalars hold for the whole grid. Returns (t1, tphi, t2, eq, deq,
    chi10_sq, chi_diag_diff, status, warn) with NaN in the value slots of
    failed points. Points are independent, so any chunked or threaded caller
    gets bit-identical results.
    """
    n = len(eps)
    t1 = np.full(n, np.nan)
    tphi = np.full(n, np.nan)
    t2 = np.full(n, np.nan)
    eq = np.full(n, np.nan)
    deq = np.full(n, np.nan)
    chi10_sq = np.full(n, np.nan)
    chi_diag_diff = np.full(n, np.nan)
    status = np.zeros(n, dtype=np.uint8)
    warn = np.zeros(n, dtype=np.uint8)

    for i in range(n):
        try:
            b = BathParams(
                s=float(s[i]), eta=float(eta[i]),
                omega_c=omega_c, omega_cutoff=omega_cutoff,
            )
            result = compute_times(
                QubitParams(
                    eps=float(eps[i]),
                    delta1=float(delta1[i]),
                    delta2=float(delta2[i]),
                    deltaR=float(delta_r[i]),
                ),
                b,
                Temperature(kelvin=float(temp[i])),
                omega_eval=omega_eval,
                regime_factor=regime_factor,
            )
        except DegenerateLevels:
            status[i] = STATUS_DEGENERATE
            continue
        except NonPositiveQubitEnergy:
            status[i] = STATUS_NONPOSITIVE_EQ
            continue
        except DotPhononError:
            status[i] = STATUS_INVALID
            continue
        t1[i] = result.t1_ns
        tphi[i] = result.tphi_ns
        t2[i] = result.t2_ns
        eq[i] = result.eq_ueV
        deq[i] = result.deq_deps
        chi10_sq[i] = result.chi10_sq
        chi_diag_diff[i] = result.chi_diag_diff
        bits = 0
        if HAMILTONIAN_DOMINATED_VIOLATED in result.warnings:
            bits |= WARN_REGIME
        if LEVELS_NEAR_DEGENERATE in result.warnings:
            bits |= WARN_NEAR_DEGENERATE
        warn[i] = bits

    return t1, tphi, t2, eq, deq, chi10_sq, chi_diag_diff, status, warn


def corr_sums(omegas, weight_cos, weight_sin, dt: float, n_t: int):
    """Cosine/sine mode sums of the correlation function on a uniform time grid.

    Returns arrays A and B of length ``n_t`` with
    ``A[k] = sum_j weight_cos[j] * cos(omega_j * k * dt)`` and
    ``B[k] = sum_j weight_sin[j] * sin(omega_j * k * dt)``.
    """
    omegas = np.asarray(omegas, dtype=float)
    weight_cos = np.asarray(weight_cos, dtype=float)
    weight_sin = np.asarray(weight_sin, dtype=float)
    tgrid = np.arange(n_t) * dt
    a = np.zeros(n_t)
    b = np.zeros(n_t)
    for lo in range(0, omegas.size, _CORR_CHUNK):
        hi = min(lo + _CORR_CHUNK, omegas.size)
        phases = np.outer(omegas[lo:hi], tgrid)
        a += weight_cos[lo:hi] @ np.cos(phases)
        b += weight_sin[lo:hi] @ np.sin(phases)
    return a, b

"""Weak-coupling (Bloch-Redfield) relaxation and dephasing rates.

The rates follow from the eigenbasis coupling matrix and the bath power
spectrum:

    1/T1   = pi/2 * chi10^2 * S(E_Q/hbar)
    1/Tphi = pi/4 * (chi11 - chi00)^2 * S(0)
    1/T2   = 1/(2 T1) + 1/Tphi

Times are ns; a vanishing rate yields an infinite time (``math.inf``), never
a sentinel. Relaxation uses the power spectrum at the positive qubit
frequency only (spontaneous-emission form).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import constants
from .bath import BathParams, Temperature, power_spectrum, power_spectrum_zero
from .errors import DegenerateLevels, NonPositiveQubitEnergy
from .qubit import ChiMatrix, QubitParams, chi_matrix, diagonalize, qubit_energy, validate_regime

__all__ = [
    "RatesResult",
    "relaxation_rate",
    "dephasing_rate",
    "decoherence_time",
    "compute_times",
]


@dataclass(frozen=True)
class RatesResult:
    """Characteristic times and diagnostics at one parameter point."""

    t1_ns: float
    tphi_ns: float
    t2_ns: float
    eq_ueV: float
    deq_deps: float
    chi10_sq: float
    chi_diag_diff: float
    warnings: tuple[str, ...] = ()


def relaxation_rate(
    chi: ChiMatrix, eq_ueV: float, b: BathParams, t: Temperature
) -> float:
    """Relaxation rate 1/T1 in 1/ns; zero iff the off-diagonal coupling is."""
    if eq_ueV <= 0.0:
        raise NonPositiveQubitEnergy(f"qubit energy must be > 0 ueV, got {eq_ueV!r}")
    omega_q = eq_ueV / constants.HBAR_UEV_NS
    return (math.pi / 2.0) * chi.chi10**2 * power_spectrum(b, t, omega_q)


def dephasing_rate(
    chi: ChiMatrix,
    b: BathParams,
    t: Temperature,
    omega_eval: float | None = None,
) -> float:
    """Pure dephasing rate 1/Tphi in 1/ns, from the dc power spectrum."""
    return (math.pi / 4.0) * chi.diag_diff**2 * power_spectrum_zero(b, t, omega_eval)


def decoherence_time(t1_ns: float, tphi_ns: float) -> float:
    """Combine T1 and Tphi into T2; either input may be infinite."""
    rate = 0.5 / t1_ns + 1.0 / tphi_ns
    if rate == 0.0:
        return math.inf
    # min() absorbs the one-ulp overshoot the two divisions can produce
    return min(1.0 / rate, 2.0 * t1_ns)


def compute_times(
    p: QubitParams,
    b: BathParams,
    t: Temperature,
    omega_eval: float | None = None,
    regime_factor: float = constants.DEFAULT_REGIME_FACTOR,
) -> RatesResult:
    """Full pipeline: diagonalize, transform the coupling, evaluate rates."""
    es = diagonalize(p)
    eq = qubit_energy(es)
    if eq <= constants.DEGENERACY_TOL_UEV:
        raise DegenerateLevels(
            f"E1 - E0 = {eq:.3e} ueV at {p}; characteristic times are undefined"
        )
    chi = chi_matrix(es)
    r1 = relaxation_rate(chi, eq, b, t)
    rphi = dephasing_rate(chi, b, t, omega_eval)
    t1 = math.inf if r1 == 0.0 else 1.0 / r1
    tphi = math.inf if rphi == 0.0 else 1.0 / rphi
    return RatesResult(
        t1_ns=t1,
        tphi_ns=tphi,
        t2_ns=decoherence_time(t1, tphi),
        eq_ueV=eq,
        deq_deps=0.5 * chi.diag_diff,
        chi10_sq=chi.chi10**2,
        chi_diag_diff=chi.diag_diff,
        warnings=tuple(validate_regime(es, b, t, regime_factor)),
    )

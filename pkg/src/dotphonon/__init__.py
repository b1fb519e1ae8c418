"""Phonon-limited coherence of the silicon double-quantum-dot hybrid qubit.

A three-level qubit model coupled to a bosonic thermal bath: eigensystem,
transformed coupling matrix, weak-coupling relaxation/dephasing rates, and
parameter-sweep tooling with a CLI. The hot loops run on a compiled
extension when available (see :mod:`dotphonon.kernels`).
"""

from .bath import (
    BathParams,
    Temperature,
    power_spectrum,
    power_spectrum_zero,
    spectral_density,
    thermal_occupation,
)
from .kernels import BACKEND
from .linalg3 import EigenSystem, Sym3Matrix, eig3_sym
from .qubit import (
    ChiMatrix,
    QubitEigenSystem,
    QubitParams,
    build_hamiltonian,
    chi_matrix,
    dEq_deps,
    diagonalize,
    qubit_energy,
    system_operator,
    validate_regime,
)
from .redfield import (
    RatesResult,
    compute_times,
    decoherence_time,
    dephasing_rate,
    relaxation_rate,
)
from .sweep import (
    FitResult,
    RidgePoint,
    SweepAxis,
    SweepResult,
    find_dephasing_ridge,
    fit_dephasing_line,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BathParams",
    "ChiMatrix",
    "EigenSystem",
    "FitResult",
    "QubitEigenSystem",
    "QubitParams",
    "RatesResult",
    "RidgePoint",
    "SweepAxis",
    "SweepResult",
    "Sym3Matrix",
    "Temperature",
    "build_hamiltonian",
    "chi_matrix",
    "compute_times",
    "dEq_deps",
    "decoherence_time",
    "dephasing_rate",
    "diagonalize",
    "eig3_sym",
    "find_dephasing_ridge",
    "fit_dephasing_line",
    "power_spectrum",
    "power_spectrum_zero",
    "qubit_energy",
    "relaxation_rate",
    "spectral_density",
    "sweep",
    "system_operator",
    "thermal_occupation",
    "validate_regime",
]

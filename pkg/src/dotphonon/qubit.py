"""Three-level model of the double-quantum-dot hybrid qubit.

Builds the qubit Hamiltonian from detuning, tunnel couplings and the
low-energy splitting of the right dot, diagonalizes it, and transforms the
dot-occupation coupling operator into the energy eigenbasis. All energies
are in ueV.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import constants
from .errors import DegenerateLevels, InvalidParams, NonFinite
from .linalg3 import EigenSystem, Sym3Matrix, eig3_sym

__all__ = [
    "QubitParams",
    "QubitEigenSystem",
    "ChiMatrix",
    "build_hamiltonian",
    "system_operator",
    "diagonalize",
    "chi_matrix",
    "qubit_energy",
    "dEq_deps",
    "validate_regime",
    "HAMILTONIAN_DOMINATED_VIOLATED",
    "LEVELS_NEAR_DEGENERATE",
]

HAMILTONIAN_DOMINATED_VIOLATED = "HamiltonianDominatedViolated"
LEVELS_NEAR_DEGENERATE = "LevelsNearDegenerate"


@dataclass(frozen=True)
class QubitParams:
    """Qubit energies in ueV.

    ``eps`` is the interdot detuning (any sign), ``delta1`` and ``delta2``
    the tunnel couplings, ``deltaR`` the low-energy splitting of the right
    dot (valley and/or orbital). The couplings and the splitting are
    non-negative by construction.
    """

    eps: float
    delta1: float
    delta2: float
    deltaR: float

    def __post_init__(self) -> None:
        for name in ("eps", "delta1", "delta2", "deltaR"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise NonFinite(f"qubit parameter {name} is not finite: {value!r}")
        for name in ("delta1", "delta2", "deltaR"):
            if getattr(self, name) < 0.0:
                raise InvalidParams(
                    f"qubit parameter {name} must be non-negative, got "
                    f"{getattr(self, name)!r}"
                )


@dataclass(frozen=True, eq=False)
class QubitEigenSystem:
    """Sorted qubit energies (ueV), eigenvector matrix and source parameters."""

    energies: tuple[float, float, float]
    u: np.ndarray
    params: QubitParams


@dataclass(frozen=True, eq=False)
class ChiMatrix:
    """The coupling operator expressed in the qubit energy eigenbasis.

    Symmetric, traceless up to the -1 carried by the operator itself, and
    squares to the identity because the bare operator does.
    """

    mat: np.ndarray

    @property
    def chi10(self) -> float:
        return float(self.mat[1, 0])

    @property
    def diag_diff(self) -> float:
        """chi11 - chi00, the diagonal difference that drives dephasing."""
        return float(self.mat[1, 1] - self.mat[0, 0])


def build_hamiltonian(p: QubitParams) -> Sym3Matrix:
    """Assemble the three-level Hamiltonian in the charge basis, ueV.

    Basis order: (2,1) singlet-like state at +eps/2, then the (1,2) singlet
    and triplet-like states at -eps/2 and -eps/2 + deltaR.
    """
    return Sym3Matrix(
        a00=0.5 * p.eps,
        a01=p.delta1,
        a02=p.delta2,
        a11=-0.5 * p.eps,
        a12=0.0,
        a22=-0.5 * p.eps + p.deltaR,
    )


def system_operator() -> Sym3Matrix:
    """The dot-occupation operator the bath couples to: diag(1, -1, -1)."""
    return Sym3Matrix(a00=1.0, a01=0.0, a02=0.0, a11=-1.0, a12=0.0, a22=-1.0)


def diagonalize(p: QubitParams) -> QubitEigenSystem:
    """Diagonalize the qubit Hamiltonian; energies ascending."""
    es: EigenSystem = eig3_sym(build_hamiltonian(p))
    return QubitEigenSystem(energies=es.values, u=es.vectors, params=p)


def chi_matrix(es: QubitEigenSystem) -> ChiMatrix:
    """Transform the coupling operator into the energy eigenbasis.

    With the operator diag(1, -1, -1) the transformed entries reduce to
    ``chi_ij = U0i*U0j - U1i*U1j - U2i*U2j``; the matrix is filled from its
    upper triangle so symmetry is exact.
    """
    u = es.u
    chi = np.empty((3, 3))
    for i in range(3):
        for j in range(i, 3):
            value = u[0, i] * u[0, j] - u[1, i] * u[1, j] - u[2, i] * u[2, j]
            chi[i, j] = value
            chi[j, i] = value
    return ChiMatrix(mat=chi)


def qubit_energy(es: QubitEigenSystem) -> float:
    """Level splitting E1 - E0 in ueV (non-negative by the sort order)."""
    return es.energies[1] - es.energies[0]


def dEq_deps(
    p: QubitParams,
    degeneracy_tol: float = constants.DEGENERACY_TOL_UEV,
) -> float:
    """Derivative of the qubit energy with respect to detuning.

    The Hamiltonian depends on the detuning through half the coupling
    operator, so by the Hellmann-Feynman theorem ``dE_k/deps = chi_kk / 2``
    and the qubit-energy derivative is ``(chi11 - chi00) / 2``. The result
    is dimensionless and bounded by one in magnitude.
    """
    es = diagonalize(p)
    if qubit_energy(es) <= degeneracy_tol:
        raise DegenerateLevels(
            f"E1 - E0 = {qubit_energy(es):.3e} ueV is below the degeneracy "
            f"tolerance {degeneracy_tol:.1e} ueV; the derivative is ill-defined"
        )
    return 0.5 * chi_matrix(es).diag_diff


def validate_regime(
    q: QubitParams | QubitEigenSystem,
    bath,
    temperature,
    regime_factor: float = constants.DEFAULT_REGIME_FACTOR,
) -> list[str]:
    """Diagnostic warnings for the weak-coupling assumptions.

    Returns ``HamiltonianDominatedViolated`` when the qubit splitting is not
    at least ``regime_factor`` times ``eta * kB * T``, and
    ``LevelsNearDegenerate`` when the splitting is below 1e-6 ueV. Warnings
    never abort a computation.
    """
    es = q if isinstance(q, QubitEigenSystem) else diagonalize(q)
    eq = qubit_energy(es)
    warnings = []
    if eq < regime_factor * bath.eta * constants.KB_UEV_PER_K * temperature.kelvin:
        warnings.append(HAMILTONIAN_DOMINATED_VIOLATED)
    if eq < constants.NEAR_DEGENERATE_WARN_UEV:
        warnings.append(LEVELS_NEAR_DEGENERATE)
    return warnings

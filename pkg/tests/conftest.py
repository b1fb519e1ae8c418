import math

import numpy as np
import pytest

from dotphonon import BathParams, QubitParams, Temperature
from dotphonon.constants import HBAR_UEV_NS
from dotphonon.oracle import cubic_eigen_oracle


@pytest.fixture
def baseline_qubit() -> QubitParams:
    return QubitParams(eps=225.0, delta1=19.27, delta2=12.20, deltaR=54.18)


@pytest.fixture
def baseline_bath() -> BathParams:
    return BathParams(
        s=1.0,
        eta=0.5,
        omega_c=10.0 * 19.27 / HBAR_UEV_NS,
        omega_cutoff=2.0 * math.pi * 1e-9,
    )


@pytest.fixture
def t_100mk() -> Temperature:
    return Temperature(kelvin=0.1)


def random_sym3(rng: np.random.Generator, scale: float = 500.0) -> np.ndarray:
    """A random symmetric 3x3 with entries uniform in [-scale, scale]."""
    a = rng.uniform(-scale, scale, size=(3, 3))
    return (a + a.T) / 2.0


def fd_qubit_energy_derivative(p: QubitParams, h: float = 1e-3) -> float:
    """Central finite difference of E1 - E0 in the detuning.

    Goes through the closed-form cubic so the whole stencil is independent
    of the Jacobi/Hellmann-Feynman production path.
    """

    def eq_at(eps: float) -> float:
        mat = np.array(
            [
                [0.5 * eps, p.delta1, p.delta2],
                [p.delta1, -0.5 * eps, 0.0],
                [p.delta2, 0.0, -0.5 * eps + p.deltaR],
            ]
        )
        values = cubic_eigen_oracle(mat)
        return values[1] - values[0]

    return (eq_at(p.eps + h) - eq_at(p.eps - h)) / (2.0 * h)

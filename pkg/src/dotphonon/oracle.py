"""Brute-force reference implementations used only for verification.

Nothing in here is called by the production pipeline. The eigenvalue oracle
solves the characteristic cubic in closed (trigonometric) form, the
eigenvector oracle takes cross products of rows of ``A - lambda*I``, and the
spectrum oracle replaces the continuum power spectrum by an explicit finite
bath: sample modes from the spectral density, evaluate the thermal
correlation function as the written-out mode sum, and Fourier transform it
numerically over a Gaussian-windowed time interval. The binned result must
land on the continuum formula; that agreement is the end-to-end check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bath import BathParams, Temperature
from .errors import InvalidDiscretization, WindowTooShort
from .kernels import corr_sums
from .linalg3 import Sym3Matrix

__all__ = [
    "cubic_eigen_oracle",
    "oracle_eigenvectors",
    "DiscreteBath",
    "sample_discrete_bath",
    "correlator",
    "spectrum_from_correlator",
    "default_window_time",
]


def cubic_eigen_oracle(m: Sym3Matrix | np.ndarray) -> tuple[float, float, float]:
    """Eigenvalues of a symmetric 3x3 matrix from the characteristic cubic.

    Uses the standard trigonometric solution of the depressed cubic; sorted
    ascending. Independent of the Jacobi path by construction.
    """
    if isinstance(m, Sym3Matrix):
        a = m.to_array()
    else:
        a = np.asarray(m, dtype=float)
    p1 = a[0, 1] ** 2 + a[0, 2] ** 2 + a[1, 2] ** 2
    if p1 == 0.0:
        d = sorted((a[0, 0], a[1, 1], a[2, 2]))
        return (d[0], d[1], d[2])
    q = (a[0, 0] + a[1, 1] + a[2, 2]) / 3.0
    p2 = (a[0, 0] - q) ** 2 + (a[1, 1] - q) ** 2 + (a[2, 2] - q) ** 2 + 2.0 * p1
    p = math.sqrt(p2 / 6.0)
    b = (a - q * np.eye(3)) / p
    r = float(np.linalg.det(b)) / 2.0
    r = min(1.0, max(-1.0, r))
    phi = math.acos(r) / 3.0
    hi = q + 2.0 * p * math.cos(phi)
    lo = q + 2.0 * p * math.cos(phi + 2.0 * math.pi / 3.0)
    mid = 3.0 * q - hi - lo
    out = sorted((lo, mid, hi))
    return (out[0], out[1], out[2])


def oracle_eigenvectors(m: Sym3Matrix | np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues plus unit eigenvectors via the adjugate of ``A - lambda*I``.

    For a non-degenerate eigenvalue the matrix ``A - lambda*I`` has rank two,
    so the cross product of its two most independent rows spans the null
    space. Only valid away from degeneracies; meant for random-matrix
    cross-checks of the transformed coupling matrix.
    """
    if isinstance(m, Sym3Matrix):
        a = m.to_array()
    else:
        a = np.asarray(m, dtype=float)
    values = np.array(cubic_eigen_oracle(a))
    vectors = np.empty((3, 3))
    for k, lam in enumerate(values):
        mm = a - lam * np.eye(3)
        candidates = [
            np.cross(mm[0], mm[1]),
            np.cross(mm[0], mm[2]),
            np.cross(mm[1], mm[2]),
        ]
        norms = [float(np.dot(c, c)) for c in candidates]
        v = candidates[int(np.argmax(norms))]
        v = v / math.sqrt(float(np.dot(v, v)))
        # same sign convention as the production solver, restated locally
        best = 0
        for i in (1, 2):
            if abs(v[i]) > abs(v[best]):
                best = i
        if v[best] < 0.0:
            v = -v
        vectors[:, k] = v
    return values, vectors


@dataclass(frozen=True, eq=False)
class DiscreteBath:
    """A finite stand-in for the continuum bath.

    Mode frequencies sit on a midpoint grid over ``(0, omega_max]`` and the
    couplings satisfy ``lambda_j^2 = J(omega_j) * delta_omega``, so the sum
    of squared couplings approximates the integral of the spectral density.
    """

    omegas: np.ndarray
    lambdas: np.ndarray
    delta_omega: float
    bath: BathParams


def sample_discrete_bath(
    b: BathParams, n_modes: int, omega_max: float
) -> DiscreteBath:
    """Discretize the spectral density into ``n_modes`` oscillators."""
    if n_modes < 100:
        raise InvalidDiscretization(f"need at least 100 modes, got {n_modes}")
    if omega_max < 20.0 * b.omega_c:
        raise InvalidDiscretization(
            f"omega_max must cover the exponential tail (>= 20*omega_c), "
            f"got {omega_max!r} with omega_c = {b.omega_c!r}"
        )
    delta = omega_max / n_modes
    omegas = (np.arange(n_modes) + 0.5) * delta
    j = b.eta * omegas**b.s / b.omega_c ** (b.s - 1.0) * np.exp(-omegas / b.omega_c)
    lambdas = np.sqrt(j * delta)
    return DiscreteBath(omegas=omegas, lambdas=lambdas, delta_omega=delta, bath=b)


def _coth_half(db: DiscreteBath, t: Temperature) -> np.ndarray:
    """coth(beta*hbar*omega_j/2) for every mode, expm1-stable."""
    return 1.0 + 2.0 / np.expm1(t.beta_hbar() * db.omegas)


def correlator(db: DiscreteBath, t: Temperature, time_ns: float) -> complex:
    """Thermal correlation function of the collective bath coordinate.

    The explicit mode sum
    ``sum_j lambda_j^2 [cos(w_j t) coth(beta hbar w_j / 2) - i sin(w_j t)]``
    in rad^2/ns^2; real at t = 0, conjugate-symmetric in t.
    """
    lam2 = db.lambdas**2
    phases = db.omegas * time_ns
    re = float(np.dot(lam2 * _coth_half(db, t), np.cos(phases)))
    im = -float(np.dot(lam2, np.sin(phases)))
    return complex(re, im)


def default_window_time(db: DiscreteBath) -> float:
    """Window half-width whose spectral kernel just averages over the modes.

    The Gaussian window has sigma = window/6; picking sigma = 1/delta_omega
    makes the frequency kernel exactly one mode spacing wide, which blurs
    the delta comb into its local average without distorting the envelope.
    """
    return 6.0 / db.delta_omega


def spectrum_from_correlator(
    db: DiscreteBath,
    t: Temperature,
    omega_grid,
    window_time: float | None = None,
) -> np.ndarray:
    """Numerical Fourier transform of the windowed correlation function.

    Integrates ``C(t) exp(i w t) / (2 pi)`` over ``[-window, window]`` with a
    Gaussian taper (sigma = window/6) by trapezoid quadrature on a time grid
    fine enough that no mode aliases into the requested frequencies. Returns
    the smoothed (bin-averaged) spectrum at each grid frequency, rad/ns.
    """
    omega_grid = np.asarray(omega_grid, dtype=float)
    if window_time is None:
        window_time = default_window_time(db)
    if omega_grid.size >= 2:
        spacing = np.diff(np.sort(omega_grid))
        min_spacing = float(spacing[spacing > 0.0].min(initial=np.inf))
        if 2.0 * math.pi / window_time > min_spacing:
            raise WindowTooShort(
                f"window {window_time!r} ns gives frequency bins coarser than "
                f"the grid spacing {min_spacing!r} rad/ns"
            )

    sigma = window_time / 6.0
    omega_top = float(db.omegas[-1]) + float(np.abs(omega_grid).max(initial=0.0))
    dt = 2.0 * math.pi / (1.25 * omega_top)
    n_t = int(math.ceil(window_time / dt)) + 1
    tgrid = np.arange(n_t) * dt

    lam2 = db.lambdas**2
    a_sum, b_sum = corr_sums(db.omegas, lam2 * _coth_half(db, t), lam2, dt, n_t)

    weights = np.exp(-0.5 * (tgrid / sigma) ** 2)
    weights[0] *= 0.5
    weights[-1] *= 0.5
    wa = weights * a_sum
    wb = weights * b_sum
    # C(-t) = conj C(t) folds the two-sided transform onto t >= 0
    phases = np.outer(tgrid, omega_grid)
    out = (dt / math.pi) * (wa @ np.cos(phases) + wb @ np.sin(phases))
    return out

"""Exact diagonalization of real symmetric 3x3 matrices.

This is the only linear algebra the package needs, so it is written out
explicitly rather than pulled from LAPACK: cyclic Jacobi rotations driven to
an off-diagonal maximum below ``1e-14`` relative to the matrix scale, with a
deterministic ordering, a deterministic basis inside degenerate subspaces,
and a fixed sign convention. Two calls on the same input are bit-identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NonFinite

__all__ = ["Sym3Matrix", "EigenSystem", "eig3_sym"]

_OFFDIAG_REL_TOL = 1e-14
_DEGENERATE_REL_TOL = 1e-12
_MAX_SWEEPS = 50


@dataclass(frozen=True)
class Sym3Matrix:
    """The six independent entries of a real symmetric 3x3 matrix.

    Units are whatever the caller is working in (ueV for Hamiltonians,
    dimensionless for coupling operators); symmetry holds by construction.
    """

    a00: float
    a01: float
    a02: float
    a11: float
    a12: float
    a22: float

    def __post_init__(self) -> None:
        for name in ("a00", "a01", "a02", "a11", "a12", "a22"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise NonFinite(f"matrix entry {name} is not finite: {value!r}")

    @classmethod
    def from_array(cls, a) -> "Sym3Matrix":
        """Build from a full 3x3 array, requiring exact symmetry."""
        a = np.asarray(a, dtype=float)
        if a.shape != (3, 3):
            raise ValueError(f"expected a 3x3 array, got shape {a.shape}")
        if not (a[0, 1] == a[1, 0] and a[0, 2] == a[2, 0] and a[1, 2] == a[2, 1]):
            raise ValueError("array is not symmetric")
        return cls(a[0, 0], a[0, 1], a[0, 2], a[1, 1], a[1, 2], a[2, 2])

    def to_array(self) -> np.ndarray:
        return np.array(
            [
                [self.a00, self.a01, self.a02],
                [self.a01, self.a11, self.a12],
                [self.a02, self.a12, self.a22],
            ]
        )


@dataclass(frozen=True, eq=False)
class EigenSystem:
    """Eigenvalues sorted ascending and the orthogonal matrix of eigenvectors.

    Column ``k`` of ``vectors`` belongs to ``values[k]``. In every column the
    entry of largest magnitude is non-negative (ties broken by lowest row
    index), which removes the overall sign freedom.
    """

    values: tuple[float, float, float]
    vectors: np.ndarray


def eig3_sym(m: Sym3Matrix | np.ndarray) -> EigenSystem:
    """Diagonalize a real symmetric 3x3 matrix.

    Deterministic for identical input, including inside degenerate
    subspaces, where the basis is rebuilt by Gram-Schmidt against the
    canonical axes in ascending order.
    """
    if not isinstance(m, Sym3Matrix):
        m = Sym3Matrix.from_array(m)
    a = [
        [m.a00, m.a01, m.a02],
        [m.a01, m.a11, m.a12],
        [m.a02, m.a12, m.a22],
    ]
    v = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]

    scale = max(
        1.0,
        abs(m.a00), abs(m.a01), abs(m.a02), abs(m.a11), abs(m.a12), abs(m.a22),
    )
    threshold = _OFFDIAG_REL_TOL * scale

    for _ in range(_MAX_SWEEPS):
        off = max(abs(a[0][1]), abs(a[0][2]), abs(a[1][2]))
        if off <= threshold:
            break
        for p, q in ((0, 1), (0, 2), (1, 2)):
            _rotate(a, v, p, q)

    order = sorted(range(3), key=lambda k: a[k][k])
    values = [a[order[0]][order[0]], a[order[1]][order[1]], a[order[2]][order[2]]]
    vectors = [[v[i][order[k]] for k in range(3)] for i in range(3)]

    _canonicalize_degenerate(values, vectors, scale)
    for k in range(3):
        _apply_sign_convention(vectors, k)

    return EigenSystem(
        values=(values[0], values[1], values[2]),
        vectors=np.array(vectors),
    )


def _rotate(a, v, p: int, q: int) -> None:
    """One Jacobi rotation annihilating a[p][q], accumulated into v."""
    apq = a[p][q]
    if apq == 0.0:
        return
    # skip rotations that cannot change the diagonal at double precision
    g = 100.0 * abs(apq)
    if abs(a[p][p]) + g == abs(a[p][p]) and abs(a[q][q]) + g == abs(a[q][q]):
        a[p][q] = 0.0
        a[q][p] = 0.0
        return

    tau = (a[q][q] - a[p][p]) / (2.0 * apq)
    if tau >= 0.0:
        t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
    else:
        t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c

    a[p][p] -= t * apq
    a[q][q] += t * apq
    a[p][q] = 0.0
    a[q][p] = 0.0
    r = 3 - p - q  # the remaining index
    arp = a[r][p]
    arq = a[r][q]
    a[r][p] = c * arp - s * arq
    a[p][r] = a[r][p]
    a[r][q] = s * arp + c * arq
    a[q][r] = a[r][q]
    for i in range(3):
        vip = v[i][p]
        viq = v[i][q]
        v[i][p] = c * vip - s * viq
        v[i][q] = s * vip + c * viq


def _canonicalize_degenerate(values, vectors, scale: float) -> None:
    """Rebuild eigenvector columns of (near-)equal eigenvalues.

    Inside a degenerate subspace any orthonormal basis solves the problem;
    projecting the canonical axes e0, e1, e2 in order and Gram-Schmidt
    orthogonalizing the projections picks one reproducibly.
    """
    tol = _DEGENERATE_REL_TOL * scale
    start = 0
    while start < 3:
        stop = start + 1
        while stop < 3 and values[stop] - values[start] <= tol:
            stop += 1
        size = stop - start
        if size > 1:
            basis = [[vectors[i][k] for i in range(3)] for k in range(start, stop)]
            replacement: list[list[float]] = []
            for axis in range(3):
                if len(replacement) == size:
                    break
                # projection of e_axis onto the degenerate subspace
                w = [0.0, 0.0, 0.0]
                for b in basis:
                    coeff = b[axis]
                    for i in range(3):
                        w[i] += coeff * b[i]
                for r in replacement:
                    coeff = sum(w[i] * r[i] for i in range(3))
                    for i in range(3):
                        w[i] -= coeff * r[i]
                norm = math.sqrt(sum(x * x for x in w))
                if norm > 1e-6:
                    replacement.append([x / norm for x in w])
            for j, r in enumerate(replacement):
                for i in range(3):
                    vectors[i][start + j] = r[i]
        start = stop


def _apply_sign_convention(vectors, k: int) -> None:
    """Flip column k so its largest-magnitude entry is non-negative."""
    best = 0
    for i in (1, 2):
        if abs(vectors[i][k]) > abs(vectors[best][k]):
            best = i
    if vectors[best][k] < 0.0:
        for i in range(3):
            vectors[i][k] = -vectors[i][k]

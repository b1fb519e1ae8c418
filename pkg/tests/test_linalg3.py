import math

import numpy as np
import pytest

from dotphonon.errors import NonFinite
from dotphonon.linalg3 import Sym3Matrix, eig3_sym
from dotphonon.oracle import cubic_eigen_oracle

from conftest import random_sym3


def test_already_diagonal_is_identity():
    es = eig3_sym(Sym3Matrix(1.0, 0.0, 0.0, 2.0, 0.0, 3.0))
    assert es.values == (1.0, 2.0, 3.0)
    assert np.array_equal(es.vectors, np.eye(3))


def test_decoupled_levels_permutation():
    # eps = 225, deltaR = 54.18, no tunnel couplings: levels are the bare
    # diagonal and the eigenvectors a column permutation of the identity
    es = eig3_sym(Sym3Matrix(112.5, 0.0, 0.0, -112.5, 0.0, -58.32))
    assert es.values == (-112.5, -58.32, 112.5)
    perm = np.zeros((3, 3))
    perm[1, 0] = perm[2, 1] = perm[0, 2] = 1.0
    assert np.array_equal(es.vectors, perm)


def test_baseline_matches_cubic_oracle(baseline_qubit):
    from dotphonon.qubit import build_hamiltonian

    m = build_hamiltonian(baseline_qubit)
    es = eig3_sym(m)
    oracle = cubic_eigen_oracle(m)
    scale = max(1.0, np.abs(m.to_array()).max())
    assert np.allclose(es.values, oracle, rtol=0.0, atol=1e-10 * scale)
    # frozen from the closed-form cubic at the baseline parameter set
    assert np.allclose(
        es.values,
        (-114.15779377144894, -59.15330509230036, 114.9910988637493),
        rtol=1e-12,
    )


def test_single_offdiagonal_block():
    es = eig3_sym(np.array([[0.0, 1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]]))
    assert np.allclose(es.values, (-1.0, 0.0, 1.0), atol=1e-15)


@pytest.mark.parametrize("seed", [0, 1])
def test_random_matrix_invariants(seed):
    rng = np.random.default_rng(seed)
    for _ in range(500):
        a = random_sym3(rng)
        es = eig3_sym(a)
        u = es.vectors
        lam = np.array(es.values)
        assert np.abs(u.T @ u - np.eye(3)).max() < 1e-12
        assert np.abs(u @ np.diag(lam) @ u.T - a).max() < 1e-9
        assert lam[0] <= lam[1] <= lam[2]
        # trace preservation
        assert math.isclose(lam.sum(), np.trace(a), rel_tol=1e-10, abs_tol=1e-10)
        # closed-form cubic agreement, relative to the matrix scale
        scale = max(1.0, np.abs(a).max())
        assert np.allclose(cubic_eigen_oracle(a), lam, rtol=0.0, atol=1e-10 * scale)
        # sign convention: largest-magnitude entry of each column non-negative
        for k in range(3):
            col = u[:, k]
            assert col[int(np.argmax(np.abs(col)))] >= 0.0


def test_determinism_bit_identical():
    rng = np.random.default_rng(7)
    a = random_sym3(rng)
    e1 = eig3_sym(a)
    e2 = eig3_sym(a)
    assert e1.values == e2.values
    assert np.array_equal(e1.vectors, e2.vectors)


def test_degenerate_subspace_deterministic():
    # two-fold degeneracy: canonical basis vectors are recovered exactly
    es = eig3_sym(Sym3Matrix(5.0, 0.0, 0.0, -2.0, 0.0, -2.0))
    assert es.values == (-2.0, -2.0, 5.0)
    assert np.array_equal(es.vectors[:, 0], [0.0, 1.0, 0.0])
    assert np.array_equal(es.vectors[:, 1], [0.0, 0.0, 1.0])
    # three-fold: the identity
    es = eig3_sym(np.eye(3) * 4.0)
    assert np.array_equal(es.vectors, np.eye(3))


def test_degenerate_rotated_subspace_orthonormal():
    # equal eigenvalues in a rotated 2D subspace still give an orthonormal,
    # reproducible basis
    c, s = math.cos(0.3), math.sin(0.3)
    r = np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])
    a = r @ np.diag([1.0, 1.0, 3.0]) @ r.T
    a = (a + a.T) / 2.0
    e1 = eig3_sym(a)
    e2 = eig3_sym(a)
    assert np.array_equal(e1.vectors, e2.vectors)
    assert np.abs(e1.vectors.T @ e1.vectors - np.eye(3)).max() < 1e-12
    assert np.abs(e1.vectors @ np.diag(e1.values) @ e1.vectors.T - a).max() < 1e-10


def test_nonfinite_rejected():
    with pytest.raises(NonFinite):
        Sym3Matrix(math.nan, 0.0, 0.0, 1.0, 0.0, 2.0)
    with pytest.raises(NonFinite):
        Sym3Matrix(1.0, math.inf, 0.0, 1.0, 0.0, 2.0)


def test_from_array_requires_symmetry():
    with pytest.raises(ValueError):
        Sym3Matrix.from_array(np.array([[1.0, 2.0, 0.0], [2.1, 1.0, 0.0], [0.0, 0.0, 1.0]]))

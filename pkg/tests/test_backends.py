"""Compiled extension versus pure-Python fallback on identical inputs."""

import math

import numpy as np
import pytest

from dotphonon import _purekern, kernels

fastkern = pytest.importorskip(
    "dotphonon._fastkern", reason="compiled kernel not built"
)

WC = 10.0 * 19.27 / 0.6582119569
WCUT = 2.0 * math.pi * 1e-9


def _random_grid(n=400, seed=123):
    rng = np.random.default_rng(seed)
    return (
        rng.uniform(-400.0, 400.0, n),
        rng.uniform(0.0, 60.0, n),
        rng.uniform(0.0, 60.0, n),
        rng.uniform(0.0, 120.0, n),
        rng.uniform(0.05, 2.0, n),
        rng.uniform(0.3, 3.0, n),
        rng.uniform(0.0, 1.0, n),
    )


def test_backend_is_selected():
    assert kernels.BACKEND in ("compiled", "pure")


def test_rates_grid_agreement():
    args = (*_random_grid(), WC, WCUT, WCUT, 10.0)
    pure = _purekern.rates_grid(*args)
    fast = fastkern.rates_grid(*args)
    for p, f in zip(pure[:7], fast[:7]):
        nan_p = np.isnan(p)
        assert np.array_equal(nan_p, np.isnan(f))
        mask = ~nan_p
        assert np.allclose(p[mask], f[mask], rtol=1e-12, atol=0.0, equal_nan=False)
    assert np.array_equal(pure[7], fast[7])  # status
    assert np.array_equal(pure[8], fast[8])  # warn bits


def test_rates_grid_error_statuses_agree():
    # exact degeneracy and invalid parameters hit the same status codes
    eps = np.array([225.0, 225.0, 225.0])
    zeros = np.zeros(3)
    d1 = np.array([0.0, 19.27, 19.27])
    dr = np.array([0.0, 54.18, 54.18])
    temp = np.array([0.1, -1.0, 0.1])
    s = np.array([1.0, 1.0, math.nan])
    eta = np.array([0.5, 0.5, 0.5])
    args = (eps, d1, zeros, dr, temp, s, eta, WC, WCUT, WCUT, 10.0)
    pure = _purekern.rates_grid(*args)
    fast = fastkern.rates_grid(*args)
    assert pure[7].tolist() == [1, 3, 3]
    assert np.array_equal(pure[7], fast[7])


def test_corr_sums_agreement():
    rng = np.random.default_rng(9)
    omegas = np.sort(rng.uniform(0.1, 5000.0, 1500))
    wc = rng.uniform(0.0, 1.0, 1500)
    ws = rng.uniform(0.0, 1.0, 1500)
    dt, n_t = 7.7e-4, 4000
    a_p, b_p = _purekern.corr_sums(omegas, wc, ws, dt, n_t)
    a_f, b_f = fastkern.corr_sums(omegas, wc, ws, dt, n_t)
    scale = max(np.abs(a_p).max(), np.abs(b_p).max())
    assert np.abs(a_p - a_f).max() < 1e-9 * scale
    assert np.abs(b_p - b_f).max() < 1e-9 * scale


def test_both_backends_deterministic():
    args = (*_random_grid(n=64, seed=5), WC, WCUT, WCUT, 10.0)
    for impl in (_purekern, fastkern):
        out1 = impl.rates_grid(*args)
        out2 = impl.rates_grid(*args)
        for a, b in zip(out1, out2):
            assert np.array_equal(a, b, equal_nan=True)

import math

import numpy as np
import pytest

from dotphonon import (
    BathParams,
    QubitParams,
    Temperature,
    compute_times,
    decoherence_time,
    dephasing_rate,
    diagonalize,
    chi_matrix,
    power_spectrum_zero,
    relaxation_rate,
)
from dotphonon.constants import HBAR_UEV_NS, KB_UEV_PER_K
from dotphonon.errors import DegenerateLevels, NonPositiveQubitEnergy
from dotphonon.oracle import cubic_eigen_oracle, oracle_eigenvectors
from dotphonon.qubit import build_hamiltonian

WC = 10.0 * 19.27 / HBAR_UEV_NS
WCUT = 2.0 * math.pi * 1e-9


def make_bath(s=1.0, eta=0.5):
    return BathParams(s=s, eta=eta, omega_c=WC, omega_cutoff=WCUT)


def test_decoupled_qubit_has_infinite_times(baseline_bath, t_100mk):
    # no tunnel couplings: chi is diagonal, so both chi10 and the diagonal
    # difference vanish and every rate is zero
    p = QubitParams(eps=225.0, delta1=0.0, delta2=0.0, deltaR=54.18)
    r = compute_times(p, baseline_bath, t_100mk)
    assert r.t1_ns == math.inf
    assert r.tphi_ns == math.inf
    assert r.t2_ns == math.inf


def test_relaxation_rejects_nonpositive_energy(baseline_qubit, baseline_bath, t_100mk):
    chi = chi_matrix(diagonalize(baseline_qubit))
    with pytest.raises(NonPositiveQubitEnergy):
        relaxation_rate(chi, 0.0, baseline_bath, t_100mk)


def test_relaxation_rate_against_hand_pipeline(baseline_qubit, baseline_bath, t_100mk):
    # recompose the rate from independently computed factors: eigenvalues
    # from the closed-form cubic, eigenvectors from the adjugate, and the
    # power spectrum written out with tanh
    h = build_hamiltonian(baseline_qubit)
    values = cubic_eigen_oracle(h)
    eq = values[1] - values[0]
    _, vectors = oracle_eigenvectors(h)
    o = np.diag([1.0, -1.0, -1.0])
    chi_oracle = vectors.T @ o @ vectors
    w = eq / HBAR_UEV_NS
    j = 0.5 * w * math.exp(-w / WC)
    x = 0.5 * eq / (KB_UEV_PER_K * 0.1)
    s_val = 0.5 * j * (1.0 / math.tanh(x) + 1.0)
    expected = (math.pi / 2.0) * chi_oracle[1, 0] ** 2 * s_val

    chi = chi_matrix(diagonalize(baseline_qubit))
    eq_main = diagonalize(baseline_qubit).energies[1] - diagonalize(baseline_qubit).energies[0]
    assert relaxation_rate(chi, eq_main, baseline_bath, t_100mk) == pytest.approx(
        expected, rel=1e-12
    )


def test_relaxation_linear_in_eta(baseline_qubit, t_100mk):
    chi = chi_matrix(diagonalize(baseline_qubit))
    eq = 55.00448867914868
    r1 = relaxation_rate(chi, eq, make_bath(eta=0.5), t_100mk)
    r2 = relaxation_rate(chi, eq, make_bath(eta=1.0), t_100mk)
    assert r2 == pytest.approx(2.0 * r1, rel=1e-15)


def test_dephasing_rate_matches_derivative_form(baseline_qubit, baseline_bath, t_100mk):
    chi = chi_matrix(diagonalize(baseline_qubit))
    deq = 0.5 * chi.diag_diff
    expected = math.pi * deq**2 * power_spectrum_zero(baseline_bath, t_100mk)
    assert dephasing_rate(chi, baseline_bath, t_100mk) == pytest.approx(expected, rel=1e-12)


def test_dephasing_rate_linear_in_temperature(baseline_qubit, baseline_bath):
    chi = chi_matrix(diagonalize(baseline_qubit))
    r_01 = dephasing_rate(chi, baseline_bath, Temperature(0.1))
    r_03 = dephasing_rate(chi, baseline_bath, Temperature(0.3))
    assert r_03 == pytest.approx(3.0 * r_01, rel=1e-14)


def test_decoherence_time_combinations():
    assert decoherence_time(100.0, math.inf) == 200.0
    assert decoherence_time(math.inf, 50.0) == 50.0
    assert decoherence_time(100.0, 200.0) == pytest.approx(100.0, rel=1e-15)


def test_baseline_times_frozen(baseline_qubit, baseline_bath, t_100mk):
    # frozen from the independent pipeline (cubic eigenvalues, adjugate
    # eigenvectors, hand-multiplied rate factors)
    r = compute_times(baseline_qubit, baseline_bath, t_100mk)
    assert r.t1_ns == pytest.approx(148.42323053538482, rel=1e-9)
    assert r.tphi_ns == pytest.approx(6654.25129395063, rel=1e-9)
    assert r.t2_ns == pytest.approx(284.1696401489829, rel=1e-9)
    assert r.eq_ueV == pytest.approx(55.00448867914875, rel=1e-9)
    assert r.deq_deps == pytest.approx(-0.0027032542957936556, rel=1e-6)
    assert r.chi10_sq == pytest.approx(1.3633480750389331e-4, rel=1e-9)
    assert r.warnings == ()
    assert r.t2_ns <= 2.0 * r.t1_ns


def test_compute_times_degenerate_raises(baseline_bath, t_100mk):
    with pytest.raises(DegenerateLevels):
        compute_times(
            QubitParams(eps=225.0, delta1=0.0, delta2=0.0, deltaR=0.0),
            baseline_bath,
            t_100mk,
        )


def test_regime_ordering_in_s(baseline_qubit, t_100mk):
    results = {
        s: compute_times(baseline_qubit, make_bath(s=s), t_100mk) for s in (0.5, 1.0, 2.0)
    }
    assert results[0.5].t1_ns < results[1.0].t1_ns < results[2.0].t1_ns
    assert results[0.5].t2_ns < results[1.0].t2_ns < results[2.0].t2_ns


def test_times_decrease_with_temperature(baseline_qubit, baseline_bath):
    previous = None
    for kelvin in np.geomspace(0.05, 2.0, 50):
        r = compute_times(baseline_qubit, baseline_bath, Temperature(float(kelvin)))
        if previous is not None:
            assert r.t1_ns < previous.t1_ns
            assert r.tphi_ns < previous.tphi_ns
            assert r.t2_ns < previous.t2_ns
        previous = r


def test_eq14_identity_and_bound(baseline_qubit):
    rng = np.random.default_rng(5)
    for _ in range(200):
        p = QubitParams(
            eps=rng.uniform(-400.0, 400.0),
            delta1=rng.uniform(0.5, 60.0),
            delta2=rng.uniform(0.5, 60.0),
            deltaR=rng.uniform(0.5, 120.0),
        )
        try:
            r = compute_times(p, make_bath(), Temperature(float(rng.uniform(0.05, 2.0))))
        except DegenerateLevels:
            continue
        lhs = 1.0 / r.t2_ns
        rhs = 0.5 / r.t1_ns + 1.0 / r.tphi_ns
        assert lhs == pytest.approx(rhs, rel=1e-12)
        assert r.t2_ns <= 2.0 * r.t1_ns


def test_times_scale_inversely_with_eta(baseline_qubit, t_100mk):
    results = [
        compute_times(baseline_qubit, make_bath(eta=eta), t_100mk)
        for eta in (0.25, 0.5, 1.0)
    ]
    for a, b in zip(results, results[1:]):
        assert b.t1_ns == pytest.approx(a.t1_ns / 2.0, rel=1e-15)
        assert b.tphi_ns == pytest.approx(a.tphi_ns / 2.0, rel=1e-15)
        assert b.t2_ns == pytest.approx(a.t2_ns / 2.0, rel=1e-15)


def test_dephasing_line_is_exact(baseline_bath):
    # 1/Tphi against (dE_Q/deps)^2 across arbitrary qubit points is a line
    # through the origin with slope pi*S(0)
    rng = np.random.default_rng(17)
    points = []
    while len(points) < 12:
        p = QubitParams(
            eps=rng.uniform(20.0, 400.0),
            delta1=rng.uniform(2.0, 50.0),
            delta2=rng.uniform(2.0, 50.0),
            deltaR=rng.uniform(10.0, 250.0),
        )
        try:
            r = compute_times(p, baseline_bath, Temperature(0.1))
        except DegenerateLevels:
            continue
        if math.isfinite(r.tphi_ns):
            points.append((r.deq_deps**2, 1.0 / r.tphi_ns))
    x = np.array([p[0] for p in points])
    y = np.array([p[1] for p in points])
    slope, intercept = np.polyfit(x, y, 1)
    s0 = power_spectrum_zero(baseline_bath, Temperature(0.1))
    assert slope == pytest.approx(math.pi * s0, rel=1e-10)
    assert abs(intercept) < 1e-12 * slope


def test_relaxation_longer_at_large_detuning(baseline_bath, t_100mk):
    r_50 = compute_times(QubitParams(50.0, 19.27, 12.20, 54.18), baseline_bath, t_100mk)
    r_400 = compute_times(QubitParams(400.0, 19.27, 12.20, 54.18), baseline_bath, t_100mk)
    assert r_400.t1_ns > r_50.t1_ns

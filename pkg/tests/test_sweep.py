import math

import numpy as np
import pytest

from dotphonon import (
    BathParams,
    QubitParams,
    SweepAxis,
    Temperature,
    find_dephasing_ridge,
    fit_dephasing_line,
    power_spectrum_zero,
    sweep,
)
from dotphonon.constants import HBAR_UEV_NS
from dotphonon.errors import EmptyGrid, InsufficientData, InvalidAxis, NotA2DSweep
from dotphonon.output import sweep_csv

WC = 10.0 * 19.27 / HBAR_UEV_NS
WCUT = 2.0 * math.pi * 1e-9


def make_bath(s=1.0, eta=0.5):
    return BathParams(s=s, eta=eta, omega_c=WC, omega_cutoff=WCUT)


def test_axis_validation():
    with pytest.raises(InvalidAxis):
        SweepAxis("bogus", 0.0, 1.0, 5)
    with pytest.raises(InvalidAxis):
        SweepAxis("eps", 10.0, 1.0, 5)
    with pytest.raises(InvalidAxis):
        SweepAxis("eps", 0.0, 1.0, 1)
    with pytest.raises(InvalidAxis):
        SweepAxis("temp", 0.0, 1.0, 5)  # temperature must start above zero
    with pytest.raises(InvalidAxis):
        SweepAxis("eps", -1.0, 1.0, 5, "log")
    with pytest.raises(InvalidAxis):
        SweepAxis("delta1", -5.0, 1.0, 5)
    with pytest.raises(InvalidAxis):
        SweepAxis("s", 0.5, 8.0, 5)


def test_axis_values():
    lin = SweepAxis("eps", 0.0, 10.0, 11)
    assert np.array_equal(lin.values(), np.linspace(0.0, 10.0, 11))
    log = SweepAxis("s", 0.5, 2.0, 3, "log")
    assert np.array_equal(log.values(), [0.5, 1.0, 2.0])


def test_grid_cardinality_and_order(baseline_qubit, t_100mk):
    axes = (SweepAxis("eps", 100.0, 200.0, 3), SweepAxis("deltaR", 30.0, 60.0, 4))
    result = sweep(baseline_qubit, make_bath(), t_100mk, axes)
    assert len(result.rows) == 12
    assert result.shape == (3, 4)
    # row-major: first axis outer
    eps_vals = [row.values[0] for row in result.rows]
    assert eps_vals == [100.0] * 4 + [150.0] * 4 + [200.0] * 4
    dr_vals = [row.values[1] for row in result.rows[:4]]
    assert dr_vals == [30.0, 40.0, 50.0, 60.0]


def test_sweep_requires_axes(baseline_qubit, t_100mk):
    with pytest.raises(EmptyGrid):
        sweep(baseline_qubit, make_bath(), t_100mk, ())
    with pytest.raises(InvalidAxis):
        sweep(
            baseline_qubit,
            make_bath(),
            t_100mk,
            (SweepAxis("eps", 0.0, 1.0, 2), SweepAxis("eps", 2.0, 3.0, 2)),
        )


def test_eta_sweep_exact_linearity(baseline_qubit, t_100mk):
    result = sweep(
        baseline_qubit, make_bath(), t_100mk, (SweepAxis("eta", 0.25, 0.5, 2),)
    )
    first, second = (row.result for row in result.rows)
    # doubling eta doubles every rate, i.e. exactly halves every time
    assert second.t1_ns == first.t1_ns / 2.0
    assert second.tphi_ns == first.tphi_ns / 2.0
    assert second.t2_ns == first.t2_ns / 2.0


def test_error_rows_do_not_abort(t_100mk):
    # the decoupled qubit is exactly degenerate at deltaR = 0; that grid
    # point must come back as an error row, not an exception
    q = QubitParams(eps=225.0, delta1=0.0, delta2=0.0, deltaR=54.18)
    result = sweep(q, make_bath(), t_100mk, (SweepAxis("deltaR", 0.0, 40.0, 5),))
    assert result.rows[0].error == "DegenerateLevels"
    assert result.rows[0].result is None
    assert all(row.ok for row in result.rows[1:])
    assert result.error_count() == 1


def test_thread_count_does_not_change_bytes(baseline_qubit, t_100mk):
    axes = (SweepAxis("eps", 25.0, 400.0, 16), SweepAxis("deltaR", 20.0, 300.0, 16))
    outputs = [
        sweep_csv(sweep(baseline_qubit, make_bath(), t_100mk, axes, threads=k))
        for k in (1, 2, 8)
    ]
    assert outputs[0] == outputs[1] == outputs[2]


def test_temp_axis(baseline_qubit):
    result = sweep(
        baseline_qubit,
        make_bath(),
        Temperature(0.1),
        (SweepAxis("temp", 0.05, 2.0, 10, "log"),),
    )
    t1 = [row.result.t1_ns for row in result.rows]
    assert all(b < a for a, b in zip(t1, t1[1:]))


def test_fit_dephasing_line_exact(baseline_qubit, t_100mk):
    bath = make_bath()
    result = sweep(
        baseline_qubit, bath, t_100mk, (SweepAxis("deltaR", 20.0, 300.0, 24),)
    )
    fit = fit_dephasing_line(result)
    s0 = power_spectrum_zero(bath, t_100mk)
    assert fit.slope == pytest.approx(math.pi * s0, rel=1e-10)
    assert fit.r_squared >= 1.0 - 1e-10
    assert abs(fit.intercept) < 1e-12 * fit.slope
    assert fit.n_points == 24


def test_fit_insufficient_data(baseline_qubit, t_100mk):
    # only two rows at all
    two = sweep(baseline_qubit, make_bath(), t_100mk, (SweepAxis("eta", 0.2, 0.4, 2),))
    with pytest.raises(InsufficientData):
        fit_dephasing_line(two)
    # many rows but a single abscissa: eta sweeps leave dEq/deps constant
    const = sweep(baseline_qubit, make_bath(), t_100mk, (SweepAxis("eta", 0.2, 0.4, 5),))
    with pytest.raises(InsufficientData):
        fit_dephasing_line(const)


def test_ridge_requires_2d(baseline_qubit, t_100mk):
    result = sweep(baseline_qubit, make_bath(), t_100mk, (SweepAxis("eps", 25.0, 400.0, 4),))
    with pytest.raises(NotA2DSweep):
        find_dephasing_ridge(result)


def test_ridge_interior_maximum(baseline_qubit, t_100mk):
    axes = (SweepAxis("eps", 25.0, 400.0, 32), SweepAxis("deltaR", 20.0, 300.0, 32))
    result = sweep(baseline_qubit, make_bath(), t_100mk, axes)
    ridge = find_dephasing_ridge(result)
    assert len(ridge) == 32
    hits = [p for p in ridge if p.interior and p.narrow_coupling]
    assert hits, "expected an interior Tphi maximum with small |chi11 - chi00|"
    # the maximum sits where the detuning derivative nearly vanishes
    for p in hits:
        assert abs(p.chi_diag_diff) / 2.0 < 0.05


def test_ridge_axis_order_irrelevant(baseline_qubit, t_100mk):
    fwd = find_dephasing_ridge(
        sweep(
            baseline_qubit,
            make_bath(),
            t_100mk,
            (SweepAxis("eps", 25.0, 400.0, 16), SweepAxis("deltaR", 20.0, 300.0, 16)),
        )
    )
    rev = find_dephasing_ridge(
        sweep(
            baseline_qubit,
            make_bath(),
            t_100mk,
            (SweepAxis("deltaR", 20.0, 300.0, 16), SweepAxis("eps", 25.0, 400.0, 16)),
        )
    )
    assert [(p.eps, p.delta_r, p.interior) for p in fwd] == [
        (p.eps, p.delta_r, p.interior) for p in rev
    ]


def test_ridge_decoupled_qubit_has_no_interior_maximum(t_100mk):
    # without tunnel couplings the diagonal difference is identically zero
    # below the level crossing, so Tphi is flat (infinite) there and the
    # column maximum sits at the grid edge
    q = QubitParams(eps=225.0, delta1=0.0, delta2=0.0, deltaR=54.18)
    axes = (SweepAxis("eps", 25.0, 400.0, 8), SweepAxis("deltaR", 20.0, 300.0, 16))
    ridge = find_dephasing_ridge(sweep(q, make_bath(), t_100mk, axes))
    assert all(not p.interior for p in ridge)

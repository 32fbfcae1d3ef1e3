import math

import pytest

from pilotbounds.montecarlo import McConfig
from pilotbounds.params import SisoParams, SnrValue
from pilotbounds.sweeps import (
    CONVERGENCE_DEFAULT_T_GRID,
    FIG1_DEFAULT_SNR_DB,
    FIG1_DEFAULT_T_GRID,
    FIG2_DEFAULT_T_GRID,
    SweepSpec,
    convergence_table,
    sweep_fig1,
    sweep_fig2,
    validate_all,
)
from pilotbounds import siso

SMALL_CFG = McConfig(samples=20_000, seed=42)


def test_sweep_spec_validation():
    SweepSpec(variable="blocklength", grid=(2, 4, 8), fixed={}, curves=("a",))
    with pytest.raises(ValueError):
        SweepSpec(variable="bogus", grid=(2, 4), fixed={}, curves=())
    with pytest.raises(ValueError):
        SweepSpec(variable="blocklength", grid=(2,), fixed={}, curves=())
    with pytest.raises(ValueError):
        SweepSpec(variable="blocklength", grid=(2, 2, 4), fixed={}, curves=())


def test_fig1_shape_and_values():
    table = sweep_fig1()
    assert table.columns == (
        "snr_db", "T", "capacity", "separate", "separate_tau_star", "joint_j1_tau1",
    )
    assert len(table.rows) == len(FIG1_DEFAULT_T_GRID) * len(FIG1_DEFAULT_SNR_DB)
    for row in table.rows:
        db, T, cap, sep, tau_star, j1 = row
        snr = SnrValue.from_db(db)
        assert cap == siso.capacity_csi(snr)
        assert j1 == siso.joint_bound_j1(SisoParams(T=T, tau=1, snr=snr))
        ref = siso.separate_bound(T, snr)
        assert (sep, tau_star) == (ref.value, ref.tau_star)
        assert j1 <= cap and sep <= cap


def test_fig1_rejects_bad_grid():
    with pytest.raises(ValueError):
        sweep_fig1(T_grid=(1, 2, 4))
    with pytest.raises(ValueError):
        sweep_fig1(T_grid=(4, 2))


def test_fig2_values():
    table = sweep_fig2(T_grid=(2, 10, 100), snr_db_list=(10.0,))
    assert table.columns == ("T", "asymptote_db", "advantage_10dB_db")
    by_T = {row[0]: row for row in table.rows}
    assert by_T[2][1] == 0.0
    assert by_T[10][1] == pytest.approx(1.899188845528701, rel=1e-12)
    assert by_T[10][2] == pytest.approx(1.7192, abs=2e-4)
    # finite-SNR advantage sits below the asymptote for long blocks
    assert by_T[100][2] < by_T[100][1]
    assert len(FIG2_DEFAULT_T_GRID) >= 20
    assert FIG2_DEFAULT_T_GRID[0] == 2 and FIG2_DEFAULT_T_GRID[-1] == 100


def test_convergence_table_values_and_span_check():
    assert CONVERGENCE_DEFAULT_T_GRID[0] == 10
    assert CONVERGENCE_DEFAULT_T_GRID[-1] == 10000
    table = convergence_table(T_grid=(10, 100, 1000), snr=SnrValue(10.0))
    for T, gap_sep, sep_scaled, gap_j2, j2_scaled in table.rows:
        assert gap_sep > 0.0 and gap_j2 > 0.0
        assert sep_scaled == pytest.approx(gap_sep * math.sqrt(T), rel=0)
        assert j2_scaled == pytest.approx(gap_j2 * T / math.log2(T), rel=0)
    with pytest.raises(ValueError):
        convergence_table(T_grid=(10, 99), snr=SnrValue(10.0))


def test_validate_all_passes_and_is_deterministic():
    a = validate_all(SMALL_CFG)
    b = validate_all(SMALL_CFG)
    assert a.passed
    assert a.max_abs_z <= 4.0
    assert a == b
    # every pairing family is represented
    names = [c.name for c in a.cells]
    for prefix in ("capacity[", "penalty_term[", "ctr_rank1[", "reduction_", "gram_minimal["):
        assert any(n.startswith(prefix) for n in names)
    text = a.render()
    assert "PASS" in text and f"seed={SMALL_CFG.seed}" in text


def test_validate_all_seed_variation_still_passes():
    assert validate_all(McConfig(samples=20_000, seed=7)).passed


def test_validate_all_catches_corrupted_closed_form(monkeypatch):
    # shift one closed form; the harness must flag the disagreement
    original = siso.capacity_csi
    monkeypatch.setattr(siso, "capacity_csi", lambda snr: original(snr) + 0.05)
    report = validate_all(SMALL_CFG)
    assert not report.passed
    assert "FAIL" in report.render()


def test_validate_all_catches_corrupted_reduction(monkeypatch):
    # even a one-ulp-scale break of the exact single-antenna reduction trips it
    original = siso.joint_bound_j1
    monkeypatch.setattr(siso, "joint_bound_j1", lambda p: original(p) + 1e-9)
    report = validate_all(SMALL_CFG)
    assert not report.passed
    assert math.isinf(report.max_abs_z)

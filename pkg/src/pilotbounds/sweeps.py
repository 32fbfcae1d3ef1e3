"""Figure and table generators plus the closed-form-vs-MC harness.

Every emitted table is a pure function of its arguments (grids and
McConfig), with rows in grid order, so repeated runs serialize to
identical bytes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import NamedTuple, Optional, Sequence

import numpy as np

from . import mimo, montecarlo as mc, siso
from .montecarlo import Estimate, McConfig
from .params import MimoParams, SisoParams, SnrValue

FIG1_DEFAULT_T_GRID = (2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 64, 96, 128)
FIG1_DEFAULT_SNR_DB = (0.0, 10.0)
FIG2_DEFAULT_T_GRID = tuple(
    sorted({int(round(x)) for x in np.logspace(math.log10(2.0), 2.0, 25)})
)
FIG2_DEFAULT_SNR_DB = (10.0, 20.0)
CONVERGENCE_DEFAULT_T_GRID = tuple(
    sorted({int(round(x)) for x in np.logspace(1.0, 4.0, 13)})
)

_Z_LIMIT = 4.0


@dataclass(frozen=True)
class SweepSpec:
    """Validated description of one sweep: what varies, over which grid."""

    variable: str
    grid: tuple
    fixed: dict
    curves: tuple[str, ...]
    mc_config: Optional[McConfig] = None

    def __post_init__(self):
        if self.variable not in ("blocklength", "snr_db"):
            raise ValueError(f"variable must be 'blocklength' or 'snr_db', got {self.variable!r}")
        if len(self.grid) < 2:
            raise ValueError(f"grid needs at least 2 points, got {len(self.grid)}")
        if any(b <= a for a, b in zip(self.grid, self.grid[1:])):
            raise ValueError("grid must be strictly increasing")


class SweepTable(NamedTuple):
    columns: tuple[str, ...]
    rows: tuple[tuple, ...]


class ValidationCell(NamedTuple):
    name: str
    reference: float
    estimate: float
    std_error: float
    z: float


class ValidationReport(NamedTuple):
    config: McConfig
    workers: int
    cells: tuple[ValidationCell, ...]
    max_abs_z: float
    passed: bool

    def render(self) -> str:
        lines = [
            "closed-form vs Monte Carlo validation",
            f"seed={self.config.seed} stream_id={self.config.stream_id} "
            f"samples={self.config.samples} workers={self.workers}",
            f"{'name':44s} {'reference':>14s} {'estimate':>14s} {'std_error':>12s} {'z':>8s}",
        ]
        for c in self.cells:
            lines.append(
                f"{c.name:44s} {c.reference:14.6f} {c.estimate:14.6f} "
                f"{c.std_error:12.3e} {c.z:8.2f}"
            )
        lines.append(f"max |z| = {self.max_abs_z:.2f}")
        lines.append("PASS (all |z| <= 4)" if self.passed else "FAIL (some |z| > 4)")
        return "\n".join(lines) + "\n"


def _check_t_grid(T_grid: Sequence[int]) -> tuple[int, ...]:
    grid = tuple(T_grid)
    for T in grid:
        if isinstance(T, bool) or not isinstance(T, int) or T < 2:
            raise ValueError(f"every blocklength must be an integer >= 2, got {T!r}")
    return grid


def sweep_fig1(
    T_grid: Sequence[int] = FIG1_DEFAULT_T_GRID,
    snr_db_list: Sequence[float] = FIG1_DEFAULT_SNR_DB,
) -> SweepTable:
    """Spectral efficiency vs blocklength: capacity, best separate bound
    (with its pilot count), and the joint bound at one pilot."""
    grid = _check_t_grid(T_grid)
    SweepSpec(
        variable="blocklength",
        grid=grid,
        fixed={"snr_db_list": tuple(snr_db_list)},
        curves=("C", "I_S", "I_J1"),
    )
    rows = []
    for db in snr_db_list:
        snr = SnrValue.from_db(db)
        c = siso.capacity_csi(snr)
        for T in grid:
            sep = siso.separate_bound(T, snr)
            j1 = siso.joint_bound_j1(SisoParams(T=T, tau=1, snr=snr))
            rows.append((float(db), T, c, sep.value, sep.tau_star, j1))
    return SweepTable(
        columns=("snr_db", "T", "capacity", "separate", "separate_tau_star", "joint_j1_tau1"),
        rows=tuple(rows),
    )


def sweep_fig2(
    T_grid: Sequence[int] = FIG2_DEFAULT_T_GRID,
    snr_db_list: Sequence[float] = FIG2_DEFAULT_SNR_DB,
) -> SweepTable:
    """Joint-over-separate power advantage vs blocklength, in dB:
    the high-SNR asymptote plus the bisected value at each finite SNR."""
    grid = _check_t_grid(T_grid)
    snr_db_list = tuple(float(db) for db in snr_db_list)
    SweepSpec(
        variable="blocklength",
        grid=grid,
        fixed={"snr_db_list": snr_db_list},
        curves=("asymptote",) + tuple(f"advantage_{db:g}dB" for db in snr_db_list),
    )
    rows = []
    for T in grid:
        row = [T, siso.power_advantage_asymptotic(T).value_db]
        for db in snr_db_list:
            row.append(siso.power_advantage_at_snr(T, SnrValue.from_db(db)).value_db)
        rows.append(tuple(row))
    return SweepTable(
        columns=("T", "asymptote_db") + tuple(f"advantage_{db:g}dB_db" for db in snr_db_list),
        rows=tuple(rows),
    )


def convergence_table(
    T_grid: Sequence[int] = CONVERGENCE_DEFAULT_T_GRID,
    snr=SnrValue(10.0),
) -> SweepTable:
    """Gap-to-capacity decay: raw gaps plus the rate-normalized columns
    (C - I_S)*sqrt(T) and (C - I_J2)*T/log2(T), which must stay bounded.

    Requires the grid to span at least two decades.
    """
    grid = _check_t_grid(T_grid)
    if grid[-1] < 100 * grid[0]:
        raise ValueError(
            f"grid must span >= 2 decades, got [{grid[0]}, {grid[-1]}]"
        )
    SweepSpec(
        variable="blocklength",
        grid=grid,
        fixed={"snr": snr},
        curves=("C-I_S", "(C-I_S)*sqrt(T)", "C-I_J2", "(C-I_J2)*T/log2(T)"),
    )
    c = siso.capacity_csi(snr)
    rows = []
    for T in grid:
        gap_sep = c - siso.separate_bound(T, snr).value
        gap_joint = c - siso.joint_bound_j2(SisoParams(T=T, tau=1, snr=snr))
        rows.append(
            (
                T,
                gap_sep,
                gap_sep * math.sqrt(T),
                gap_joint,
                gap_joint * T / math.log2(T),
            )
        )
    return SweepTable(
        columns=(
            "T",
            "capacity_gap_separate",
            "separate_scaled",
            "capacity_gap_joint2",
            "joint2_scaled",
        ),
        rows=tuple(rows),
    )


_VALIDATE_SNR_DB = (-10.0, 0.0, 10.0, 20.0)
_VALIDATE_T = (2, 6, 10, 20)
_VALIDATE_TAU = (0, 1, 2)
_VALIDATE_RANK1 = ((1, 1), (1, 4), (4, 1))
_VALIDATE_GRAM = MimoParams(n_t=2, n_r=2, T=6, tau=2, snr=SnrValue(10.0))
_VALIDATE_PERTURBATIONS = ((2.5, 1.5), (3.0, 1.0), (4.0, 0.0))


def _z_two_sided(reference: float, est: Estimate) -> float:
    diff = reference - est.mean
    if est.std_error == 0.0:
        return 0.0 if diff == 0.0 else math.inf
    return diff / est.std_error


def validate_all(cfg: McConfig, workers: int = 1) -> ValidationReport:
    """Run every closed-form-vs-sampler pairing on the standard grid.

    Cells: perfect-CSI capacity, the joint-bound penalty expectation,
    rank-1 capacity functionals, the exact n=1 reduction of the MIMO
    bounds, and pilot-Gram minimality.  Matrix-valued cells run at
    cfg.samples//10.  z is two-sided except for the Gram cells, where
    only a perturbation beating the uniform Gram counts against the
    claim.  PASS requires |z| <= 4 everywhere.
    """
    cells = []
    stream = 0

    def next_cfg(samples: int) -> McConfig:
        nonlocal stream
        stream += 1
        return replace(cfg.substream(stream), samples=max(100, samples))

    for db in _VALIDATE_SNR_DB:
        snr = SnrValue.from_db(db)
        closed = siso.capacity_csi(snr)
        est = mc.sample_capacity_siso(snr, next_cfg(cfg.samples), workers)
        cells.append(
            ValidationCell(
                name=f"capacity[snr_db={db:g}]",
                reference=closed,
                estimate=est.mean,
                std_error=est.std_error,
                z=_z_two_sided(closed, est),
            )
        )

    from .expint import LOG2E, expint_scaled_sum

    for db in _VALIDATE_SNR_DB:
        snr = SnrValue.from_db(db)
        for T in _VALIDATE_T:
            for tau in _VALIDATE_TAU:
                if tau >= T:
                    continue
                closed = LOG2E * expint_scaled_sum(T - tau, tau + 1.0 / snr.linear)
                est = mc.sample_penalty_term(T, tau, snr, next_cfg(cfg.samples), workers)
                cells.append(
                    ValidationCell(
                        name=f"penalty_term[T={T},tau={tau},snr_db={db:g}]",
                        reference=closed,
                        estimate=est.mean,
                        std_error=est.std_error,
                        z=_z_two_sided(closed, est),
                    )
                )

    for t, r in _VALIDATE_RANK1:
        for db in (0.0, 10.0):
            rho = SnrValue.from_db(db)
            closed = mimo.capacity_ctr(t, r, rho, cfg).mean
            est = mc.sample_ctr(t, r, rho, next_cfg(cfg.samples // 10), workers)
            cells.append(
                ValidationCell(
                    name=f"ctr_rank1[t={t},r={r},rho_db={db:g}]",
                    reference=closed,
                    estimate=est.mean,
                    std_error=est.std_error,
                    z=_z_two_sided(closed, est),
                )
            )

    for db in (0.0, 10.0):
        snr = SnrValue.from_db(db)
        p = MimoParams(n_t=1, n_r=1, T=10, tau=2, snr=snr)
        sp = SisoParams(T=10, tau=2, snr=snr)
        pair_cfg = next_cfg(100)
        for label, mimo_fn, siso_fn in (
            ("j1", mimo.mimo_joint_j1, siso.joint_bound_j1),
            ("j2", mimo.mimo_joint_j2, siso.joint_bound_j2),
        ):
            reduced = mimo_fn(p, pair_cfg, workers)
            reference = siso_fn(sp)
            cells.append(
                ValidationCell(
                    name=f"reduction_{label}[T=10,tau=2,snr_db={db:g}]",
                    reference=reference,
                    estimate=reduced.mean,
                    std_error=0.0,
                    z=0.0 if reduced.mean == reference else math.inf,
                )
            )

    gram_cfg = next_cfg(cfg.samples // 10)
    report = mimo.pilot_gram_optimality_check(
        _VALIDATE_GRAM, _VALIDATE_PERTURBATIONS, gram_cfg, workers
    )
    for row in report.rows:
        # One-sided: only the uniform Gram exceeding the perturbation
        # by more than the margin counts against minimality.
        z = 0.0
        if row.combined_std_error > 0.0:
            z = max(0.0, -row.excess_over_uniform / row.combined_std_error)
        cells.append(
            ValidationCell(
                name=f"gram_minimal[diag={row.diagonal!r}]",
                reference=report.uniform.mean,
                estimate=row.estimate.mean,
                std_error=row.combined_std_error,
                z=z,
            )
        )

    max_abs_z = max(abs(c.z) for c in cells)
    return ValidationReport(
        config=cfg,
        workers=workers,
        cells=tuple(cells),
        max_abs_z=max_abs_z,
        passed=max_abs_z <= _Z_LIMIT,
    )

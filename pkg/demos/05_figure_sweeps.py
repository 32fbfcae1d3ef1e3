"""Reproduce the headline tables and run the self-check harness.

The sweep helpers emit plain (columns, rows) tables meant for the CLI
or for plotting.  The convergence table shows the two decay laws: the
joint bound approaches capacity like log2(T)/T, the separate bound
only like 1/sqrt(T).  The validation harness re-derives every closed
form from an independent Monte Carlo route and insists on agreement
within four standard errors.
"""

from pilotbounds import (
    McConfig,
    SnrValue,
    convergence_table,
    sweep_fig1,
    sweep_fig2,
    validate_all,
)


def show(table, max_rows=8):
    print("  " + ", ".join(table.columns))
    for row in table.rows[:max_rows]:
        print("  " + ", ".join(f"{v:.4f}" if isinstance(v, float) else str(v) for v in row))
    if len(table.rows) > max_rows:
        print(f"  ... {len(table.rows) - max_rows} more rows")


print("bounds vs blocklength (fig1 grid, first rows)")
show(sweep_fig1(T_grid=(2, 4, 8, 16, 32, 64), snr_db_list=(10.0,)))

print()
print("power advantage vs blocklength (fig2 grid)")
show(sweep_fig2(T_grid=(2, 5, 10, 25, 50, 100), snr_db_list=(10.0, 20.0)))

print()
print("gap decay at 10 dB: scaled columns must flatten, not drift")
show(convergence_table(T_grid=(10, 32, 100, 316, 1000, 3162, 10000)), max_rows=7)

print()
print("self-check: closed forms vs Monte Carlo (reduced sample count)")
report = validate_all(McConfig(samples=20_000, seed=0))
print(f"  cells: {len(report.cells)}, max |z| = {report.max_abs_z:.2f}, "
      f"passed: {report.passed}")
print("  rerun `pilotbounds validate` for the full-size version")

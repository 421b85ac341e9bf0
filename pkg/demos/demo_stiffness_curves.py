"""Axial stiffness curves for a stiff and a compliant configuration.

Runs case 1 (conventional, tight osculation) and case 3 (wire race on
aluminium rings) under both ring boundary conditions, prints a compact
load table, and writes the comparison plot to demo_stiffness.svg in the
current directory.
"""

import numpy as np

from wirebearing.config import default_config_path, load_config
from wirebearing.runner import run_cases
from wirebearing.svgplot import line_plot


def main():
    suite = load_config(default_config_path()).select([1, 3])
    results, failures = run_cases(suite, n_steps=81)
    assert not failures, failures

    print("axial force [kN] against displacement [mm]:")
    print(f"{'disp':>8}", end="")
    for r in results:
        print(f"  {f'case{r.case_id}/{r.boundary_condition[:7]}':>13}", end="")
    print()

    # sample everyone on the shortest sweep so rows stay comparable
    u_max = min(r.curve.samples[-1].axial_disp for r in results)
    grid = np.linspace(0.0, u_max, 9)
    tables = []
    for r in results:
        disp = np.array([p.axial_disp for p in r.curve.samples])
        force = np.array([p.axial_force for p in r.curve.samples])
        tables.append(np.interp(grid, disp, force))
    for i, u in enumerate(grid):
        print(f"{u:8.4f}", end="")
        for col in tables:
            print(f"  {col[i] / 1000.0:13.1f}", end="")
        print()

    print()
    for r in results:
        fa = np.array([p.axial_force for p in r.curve.samples])
        disp = np.array([p.axial_disp for p in r.curve.samples])
        mask = fa <= r.c0a
        coeffs = np.polyfit(disp[mask], fa[mask], 1)
        resid = np.linalg.norm(fa[mask] - np.polyval(coeffs, disp[mask]))
        resid /= np.linalg.norm(fa[mask])
        print(f"case {r.case_id} {r.boundary_condition:>9}: "
              f"linear-fit residual {resid:.4f}")

    series = []
    for r in results:
        xs = [p.axial_disp for p in r.curve.samples]
        ys = [p.axial_force / 1000.0 for p in r.curve.samples]
        series.append((f"case {r.case_id} {r.boundary_condition}", xs, ys))
    line_plot("demo_stiffness.svg", series,
              title="Axial stiffness, rated range",
              xlabel="axial displacement [mm]", ylabel="axial force [kN]")
    print()
    print("wrote demo_stiffness.svg")


if __name__ == "__main__":
    main()

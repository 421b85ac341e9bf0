"""Solve a single ball-on-groove contact and walk through the numbers.

A 16.5 mm steel ball pressed into a conforming groove (osculation 0.943)
on a 460 mm pitch circle, the same geometry the default case suite uses
for its stiff configurations. Prints the contact patch across a load
sweep and a short pressure profile at the top load.
"""

import math

from wirebearing import hertz
from wirebearing.geometry import groove_radius


def main():
    dw = 16.5
    osculation = 0.943
    groove = groove_radius(osculation, dw)
    alpha = math.radians(45.0)
    rolling = 2.0 * math.cos(alpha) / (460.0 + dw * math.cos(alpha))

    e_star = hertz.effective_modulus(200000.0, 0.30)
    curv = hertz.curvature_analysis(dw, groove, rolling)
    print(f"ball {dw} mm, groove {groove:.3f} mm, E* = {e_star:.1f} MPa")
    print(f"curvature sum {curv.rho_sum:.6f} 1/mm, "
          f"difference {curv.curvature_difference:.6f}")
    print()

    print(f"{'Q [N]':>10} {'a [mm]':>8} {'b [mm]':>8} {'a/b':>7} "
          f"{'delta [um]':>11} {'p0 [MPa]':>9}")
    for q in (100.0, 500.0, 2000.0, 8000.0, 20000.0):
        sol = hertz.solve_hertz(curv, e_star, q)
        print(f"{q:10.0f} {sol.semi_major_a:8.4f} {sol.semi_minor_b:8.4f} "
              f"{sol.axis_ratio:7.2f} {sol.approach_delta * 1000.0:11.3f} "
              f"{sol.peak_pressure_p0:9.0f}")

    sol = hertz.solve_hertz(curv, e_star, 20000.0)
    print()
    print("pressure along the major axis at Q = 20 kN:")
    for x, p in hertz.pressure_profile(sol, 9):
        print(f"  x = {x:+8.4f} mm   p = {p:7.1f} MPa")

    k = hertz.contact_stiffness(curv, e_star)
    print()
    print(f"load-deflection constant K = {k:.1f} N/mm^1.5, so Q = K * delta^1.5")
    print(f"check at 20 kN: {hertz.interference_to_load(k, sol.approach_delta):.1f} N")


if __name__ == "__main__":
    main()

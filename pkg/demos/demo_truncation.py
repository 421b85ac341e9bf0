"""Contact-ellipse truncation on a narrow wire raceway.

Case 4 keeps the tight 0.943 osculation on a wire race, so its ellipse
outgrows the 14.8 deg arc at a few percent of rated load. This reports
where clipping starts and shows what it does to the pressure field at
rated load.
"""

import numpy as np

from wirebearing.config import default_config_path, load_config
from wirebearing.geometry import groove_radius
from wirebearing.runner import run_single
from wirebearing.solver import CaseModel, operating_point
from wirebearing.truncation import (
    ellipse_placement, truncation_status, truncated_pressure)


def main():
    suite = load_config(default_config_path()).select([4], "unclamped")
    definition = suite.definitions[0]
    result = run_single(definition, n_steps=121)

    print(f"case {result.case_id} {result.boundary_condition}, "
          f"C0a = {result.c0a / 1000.0:.2f} kN")
    if result.complete_fraction is None:
        depth = "stays partial up to rated load"
    else:
        depth = f"complete at {result.complete_fraction:.3f} C0a"
    print(f"truncation onset at {result.onset_fraction:.3f} C0a, {depth}")
    print()

    model = CaseModel(definition)
    u_rated = float(np.interp(
        result.c0a,
        [p.axial_force for p in result.curve.samples],
        [p.axial_disp for p in result.curve.samples]))
    phi = float(np.interp(
        u_rated,
        [p.axial_disp for p in result.curve.samples],
        [p.wire_twist for p in result.curve.samples]))
    point = operating_point(model, u_rated, phi_slip_prev=phi)
    placement = ellipse_placement(point, definition.geometry)
    status = truncation_status(placement)

    print(f"at rated load: ellipse center {placement.center_psi:+.2f} deg, "
          f"half width {placement.angular_half_width:.2f} deg, "
          f"raceway half extent {placement.raceway_half_extent} deg")
    print(f"state = {status.state}, edge margin = {status.onset_margin:.2f} deg")

    g = definition.geometry
    r_inner = groove_radius(g.osculation_inner, g.ball_diameter)
    r_outer = groove_radius(g.osculation_outer, g.ball_diameter)
    if point.hertz_inner.semi_major_a / r_inner >= point.hertz_outer.semi_major_a / r_outer:
        governing = point.hertz_inner
    else:
        governing = point.hertz_outer
    peak, profile = truncated_pressure(governing, placement)
    print()
    print(f"untruncated peak {governing.peak_pressure_p0:.0f} MPa, "
          f"rescaled peak {peak:.0f} MPa "
          f"(+{100.0 * (peak / governing.peak_pressure_p0 - 1.0):.1f}%)")
    print("clipped pressure along the arc:")
    for row in profile[::25]:
        print(f"  psi = {row[0]:+7.2f} deg   p = {row[1]:7.1f} MPa")


if __name__ == "__main__":
    main()

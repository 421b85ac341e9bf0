"""Static axial capacity of the shipped case suite.

Capacity is the axial load at which the worst contact reaches the
configured pressure limit with rigid rings and the nominal contact
angle held fixed. Osculation is the only thing separating the two
capacity classes in the defaults, so the 0.943 vs 0.87 ratio is a
direct measure of how much conformity buys.
"""

from wirebearing.config import default_config_path, load_config
from wirebearing.solver import CaseModel, static_capacity


def main():
    suite = load_config(default_config_path())
    print(f"config: {suite.source}")
    print()

    seen = {}
    for definition in suite.definitions:
        if definition.boundary_condition != "clamped":
            continue
        c0a, point = static_capacity(CaseModel(definition))
        seen[definition.case_id] = c0a
        print(f"case {definition.case_id} ({definition.bearing_kind}, "
              f"s = {definition.geometry.osculation_inner}):")
        print(f"  C0a = {c0a / 1000.0:9.2f} kN"
              f"   per-ball Q = {point.contact_force / 1000.0:7.3f} kN"
              f"   u* = {point.axial_disp * 1000.0:6.1f} um"
              f"   p0 = {point.peak_pressure:6.0f} MPa")

    print()
    ratio = seen[1] / seen[2]
    print(f"capacity ratio tight/open osculation: {ratio:.4f}")


if __name__ == "__main__":
    main()

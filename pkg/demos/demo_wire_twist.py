"""How seat friction shapes wire twist and the contact angle.

Cases 3 and 5 share everything except the wire-to-ring friction
coefficient (0.1 vs 0.3). The wires start stuck on their seats; the
ball load has to overcome the friction grip plus the seating preload
before they pivot. Higher friction holds on longer, then releases into
a larger swing, which shows up as a later and taller contact-angle hump.
"""

import math

import numpy as np

from wirebearing.config import default_config_path, load_config
from wirebearing.runner import run_cases


def main():
    suite = load_config(default_config_path()).select([3, 5], "unclamped")
    results, failures = run_cases(suite, n_steps=161)
    assert not failures, failures

    for r in results:
        mu = r.definition.mu_wire_ring
        samples = r.curve.samples
        q = np.array([p.contact_force for p in samples])
        alpha = np.degrees([p.contact_angle for p in samples])
        twist = np.degrees([p.wire_twist for p in samples])
        psi = np.degrees([p.arc_coordinate for p in samples])
        fa = np.array([p.axial_force for p in samples])

        idx = int(np.argmax(alpha))
        onset_q = q[np.searchsorted(fa, r.twist_onset_load)]
        print(f"case {r.case_id} (mu_wire_ring = {mu}):")
        print(f"  twist onset at Fa = {r.twist_onset_load / 1000.0:7.2f} kN"
              f"  ({onset_q / 1000.0:.2f} kN per ball)")
        print(f"  contact angle peaks at {alpha[idx]:.3f} deg, "
              f"Fa = {fa[idx] / 1000.0:.1f} kN "
              f"({fa[idx] / r.c0a:.3f} of C0a)")
        print(f"  twist at rated load {r.phi_at_c0a:.3f} deg, "
              f"ellipse center swing {psi.min():+.2f} .. {psi.max():+.2f} deg")
        print()

    r3, r5 = results
    print("same geometry, three times the friction:")
    print(f"  onset load ratio = "
          f"{r5.twist_onset_load / r3.twist_onset_load:.2f}")
    peak3 = max(math.degrees(p.contact_angle) for p in r3.curve.samples)
    peak5 = max(math.degrees(p.contact_angle) for p in r5.curve.samples)
    print(f"  angle hump: {peak3:.3f} deg -> {peak5:.3f} deg")


if __name__ == "__main__":
    main()

"""Contact mechanics tests.

The elliptical-contact oracle here is deliberately independent of the
package: scipy's elliptic integrals, a dense tabulation of the axis-ratio
relation refined by plain bisection, and the textbook formulas written
out again from scratch.
"""

import math

import numpy as np
import pytest
from scipy import integrate, special

from wirebearing import hertz
from wirebearing.errors import BearingError

STEEL = dict(e=200000.0, nu=0.30)
E_STAR_STEEL = 109890.10989010989  # 100000/0.91 by hand


def oracle_kappa(f_rho):
    """Axis ratio from curvature difference, solved against scipy.

    Dense log-spaced tabulation of the transcendental relation, then
    bisection inside the bracketing cell down to 1e-14 residual.
    """
    def f_of_kappa(k):
        if k == 1.0:
            return 0.0
        m = 1.0 - 1.0 / (k * k)
        big_k, big_e = special.ellipk(m), special.ellipe(m)
        return ((k * k + 1.0) * big_e - 2.0 * big_k) / ((k * k - 1.0) * big_e)

    grid = np.logspace(0.0, 4.0, 4001)
    vals = np.array([f_of_kappa(k) for k in grid])
    idx = np.searchsorted(vals, f_rho)
    lo, hi = grid[idx - 1], grid[idx]
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        r = f_of_kappa(mid) - f_rho
        if abs(r) < 1e-14:
            return mid
        if r < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def oracle_contact(f_rho, rho_sum, e_star, q):
    """Ellipse semi-axes, approach and peak pressure, oracle route."""
    kappa = oracle_kappa(f_rho)
    m = 1.0 - 1.0 / (kappa * kappa)
    big_k, big_e = special.ellipk(m), special.ellipe(m)
    b = (3.0 * q * big_e / (math.pi * kappa * e_star * rho_sum)) ** (1.0 / 3.0)
    a = kappa * b
    delta = 3.0 * q * big_k / (2.0 * math.pi * a * e_star)
    p0 = 3.0 * q / (2.0 * math.pi * a * b)
    return a, b, delta, p0


def test_effective_modulus_steel_pair():
    es = hertz.effective_modulus(STEEL["e"], STEEL["nu"])
    assert es == pytest.approx(E_STAR_STEEL, rel=1e-12)


def test_effective_modulus_mixed_pair_consistency():
    es = hertz.effective_modulus(200000.0, 0.30, 71000.0, 0.33)
    inv = (1 - 0.30**2) / 200000.0 + (1 - 0.33**2) / 71000.0
    assert es == pytest.approx(1.0 / inv, rel=1e-12)


def test_elliptic_integrals_against_scipy():
    for m in (0.0, 0.1, 0.5, 0.9, 0.99, 0.999999):
        k, e = hertz.elliptic_integrals(m)
        assert k == pytest.approx(special.ellipk(m), rel=1e-13)
        assert e == pytest.approx(special.ellipe(m), rel=1e-13)


def test_curvature_sphere_on_flat():
    curv = hertz.curvature_analysis(20.0, math.inf, 0.0)
    assert curv.rho_sum == pytest.approx(0.2, rel=1e-12)
    assert curv.curvature_difference == 0.0


def test_curvature_conforming_groove():
    # s = 0.943 osculation: 1/rr = 2s/Dw, so F = 0.0943/0.1057 by hand
    rr = 20.0 / (2.0 * 0.943)
    curv = hertz.curvature_analysis(20.0, rr, 0.0)
    assert 0.0 < curv.curvature_difference < 1.0
    assert curv.curvature_difference == pytest.approx(943.0 / 1057.0, rel=1e-12)
    assert curv.recompute_difference() == pytest.approx(
        curv.curvature_difference, rel=1e-12)


def test_curvature_degenerate_osculation_rejected():
    with pytest.raises(BearingError):
        hertz.curvature_analysis(20.0, 10.0, 0.0)


def test_circular_contact_closed_form():
    curv = hertz.curvature_analysis(20.0, math.inf, 0.0)
    es = hertz.effective_modulus(STEEL["e"], STEEL["nu"])
    sol = hertz.solve_hertz(curv, es, 1000.0)
    r_eff = 10.0  # sphere radius; flat contributes nothing
    p0 = (6.0 * 1000.0 * es**2 / (math.pi**3 * r_eff**2)) ** (1.0 / 3.0)
    a = (3.0 * 1000.0 * r_eff / (4.0 * es)) ** (1.0 / 3.0)
    assert sol.semi_major_a == pytest.approx(sol.semi_minor_b, rel=1e-12)
    assert sol.peak_pressure_p0 == pytest.approx(p0, rel=1e-9)
    assert sol.semi_major_a == pytest.approx(a, rel=1e-9)
    assert sol.approach_delta == pytest.approx(a * a / r_eff, rel=1e-9)


def test_zero_load_keeps_stiffness():
    curv = hertz.curvature_analysis(20.0, 10.604, 0.0)
    es = hertz.effective_modulus(STEEL["e"], STEEL["nu"])
    sol = hertz.solve_hertz(curv, es, 0.0)
    assert sol.semi_major_a == 0.0
    assert sol.approach_delta == 0.0
    assert sol.peak_pressure_p0 == 0.0
    assert sol.stiffness_K > 0.0


def test_negative_load_rejected():
    curv = hertz.curvature_analysis(20.0, 10.604, 0.0)
    with pytest.raises(BearingError):
        hertz.solve_hertz(curv, E_STAR_STEEL, -1.0)


def test_load_deflection_roundtrip():
    curv = hertz.curvature_analysis(20.0, 10.604, 0.0)
    es = hertz.effective_modulus(STEEL["e"], STEEL["nu"])
    sol = hertz.solve_hertz(curv, es, 5000.0)
    q_back = hertz.interference_to_load(sol.stiffness_K, sol.approach_delta)
    assert q_back == pytest.approx(5000.0, rel=1e-9)


def test_interference_no_tension():
    assert hertz.interference_to_load(1e5, 0.0) == 0.0
    assert hertz.interference_to_load(1e5, -0.01) == 0.0


def test_peak_pressure_load_identity():
    curv = hertz.curvature_analysis(16.0, 8.4835, 0.0)
    es = hertz.effective_modulus(STEEL["e"], STEEL["nu"])
    for q in (10.0, 1000.0, 30000.0):
        sol = hertz.solve_hertz(curv, es, q)
        q_id = sol.peak_pressure_p0 * (2.0 / 3.0) * math.pi * sol.semi_major_a * sol.semi_minor_b
        assert q_id == pytest.approx(q, rel=1e-9)


def test_scaling_laws_over_two_decades():
    curv = hertz.curvature_analysis(20.0, 10.604, 0.0)
    es = hertz.effective_modulus(STEEL["e"], STEEL["nu"])
    base = hertz.solve_hertz(curv, es, 100.0)
    for factor in (10.0, 100.0):
        sol = hertz.solve_hertz(curv, es, 100.0 * factor)
        assert sol.semi_major_a / base.semi_major_a == pytest.approx(factor ** (1 / 3), rel=1e-6)
        assert sol.semi_minor_b / base.semi_minor_b == pytest.approx(factor ** (1 / 3), rel=1e-6)
        assert sol.peak_pressure_p0 / base.peak_pressure_p0 == pytest.approx(factor ** (1 / 3), rel=1e-6)
        assert sol.approach_delta / base.approach_delta == pytest.approx(factor ** (2 / 3), rel=1e-6)


def test_monotone_in_load():
    curv = hertz.curvature_analysis(20.0, 10.604, 0.0)
    es = hertz.effective_modulus(STEEL["e"], STEEL["nu"])
    prev = hertz.solve_hertz(curv, es, 1.0)
    for q in (10.0, 100.0, 1000.0, 10000.0):
        sol = hertz.solve_hertz(curv, es, q)
        assert sol.semi_major_a > prev.semi_major_a
        assert sol.semi_minor_b > prev.semi_minor_b
        assert sol.approach_delta > prev.approach_delta
        assert sol.peak_pressure_p0 > prev.peak_pressure_p0
        prev = sol


def test_circular_limit_continuous():
    # axis ratio should walk down to 1 smoothly as F(rho) -> 0
    es = E_STAR_STEEL
    ratios = []
    for f in (1e-2, 1e-4, 1e-6, 1e-8):
        kappa = hertz.solve_axis_ratio(f)
        ratios.append(kappa)
    assert all(r2 < r1 for r1, r2 in zip(ratios, ratios[1:]))
    assert ratios[-1] == pytest.approx(1.0, abs=1e-4)
    sol = hertz.solve_hertz(
        hertz.CurvatureSet(0.1, 0.1, 0.0, 0.0, 0.2, 0.0), es, 500.0)
    assert sol.semi_major_a / sol.semi_minor_b == pytest.approx(1.0, rel=1e-12)


def test_oracle_equivalence_random_contacts():
    rng = np.random.default_rng(20260815)
    es = hertz.effective_modulus(STEEL["e"], STEEL["nu"])
    for _ in range(20):
        f_rho = float(rng.uniform(0.05, 0.995))
        q = float(10.0 ** rng.uniform(1.0, 4.5))
        rho_sum = float(rng.uniform(0.05, 0.5))
        ball = rho_sum / 2.0  # synthetic split; only sums matter
        curv = hertz.CurvatureSet(ball, ball, 0.0, 0.0, rho_sum, f_rho)
        sol = hertz.solve_hertz(curv, es, q)
        a, b, delta, p0 = oracle_contact(f_rho, rho_sum, es, q)
        assert sol.semi_major_a == pytest.approx(a, rel=5e-3)
        assert sol.semi_minor_b == pytest.approx(b, rel=5e-3)
        assert sol.approach_delta == pytest.approx(delta, rel=5e-3)
        assert sol.peak_pressure_p0 == pytest.approx(p0, rel=5e-3)


def test_pressure_profile_shape():
    curv = hertz.curvature_analysis(20.0, 10.604, 0.0)
    es = hertz.effective_modulus(STEEL["e"], STEEL["nu"])
    sol = hertz.solve_hertz(curv, es, 2000.0)
    pts = hertz.pressure_profile(sol, 101)
    xs = [x for x, _ in pts]
    ps = [p for _, p in pts]
    assert ps[0] == pytest.approx(0.0, abs=1e-9)
    assert ps[-1] == pytest.approx(0.0, abs=1e-9)
    assert max(ps) == pytest.approx(sol.peak_pressure_p0, rel=1e-12)
    assert xs[0] == pytest.approx(-sol.semi_major_a)
    assert xs[-1] == pytest.approx(sol.semi_major_a)
    # symmetry about the center
    for (x1, p1), (x2, p2) in zip(pts, reversed(pts)):
        assert p1 == pytest.approx(p2, abs=1e-9)


def test_pressure_distribution_carries_full_load():
    curv = hertz.curvature_analysis(20.0, 10.604, 0.0)
    es = hertz.effective_modulus(STEEL["e"], STEEL["nu"])
    sol = hertz.solve_hertz(curv, es, 3000.0)
    a, b, p0 = sol.semi_major_a, sol.semi_minor_b, sol.peak_pressure_p0

    def p(y, x):
        arg = 1.0 - (x / a) ** 2 - (y / b) ** 2
        return p0 * math.sqrt(arg) if arg > 0.0 else 0.0

    total, _ = integrate.dblquad(
        p, -a, a,
        lambda x: -b * math.sqrt(max(1.0 - (x / a) ** 2, 0.0)),
        lambda x: b * math.sqrt(max(1.0 - (x / a) ** 2, 0.0)),
        epsabs=1e-6, epsrel=1e-6)
    assert total == pytest.approx(3000.0, rel=1e-3)

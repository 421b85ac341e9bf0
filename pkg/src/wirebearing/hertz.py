"""Hertzian elliptical point contact between a ball and a raceway groove.

The contact is described by the curvature sum and the curvature
difference of the two bodies. From those, the ellipse axis ratio is found
by solving the classical transcendental relation built on complete
elliptic integrals, and the ellipse semi-axes, mutual approach and peak
pressure follow from the standard point-contact formulas. All lengths are
mm, forces N, pressures MPa.
"""

import math
from dataclasses import dataclass

from .errors import BearingError, ConvergenceError

# Residual tolerance for the axis-ratio bisection and the elliptic
# integral iteration. Both are cheap, so these are set tight.
_KAPPA_TOL = 1e-12
_AGM_TOL = 1e-14
_LOG_KAPPA_MAX = math.log(1e4)


def effective_modulus(e1, nu1, e2=None, nu2=None):
    """Contact modulus E* from the elastic constants of both bodies.

    1/E* = (1 - nu1^2)/E1 + (1 - nu2^2)/E2. If the second body is not
    given, both bodies share the first material.
    """
    if e2 is None:
        e2, nu2 = e1, nu1
    inv = (1.0 - nu1 * nu1) / e1 + (1.0 - nu2 * nu2) / e2
    return 1.0 / inv


def _agm(m):
    """AGM iteration for parameter m; returns (K, E, s) with E = K*(1 - s).

    The accumulated sum s is exposed because K - E = K*s is needed
    without cancellation when m is tiny.
    """
    a = 1.0
    b = math.sqrt(1.0 - m)
    c = math.sqrt(m)
    s = 0.5 * c * c
    pow2 = 0.5
    while abs(c) > _AGM_TOL:
        a, b, c = 0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b)
        pow2 *= 2.0
        s += pow2 * c * c
    k = math.pi / (2.0 * a)
    return k, k * (1.0 - s), s


def elliptic_integrals(m):
    """Complete elliptic integrals (K, E) for parameter m = e^2.

    Evaluated with the arithmetic-geometric-mean iteration, which
    converges quadratically and needs no tabulated coefficients.
    """
    if not 0.0 <= m < 1.0:
        raise ValueError(f"parameter m must be in [0, 1), got {m}")
    k, e, _ = _agm(m)
    return k, e


@dataclass(frozen=True)
class CurvatureSet:
    """Principal curvatures of ball and raceway with their combined sums.

    Curvatures are signed: convex surfaces positive, the concave groove
    transverse curvature negative. ``rho_sum`` is the sum of all four,
    ``curvature_difference`` the normalized difference F(rho) in [0, 1).
    """

    ball_rolling: float
    ball_transverse: float
    race_rolling: float
    race_transverse: float
    rho_sum: float
    curvature_difference: float

    def recompute_difference(self):
        """Re-derive F(rho) from the stored principal curvatures."""
        num = abs((self.ball_rolling - self.ball_transverse)
                  + (self.race_rolling - self.race_transverse))
        return num / self.rho_sum


@dataclass(frozen=True)
class HertzSolution:
    """Converged contact state for one ball-raceway contact at load Q."""

    semi_major_a: float
    semi_minor_b: float
    approach_delta: float
    peak_pressure_p0: float
    load_Q: float
    stiffness_K: float
    axis_ratio: float


def curvature_analysis(ball_diameter, groove_radius, rolling_curvature):
    """Build the CurvatureSet for a ball in a conforming groove.

    The ball contributes 2/Dw in both principal planes. The raceway
    contributes -1/groove_radius across the groove and the signed
    ``rolling_curvature`` along the rolling direction. A flat raceway is
    expressed with groove_radius=math.inf, rolling_curvature=0.
    """
    if ball_diameter <= 0.0:
        raise BearingError(f"ball diameter must be positive, got {ball_diameter}")
    if groove_radius <= ball_diameter / 2.0:
        raise BearingError(
            "groove radius %g mm does not exceed the ball radius %g mm; "
            "the contact is fully conforming and outside the point-contact model"
            % (groove_radius, ball_diameter / 2.0))

    ball = 2.0 / ball_diameter
    race_t = -1.0 / groove_radius if math.isfinite(groove_radius) else 0.0
    rho_sum = 2.0 * ball + race_t + rolling_curvature
    if rho_sum <= 0.0:
        raise BearingError(f"curvature sum {rho_sum} is not positive; geometry is non-convergent")

    diff = abs(rolling_curvature - race_t) / rho_sum
    if not 0.0 <= diff < 1.0:
        raise BearingError(f"curvature difference {diff} outside [0, 1)")
    return CurvatureSet(ball, ball, race_t, rolling_curvature, rho_sum, diff)


def _difference_from_log_ratio(t):
    """F(rho) as a function of t = log(kappa), cancellation-free.

    The textbook form ((k^2+1)E - 2K) / ((k^2-1)E) loses all precision as
    kappa -> 1 because the numerator is O((kappa-1)^2) assembled from O(1)
    terms. Rewriting with K - E = K*s (s from the AGM sum) and
    kappa^2 - 1 = expm1(2t) keeps full relative accuracy everywhere.
    """
    if t <= 0.0:
        return 0.0
    m = -math.expm1(-2.0 * t)
    big_k, big_e, s = _agm(m)
    return 1.0 - 2.0 * big_k * s / (math.expm1(2.0 * t) * big_e)


def _difference_of_kappa(kappa):
    """F(rho) as a function of the ellipse axis ratio kappa = a/b >= 1."""
    if kappa <= 1.0:
        return 0.0
    return _difference_from_log_ratio(math.log(kappa))


def solve_axis_ratio(curvature_difference):
    """Invert F(rho) -> kappa by bisection on log(kappa).

    F is strictly increasing in kappa, 0 at kappa=1 and approaching 1 as
    the ellipse degenerates, so the bracket [1, 1e4] always contains the
    root for F in [0, 1). Bisection is slower than Newton but cannot be
    thrown by the flat gradient near kappa=1.
    """
    target = curvature_difference
    if target <= 0.0:
        return 1.0
    lo, hi = 0.0, _LOG_KAPPA_MAX
    f_hi = _difference_from_log_ratio(hi) - target
    if f_hi < 0.0:
        raise ConvergenceError(
            "axis-ratio bracket exhausted for curvature difference %g" % target,
            residual=f_hi)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        f_mid = _difference_from_log_ratio(mid) - target
        if abs(f_mid) < _KAPPA_TOL:
            return math.exp(mid)
        if f_mid < 0.0:
            lo = mid
        else:
            hi = mid
    # The interval halves 200 times; landing here means the residual
    # plateaued above tolerance, which only happens for corrupt input.
    raise ConvergenceError(
        "axis-ratio bisection did not reach tolerance",
        residual=_difference_from_log_ratio(0.5 * (lo + hi)) - target)


def contact_stiffness(curv, e_star):
    """Load-deflection constant K in Q = K * delta^(3/2), from geometry only.

    Derived by eliminating Q between the semi-axis and approach formulas,
    so it is exact for the same elliptic-integral solution used in
    solve_hertz. Defined (and finite) at zero load, which lets the
    equilibrium solver linearize near lift-off.
    """
    kappa = solve_axis_ratio(curv.curvature_difference)
    if kappa == 1.0:
        big_k = big_e = math.pi / 2.0
    else:
        big_k, big_e = elliptic_integrals(1.0 - 1.0 / (kappa * kappa))
    term = (2.0 * math.pi * kappa * e_star) / (3.0 * big_k)
    return term ** 1.5 * math.sqrt(3.0 * big_e / (math.pi * kappa * e_star * curv.rho_sum))


def solve_hertz(curv, e_star, load_q):
    """Full elliptical-contact solution at normal load ``load_q``.

    Zero load returns the all-zero ellipse but still carries the
    geometric stiffness so the caller can expand about lift-off.
    """
    if load_q < 0.0:
        raise BearingError(f"contact load must be non-negative, got {load_q}")
    kappa = solve_axis_ratio(curv.curvature_difference)
    if kappa == 1.0:
        big_k = big_e = math.pi / 2.0
    else:
        big_k, big_e = elliptic_integrals(1.0 - 1.0 / (kappa * kappa))

    term = (2.0 * math.pi * kappa * e_star) / (3.0 * big_k)
    stiff = term ** 1.5 * math.sqrt(3.0 * big_e / (math.pi * kappa * e_star * curv.rho_sum))
    if load_q == 0.0:
        return HertzSolution(0.0, 0.0, 0.0, 0.0, 0.0, stiff, kappa)

    b = (3.0 * load_q * big_e / (math.pi * kappa * e_star * curv.rho_sum)) ** (1.0 / 3.0)
    a = kappa * b
    delta = 3.0 * load_q * big_k / (2.0 * math.pi * a * e_star)
    p0 = 3.0 * load_q / (2.0 * math.pi * a * b)
    return HertzSolution(a, b, delta, p0, load_q, stiff, kappa)


def interference_to_load(stiffness_k, delta):
    """Contact force from interference: K * delta^(3/2), zero when separated."""
    if delta <= 0.0:
        return 0.0
    return stiffness_k * delta ** 1.5


def pressure_profile(sol, n_samples):
    """Sample the pressure along the ellipse major axis.

    Returns (x, p) pairs with p(x) = p0 * sqrt(1 - (x/a)^2), symmetric
    about the contact center.
    """
    if sol.load_Q <= 0.0:
        raise BearingError("pressure profile requires a loaded contact")
    if n_samples < 3:
        raise ValueError("need at least 3 samples")
    a, p0 = sol.semi_major_a, sol.peak_pressure_p0
    pts = []
    for i in range(n_samples):
        x = -a + 2.0 * a * i / (n_samples - 1)
        arg = 1.0 - (x / a) ** 2
        pts.append((x, p0 * math.sqrt(max(arg, 0.0))))
    return pts

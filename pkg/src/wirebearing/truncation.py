"""Contact ellipse placement on the finite raceway arc and truncation
bookkeeping.

The raceway arc spans only a limited angle either side of the groove
center. Under load the contact ellipse widens with Q^(1/3) while its
center drifts along the arc with the contact angle, so at some load the
ellipse edge reaches the end of the raceway (partial truncation) and,
if the drift continues, the pressure maximum itself arrives at the edge
(complete truncation). Everything here works in angular units: the
ellipse semi-major axis is divided by the groove radius and compared
directly against the raceway half extent.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import BearingError
from .geometry import groove_radius

STATE_NONE = "none"
STATE_PARTIAL = "partial"
STATE_COMPLETE = "complete"

_PROFILE_SAMPLES = 201


@dataclass(frozen=True)
class EllipsePlacement:
    """Contact ellipse in raceway arc coordinates, all fields in degrees."""

    center_psi: float
    angular_half_width: float
    raceway_half_extent: float

    def __post_init__(self):
        if self.angular_half_width < 0.0:
            raise BearingError(
                f"angular half width must be >= 0, got {self.angular_half_width}")
        if self.raceway_half_extent <= 0.0:
            raise BearingError(
                f"raceway half extent must be positive, got {self.raceway_half_extent}")


@dataclass(frozen=True)
class TruncationStatus:
    state: str
    onset_margin: float


def ellipse_placement(op_point, geometry):
    """Place the governing contact ellipse on the raceway arc.

    The inner and outer contacts carry the same normal force but sit in
    grooves of generally different radius, so the one whose ellipse
    covers the larger arc angle governs. The center coordinate is the
    arc coordinate psi of the operating point and the half width is the
    semi-major axis converted to arc degrees.
    """
    r_inner = groove_radius(geometry.osculation_inner, geometry.ball_diameter)
    r_outer = groove_radius(geometry.osculation_outer, geometry.ball_diameter)
    width = max(op_point.hertz_inner.semi_major_a / r_inner,
                op_point.hertz_outer.semi_major_a / r_outer)
    return EllipsePlacement(
        center_psi=math.degrees(op_point.arc_coordinate),
        angular_half_width=math.degrees(width),
        raceway_half_extent=geometry.raceway_half_extent)


def truncation_status(placement):
    """Classify a placement as none, partial, or complete truncation.

    none while the whole ellipse fits inside the arc, complete once the
    ellipse center (the pressure maximum) reaches the boundary, partial
    in between. A margin of exactly zero counts as partial and a center
    exactly at the boundary counts as complete, so the boundary cases
    resolve toward the more severe state.
    """
    margin = placement.raceway_half_extent - (
        abs(placement.center_psi) + placement.angular_half_width)
    if margin > 0.0:
        state = STATE_NONE
    elif abs(placement.center_psi) >= placement.raceway_half_extent:
        state = STATE_COMPLETE
    else:
        state = STATE_PARTIAL
    return TruncationStatus(state=state, onset_margin=margin)


def _crossing_fraction(loads, overshoot, c0a):
    """Load fraction where `overshoot` first crosses upward through zero.

    Linear interpolation between the bracketing sweep samples. Returns
    None when the crossing never happens at or below the rated load.
    """
    for i in range(1, len(overshoot)):
        if overshoot[i] >= 0.0 > overshoot[i - 1]:
            t = -overshoot[i - 1] / (overshoot[i] - overshoot[i - 1])
            frac = (loads[i - 1] + t * (loads[i] - loads[i - 1])) / c0a
            return frac if frac <= 1.0 else None
    return None


def truncation_loads(case, curve, c0a):
    """Onset and completion load fractions for one stiffness sweep.

    Walks the sweep, forms the angular overshoot of the ellipse edge and
    of the ellipse center past the raceway boundary, and interpolates
    the loads where each first crosses zero. Fractions are relative to
    c0a; a transition that never happens at or below the rated load is
    reported as None.
    """
    if c0a <= 0.0:
        raise BearingError(f"capacity must be positive, got {c0a}")
    pts = curve.samples
    if len(pts) < 2:
        raise BearingError("stiffness curve needs at least 2 samples")
    loads = np.array([p.axial_force for p in pts])
    if loads.max() < c0a:
        raise BearingError(
            f"stiffness curve stops at {loads.max():.4g} N, below the "
            f"capacity {c0a:.4g} N; extend the sweep")

    geometry = case.geometry
    edge_over = np.empty(len(pts))
    center_over = np.empty(len(pts))
    for i, p in enumerate(pts):
        placement = ellipse_placement(p, geometry)
        reach = abs(placement.center_psi) + placement.angular_half_width
        edge_over[i] = reach - placement.raceway_half_extent
        center_over[i] = abs(placement.center_psi) - placement.raceway_half_extent

    onset = _crossing_fraction(loads, edge_over, c0a)
    complete = _crossing_fraction(loads, center_over, c0a)
    return onset, complete


def truncated_pressure(sol, placement):
    """Pressure field after clipping the ellipse at the raceway edges.

    The Hertz pressure is a half ellipsoid over the contact patch. The
    part of the patch beyond either end of the raceway arc carries no
    pressure, so the remaining part is rescaled uniformly until it
    carries the full normal load again. The retained volume fraction of
    a unit half ellipsoid cut at x = t*a (keeping x <= t*a) is
    (2 + 3t - t^3) / 4, which handles both one and two sided clips by
    differencing.

    Returns the rescaled peak pressure and the pressure profile along
    the major axis as an (n, 2) array of (arc coordinate [deg],
    pressure) rows. The peak sits at the ellipse center for a partial
    truncation and at the raceway boundary for a complete one.
    """
    status = truncation_status(placement)
    if status.state == STATE_NONE:
        raise BearingError("ellipse fully inside the raceway, nothing is clipped")

    psi = abs(placement.center_psi)
    half = placement.angular_half_width
    extent = placement.raceway_half_extent

    # clip coordinates in units of the semi-major axis, near edge on the
    # positive side
    t_near = min(1.0, (extent - psi) / half)
    t_far = max(-1.0, -(extent + psi) / half)
    if t_near <= -1.0:
        raise BearingError("degenerate truncation: ellipse entirely past the raceway edge")

    def g(t):
        return t - t ** 3 / 3.0

    retained = (g(t_near) - g(t_far)) / (4.0 / 3.0)
    if retained <= 0.0:
        raise BearingError("degenerate truncation: clipped contact area vanished")
    rescale = 1.0 / retained

    p0 = sol.peak_pressure_p0
    if psi < extent:
        rescaled_peak = p0 * rescale
    else:
        rescaled_peak = p0 * math.sqrt(max(0.0, 1.0 - t_near ** 2)) * rescale

    sign = 1.0 if placement.center_psi >= 0.0 else -1.0
    t = np.linspace(t_far, t_near, _PROFILE_SAMPLES)
    pressure = rescale * p0 * np.sqrt(np.clip(1.0 - t ** 2, 0.0, None))
    arc = placement.center_psi + sign * t * half
    return rescaled_peak, np.column_stack([arc, pressure])

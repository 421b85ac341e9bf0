"""Displacement-controlled static equilibrium of the full bearing.

Every ball sees the same kinematics under pure axial load, so one
contact pair represents the bearing. At a given axial displacement the
unknowns are the radial line load on the rings (which feeds back into
ring opening and elastic seat rotation) and, for wire bearings, the
Coulomb slip part of the wire twist. Both are resolved with bracketed
root finding: the line-load balance is a scalar equation with a
guaranteed sign change, and the slip equation is nested outside it.
Bracketed solves were chosen over damped fixed-point iteration because
the radial and twist feedback gains of realistic geometries exceed the
contraction limit.

Inner and outer Hertz contacts are treated in series with a shared
contact angle and equal normal force. The alpha-dependent stiffness
constants are cached on a cubic spline per case; converged points are
re-evaluated with the exact contact solve so the reported ellipse obeys
the Hertz identities to full precision.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.interpolate import CubicSpline
from scipy.optimize import brentq

from . import hertz, wire
from .errors import BearingError, ConfigError, ConvergenceError
from .geometry import WIRE, contact_kinematics, groove_radius, rolling_direction_curvature

_PRESSURE_REL_TOL = 1e-6
_MOMENT_REL_TOL = 1e-10
_SPLINE_NODES = 241


@dataclass(frozen=True)
class CaseDefinition:
    """One Table-style analysis case: geometry, materials, BC, friction."""

    case_id: int
    bearing_kind: str
    geometry: object
    e_star: float
    mu_ball_raceway: float
    mu_wire_ring: float | None
    boundary_condition: str
    compliance: object
    seat: object
    pressure_limit: float = 4200.0

    def __post_init__(self):
        wirelike = self.bearing_kind == WIRE
        if wirelike and (self.mu_wire_ring is None or self.seat is None):
            raise ConfigError(
                f"case {self.case_id}: wire bearings need mu_wire_ring and seat geometry")
        if not wirelike and self.mu_wire_ring is not None:
            raise ConfigError(
                f"case {self.case_id}: mu_wire_ring is meaningless for a conventional bearing")
        if not wirelike and self.seat is not None:
            raise ConfigError(
                f"case {self.case_id}: seat geometry given for a conventional bearing")
        if self.e_star <= 0.0 or self.pressure_limit <= 0.0:
            raise ConfigError(f"case {self.case_id}: moduli and pressure limit must be positive")
        if self.mu_ball_raceway < 0.0:
            raise ConfigError(f"case {self.case_id}: friction coefficients must be >= 0")


@dataclass(frozen=True)
class OperatingPoint:
    """Converged equilibrium at one axial displacement. Angles in radians."""

    axial_disp: float
    axial_force: float
    contact_force: float
    contact_angle: float
    wire_twist: float
    radial_disp: float
    arc_coordinate: float
    line_load: float
    hertz_inner: object
    hertz_outer: object
    wire_state: object

    @property
    def peak_pressure(self):
        return max(self.hertz_inner.peak_pressure_p0, self.hertz_outer.peak_pressure_p0)


@dataclass(frozen=True)
class StiffnessCurve:
    case_id: int
    boundary_condition: str
    samples: tuple


class CaseModel:
    """A CaseDefinition plus cached contact constants, ready to solve."""

    def __init__(self, definition):
        self.definition = definition
        self.geometry = definition.geometry
        g = self.geometry
        self.groove_inner = groove_radius(g.osculation_inner, g.ball_diameter)
        self.groove_outer = groove_radius(g.osculation_outer, g.ball_diameter)
        self._build_stiffness_cache()

    # -- contact constants ------------------------------------------------

    def _curvatures(self, alpha):
        g = self.geometry
        curv_i = hertz.curvature_analysis(
            g.ball_diameter, self.groove_inner,
            rolling_direction_curvature(g, alpha, "inner"))
        curv_o = hertz.curvature_analysis(
            g.ball_diameter, self.groove_outer,
            rolling_direction_curvature(g, alpha, "outer"))
        return curv_i, curv_o

    def _build_stiffness_cache(self):
        alphas = np.linspace(math.radians(1.0), math.radians(89.9), _SPLINE_NODES)
        e_star = self.definition.e_star
        k_i = np.empty_like(alphas)
        k_o = np.empty_like(alphas)
        for idx, a in enumerate(alphas):
            curv_i, curv_o = self._curvatures(a)
            k_i[idx] = hertz.contact_stiffness(curv_i, e_star)
            k_o[idx] = hertz.contact_stiffness(curv_o, e_star)
        self._spline_inner = CubicSpline(alphas, k_i)
        self._spline_outer = CubicSpline(alphas, k_o)
        self._alpha_lo = alphas[0]
        self._alpha_hi = alphas[-1]

    def stiffness_constants(self, alpha):
        a = min(max(alpha, self._alpha_lo), self._alpha_hi)
        return float(self._spline_inner(a)), float(self._spline_outer(a))

    def equivalent_stiffness(self, alpha):
        """Series combination of both contacts at equal normal force."""
        k_i, k_o = self.stiffness_constants(alpha)
        return (k_i ** (-2.0 / 3.0) + k_o ** (-2.0 / 3.0)) ** -1.5

    def exact_contact_pair(self, alpha, load_q):
        """Full-precision Hertz solutions of both contacts at load_q."""
        curv_i, curv_o = self._curvatures(alpha)
        e_star = self.definition.e_star
        return (hertz.solve_hertz(curv_i, e_star, load_q),
                hertz.solve_hertz(curv_o, e_star, load_q))

    # -- kinematic helpers -------------------------------------------------

    def _seat_args(self):
        seat = self.definition.seat
        if seat is None:
            return 0.0, None
        return seat.pivot_offset, seat.pivot_orientation_rad(self.geometry.alpha0_rad)

    def kinematics(self, axial_disp, radial_disp, phi):
        pivot, orient = self._seat_args()
        return contact_kinematics(
            self.geometry, axial_disp, radial_disp, phi,
            pivot_offset=pivot, pivot_orientation=orient)

    def line_load_of(self, load_q, alpha):
        g = self.geometry
        return g.ball_count * load_q * math.cos(alpha) / (math.pi * g.pitch_diameter)


def _trivial_point(model, axial_disp=0.0):
    # the unloaded state is the nominal geometry by definition, so skip
    # the atan2 round trip that would smear alpha0 by one ulp
    alpha0 = model.geometry.alpha0_rad
    sol_i, sol_o = model.exact_contact_pair(alpha0, 0.0)
    return OperatingPoint(
        axial_disp=axial_disp, axial_force=0.0, contact_force=0.0,
        contact_angle=alpha0, wire_twist=0.0, radial_disp=0.0,
        arc_coordinate=0.0, line_load=0.0,
        hertz_inner=sol_i, hertz_outer=sol_o, wire_state=None)


def _resolve_line_load(model, axial_disp, phi_slip, rigid=False):
    """Solve the radial line-load balance at a frozen slip twist.

    Returns (line_load, kinematics, contact_force, total_twist,
    radial_disp). The residual q - q_implied(q) is <= 0 at q = 0 and > 0
    at the no-feedback line load, because every feedback path (ring
    opening, elastic seat rotation) unloads the contact; brentq between
    those brackets is deterministic and cannot diverge.
    """
    seat = model.definition.seat
    compliance = model.definition.compliance
    use_seat = seat is not None and not rigid
    use_rings = not rigid

    def build(q):
        phi = phi_slip
        if use_seat:
            phi = phi_slip + wire.elastic_rotation(seat, q)
        radial = -wire.ring_radial_expansion(q, compliance) if use_rings else 0.0
        kin = model.kinematics(axial_disp, radial, phi)
        if kin.interference <= 0.0:
            load = 0.0
        else:
            load = model.equivalent_stiffness(kin.contact_angle) * kin.interference ** 1.5
        return kin, load, phi, radial

    def residual(q):
        kin, load, _, _ = build(q)
        return q - model.line_load_of(load, kin.contact_angle)

    kin0, load0, phi0, radial0 = build(0.0)
    q_free = model.line_load_of(load0, kin0.contact_angle)
    if q_free <= 0.0:
        return 0.0, kin0, load0, phi0, radial0

    hi = q_free
    for _ in range(60):
        if residual(hi) > 0.0:
            break
        hi *= 2.0
    else:
        raise ConvergenceError("line-load bracket expansion failed", residual=residual(hi))

    q_star = brentq(residual, 0.0, hi, xtol=1e-10, rtol=8.9e-16)
    kin, load, phi, radial = build(q_star)
    return q_star, kin, load, phi, radial


def operating_point(model, axial_disp, phi_slip_prev=0.0):
    """Equilibrium state at one axial displacement.

    phi_slip_prev is the accumulated Coulomb slip from the previous load
    step; it can only grow (monotone loading). Conventional bearings skip
    the whole wire layer.
    """
    if axial_disp < 0.0:
        raise BearingError(f"axial displacement must be >= 0, got {axial_disp}")
    if axial_disp == 0.0 and phi_slip_prev == 0.0:
        return _trivial_point(model, 0.0)

    defn = model.definition
    is_wire = defn.bearing_kind == WIRE

    if not is_wire:
        q, kin, load, phi, radial = _resolve_line_load(model, axial_disp, 0.0)
        return _finalize(model, axial_disp, q, kin, load, phi, radial, None)

    alpha0 = model.geometry.alpha0_rad
    seat = defn.seat
    mu = defn.mu_wire_ring

    def seat_state(phi_slip):
        q, kin, load, phi, radial = _resolve_line_load(model, axial_disp, phi_slip)
        if load <= 0.0:
            state = None
        else:
            state = wire.evaluate_seat(load, kin.contact_angle, phi, mu, seat, alpha0)
        return q, kin, load, phi, radial, state

    q, kin, load, phi, radial, state = seat_state(phi_slip_prev)
    if state is not None and abs(state.applied_moment) > state.friction_capacity:
        # the wire slips: advance the slip twist until the moment balance
        # saturates at the self-consistent equilibrium
        def slip_residual(phi_slip):
            _, _, load_s, phi_s, _, st = seat_state(phi_slip)
            if st is None:
                return -1.0
            return abs(st.applied_moment) - st.friction_capacity

        lo = phi_slip_prev
        step = math.radians(0.5)
        hi = lo + step
        for _ in range(40):
            if slip_residual(hi) < 0.0:
                break
            hi = lo + (hi - lo) * 2.0
        else:
            raise ConvergenceError("slip bracket expansion failed")
        scale = max(1.0, load * seat.pivot_offset)
        phi_star = brentq(slip_residual, lo, hi,
                          xtol=1e-14, rtol=8.9e-16)
        q, kin, load, phi, radial, state = seat_state(phi_star)
        if state is not None:
            gap = abs(abs(state.applied_moment) - state.friction_capacity)
            if gap > _MOMENT_REL_TOL * scale * 10.0:
                raise ConvergenceError("slip equilibrium residual too large", residual=gap)
    return _finalize(model, axial_disp, q, kin, load, phi, radial, state)


def _finalize(model, axial_disp, q, kin, load, phi, radial, state):
    sol_i, sol_o = model.exact_contact_pair(kin.contact_angle, load)
    g = model.geometry
    axial_force = g.ball_count * load * math.sin(kin.contact_angle)
    return OperatingPoint(
        axial_disp=axial_disp, axial_force=axial_force, contact_force=load,
        contact_angle=kin.contact_angle, wire_twist=phi, radial_disp=radial,
        arc_coordinate=kin.arc_coordinate, line_load=q,
        hertz_inner=sol_i, hertz_outer=sol_o, wire_state=state)


def stiffness_curve(model, max_disp, n_steps):
    """Sweep displacements from zero, threading the slip twist through.

    The twist state is path dependent, so the sweep is strictly
    sequential; results for a given (max_disp, n_steps) are
    deterministic.
    """
    if n_steps < 2:
        raise ConfigError(f"need at least 2 sweep steps, got {n_steps}")
    if max_disp <= 0.0:
        raise ConfigError(f"max displacement must be positive, got {max_disp}")

    samples = []
    phi_slip = 0.0
    for idx, u in enumerate(np.linspace(0.0, max_disp, n_steps)):
        try:
            pt = operating_point(model, float(u), phi_slip)
        except BearingError as exc:
            raise ConvergenceError(
                f"sweep failed at step {idx} (axial_disp={u:.6g} mm): {exc}") from exc
        samples.append(pt)
        if pt.wire_state is not None:
            phi_slip = max(phi_slip, pt.wire_twist - _elastic_part(model, pt))
    return StiffnessCurve(model.definition.case_id,
                          model.definition.boundary_condition,
                          tuple(samples))


def _elastic_part(model, point):
    seat = model.definition.seat
    if seat is None:
        return 0.0
    return wire.elastic_rotation(seat, point.line_load)


def static_capacity(model):
    """Static axial capacity: rigid rings, no twist, peak pressure at the
    configured limit. Bisection on displacement to 1e-6 relative on p0.

    The rating convention projects the interference onto the nominal
    contact direction and keeps the angle there, so capacity compares
    raceway strength without folding in the kinematic angle climb that
    the load sweep resolves separately.
    """
    g = model.geometry
    limit = model.definition.pressure_limit
    alpha0 = g.alpha0_rad
    sin0 = math.sin(alpha0)
    curv_i, curv_o = model._curvatures(alpha0)
    e_star = model.definition.e_star
    k_i = hertz.contact_stiffness(curv_i, e_star)
    k_o = hertz.contact_stiffness(curv_o, e_star)
    k_eq = (k_i ** (-2.0 / 3.0) + k_o ** (-2.0 / 3.0)) ** -1.5

    def peak(axial_disp):
        load = k_eq * (axial_disp * sin0) ** 1.5
        sol_i, sol_o = model.exact_contact_pair(alpha0, load)
        return max(sol_i.peak_pressure_p0, sol_o.peak_pressure_p0)

    lo, hi = 0.0, 0.01 * g.ball_diameter
    grow = 0
    while peak(hi) < limit:
        hi *= 2.0
        grow += 1
        if grow > 40:
            raise ConvergenceError(
                f"peak pressure never reached {limit} MPa within displacement bracket")

    for _ in range(200):
        mid = 0.5 * (lo + hi)
        p_mid = peak(mid)
        if abs(p_mid - limit) <= _PRESSURE_REL_TOL * limit:
            break
        if p_mid < limit:
            lo = mid
        else:
            hi = mid
    else:
        raise ConvergenceError("capacity bisection stalled")

    u_star = 0.5 * (lo + hi)
    load = k_eq * (u_star * sin0) ** 1.5
    sol_i, sol_o = model.exact_contact_pair(alpha0, load)
    point = OperatingPoint(
        axial_disp=u_star, axial_force=g.ball_count * load * sin0,
        contact_force=load, contact_angle=alpha0, wire_twist=0.0,
        radial_disp=0.0, arc_coordinate=0.0,
        line_load=model.line_load_of(load, alpha0),
        hertz_inner=sol_i, hertz_outer=sol_o, wire_state=None)
    return point.axial_force, point

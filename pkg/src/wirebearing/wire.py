"""Wire seat mechanics and ring hoop compliance.

The wire rests on two line contacts in its ring groove. The ball load,
applied off the wire cross-section center, produces a twisting moment;
Coulomb friction at the seat lines resists it. The seat normal forces
have two sources: the ball load itself and an assembly preload that
presses the wire into its groove regardless of load. The preload part
of the friction reserve is fixed while the moment scales with load, so
the wire sticks at low load and starts slipping once the load-to-preload
ratio crosses a friction-set threshold. An optional elastic seat
rotation is also available for seats that bed in measurably before
sliding.

Angles at function boundaries are radians; dataclass fields that mirror
config entries are degrees.
"""

import math
from dataclasses import dataclass

from .errors import ConfigError, ConvergenceError, SeatSeparationError

_MOMENT_REL_TOL = 1e-10


@dataclass(frozen=True)
class WireSeatGeometry:
    """Cross-section constants of the wire on its seat.

    pivot_offset is the distance from the wire center to the raceway
    groove curvature center; pivot_orientation_offset rotates that offset
    away from the initial contact direction (degrees, usually a few
    degrees negative, i.e. toward the bore). seat_axis_orientation is the
    absolute direction of the seat symmetry axis in degrees; None means
    "along the initial contact angle". seat_preload [N per ball pitch]
    is the assembly force pressing the wire into the groove at each seat
    line; it feeds the friction reserve but not the load balance.
    rotation_flexibility [deg per N/mm] and rotation_limit [deg]
    parametrize the optional elastic seat rotation, which saturates
    exponentially at the limit.
    """

    wire_radius: float
    pivot_offset: float
    seat_half_angle: float
    seat_axis_orientation: float | None = None
    pivot_orientation_offset: float = 0.0
    seat_preload: float = 0.0
    rotation_flexibility: float = 0.0
    rotation_limit: float = 0.0

    def __post_init__(self):
        if self.wire_radius <= 0.0:
            raise ConfigError(f"wire radius must be positive, got {self.wire_radius}")
        if not 0.0 <= self.pivot_offset < self.wire_radius:
            raise ConfigError(
                "pivot offset must satisfy 0 <= d < wire radius, got d=%g, rw=%g"
                % (self.pivot_offset, self.wire_radius))
        if not 0.0 < self.seat_half_angle < 90.0:
            raise ConfigError(
                f"seat half angle must be in (0, 90) deg, got {self.seat_half_angle}")
        if self.seat_preload < 0.0:
            raise ConfigError(f"seat preload must be >= 0, got {self.seat_preload}")
        if self.rotation_flexibility < 0.0:
            raise ConfigError("rotation flexibility must be >= 0")
        if self.rotation_flexibility > 0.0 and self.rotation_limit <= 0.0:
            raise ConfigError("rotation limit must be positive when flexibility is set")

    def seat_axis_rad(self, alpha0):
        if self.seat_axis_orientation is None:
            return alpha0
        return math.radians(self.seat_axis_orientation)

    def pivot_orientation_rad(self, alpha0):
        return alpha0 + math.radians(self.pivot_orientation_offset)


@dataclass(frozen=True)
class RingSection:
    """Ring cross-section for the thin-ring hoop model."""

    area: float
    centroid_radius: float
    elastic_modulus: float

    def __post_init__(self):
        if self.area <= 0.0 or self.centroid_radius <= 0.0 or self.elastic_modulus <= 0.0:
            raise ConfigError("ring section fields must all be positive")

    @property
    def hoop_flexibility(self):
        """Radial displacement per unit radial line load, R^2/(E*A)."""
        return self.centroid_radius ** 2 / (self.elastic_modulus * self.area)


@dataclass(frozen=True)
class RingCompliance:
    """Boundary condition plus the resulting effective hoop flexibility."""

    boundary_condition: str
    hoop_flexibility: float

    def __post_init__(self):
        if self.boundary_condition not in ("clamped", "unclamped"):
            raise ConfigError(
                f"boundary condition must be clamped or unclamped, got {self.boundary_condition!r}")
        if self.hoop_flexibility < 0.0:
            raise ConfigError("hoop flexibility must be >= 0")

    @classmethod
    def from_sections(cls, boundary_condition, sections):
        """Combine the flexibilities of both rings (they add in series
        into the relative radial displacement of the groove centers)."""
        if boundary_condition == "clamped":
            return cls(boundary_condition, 0.0)
        return cls(boundary_condition, sum(s.hoop_flexibility for s in sections))


@dataclass(frozen=True)
class WireState:
    """Snapshot of the wire seat at one converged operating point."""

    twist_phi: float
    seat_n1: float
    seat_n2: float
    applied_moment: float
    friction_capacity: float


def seat_reactions(load_q, contact_angle, twist_phi, seat, alpha0):
    """Normal force resultants at the two seat contact lines.

    Static balance of the ball load against reactions at +/- the seat
    half angle about the seat axis, written in the wire frame (force
    direction contact_angle - twist_phi). A negative solution means that
    line lifts off; the remaining line then takes the normal projection
    of the load. Both negative means the force points out of the seat
    cone entirely, which the model treats as a hard error.
    """
    if load_q < 0.0:
        raise ConfigError(f"seat load must be non-negative, got {load_q}")
    if load_q == 0.0:
        return 0.0, 0.0
    beta = math.radians(seat.seat_half_angle)
    eta = (contact_angle - twist_phi) - seat.seat_axis_rad(alpha0)
    half_sym = 0.5 * load_q * math.cos(eta) / math.cos(beta)
    half_asym = 0.5 * load_q * math.sin(eta) / math.sin(beta)
    n1 = half_sym + half_asym
    n2 = half_sym - half_asym
    if n1 < 0.0 and n2 < 0.0:
        raise SeatSeparationError(
            "ball load points out of the seat cone (eta=%.3f deg); both seat "
            "lines separated" % math.degrees(eta))
    if n2 < 0.0:
        return max(load_q * math.cos(eta - beta), 0.0), 0.0
    if n1 < 0.0:
        return 0.0, max(load_q * math.cos(eta + beta), 0.0)
    return n1, n2


def applied_moment(load_q, contact_angle, twist_phi, seat, alpha0):
    """Twisting moment of the ball load about the wire center.

    The contact force line passes through the groove curvature center,
    offset pivot_offset from the wire center along the (twisted) pivot
    direction; the lever arm follows directly.
    """
    lever_dir = seat.pivot_orientation_rad(alpha0) + twist_phi
    return load_q * seat.pivot_offset * math.sin(contact_angle - lever_dir)


def friction_capacity(n1, n2, mu_wire_ring, seat):
    """Largest friction moment the seat lines can exert on the wire.

    The assembly preload acts at both lines on top of the load
    reactions, so it contributes twice. It deliberately stays out of the
    lift-off logic in seat_reactions: a preloaded line that unloads has
    simply spent its reserve.
    """
    return mu_wire_ring * (n1 + n2 + 2.0 * seat.seat_preload) * seat.wire_radius


def evaluate_seat(load_q, contact_angle, twist_phi, mu_wire_ring, seat, alpha0):
    """Bundle reactions, moment and capacity into a WireState."""
    n1, n2 = seat_reactions(load_q, contact_angle, twist_phi, seat, alpha0)
    m = applied_moment(load_q, contact_angle, twist_phi, seat, alpha0)
    cap = friction_capacity(n1, n2, mu_wire_ring, seat)
    return WireState(twist_phi, n1, n2, m, cap)


def twist_equilibrium(load_q, contact_angle, phi_previous, mu_wire_ring, seat, alpha0):
    """Quasi-static Coulomb twist update at fixed load and contact angle.

    Sticks at phi_previous while the applied moment is inside the
    friction capacity; otherwise the wire rotates forward until the
    moment just saturates the capacity. The forward-only search encodes
    the ratchet of a monotone loading path. Solved by bisection on the
    moment residual to 1e-10 relative.
    """
    if load_q <= 0.0:
        return phi_previous

    def residual(phi):
        state = evaluate_seat(load_q, contact_angle, phi, mu_wire_ring, seat, alpha0)
        return abs(state.applied_moment) - state.friction_capacity

    r_prev = residual(phi_previous)
    if r_prev <= 0.0:
        return phi_previous

    # The moment shrinks and the capacity grows as the wire rotates
    # toward the load direction, so the residual is decreasing; the far
    # bracket is the twist that would fully recenter the contact.
    phi_hi = contact_angle - alpha0
    if phi_hi <= phi_previous or residual(phi_hi) > 0.0:
        raise ConvergenceError(
            "twist saturation: no moment balance in [%.6f, %.6f] rad"
            % (phi_previous, phi_hi),
            residual=residual(max(phi_hi, phi_previous)))

    lo, hi = phi_previous, phi_hi
    scale = max(1.0, load_q * seat.pivot_offset)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        r = residual(mid)
        if abs(r) <= _MOMENT_REL_TOL * scale:
            return mid
        if r > 0.0:
            lo = mid
        else:
            hi = mid
    raise ConvergenceError("twist bisection stalled", residual=residual(0.5 * (lo + hi)))


def elastic_rotation(seat, line_load):
    """Elastic seat rotation (radians) under the radial line load.

    Grows with slope rotation_flexibility at small loads and saturates
    exponentially at rotation_limit, since the wire can only bed into
    the seat so far.
    """
    if seat.rotation_flexibility == 0.0 or line_load <= 0.0:
        return 0.0
    cap = seat.rotation_limit
    z = seat.rotation_flexibility * line_load / cap
    return math.radians(cap * -math.expm1(-z))


def ring_radial_expansion(line_load, compliance):
    """Radial opening of the ring pair under the distributed contact load.

    Returns the magnitude; the caller applies it with the sign that
    opens the contact. Clamped rings do not move.
    """
    if line_load < 0.0:
        raise ConfigError(f"line load must be non-negative, got {line_load}")
    return compliance.hoop_flexibility * line_load

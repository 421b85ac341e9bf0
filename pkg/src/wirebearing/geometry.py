"""Bearing macro-geometry and ball-raceway contact kinematics.

Angles stored on the geometry objects are degrees, matching the config
file units; every function in this module takes and returns radians.
Displacements follow the convention that positive axial displacement
stretches the loaded contact diagonal (compresses the contact), and the
radial displacement argument is the signed change of the radial
separation of the two groove centers (ring opening makes it negative).
"""

import math
from dataclasses import dataclass

from .errors import ConfigError

CONVENTIONAL = "conventional"
WIRE = "wire"


@dataclass(frozen=True)
class BearingGeometry:
    """Macro-geometry shared by every ball position (cyclic symmetry)."""

    ball_diameter: float
    pitch_diameter: float
    ball_count: int
    initial_contact_angle: float
    osculation_inner: float
    osculation_outer: float
    raceway_half_extent: float
    bearing_kind: str

    def __post_init__(self):
        if self.ball_count < 1:
            raise ConfigError(f"ball count must be >= 1, got {self.ball_count}")
        if not 0.0 < self.initial_contact_angle < 90.0:
            raise ConfigError(
                f"initial contact angle must be in (0, 90) deg, got {self.initial_contact_angle}")
        for label, s in (("inner", self.osculation_inner), ("outer", self.osculation_outer)):
            if not 0.0 < s < 1.0:
                raise ConfigError(f"{label} osculation must be in (0, 1), got {s}")
        if self.pitch_diameter <= self.ball_diameter:
            raise ConfigError("pitch diameter must exceed ball diameter")
        if not 0.0 < self.raceway_half_extent < 90.0:
            raise ConfigError(
                f"raceway half extent must be in (0, 90) deg, got {self.raceway_half_extent}")
        if self.bearing_kind not in (CONVENTIONAL, WIRE):
            raise ConfigError(f"unknown bearing kind {self.bearing_kind!r}")

    @property
    def alpha0_rad(self):
        return math.radians(self.initial_contact_angle)

    @property
    def half_extent_rad(self):
        return math.radians(self.raceway_half_extent)

    @property
    def free_center_distance(self):
        """Unloaded distance A0 between inner and outer groove centers.

        A0 = (f_i + f_o - 1) * Dw with the conformity f = 1/(2s) of each
        raceway; equal osculations give the usual (2f - 1) * Dw.
        """
        f_i = 0.5 / self.osculation_inner
        f_o = 0.5 / self.osculation_outer
        return (f_i + f_o - 1.0) * self.ball_diameter


@dataclass(frozen=True)
class ContactKinematics:
    """Contact state implied by the ring displacements and wire twist."""

    contact_angle: float
    interference: float
    arc_coordinate: float


def groove_radius(osculation, ball_diameter):
    """Raceway groove radius rr = Dw / (2 s)."""
    if not 0.0 < osculation < 1.0:
        raise ConfigError(f"osculation must be in (0, 1), got {osculation}")
    return ball_diameter / (2.0 * osculation)


def rolling_direction_curvature(geometry, contact_angle, side):
    """Signed raceway curvature in the rolling plane at a contact angle.

    Positive (convex) for the inner ring, negative (concave) for the
    outer ring. ``contact_angle`` in radians.
    """
    cos_a = math.cos(contact_angle)
    dpw, dw = geometry.pitch_diameter, geometry.ball_diameter
    if side == "inner":
        return 2.0 * cos_a / (dpw - dw * cos_a)
    if side == "outer":
        return -2.0 * cos_a / (dpw + dw * cos_a)
    raise ValueError(f"side must be 'inner' or 'outer', got {side!r}")


def contact_kinematics(geometry, axial_disp, radial_disp, wire_twist=0.0,
                       pivot_offset=0.0, pivot_orientation=None):
    """Contact angle, interference and arc coordinate from displacements.

    The two groove centers start A0 apart along the initial contact
    direction. Ring displacements shift one center relative to the other;
    the contact angle is the direction of the resulting center-to-center
    vector and the interference is its elongation.

    For a wire bearing each groove is machined ``pivot_offset`` away from
    the wire cross-section center, along ``pivot_orientation`` (radians,
    defaults to the initial contact direction). Twisting both wires by
    ``wire_twist`` swings the groove centers about the wire centers,
    which feeds the twist back into the contact angle and interference.
    With pivot_offset = 0 (or zero twist) this collapses to the plain
    displaced-center formula and d(arc_coordinate)/d(wire_twist) = -1
    exactly.
    """
    a0 = geometry.alpha0_rad
    free = geometry.free_center_distance
    if pivot_orientation is None:
        pivot_orientation = a0

    radial = free * math.cos(a0) + radial_disp
    axial = free * math.sin(a0) + axial_disp
    if pivot_offset != 0.0 and wire_twist != 0.0:
        swung = pivot_orientation + wire_twist
        radial += 2.0 * pivot_offset * (math.cos(pivot_orientation) - math.cos(swung))
        axial += 2.0 * pivot_offset * (math.sin(pivot_orientation) - math.sin(swung))

    alpha = math.atan2(axial, radial)
    interference = math.hypot(radial, axial) - free
    psi = alpha - a0 - wire_twist
    return ContactKinematics(alpha, interference, psi)

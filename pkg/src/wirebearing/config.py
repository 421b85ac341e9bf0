"""YAML config ingestion for the case runner.

The file is strict: every key is known, required keys must be present,
and unknown keys are rejected with the offending location in the
message. Units are fixed at mm, N, MPa, and degrees, and the file must
say so explicitly in its `units` field, which guards against feeding a
config written for different conventions.

Layout: shared `platform` geometry, one block of kind-specific
parameters each for `conventional` and `wire`, a `materials` table the
other blocks reference by name, the `cases` list, and the boundary
conditions to run every case under.
"""

from dataclasses import dataclass
from importlib import resources

import yaml

from . import wire
from .errors import ConfigError
from .geometry import CONVENTIONAL, WIRE, BearingGeometry
from .hertz import effective_modulus
from .solver import CaseDefinition

UNITS = "mm-N-MPa-deg"

_TOP_KEYS = ("units", "materials", "platform", "conventional", "wire",
             "cases", "boundary_conditions")
_PLATFORM_KEYS = ("ball_diameter", "pitch_diameter", "ball_count",
                  "initial_contact_angle", "pressure_limit",
                  "ring_centroid_radii", "contact_material")
_RING_KEYS = ("raceway_half_extent", "ring_section_area", "ring_material")
_SEAT_KEYS = ("wire_radius", "pivot_offset", "seat_half_angle",
              "pivot_orientation_offset", "seat_preload")
_SEAT_OPTIONAL = ("seat_axis_orientation", "rotation_flexibility",
                  "rotation_limit")
_CASE_KEYS = ("id", "kind", "osculation", "mu_ball_raceway")
_CASE_OPTIONAL = ("mu_wire_ring",)


@dataclass(frozen=True)
class CaseSuite:
    """All case definitions expanded from one config file."""

    source: str
    definitions: tuple

    def select(self, case_ids=None, boundary=None):
        """Subset of the suite, preserving order. None keeps everything."""
        picked = [d for d in self.definitions
                  if (case_ids is None or d.case_id in case_ids)
                  and (boundary is None or d.boundary_condition == boundary)]
        if case_ids is not None:
            known = {d.case_id for d in self.definitions}
            bad = sorted(set(case_ids) - known)
            if bad:
                raise ConfigError(f"unknown case ids {bad}; config defines {sorted(known)}")
        return CaseSuite(source=self.source, definitions=tuple(picked))


def default_config_path():
    """Filesystem path of the shipped default case suite."""
    return str(resources.files("wirebearing").joinpath("data/default_cases.yaml"))


def _check_keys(mapping, where, required, optional=()):
    if not isinstance(mapping, dict):
        raise ConfigError(f"{where} must be a mapping, got {type(mapping).__name__}")
    unknown = sorted(set(mapping) - set(required) - set(optional))
    if unknown:
        raise ConfigError(f"unknown keys {unknown} in {where}")
    missing = sorted(set(required) - set(mapping))
    if missing:
        raise ConfigError(f"missing keys {missing} in {where}")


def _number(mapping, key, where):
    value = mapping[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{where}.{key} must be a number, got {value!r}")
    return float(value)


def _material(materials, name, where, need_poisson=False):
    if name not in materials:
        raise ConfigError(f"{where} references unknown material {name!r}")
    entry = materials[name]
    _check_keys(entry, f"materials.{name}", ("elastic_modulus",), ("poisson_ratio",))
    e = _number(entry, "elastic_modulus", f"materials.{name}")
    if need_poisson and "poisson_ratio" not in entry:
        raise ConfigError(f"materials.{name} needs poisson_ratio for contact use")
    nu = _number(entry, "poisson_ratio", f"materials.{name}") \
        if "poisson_ratio" in entry else 0.3
    return e, nu


def load_config(path):
    """Parse and validate a config file into a CaseSuite."""
    try:
        with open(path, "r") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    try:
        raw = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ConfigError(f"config {path} does not parse: {exc}") from exc

    _check_keys(raw, "top level", _TOP_KEYS)
    if raw["units"] != UNITS:
        raise ConfigError(
            f"config units are {raw['units']!r}; this tool expects {UNITS!r}")

    materials = raw["materials"]
    if not isinstance(materials, dict) or not materials:
        raise ConfigError("materials must be a non-empty mapping")

    plat = raw["platform"]
    _check_keys(plat, "platform", _PLATFORM_KEYS)
    ball_d = _number(plat, "ball_diameter", "platform")
    pitch_d = _number(plat, "pitch_diameter", "platform")
    ball_count = plat["ball_count"]
    if not isinstance(ball_count, int) or isinstance(ball_count, bool):
        raise ConfigError(f"platform.ball_count must be an integer, got {ball_count!r}")
    alpha0 = _number(plat, "initial_contact_angle", "platform")
    p_limit = _number(plat, "pressure_limit", "platform")
    radii = plat["ring_centroid_radii"]
    if not isinstance(radii, list) or len(radii) != 2:
        raise ConfigError("platform.ring_centroid_radii must list the two ring radii")
    e_ball, nu_ball = _material(materials, plat["contact_material"],
                                "platform.contact_material", need_poisson=True)
    e_star = effective_modulus(e_ball, nu_ball)

    kinds = {}
    for kind in (CONVENTIONAL, WIRE):
        block = raw[kind]
        if kind == WIRE:
            _check_keys(block, kind, _RING_KEYS + _SEAT_KEYS, _SEAT_OPTIONAL)
        else:
            _check_keys(block, kind, _RING_KEYS)
        kinds[kind] = block

    bcs = raw["boundary_conditions"]
    if not isinstance(bcs, list) or not bcs:
        raise ConfigError("boundary_conditions must be a non-empty list")
    if len(set(bcs)) != len(bcs):
        raise ConfigError("boundary_conditions lists a condition twice")
    for bc in bcs:
        if bc not in ("clamped", "unclamped"):
            raise ConfigError(f"unknown boundary condition {bc!r}")

    cases = raw["cases"]
    if not isinstance(cases, list) or not cases:
        raise ConfigError("cases must be a non-empty list")

    definitions = []
    seen_ids = set()
    for idx, entry in enumerate(cases):
        where = f"cases[{idx}]"
        _check_keys(entry, where, _CASE_KEYS, _CASE_OPTIONAL)
        case_id = entry["id"]
        if not isinstance(case_id, int) or isinstance(case_id, bool):
            raise ConfigError(f"{where}.id must be an integer, got {case_id!r}")
        if case_id in seen_ids:
            raise ConfigError(f"duplicate case id {case_id}")
        seen_ids.add(case_id)
        kind = entry["kind"]
        if kind not in kinds:
            raise ConfigError(f"{where}.kind must be conventional or wire, got {kind!r}")
        if kind == CONVENTIONAL and "mu_wire_ring" in entry:
            raise ConfigError(
                f"{where}: mu_wire_ring is set on a conventional case; the wire "
                "seat friction only exists for wire bearings")
        if kind == WIRE and "mu_wire_ring" not in entry:
            raise ConfigError(f"{where}: wire cases need mu_wire_ring")

        s = _number(entry, "osculation", where)
        mu_ball = _number(entry, "mu_ball_raceway", where)
        block = kinds[kind]
        geometry = BearingGeometry(
            ball_diameter=ball_d, pitch_diameter=pitch_d, ball_count=ball_count,
            initial_contact_angle=alpha0, osculation_inner=s, osculation_outer=s,
            raceway_half_extent=_number(block, "raceway_half_extent", kind),
            bearing_kind=kind)
        e_ring, _ = _material(materials, block["ring_material"], f"{kind}.ring_material")
        area = _number(block, "ring_section_area", kind)
        sections = [wire.RingSection(area=area, centroid_radius=float(r),
                                     elastic_modulus=e_ring) for r in radii]
        seat = None
        mu_wr = None
        if kind == WIRE:
            mu_wr = _number(entry, "mu_wire_ring", where)
            seat = wire.WireSeatGeometry(
                wire_radius=_number(block, "wire_radius", kind),
                pivot_offset=_number(block, "pivot_offset", kind),
                seat_half_angle=_number(block, "seat_half_angle", kind),
                seat_axis_orientation=(_number(block, "seat_axis_orientation", kind)
                                       if "seat_axis_orientation" in block else None),
                pivot_orientation_offset=_number(block, "pivot_orientation_offset", kind),
                seat_preload=_number(block, "seat_preload", kind),
                rotation_flexibility=(_number(block, "rotation_flexibility", kind)
                                      if "rotation_flexibility" in block else 0.0),
                rotation_limit=(_number(block, "rotation_limit", kind)
                                if "rotation_limit" in block else 0.0))

        for bc in bcs:
            compliance = wire.RingCompliance.from_sections(bc, sections)
            definitions.append(CaseDefinition(
                case_id=case_id, bearing_kind=kind, geometry=geometry,
                e_star=e_star, mu_ball_raceway=mu_ball, mu_wire_ring=mu_wr,
                boundary_condition=bc, compliance=compliance, seat=seat,
                pressure_limit=p_limit))

    return CaseSuite(source=str(path), definitions=tuple(definitions))

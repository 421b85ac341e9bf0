"""Case execution and file emission.

Runs every definition in a suite through capacity, sweep, and
truncation analysis, then serializes the results as CSV, an aligned
text table, and optional SVG plots. Floats are written with repr so a
re-parse recovers the in-memory values bit for bit. Failures of one
case are collected as structured records and never abort the others.
"""

import csv
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import svgplot, truncation
from .errors import BearingError
from .geometry import groove_radius
from .solver import CaseModel, static_capacity, stiffness_curve

CURVE_HEADER = "axial_disp_mm,axial_force_N,Q_N,alpha_deg,phi_deg,psi_deg,a_mm,b_mm,p0_MPa,trunc_state"
TRAJECTORY_HEADER = "Q_N,alpha_deg"
SUMMARY_HEADER = ("case_id,boundary_condition,bearing_kind,C0a_N,onset_fraction,"
                  "complete_fraction,twist_onset_N,alpha_at_C0a_deg,phi_at_C0a_deg")

# sweeps extend a little past the rated load so the rating point is an
# interior sample for interpolation
SWEEP_OVERSHOOT = 1.05
DEFAULT_STEPS = 201


@dataclass(frozen=True)
class CaseResult:
    """Everything one case run produced, before any file is written."""

    case_id: int
    boundary_condition: str
    bearing_kind: str
    c0a: float
    onset_fraction: float | None
    complete_fraction: float | None
    twist_onset_load: float | None
    alpha_at_c0a: float
    phi_at_c0a: float
    curve: object
    capacity_point: object
    definition: object

    def __post_init__(self):
        for name in ("onset_fraction", "complete_fraction"):
            value = getattr(self, name)
            if value is not None and not 0.0 <= value <= 1.0:
                raise BearingError(f"{name} must be in [0, 1] or None, got {value}")


@dataclass(frozen=True)
class CaseFailure:
    """Structured record of one case that did not finish."""

    case_id: int
    boundary_condition: str
    error_type: str
    message: str


def run_single(definition, n_steps=DEFAULT_STEPS):
    """Capacity, sweep to past the rated load, and truncation fractions."""
    model = CaseModel(definition)
    c0a, cap_point = static_capacity(model)
    target = SWEEP_OVERSHOOT * c0a

    # expand a coarse sweep until it covers the target load, then place
    # the endpoint by interpolation so every case ends at the same
    # load fraction
    u_hi = 2.0 * cap_point.axial_disp
    for _ in range(40):
        coarse = stiffness_curve(model, u_hi, 25)
        if coarse.samples[-1].axial_force >= target:
            break
        u_hi *= 1.3
    else:
        raise BearingError(f"case {definition.case_id}: sweep never reached "
                           f"{target:.4g} N")
    forces = [p.axial_force for p in coarse.samples]
    disps = [p.axial_disp for p in coarse.samples]
    u_end = float(np.interp(target, forces, disps))

    curve = stiffness_curve(model, u_end, n_steps)
    onset, complete = truncation.truncation_loads(definition, curve, c0a)

    loads = np.array([p.axial_force for p in curve.samples])
    alphas = np.array([p.contact_angle for p in curve.samples])
    twists = np.array([p.wire_twist for p in curve.samples])
    alpha_rated = float(np.interp(c0a, loads, alphas))
    phi_rated = float(np.interp(c0a, loads, twists))
    slipped = np.nonzero(twists > 1e-12)[0]
    twist_onset = float(loads[slipped[0]]) if len(slipped) else None

    return CaseResult(
        case_id=definition.case_id,
        boundary_condition=definition.boundary_condition,
        bearing_kind=definition.bearing_kind,
        c0a=c0a, onset_fraction=onset, complete_fraction=complete,
        twist_onset_load=twist_onset,
        alpha_at_c0a=math.degrees(alpha_rated),
        phi_at_c0a=math.degrees(phi_rated),
        curve=curve, capacity_point=cap_point, definition=definition)


def run_cases(suite, parallelism=1, n_steps=DEFAULT_STEPS):
    """Run a whole suite. Returns (results, failures), both in suite order.

    Cases are independent, so they can run on a thread pool; the output
    ordering and values do not depend on the worker count.
    """
    if parallelism < 1:
        raise BearingError(f"parallelism must be >= 1, got {parallelism}")
    definitions = list(suite.definitions)
    if not definitions:
        return [], []

    def attempt(definition):
        try:
            return run_single(definition, n_steps=n_steps)
        except BearingError as exc:
            return CaseFailure(
                case_id=definition.case_id,
                boundary_condition=definition.boundary_condition,
                error_type=type(exc).__name__, message=str(exc))

    if parallelism == 1:
        outcomes = [attempt(d) for d in definitions]
    else:
        with ThreadPoolExecutor(max_workers=parallelism) as pool:
            outcomes = list(pool.map(attempt, definitions))

    results = [o for o in outcomes if isinstance(o, CaseResult)]
    failures = [o for o in outcomes if isinstance(o, CaseFailure)]
    return results, failures


def _fmt(value):
    if value is None:
        return ""
    return repr(float(value))


def _curve_rows(result):
    geometry = result.definition.geometry
    r_inner = groove_radius(geometry.osculation_inner, geometry.ball_diameter)
    r_outer = groove_radius(geometry.osculation_outer, geometry.ball_diameter)
    for p in result.curve.samples:
        placement = truncation.ellipse_placement(p, geometry)
        status = truncation.truncation_status(placement)
        # report the contact that governs the placement, the one whose
        # ellipse spans the larger arc angle on its own groove
        if p.hertz_inner.semi_major_a / r_inner >= p.hertz_outer.semi_major_a / r_outer:
            governing = p.hertz_inner
        else:
            governing = p.hertz_outer
        yield (p.axial_disp, p.axial_force, p.contact_force,
               math.degrees(p.contact_angle), math.degrees(p.wire_twist),
               math.degrees(p.arc_coordinate), governing.semi_major_a,
               governing.semi_minor_b, p.peak_pressure, status.state)


def emit_outputs(results, out_dir, svg=False):
    """Write summary, per-case curves and trajectories, optional SVG.

    Returns a manifest dict of logical name to file path.
    """
    if not results:
        raise BearingError("no results to emit")
    os.makedirs(out_dir, exist_ok=True)
    manifest = {}

    summary_csv = os.path.join(out_dir, "summary.csv")
    with open(summary_csv, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(SUMMARY_HEADER.split(","))
        for r in results:
            writer.writerow([
                r.case_id, r.boundary_condition, r.bearing_kind, _fmt(r.c0a),
                _fmt(r.onset_fraction), _fmt(r.complete_fraction),
                _fmt(r.twist_onset_load), _fmt(r.alpha_at_c0a), _fmt(r.phi_at_c0a)])
    manifest["summary_csv"] = summary_csv

    summary_txt = os.path.join(out_dir, "summary.txt")
    cols = ["case", "bc", "kind", "C0a [kN]", "onset/C0a", "compl/C0a",
            "twist on [kN]", "alpha@C0a", "phi@C0a"]
    rows = []
    for r in results:
        rows.append([
            str(r.case_id), r.boundary_condition, r.bearing_kind,
            f"{r.c0a / 1e3:.2f}",
            "none" if r.onset_fraction is None else f"{r.onset_fraction:.4f}",
            "none" if r.complete_fraction is None else f"{r.complete_fraction:.4f}",
            "none" if r.twist_onset_load is None else f"{r.twist_onset_load / 1e3:.2f}",
            f"{r.alpha_at_c0a:.3f}", f"{r.phi_at_c0a:.3f}"])
    widths = [max(len(c), *(len(row[i]) for row in rows)) for i, c in enumerate(cols)]
    with open(summary_txt, "w") as fh:
        fh.write("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip() + "\n")
        for row in rows:
            fh.write("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() + "\n")
    manifest["summary_txt"] = summary_txt

    for r in results:
        stem = f"case{r.case_id}_{r.boundary_condition}"
        curve_path = os.path.join(out_dir, f"{stem}_curve.csv")
        with open(curve_path, "w", newline="") as fh:
            fh.write(CURVE_HEADER + "\n")
            writer = csv.writer(fh)
            for row in _curve_rows(r):
                writer.writerow([_fmt(v) for v in row[:-1]] + [row[-1]])
        manifest[f"{stem}_curve"] = curve_path

        traj_path = os.path.join(out_dir, f"{stem}_trajectory.csv")
        with open(traj_path, "w", newline="") as fh:
            fh.write(TRAJECTORY_HEADER + "\n")
            writer = csv.writer(fh)
            for p in r.curve.samples:
                writer.writerow([_fmt(p.contact_force),
                                 _fmt(math.degrees(p.contact_angle))])
        manifest[f"{stem}_trajectory"] = traj_path

    if svg:
        manifest.update(_emit_svg(results, out_dir))
    return manifest


def _emit_svg(results, out_dir):
    stiff_series = []
    markers = []
    for r in results:
        xs = [p.axial_disp for p in r.curve.samples]
        ys = [p.axial_force / 1e3 for p in r.curve.samples]
        label = f"case {r.case_id} {r.boundary_condition}"
        stiff_series.append((label, xs, ys))
        if r.onset_fraction is not None:
            load = r.onset_fraction * r.c0a
            disp = float(np.interp(load, [p.axial_force for p in r.curve.samples], xs))
            markers.append((disp, load / 1e3))

    angle_series = []
    for r in results:
        qs = [p.contact_force / 1e3 for p in r.curve.samples]
        alphas = [math.degrees(p.contact_angle) for p in r.curve.samples]
        angle_series.append((f"case {r.case_id} {r.boundary_condition}", qs, alphas))

    manifest = {}
    stiff_path = os.path.join(out_dir, "stiffness.svg")
    svgplot.line_plot(
        stiff_path, stiff_series, title="Axial stiffness",
        xlabel="axial displacement [mm]", ylabel="axial force [kN]",
        markers=markers)
    manifest["stiffness_svg"] = stiff_path

    angle_path = os.path.join(out_dir, "contact_angle.svg")
    svgplot.line_plot(
        angle_path, angle_series, title="Contact angle vs ball load",
        xlabel="ball normal load [kN]", ylabel="contact angle [deg]")
    manifest["contact_angle_svg"] = angle_path
    return manifest

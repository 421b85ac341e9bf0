"""Reduced-order static analysis of four-point-contact slewing bearings
and wire-race bearings under pure axial load.

The package computes axial stiffness curves, static axial capacity,
contact-angle evolution, wire twist, and contact-ellipse truncation
diagnostics without any finite element machinery.
"""

from .config import CaseSuite, default_config_path, load_config
from .errors import (
    BearingError,
    ConfigError,
    ContactLossError,
    ConvergenceError,
    SeatSeparationError,
)
from .hertz import (
    CurvatureSet,
    HertzSolution,
    curvature_analysis,
    effective_modulus,
    interference_to_load,
    solve_hertz,
)
from .runner import CaseFailure, CaseResult, emit_outputs, run_cases, run_single
from .solver import (
    CaseDefinition,
    CaseModel,
    OperatingPoint,
    StiffnessCurve,
    operating_point,
    static_capacity,
    stiffness_curve,
)
from .truncation import (
    EllipsePlacement,
    TruncationStatus,
    ellipse_placement,
    truncated_pressure,
    truncation_loads,
    truncation_status,
)

__version__ = "0.1.0"

__all__ = [
    "BearingError",
    "ConfigError",
    "ContactLossError",
    "ConvergenceError",
    "SeatSeparationError",
    "CurvatureSet",
    "HertzSolution",
    "curvature_analysis",
    "effective_modulus",
    "interference_to_load",
    "solve_hertz",
    "CaseSuite",
    "default_config_path",
    "load_config",
    "CaseDefinition",
    "CaseModel",
    "OperatingPoint",
    "StiffnessCurve",
    "operating_point",
    "static_capacity",
    "stiffness_curve",
    "EllipsePlacement",
    "TruncationStatus",
    "ellipse_placement",
    "truncated_pressure",
    "truncation_loads",
    "truncation_status",
    "CaseFailure",
    "CaseResult",
    "emit_outputs",
    "run_cases",
    "run_single",
    "__version__",
]

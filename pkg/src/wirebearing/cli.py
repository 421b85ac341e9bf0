"""Command line interface.

Three subcommands: `run` executes a case suite and writes the output
files, `validate` checks a config without solving anything, and
`capacity` prints the static axial capacity of one case. Exit code 0
means every requested case finished; config problems exit 2 and case
failures exit 1.
"""

import argparse
import sys

from .config import load_config
from .errors import BearingError, ConfigError
from .runner import DEFAULT_STEPS, emit_outputs, run_cases
from .solver import CaseModel, static_capacity


def _parse_case_list(text):
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ConfigError(f"--cases expects comma-separated integers, got {text!r}")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="wirebearing",
        description="Reduced-order static analysis of four-point-contact "
                    "slewing and wire-race bearings under axial load.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a case suite and write result files")
    p_run.add_argument("config", help="path to the YAML case suite")
    p_run.add_argument("--out", default="out", help="output directory (default: out)")
    p_run.add_argument("--cases", default=None,
                       help="comma-separated case ids to run (default: all)")
    p_run.add_argument("--bc", choices=("clamped", "unclamped", "both"),
                       default="both", help="boundary condition filter")
    p_run.add_argument("--steps", type=int, default=DEFAULT_STEPS,
                       help=f"sweep samples per case (default: {DEFAULT_STEPS})")
    p_run.add_argument("--svg", action="store_true", help="also write SVG plots")

    p_val = sub.add_parser("validate", help="parse and validate a config")
    p_val.add_argument("config")

    p_cap = sub.add_parser("capacity", help="print the static capacity of one case")
    p_cap.add_argument("config")
    p_cap.add_argument("--case", type=int, required=True, help="case id")
    return parser


def _cmd_run(args):
    suite = load_config(args.config)
    case_ids = _parse_case_list(args.cases) if args.cases is not None else None
    boundary = None if args.bc == "both" else args.bc
    suite = suite.select(case_ids=case_ids, boundary=boundary)
    if not suite.definitions:
        print("nothing to run (empty selection)")
        return 0

    results, failures = run_cases(suite, n_steps=args.steps)
    for f in failures:
        print(f"case {f.case_id} ({f.boundary_condition}) failed: "
              f"{f.error_type}: {f.message}", file=sys.stderr)
    if results:
        manifest = emit_outputs(results, args.out, svg=args.svg)
        with open(manifest["summary_txt"]) as fh:
            print(fh.read(), end="")
        print(f"\n{len(results)} case runs written to {args.out}/ "
              f"({len(manifest)} files)")
    return 1 if failures else 0


def _cmd_validate(args):
    suite = load_config(args.config)
    ids = sorted({d.case_id for d in suite.definitions})
    bcs = sorted({d.boundary_condition for d in suite.definitions})
    print(f"{args.config}: OK ({len(suite.definitions)} runs: "
          f"cases {ids}, boundary conditions {bcs})")
    return 0


def _cmd_capacity(args):
    suite = load_config(args.config)
    matching = [d for d in suite.definitions if d.case_id == args.case]
    if not matching:
        raise ConfigError(f"case {args.case} is not in {args.config}")
    model = CaseModel(matching[0])
    c0a, point = static_capacity(model)
    print(f"case {args.case}: C0a = {c0a:.1f} N ({c0a / 1e3:.2f} kN)")
    print(f"  per-ball load {point.contact_force:.1f} N, "
          f"peak pressure {point.peak_pressure:.1f} MPa, "
          f"axial displacement {point.axial_disp:.4f} mm")
    return 0


def main(argv=None):
    args = build_parser().parse_args(argv)
    handlers = {"run": _cmd_run, "validate": _cmd_validate,
                "capacity": _cmd_capacity}
    try:
        return handlers[args.command](args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except BearingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

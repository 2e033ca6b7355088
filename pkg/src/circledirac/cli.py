"""Command-line front end: spectrum tables, verification suites, chart maps
and charge-density solves, with machine-readable CSV/JSON output.

Exit codes: 0 success, 1 usage or domain error, 2 verification failure
(a computed check exceeded its tolerance).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

from . import circle_spaces as cs
from . import qed
from . import spectrum as sp
from . import verify
from .errors import CircleDiracError
from .spectrum import QuantumNumbers

__all__ = ["main", "RunConfig"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2

DEFAULT_ALPHA = 7.2973525693e-3
DEFAULT_MASS_EV = 510998.9461


@dataclass(frozen=True)
class RunConfig:
    alpha: float = DEFAULT_ALPHA
    mass_ev: float = DEFAULT_MASS_EV
    tol: float = 1e-12
    seed: int = 0
    format: str = "csv"

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise CircleDiracError(f"alpha must lie in (0, 1), got {self.alpha}")
        if not self.mass_ev > 0:
            raise CircleDiracError(f"mass-ev must be positive, got {self.mass_ev}")
        if not self.tol > 0:
            raise CircleDiracError(f"tol must be positive, got {self.tol}")


class _Parser(argparse.ArgumentParser):
    """argparse variant that exits 1 (not 2) on bad usage."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--alpha", type=float, default=DEFAULT_ALPHA,
                        help="fine structure constant (default CODATA value)")
    common.add_argument("--mass-ev", type=float, default=DEFAULT_MASS_EV,
                        help="rest mass in eV for spectrum output")
    common.add_argument("--tol", type=float, default=1e-12,
                        help="acceptance tolerance for spectrum rows")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized verification suites")
    common.add_argument("--format", choices=("csv", "json"), default="csv",
                        help="output format (csv is the golden-file format)")

    parser = _Parser(prog="circledirac",
                     description="Verification tools for the circular-chart Dirac system.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_spec = sub.add_parser("spectrum", parents=[common],
                            help="emit the fine-structure level table")
    p_spec.add_argument("--max-ntheta", type=int, default=3)
    p_spec.add_argument("--max-nr", type=int, default=3)

    p_verify = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p_verify.add_argument("--suite", default="all",
                          choices=verify.SUITE_NAMES + ("all",))

    p_map = sub.add_parser("map", parents=[common], help="map a chart point")
    p_map.add_argument("--space", required=True, choices=[k.value for k in cs.ChartKind],
                       help="target chart")
    p_map.add_argument("--R0", type=float, default=None, help="target temporal circle radius")
    p_map.add_argument("--R1", type=float, default=None, help="target spatial circle radius")
    p_map.add_argument("--point", required=True,
                       help='source point JSON, e.g. \'{"chart":"L","coords":[0,0,0,1]}\'')
    p_map.add_argument("--round-trip", action="store_true",
                       help="also map back and print both directions")

    p_rho = sub.add_parser("qed-rho", parents=[common],
                           help="solve the charge-density quadratic")
    p_rho.add_argument("--A", type=float, default=1.0, help="local potential magnitude")
    p_rho.add_argument("--mass", type=float, default=1.0, help="rest mass (natural units)")
    p_rho.add_argument("--charge", type=float, default=None,
                       help="charge e (default sqrt(alpha))")
    p_rho.add_argument("--ntheta", type=int, default=1)
    p_rho.add_argument("--nr", type=int, default=0)
    p_rho.add_argument("--branch", choices=("plus", "minus", "both"), default="both",
                       help="additionally report one root under the key 'rho'")

    return parser


def cmd_spectrum(config: RunConfig, max_n_theta: int, max_n_r: int) -> int:
    lines = sp.spectrum_table(config.alpha, config.mass_ev, max_n_theta, max_n_r)
    if config.format == "csv":
        sys.stdout.write(sp.lines_to_csv(lines))
    else:
        sys.stdout.write(json.dumps(sp.lines_to_json_rows(lines)) + "\n")
    threshold = config.tol * config.mass_ev
    return EXIT_OK if all(line.abs_diff <= threshold for line in lines) else EXIT_VERIFICATION


def cmd_verify(config: RunConfig, suite: str) -> int:
    names = verify.SUITE_NAMES if suite == "all" else (suite,)
    reports = verify.run_suites(names, seed=config.seed)
    if config.format == "json":
        sys.stdout.write(verify.reports_to_json(reports))
    else:
        sys.stdout.write(verify.reports_to_csv(reports))
    return EXIT_OK if all(r.overall for r in reports) else EXIT_VERIFICATION


def cmd_map(config: RunConfig, space: str, R0, R1, point_json: str, round_trip: bool) -> int:
    source, coords = cs.chart_point_from_json(point_json)
    target = cs.SpaceChart(cs.ChartKind(space), R0, R1)
    mapped = cs.chart_map(coords, source, target)
    forward = json.loads(cs.chart_point_to_json(target, mapped))
    if round_trip:
        back = cs.chart_map(mapped, target, source)
        payload = {
            "forward": forward,
            "back": json.loads(cs.chart_point_to_json(source, back)),
            "round_trip_error": float(max(abs(b - c) for b, c in zip(back, coords))),
        }
        sys.stdout.write(json.dumps(payload) + "\n")
    else:
        sys.stdout.write(json.dumps(forward) + "\n")
    return EXIT_OK


def cmd_qed_rho(config: RunConfig, A: float, mass: float, charge: float | None,
                n_theta: int, n_r: int, branch: str) -> int:
    e = math.sqrt(config.alpha) if charge is None else charge
    d_prime = qed.coefficient_d_prime(QuantumNumbers(n_theta, n_r), config.alpha)
    sol = qed.solve_rho(A, mass, e, d_prime)
    payload = {
        "A": sol.A,
        "mass": mass,
        "e": e,
        "d_prime": d_prime,
        "rho_plus": sol.rho_plus,
        "rho_minus": sol.rho_minus,
        "residual_plus": sol.residual_plus,
        "residual_minus": sol.residual_minus,
    }
    if branch == "plus":
        payload["rho"] = sol.rho_plus
    elif branch == "minus":
        payload["rho"] = sol.rho_minus
    sys.stdout.write(json.dumps(payload) + "\n")
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = RunConfig(alpha=args.alpha, mass_ev=args.mass_ev,
                           tol=args.tol, seed=args.seed, format=args.format)
        if args.command == "spectrum":
            return cmd_spectrum(config, args.max_ntheta, args.max_nr)
        if args.command == "verify":
            return cmd_verify(config, args.suite)
        if args.command == "map":
            return cmd_map(config, args.space, args.R0, args.R1, args.point, args.round_trip)
        if args.command == "qed-rho":
            return cmd_qed_rho(config, args.A, args.mass, args.charge,
                               args.ntheta, args.nr, args.branch)
        parser.error(f"unknown command {args.command!r}")
    except CircleDiracError as exc:
        print(f"circledirac: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"circledirac: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

"""
symplectica CLI
---------------
``symplectica <subcommand> <path> [flags]``

Exit codes:
    0  success (valid state, symplectic matrix)
    2  parse error, bad arguments, odd dimension
    3  Hessian not positive-definite (or singular where a fixed point is needed)
    4  uncertainty relation violated, matrix not symplectic
    1  internal numerical failure
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Callable, List, Optional, Sequence

import numpy as np
from pydantic import ValidationError

from ..config import configure_logging, get_settings
from ..dynamics.normal_modes import normal_mode_frame
from ..dynamics.propagation import Route, time_grid, trajectory
from ..errors import (
    NotPositiveDefiniteError,
    SingularHessianError,
    SymplecticaError,
)
from ..models.factory import FixtureFactory
from ..models.files import CovarianceFile, MatrixFile, ModelFile, dumps
from ..statmech.thermo import ThermalModel, thermal_state, thermo_table
from ..symplectic.form import is_symplectic
from ..symplectic.williamson import williamson
from ..uncertainty.relations import rs_check
from .output import OutputFormat, render, table

logger = logging.getLogger("symplectica.cli")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_NOT_POSITIVE = 3
EXIT_INVALID = 4


class UsageError(SymplecticaError, ValueError):
    """Argument combination rejected after parsing."""

    code = "invalid_arguments"


Handler = Callable[["argparse.Namespace"], "CommandResult"]


class CommandResult:
    """Rendered text plus exit code."""

    def __init__(self, text: str, code: int = EXIT_OK) -> None:
        self.text = text
        self.code = code


# =============================================================
# Argument helpers
# =============================================================


VALUE_FLAGS = ("--x0", "--beta")


def attach_values(argv: Sequence[str]) -> List[str]:
    """Rewrite ``--x0 -1,2`` as ``--x0=-1,2``; a leading minus reads as a flag."""
    args = list(argv)
    out: List[str] = []
    i = 0
    while i < len(args):
        if args[i] in VALUE_FLAGS and i + 1 < len(args):
            out.append(f"{args[i]}={args[i + 1]}")
            i += 2
        else:
            out.append(args[i])
            i += 1
    return out


def parse_floats(text: str) -> List[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated numbers: {text}"
        ) from exc


def parse_betas(text: str) -> List[float]:
    """``b1,b2,...`` or a linear range ``start:stop:count``."""
    if ":" in text:
        try:
            start, stop, count = text.split(":")
            values = np.linspace(float(start), float(stop), int(count)).tolist()
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"bad beta range: {text}") from exc
    else:
        values = parse_floats(text)
    if not values or any(not b > 0 for b in values):
        raise argparse.ArgumentTypeError("beta values must be positive")
    return values


# =============================================================
# Subcommands
# =============================================================


def cmd_williamson(args: argparse.Namespace) -> CommandResult:
    model = ModelFile.load(args.path)
    result = williamson(model.hessian, tol=args.tol, positivity_tol=args.positivity_tol)
    payload = {"command": "williamson", **result.to_dict()}
    rows = [[k + 1, float(mu)] for k, mu in enumerate(result.spectrum)]
    return CommandResult(render(payload, args.output, ["mode", "mu"], rows))


def cmd_modes(args: argparse.Namespace) -> CommandResult:
    model = ModelFile.load(args.path)
    frame = normal_mode_frame(model.hamiltonian(), positivity_tol=args.positivity_tol)
    labels = model.labels or [f"mode{k + 1}" for k in range(frame.n)]
    payload = {"command": "modes", "labels": labels, **frame.to_dict()}
    rows = [[label, float(mu)] for label, mu in zip(labels, frame.spectrum)]
    return CommandResult(render(payload, args.output, ["label", "frequency"], rows))


def cmd_evolve(args: argparse.Namespace) -> CommandResult:
    model = ModelFile.load(args.path)
    qh = model.hamiltonian()
    if len(args.x0) != qh.dim:
        raise UsageError(f"--x0 needs {qh.dim} values, got {len(args.x0)}")
    times = time_grid(args.t_max, args.steps)
    rows = trajectory(qh, args.x0, times, Route(args.route))
    columns = ["t", *[f"x{k + 1}" for k in range(qh.dim)], "energy"]
    payload = {
        "command": "evolve",
        "route": args.route,
        "columns": columns,
        "rows": rows,
    }
    return CommandResult(render(payload, args.output, columns, rows))


def cmd_thermo(args: argparse.Namespace) -> CommandResult:
    model_file = ModelFile.load(args.path)
    hbar = model_file.hbar if args.hbar is None else args.hbar
    kB = model_file.kB if args.kb is None else args.kb
    qh = model_file.hamiltonian()
    model = ThermalModel(qh=qh, beta=args.beta[0], hbar=hbar, kB=kB)
    if args.covariance is not None:
        if len(args.beta) != 1:
            raise UsageError("--covariance needs exactly one --beta value")
        state = thermal_state(model)
        CovarianceFile.from_covariance(
            state, hbar=hbar, description=f"thermal state beta={args.beta[0]!r}"
        ).save(args.covariance)
        logger.info(f"thermal covariance written to {args.covariance}")

    reports = thermo_table(model, args.beta, classical=args.classical)
    records = [r.to_dict() for r in reports]
    columns = ["beta", "log_z", "z", "U", "F", "S", "C"]
    rows = table(records, columns)
    if args.classical:
        extra = ["log_z", "z", "U", "F", "S", "C"]
        columns += [f"classical_{c}" for c in extra]
        rows = [
            row + [r["classical"].get(c) for c in extra]
            for row, r in zip(rows, records)
        ]
    payload = {"command": "thermo", "hbar": hbar, "kB": kB, "rows": records}
    return CommandResult(render(payload, args.output, columns, rows))


def cmd_uncertainty(args: argparse.Namespace) -> CommandResult:
    cov_file = CovarianceFile.load(args.path)
    report = rs_check(cov_file.covariance(), cov_file.hbar)
    payload = {"command": "uncertainty", **report.to_dict()}
    row = [[report.valid, report.min_mu, report.delta_min_eig, report.classical_ok]]
    columns = ["valid", "min_mu", "delta_min_eig", "classical_ok"]
    text = render(payload, args.output, columns, row)
    return CommandResult(text, EXIT_OK if report.valid else EXIT_INVALID)


def cmd_check_symplectic(args: argparse.Namespace) -> CommandResult:
    matrix = MatrixFile.load(args.path)
    check = is_symplectic(matrix.array(), args.tol)
    payload = {"command": "check-symplectic", **check.to_dict()}
    rows = [[check.symplectic, check.residual, check.tol]]
    text = render(payload, args.output, ["symplectic", "residual", "tol"], rows)
    return CommandResult(text, EXIT_OK if check.symplectic else EXIT_INVALID)


def cmd_random_symplectic(args: argparse.Namespace) -> CommandResult:
    doc = FixtureFactory.random_symplectic(args.n, args.seed, args.tau)
    if args.out is not None:
        doc.save(args.out)
        payload = {"command": "random-symplectic", "path": str(args.out)}
        return CommandResult(dumps(payload))
    return CommandResult(doc.to_json())


# =============================================================
# Parser
# =============================================================


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(
        prog="symplectica",
        description="Williamson decomposition, normal modes, thermodynamics and "
        "uncertainty checks for quadratic Hamiltonians.",
    )
    parser.add_argument(
        "--log-level", default=None, help="Override SYMPLECTICA_LOG_LEVEL"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--tol",
        type=float,
        default=settings.tol,
        help="Relative tolerance (SYMPLECTICA_TOL)",
    )
    common.add_argument(
        "--positivity-tol",
        type=float,
        default=settings.positivity_tol,
        help="Positive-definite iff lambda_min > tol * lambda_max",
    )
    common.add_argument(
        "--output",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.JSON.value,
    )

    def add(name: str, fn: Handler, summary: str) -> Any:
        p = sub.add_parser(name, parents=[common], help=summary)
        p.set_defaults(handler=fn)
        return p

    p = add("williamson", cmd_williamson, "Symplectic spectrum and diagonalizer")
    p.add_argument("path", type=Path)

    p = add("modes", cmd_modes, "Normal-mode frame, fixed point and offset")
    p.add_argument("path", type=Path)

    p = add("evolve", cmd_evolve, "Sampled phase-space trajectory")
    p.add_argument("path", type=Path)
    p.add_argument(
        "--x0", type=parse_floats, required=True, help="Initial point, comma-separated"
    )
    p.add_argument("--t-max", type=float, default=10.0)
    p.add_argument("--steps", type=int, default=100)
    p.add_argument(
        "--route", choices=[r.value for r in Route], default=Route.EXPM.value
    )

    p = add("thermo", cmd_thermo, "Partition function and potentials")
    p.add_argument("path", type=Path)
    p.add_argument(
        "--beta", type=parse_betas, default=[1.0], help="b1,b2,... or start:stop:count"
    )
    p.add_argument(
        "--classical", action="store_true", help="Add classical-limit columns"
    )
    p.add_argument(
        "--covariance", type=Path, default=None, help="Write the thermal state here"
    )
    p.add_argument("--hbar", type=float, default=None)
    p.add_argument("--kb", type=float, default=None)

    p = add("uncertainty", cmd_uncertainty, "Robertson-Schrodinger check")
    p.add_argument("path", type=Path)

    p = add("check-symplectic", cmd_check_symplectic, "Residual of S^T J S - J")
    p.add_argument("path", type=Path)

    p = add("random-symplectic", cmd_random_symplectic, "Seeded symplectic matrix")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tau", type=float, default=1.0)
    p.add_argument("--out", type=Path, default=None)

    return parser


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, (NotPositiveDefiniteError, SingularHessianError)):
        return EXIT_NOT_POSITIVE
    if isinstance(exc, (ValidationError, OSError, ValueError)):
        return EXIT_USAGE
    return EXIT_FAILURE


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        parser = build_parser()
    except ValidationError as exc:
        print(f"error[invalid_settings]: {exc}", file=sys.stderr)
        return EXIT_USAGE
    args = parser.parse_args(attach_values(sys.argv[1:] if argv is None else argv))
    configure_logging(args.log_level)
    logger.debug(f"dispatch command={args.command}")
    try:
        result = args.handler(args)
    except (SymplecticaError, OSError, ValueError, ArithmeticError) as exc:
        code = exit_code_for(exc)
        tag = getattr(exc, "code", type(exc).__name__)
        print(f"error[{tag}]: {exc}", file=sys.stderr)
        return code
    sys.stdout.write(result.text)
    return result.code


if __name__ == "__main__":
    sys.exit(main())

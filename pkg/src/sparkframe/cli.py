"""Command-line interface: ``sparkframe <subcommand> ...``.

Exit codes for ``verify``: 0 full spark, 1 deficient, 2 error or budget.
Other subcommands exit 0 on success and 2 on error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from fractions import Fraction

from . import TOOL_VERSION
from ._parallel import BudgetExceeded, resolve_workers
from .criteria import (
    consecutive_minor_check,
    evans_all_minors_check,
    tight_columns_check,
    uniform_distribution_check,
)
from .erasure import erasure_trial
from .fileio import FrameFormatError, frame_to_csv, frame_to_json, read_frame
from .framecore import (
    DEFAULT_TOL,
    EXACT_BUDGET,
    GeneratingVector,
    frame_bounds,
    full_spark_exact,
    full_spark_numeric,
    is_tight,
    orbit_frame,
)
from .genfamily import ExponentFamily, family_matrix, parse_tau
from .groups import SemidirectGroup, deficiency_verdict, induced_rep

EXIT_FULL_SPARK, EXIT_DEFICIENT, EXIT_ERROR = 0, 1, 2

log = logging.getLogger("sparkframe")


class CliError(Exception):
    pass


def _int_list(s: str) -> list[int]:
    try:
        return [int(x) for x in s.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}") from exc


def _threads(args) -> int:
    env = os.environ.get("SPARKFRAME_THREADS")
    if env:
        try:
            return resolve_workers(int(env))
        except ValueError as exc:
            raise CliError(f"bad SPARKFRAME_THREADS value {env!r}") from exc
    return resolve_workers(args.threads)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _emit_json(obj, out: str | None) -> None:
    _emit(json.dumps(obj, indent=1, sort_keys=True), out)


def _parse_vector(spec: str, mode: str, dim: int) -> GeneratingVector:
    kind, _, rest = spec.partition(":")
    if kind == "monomial-squares":
        return GeneratingVector.monomial_squares(dim)
    if kind == "monomial":
        return GeneratingVector.monomial(_int_list(rest))
    if kind == "random":
        return GeneratingVector.random(int(rest or 0))
    if kind == "explicit":
        items = [x.strip() for x in rest.split(",") if x.strip()]
        if mode == "exact":
            try:
                return GeneratingVector.exact([Fraction(x) for x in items])
            except ValueError as exc:
                raise CliError("exact explicit vectors take rational entries p/q") from exc
        return GeneratingVector.numeric([complex(x.replace("i", "j")) for x in items])
    raise CliError(f"unknown vector spec {spec!r}")


def _family_from_args(args):
    if args.group is not None:
        if args.xi_list is not None or args.lambda_list is not None:
            raise CliError("give either --group or --xi-list/--lambda-list, not both")
        group = SemidirectGroup.of(args.group, args.subgroup)
        return induced_rep(group, args.xi if args.xi is not None else 1)
    if args.xi_list is None or args.lambda_list is None:
        raise CliError("need --group N or both --xi-list and --lambda-list")
    return ExponentFamily(tuple(args.xi_list), tuple(args.lambda_list), parse_tau(args.tau))


def _add_family_args(p, require_group: bool = False) -> None:
    p.add_argument("--group", type=int, required=require_group, help="modulus N of Z_N x| H")
    p.add_argument("--subgroup", type=_int_list, help="elements of H, e.g. 1,2,3,4")
    p.add_argument("--xi", type=int, help="character index (default 1)")
    if not require_group:
        p.add_argument("--xi-list", type=_int_list, help="row exponents xi")
        p.add_argument("--lambda-list", type=_int_list, help="column exponents lambda")
        p.add_argument("--tau", default="transcendental", help="p/q or 'transcendental'")


def cmd_construct(args) -> int:
    family = _family_from_args(args)
    dim = family.dim
    mode = "numeric" if args.mode in ("float", "numeric") else "exact"
    vec = _parse_vector(args.vector, mode, dim)
    frame = orbit_frame(family, vec, mode)
    text = frame_to_csv(frame) if args.format == "csv" else frame_to_json(frame)
    _emit(text, args.out)
    return 0


def run_verification(frame, mode: str | None, tol: float, budget: int | None, threads: int) -> dict:
    """Certificate dictionary for ``frame`` including run metadata."""
    mode = mode or frame.mode
    start = time.perf_counter()
    if mode == "exact":
        if frame.mode != "exact":
            raise CliError("exact verification needs an exact frame")
        cert = full_spark_exact(frame, budget=budget or EXACT_BUDGET, threads=threads)
    else:
        kw = {"budget": budget} if budget else {}
        cert = full_spark_numeric(frame, tol=tol, threads=threads, **kw)
    out = cert.to_dict()
    out["tool_version"] = TOOL_VERSION
    out["threads"] = threads
    out["elapsed_ms"] = round(1000 * (time.perf_counter() - start), 3)
    return out


def cmd_verify(args) -> int:
    frame = read_frame(args.frame)
    mode = None if args.mode is None else ("numeric" if args.mode in ("float", "numeric") else "exact")
    cert = run_verification(frame, mode, args.tol, args.budget, _threads(args))
    _emit_json(cert, args.out)
    return EXIT_FULL_SPARK if cert["verdict"] == "FullSpark" else EXIT_DEFICIENT


def _criteria_matrix(args):
    family = _family_from_args(args)
    if isinstance(family, ExponentFamily):
        return family_matrix(family)
    return family.modulation_matrix()


def cmd_criteria(args) -> int:
    budget = args.budget or EXACT_BUDGET
    if args.check == "uniform":
        if args.n is None or args.set is None:
            raise CliError("uniform needs --n and --set")
        report = {"check": "uniform", "n": args.n, "set": args.set,
                  "ok": uniform_distribution_check(args.set, args.n)}
    elif args.check == "evans":
        if args.n is None or args.a is None or args.b is None:
            raise CliError("evans needs --n, --a and --b")
        res = evans_all_minors_check(args.n, args.a, args.b, budget=budget)
        report = {"check": "evans", **res.to_dict()}
    elif args.check == "consecutive":
        res = consecutive_minor_check(_criteria_matrix(args), budget=budget)
        report = {"check": "consecutive", **res.to_dict()}
    else:
        report = {"check": "tight-columns", "ok": tight_columns_check(_criteria_matrix(args))}
    _emit_json(report, args.out)
    return 0


def cmd_bounds(args) -> int:
    frame = read_frame(args.frame)
    a, b = frame_bounds(frame)
    _emit_json({"A": a, "B": b, "tight": is_tight(frame, args.tol_tight)}, args.out)
    return 0


def cmd_simulate(args) -> int:
    frame = read_frame(args.frame)
    rep = erasure_trial(frame, args.trials, args.erasures, args.seed)
    _emit_json(rep.to_dict(), args.out)
    return 0


def cmd_deficiency(args) -> int:
    group = SemidirectGroup.of(args.group, args.subgroup)
    xi = args.xi if args.xi is not None else 1
    report = {"group": str(group), "xi": xi, **deficiency_verdict(group, xi).to_dict()}
    _emit_json(report, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=None, help="worker processes (default: all cores)")
    common.add_argument("--budget", type=int, default=None, help="maximum number of minors")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="numeric determinant tolerance")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="output path (default: stdout)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="sparkframe", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=TOOL_VERSION)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build an orbit frame")
    _add_family_args(p)
    p.add_argument("--vector", default="monomial-squares",
                   help="monomial-squares | monomial:e0,e1,.. | explicit:v0,v1,.. | random:SEED")
    p.add_argument("--mode", choices=("exact", "float", "numeric"), default="exact")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="certify full spark")
    p.add_argument("frame")
    p.add_argument("--mode", choices=("exact", "float", "numeric"), default=None,
                   help="default: the frame's own mode")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("criteria", parents=[common], help="structural minor criteria")
    p.add_argument("check", choices=("uniform", "consecutive", "tight-columns", "evans"))
    p.add_argument("--n", type=int)
    p.add_argument("--set", type=_int_list)
    p.add_argument("--a", type=_int_list, help="Evans row exponents")
    p.add_argument("--b", type=_int_list, help="Evans column exponents")
    _add_family_args(p)
    p.set_defaults(func=cmd_criteria)

    p = sub.add_parser("bounds", parents=[common], help="frame bounds A, B")
    p.add_argument("frame")
    p.add_argument("--tol-tight", type=float, default=1e-9)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("simulate", parents=[common], help="erasure-channel trials")
    p.add_argument("frame")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--erasures", type=int, default=None, help="default: M - d")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("deficiency", parents=[common], help="structural verdict for Z_N x| H")
    _add_family_args(p, require_group=True)
    p.set_defaults(func=cmd_deficiency)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (CliError, FrameFormatError, BudgetExceeded, ValueError, OSError) as exc:
        print(f"sparkframe: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

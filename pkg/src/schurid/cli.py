"""Command-line front end.

Exit codes: 0 success (and verified, when asked), 1 verification failure,
2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from . import identities as ids
from .errors import SchurIdError
from .identities import Identity
from .oracle import verify_identity
from .partition import parse_partition
from .plucker import selftest
from .strips import enumerate_specs, format_specs, parse_specs

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _flag(name: str, parse, text: str):
    try:
        return parse(text)
    except (ValueError, SchurIdError) as exc:
        raise UsageError(f"--{name}: {exc}") from None


def _raw_components(text: str) -> list[int]:
    text = text.strip().strip("()[]")
    return [int(tok) for tok in text.split(",")] if text else []


def _add_output_flags(p: argparse.ArgumentParser, verify: bool = True) -> None:
    p.add_argument("--format", choices=("latex", "json"), default="latex")
    if verify:
        p.add_argument("--verify", action="store_true",
                       help="check the identity against the bialternant oracle")
    p.add_argument("--vars", type=int, default=None,
                   help="number of variables (default: 1 + max height)")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=42)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schurid", description="Bilinear identities on Schur functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in (("gen", "main identity for a partition and strips"),
                           ("bar", "main identity with first row/column removed")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--lambda", dest="lam", required=True)
        p.add_argument("--strips", required=True, help="r:m:t[,r:m:t...]")
        if name == "bar":
            p.add_argument("--axis", choices=("row", "column"), default="row")
        _add_output_flags(p)

    for name, helptext in (("square", "s_lambda^2 over inner corners"),
                           ("square-nu", "s_lambda^2 through the auxiliary partition"),
                           ("fk", "Fulmek-Kleber identity")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--lambda", dest="lam", required=True)
        _add_output_flags(p)

    p = sub.add_parser("gps", help="s_[a|b] s_[m|n] expansion")
    for flag in ("a", "b", "m", "n"):
        p.add_argument(f"--{flag}", type=int, required=True)
    _add_output_flags(p)

    p = sub.add_parser("conjugate", help="conjugate every label of an Identity JSON on stdin")
    _add_output_flags(p)

    p = sub.add_parser("verify", help="verify an Identity JSON read from stdin")
    _add_output_flags(p, verify=False)

    p = sub.add_parser("enumerate", help="list every valid strip spec list")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--max-k", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("plucker-selftest", help="numeric Plücker relation check")
    p.add_argument("--size", type=int, default=None, help="matrix size (default: random 2..5)")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=42)
    return parser


def _read_identity(stdin: TextIO) -> Identity:
    try:
        data = json.loads(stdin.read())
        if "identity" in data:  # output of `--format json --verify`
            data = data["identity"]
        return Identity.from_dict(data)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"stdin: not an Identity JSON document ({exc})") from None


def _build(args, stdin: TextIO) -> Identity:
    cmd = args.command
    if cmd in ("gen", "bar", "square", "square-nu"):
        lam = _flag("lambda", parse_partition, args.lam)
    try:
        if cmd == "gen":
            return ids.main_identity(lam, _flag("strips", parse_specs, args.strips))
        if cmd == "bar":
            specs = _flag("strips", parse_specs, args.strips)
            return ids.barred_identity(lam, specs, args.axis)
        if cmd == "square":
            return ids.square_identity(lam)
        if cmd == "square-nu":
            return ids.square_identity_via_nu(lam)
        if cmd == "fk":
            return ids.fulmek_kleber_identity(_flag("lambda", _raw_components, args.lam))
        if cmd == "gps":
            return ids.gps_identity(args.a, args.b, args.m, args.n)
        if cmd == "conjugate":
            return ids.conjugate_identity(_read_identity(stdin))
    except SchurIdError as exc:
        flag = "--strips" if cmd in ("gen", "bar") else "--lambda"
        if cmd == "gps":
            flag = "--a/--b/--m/--n"
        raise UsageError(f"{flag}: {exc}") from None
    raise AssertionError(cmd)


def _check_common(args) -> None:
    if getattr(args, "trials", 1) < 1:
        raise UsageError("--trials: must be >= 1")
    if getattr(args, "vars", None) is not None and args.vars < 1:
        raise UsageError("--vars: must be >= 1")


def _emit_identity(identity: Identity, args, out: TextIO) -> int:
    report = None
    if getattr(args, "verify", False):
        try:
            report = verify_identity(identity, args.vars, args.trials, args.seed)
        except SchurIdError as exc:
            raise UsageError(f"--vars: {exc}") from None
    if args.format == "json":
        doc = identity.to_dict()
        if report is not None:
            doc = {"identity": doc, "verification": report.to_dict()}
        out.write(json.dumps(doc) + "\n")
    else:
        out.write(identity.to_latex() + "\n")
        if report is not None:
            if report.verified:
                out.write(f"verified ({report.points_checked} points)\n")
            else:
                point = report.to_dict()["counterexample"]
                out.write(f"NOT verified: sides differ at {point}\n")
    if report is not None and not report.verified:
        return EXIT_FAILED
    return EXIT_OK


def run(argv: Sequence[str] | None = None, stdin: TextIO | None = None,
        stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        _check_common(args)
        if args.command == "enumerate":
            lam = _flag("lambda", parse_partition, args.lam)
            if args.max_k < 1:
                raise UsageError("--max-k: must be >= 1")
            found = enumerate_specs(lam, args.max_k)
            if args.format == "json":
                out.write(json.dumps([[list(s) for s in specs] for specs in found]) + "\n")
            else:
                for specs in found:
                    out.write(format_specs(specs) + "\n")
            return EXIT_OK

        if args.command == "plucker-selftest":
            if args.size is not None and args.size < 1:
                raise UsageError("--size: must be >= 1")
            trials, checked, failures = selftest(args.trials, args.seed, args.size)
            out.write(f"trials: {trials}  relations: {checked}  failures: {failures}\n")
            return EXIT_OK if failures == 0 else EXIT_FAILED

        if args.command == "verify":
            identity = _read_identity(stdin)
            try:
                report = verify_identity(identity, args.vars, args.trials, args.seed)
            except SchurIdError as exc:
                raise UsageError(f"--vars: {exc}") from None
            out.write(report.to_json() + "\n")
            return EXIT_OK if report.verified else EXIT_FAILED

        return _emit_identity(_build(args, stdin), args, out)
    except UsageError as exc:
        err.write(f"schurid {args.command}: error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

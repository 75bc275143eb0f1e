"""Command-line interface.

Subcommands: ``eval``, ``order``, ``lines product``, ``certify``, ``validate``,
``falsify``, ``suite``.  Exit codes: 0 for pass/true, 1 for fail/false, 2 for
usage errors.  The default seed comes from ``REALBICYCLIC_SEED`` (flags win).
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from typing import List, Optional

from . import certificates as certs
from .certio import cert_to_text, read_cert, write_cert
from .exprparse import ParseError, parse_expr
from .generate import GenConfig, IntegerMode, RationalMode
from .order_geometry import Side, line_product
from .semigroup import Elem, LineRef, Sign, leq_witness, mul, natural_leq, scalar
from .suites import SUITE_NAMES, UnknownSuite, run_suite
from .topology import NbhdAc1, NbhdAc2

SEED_ENV = "REALBICYCLIC_SEED"

_LINE_RE = re.compile(r"^L([+-])(\d+(?:/\d+|\.\d+)?)$")


class UsageError(ValueError):
    pass


def _parse_element(text: str) -> Elem:
    try:
        value = parse_expr(text)
    except ParseError as exc:
        raise UsageError(f"bad element {text!r}: {exc}") from exc
    if not isinstance(value, Elem):
        raise UsageError(f"{text!r} is not an element")
    return value


def _parse_line(text: str) -> LineRef:
    m = _LINE_RE.match(text)
    if not m:
        raise UsageError(f"bad line {text!r}; expected forms like L+3 or L-1/2")
    sign = Sign.PLUS if m.group(1) == "+" else Sign.MINUS
    return LineRef(sign, scalar(m.group(2)))


def _parse_tops(text: str) -> NbhdAc2:
    parts = [p.strip() for p in text.split(";") if p.strip()]
    if not parts:
        raise UsageError("empty top list")
    return NbhdAc2(tuple(_parse_element(p) for p in parts))


def _parse_ac1(text: str) -> NbhdAc1:
    try:
        return NbhdAc1(scalar(text))
    except ValueError as exc:
        raise UsageError(f"bad threshold {text!r}: {exc}") from exc


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV, "0")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"bad {SEED_ENV} value {raw!r}")


def _gen_config(args) -> GenConfig:
    if args.integer_mode:
        mode = IntegerMode(args.max_num)
    else:
        mode = RationalMode(args.max_num, args.max_den)
    return GenConfig(seed=args.seed, scalar_mode=mode, cases=args.cases)


def _add_sampling_flags(p: argparse.ArgumentParser, default_cases: int) -> None:
    p.add_argument("--seed", type=int, default=None, help=f"seed (default ${SEED_ENV} or 0)")
    p.add_argument("--cases", type=int, default=default_cases)
    p.add_argument("--integer-mode", action="store_true", help="integer grid instead of rationals")
    p.add_argument("--max-num", type=int, default=20, help="largest numerator (or integer)")
    p.add_argument("--max-den", type=int, default=8, help="largest denominator")


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="realbicyclic",
        description="Exact pair-semigroup calculator, order geometry, and continuity certificates",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression such as '(1,3)*(2,5)'")
    p.add_argument("expr")

    p = sub.add_parser("order", help="compare two elements in the natural partial order")
    p.add_argument("e1")
    p.add_argument("e2")

    p = sub.add_parser("lines", help="line operations")
    lines_sub = p.add_subparsers(dest="lines_command", required=True)
    lp = lines_sub.add_parser("product", help="product set of two diagonal lines")
    lp.add_argument("l1")
    lp.add_argument("l2")

    p = sub.add_parser("certify", help="generate a continuity certificate")
    p.add_argument("kind", choices=("ac1", "ac2"))
    p.add_argument("--side", choices=("left", "right"), required=True)
    p.add_argument("--translator", required=True)
    p.add_argument(
        "--target",
        required=True,
        help="ac1: threshold like 4 or 9/2; ac2: tops like '(3,1);(2,5)'",
    )
    p.add_argument("--emit", metavar="FILE", help="write the certificate to FILE")

    p = sub.add_parser("validate", help="validate a stored certificate")
    p.add_argument("certfile")

    p = sub.add_parser("falsify", help="search for a counterexample to an inclusion")
    p.add_argument("kind", choices=("ac1", "ac2"))
    p.add_argument("--side", choices=("left", "right"), required=True)
    p.add_argument("--translator", required=True)
    p.add_argument("--chosen", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--cases", type=int, default=10000)

    p = sub.add_parser("suite", help="run a property suite")
    p.add_argument("name", choices=SUITE_NAMES)
    _add_sampling_flags(p, default_cases=1000)
    p.add_argument("--machine", action="store_true", help="machine-readable JSON report")

    return ap


def _cmd_eval(args) -> int:
    try:
        value = parse_expr(args.expr)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if isinstance(value, bool):
        print("true" if value else "false")
        return 0 if value else 1
    print(value)
    return 0


def _cmd_order(args) -> int:
    e1 = _parse_element(args.e1)
    e2 = _parse_element(args.e2)
    if natural_leq(e1, e2):
        print("true")
        print(f"witness {leq_witness(e1, e2)}")
        return 0
    print("false")
    return 1


def _cmd_lines_product(args) -> int:
    region = line_product(_parse_line(args.l1), _parse_line(args.l2))
    for part in region.parts:
        print(part)
    return 0


def _cmd_certify(args) -> int:
    side = Side(args.side)
    translator = _parse_element(args.translator)
    if args.kind == "ac1":
        cert = certs.continuity_cert_ac1(side, translator, _parse_ac1(args.target))
        valid = certs.validate_cert_ac1(cert)
    else:
        cert = certs.continuity_cert_ac2(side, translator, _parse_tops(args.target))
        valid = certs.validate_cert_ac2(cert)
    if not valid:
        print("error: generated certificate failed self-validation", file=sys.stderr)
        return 1
    text = cert_to_text(cert)
    if args.emit:
        write_cert(cert, args.emit)
        print(f"wrote certificate to {args.emit} (valid)")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_validate(args) -> int:
    try:
        cert = read_cert(args.certfile)
    except OSError as exc:
        print(f"error: cannot read {args.certfile}: {exc}", file=sys.stderr)
        return 2
    except certs.MalformedCert as exc:
        print(f"error: malformed certificate: {exc}", file=sys.stderr)
        return 2
    try:
        ok = certs.validate_cert(cert)
    except certs.MalformedCert as exc:
        print(f"error: malformed certificate: {exc}", file=sys.stderr)
        return 2
    print("valid" if ok else "invalid")
    return 0 if ok else 1


def _cmd_falsify(args) -> int:
    side = Side(args.side)
    translator = _parse_element(args.translator)
    if args.kind == "ac1":
        chosen: object = _parse_ac1(args.chosen)
        target: object = _parse_ac1(args.target)
    else:
        chosen = _parse_tops(args.chosen)
        target = _parse_tops(args.target)
    seed = args.seed if args.seed is not None else _default_seed()
    hit = certs.falsify(side, translator, chosen, target, args.cases, seed)
    if hit is None:
        print(f"no counterexample in {args.cases} samples (seed {seed})")
        return 0
    image = mul(translator, hit) if side is Side.LEFT else mul(hit, translator)
    print(f"counterexample {hit} -> {image}")
    return 1


def _cmd_suite(args) -> int:
    report = run_suite(args.name, _gen_config(args))
    print(report.render(machine=args.machine))
    return 0 if report.passed else 1


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if args.command == "eval":
            return _cmd_eval(args)
        if args.command == "order":
            return _cmd_order(args)
        if args.command == "lines":
            return _cmd_lines_product(args)
        if args.command == "certify":
            return _cmd_certify(args)
        if args.command == "validate":
            return _cmd_validate(args)
        if args.command == "falsify":
            return _cmd_falsify(args)
        if args.command == "suite":
            if args.seed is None:
                args.seed = _default_seed()
            return _cmd_suite(args)
        raise UsageError(f"unknown command {args.command!r}")
    except (UsageError, UnknownSuite) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

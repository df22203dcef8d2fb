"""Command line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from .code import (
    STRATEGIES,
    AdditiveLineCode,
    CodeParameters,
    code_parameters,
    format_dimension,
    format_ratio,
    lambda_k,
    s_k,
)
from .codefile import EXPORT_FORMATS, code_to_json, export_text, load_code
from .errors import LineCodeError, UsageError
from .verify import (
    FAMILIES,
    VerificationReport,
    construct,
    default_oracle_limit,
    sum_construction_check,
    verify_code,
    verify_construction,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def params_table(max_two_k: int) -> List[Tuple[int, str, int, str, CodeParameters]]:
    """Rows (two_k, lambda_k as p/q, s_k, witness family, measured witness parameters)."""
    if not 3 <= max_two_k <= 12:
        raise UsageError(f"max two_k must be in [3, 12], got {max_two_k}")
    rows = []
    for two_k in range(3, max_two_k + 1):
        if two_k == 3:
            family, size = "fano", None
        elif two_k % 2 == 0:
            family, size = "spread", two_k
        else:
            family, size = "three-cover", two_k
        witness = code_parameters(construct(family, size))
        rows.append((two_k, format_ratio(lambda_k(two_k)), s_k(two_k), family, witness))
    return rows


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linecodes",
        description="Additive quaternary codes as line multisets in binary projective spaces.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def source(p: argparse.ArgumentParser, allow_input: bool = True) -> None:
        p.add_argument("--family", choices=FAMILIES)
        p.add_argument("--l", type=int, help="ambient dimension (2k)")
        p.add_argument("--m", type=int, help="variant family parameter")
        if allow_input:
            p.add_argument("--input", "-i", type=Path, help="JSON code file")

    def engine(p: argparse.ArgumentParser) -> None:
        p.add_argument("--strategy", choices=STRATEGIES, default="auto")
        p.add_argument("--oracle-limit", type=int, default=None,
                       help="largest l checked by brute force (env LINECODES_ORACLE_LIMIT, default 14)")

    p = sub.add_parser("construct", help="build a family member and write its code file")
    source(p, allow_input=False)
    p.add_argument("-o", "--output", type=Path)

    p = sub.add_parser("verify", help="measure a code and check it against its claims")
    source(p)
    engine(p)

    p = sub.add_parser("params", help="table of lambda_k, s_k and witnesses")
    p.add_argument("--max-two-k", type=int, default=8)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("export", help="write a code as JSON, weight CSV or generator matrix")
    source(p)
    p.add_argument("--format", choices=EXPORT_FORMATS, default="json")
    p.add_argument("--strategy", choices=STRATEGIES, default="auto")
    p.add_argument("-o", "--output", type=Path)

    p = sub.add_parser("sum", help="juxtapose copies of a code and verify the result")
    source(p)
    engine(p)
    p.add_argument("--copies", type=int, default=2)
    p.add_argument("-o", "--output", type=Path)
    return parser


def _family_size(args: argparse.Namespace) -> Optional[int]:
    if args.family == "variant":
        if args.m is None:
            raise UsageError("--family variant needs --m")
        return args.m
    if args.m is not None:
        raise UsageError("--m only applies to --family variant")
    if args.family != "fano" and args.l is None:
        raise UsageError(f"--family {args.family} needs --l")
    return args.l


def _load_source(args: argparse.Namespace) -> Tuple[AdditiveLineCode, Optional[str], Optional[int]]:
    has_input = getattr(args, "input", None) is not None
    if has_input == (args.family is not None):
        raise UsageError("give exactly one of --family or --input")
    if has_input:
        return load_code(args.input), None, None
    size = _family_size(args)
    return construct(args.family, size), args.family, size


def _emit(text: str, output: Optional[Path]) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text)


def _report_out(report: VerificationReport) -> int:
    print(json.dumps(report.to_dict(), indent=2))
    for problem in report.mismatches:
        print(f"mismatch: {problem}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def _oracle_limit(args: argparse.Namespace) -> int:
    return default_oracle_limit() if args.oracle_limit is None else args.oracle_limit


def _dispatch(args: argparse.Namespace) -> int:
    if args.verb == "construct":
        if args.family is None:
            raise UsageError("construct needs --family")
        code = construct(args.family, _family_size(args))
        _emit(code_to_json(code), args.output)
        if args.output is not None:
            print(f"wrote {args.output}: {code.n} codelines, l = {code.l}")
        return EXIT_OK

    if args.verb == "verify":
        code, family, size = _load_source(args)
        limit = _oracle_limit(args)
        if family is None:
            report = verify_code(code, oracle_limit=limit, strategy=args.strategy)
        else:
            report = verify_construction(family, size, oracle_limit=limit, strategy=args.strategy)
        return _report_out(report)

    if args.verb == "params":
        rows = params_table(args.max_two_k)
        if args.json:
            data = [
                {"two_k": t, "k": format_dimension(t), "lambda": lam, "s_k": s,
                 "witness": fam, "parameters": str(par)}
                for t, lam, s, fam, par in rows
            ]
            print(json.dumps(data, indent=2))
        else:
            print(f"{'2k':>3} {'k':>4} {'lambda':>12} {'s_k':>6}  witness")
            for t, lam, s, fam, par in rows:
                print(f"{t:>3} {format_dimension(t):>4} {lam:>12} {s:>6}  {fam} {par}")
        return EXIT_OK

    if args.verb == "export":
        code, _, _ = _load_source(args)
        _emit(export_text(code, args.format, args.strategy), args.output)
        return EXIT_OK

    if args.verb == "sum":
        code, _, _ = _load_source(args)
        report = sum_construction_check(
            code, args.copies, oracle_limit=_oracle_limit(args), strategy=args.strategy
        )
        if args.output is not None:
            total = AdditiveLineCode.from_lines(
                code.l, {line: mult * args.copies for line, mult in code.lines}
            )
            args.output.write_text(code_to_json(total))
        return _report_out(report)

    raise UsageError(f"unknown verb {args.verb!r}")


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _dispatch(args)
    except LineCodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())

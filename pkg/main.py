import argparse
import json
import sys
from typing import List, Optional, Sequence

from loguru import logger

from src.arith.factor import is_prime
from src.arith.residue import kronecker
from src.config.configs import QPRAT_JOBS, QPRAT_LOG_LEVEL
from src.criteria.fibmod import FibParams, period_linear, wall_period, wall_period_square
from src.criteria.williams import golden_ratio_criterion, williams_congruence
from src.field.quadfield import field_invariants, is_fundamental_discriminant
from src.scanner.export import emit, format_records, render_multi, render_table
from src.scanner.reference import MULTIQUADRATIC_EXCEPTIONS, MULTIQUADRATIC_PRESETS, MULTIQUADRATIC_RANGE
from src.scanner.scan import (
    ScanConfig,
    fundamental_discriminants,
    multi_scan,
    real_subfield_discriminants,
    reproduce_table,
    run_scan,
)
from src.utlis.errors import ConfigurationError, InvalidArgumentError, QPRatError
from src.utlis.logger import setup_logger
from src.verdict.decide import Mode, decide


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with 1, the code shared by every configuration error."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _discriminant_arg(text: str) -> List[int]:
    """`D` or an inclusive range `A:B` of fundamental discriminants."""
    try:
        if ":" in text:
            lo, hi = (int(part) for part in text.split(":", 1))
            ds = fundamental_discriminants(lo, hi)
            if not ds:
                raise argparse.ArgumentTypeError(f"no fundamental discriminant in {text}")
            return ds
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected D or A:B, got {text!r}")


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qprat", description="p-rationality of real quadratic fields Q(sqrt d).")
    parser.add_argument("--log-level", type=str, default=QPRAT_LOG_LEVEL, help="loguru level (default %(default)s)")
    parser.add_argument("--quiet", action="store_true", help="only warnings and errors, no progress bar")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="fundamental unit and class numbers of Q(sqrt d)")
    p.add_argument("-d", type=int, required=True, help="fundamental discriminant")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("check", help="verdict for one (d, p)")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("-p", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--cross-validate", action="store_true", help="evaluate all four criteria")
    mode.add_argument("--fast", action="store_true", help="Fibonacci-Wieferich test only (default)")
    p.add_argument("--json", action="store_true")

    for name, help_text in (("scan", "exceptional primes up to a bound"), ("table", "reproduce the published table")):
        p = sub.add_parser(name, help=help_text)
        if name == "scan":
            p.add_argument("-d", type=_discriminant_arg, required=True, help="D or range A:B")
            p.add_argument("--from", dest="p_lo", type=int, default=3, help="smallest prime (default 3)")
            p.add_argument("--out", type=str, default=None, help="output path (default stdout)")
            p.add_argument("--format", choices=["human", "csv", "json"], default="human")
            p.add_argument("--timings", action="store_true", help="record elapsed_ns per record")
        else:
            p.add_argument("--dmax", type=int, required=True)
        p.add_argument("--bound", type=int, required=True)
        p.add_argument("--jobs", type=int, default=QPRAT_JOBS)
        p.add_argument("--cross-validate", action="store_true")
        p.add_argument("--force", action="store_true", help="lift the CrossValidate cap")

    p = sub.add_parser("period", help="rank and Wall period of the field's sequence mod m")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("-m", type=int, required=True)

    p = sub.add_parser("williams", help="full Williams congruence report")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("-p", type=int, required=True)

    p = sub.add_parser("multi", help="simultaneous scan over several discriminants")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--discriminants", type=_int_list)
    group.add_argument("--preset", choices=sorted(MULTIQUADRATIC_PRESETS))
    p.add_argument("--from", dest="p_lo", type=int, default=MULTIQUADRATIC_RANGE[0])
    p.add_argument("--to", dest="p_hi", type=int, default=MULTIQUADRATIC_RANGE[1])
    p.add_argument("--jobs", type=int, default=QPRAT_JOBS)
    return parser


def _require_fundamental(d: int) -> None:
    if not is_fundamental_discriminant(d):
        raise ConfigurationError(f"{d} is not a fundamental discriminant")


def _cmd_field(args) -> None:
    _require_fundamental(args.d)
    field = field_invariants(args.d)
    if args.json:
        print(field.model_dump_json(indent=2))
        return
    print(f"d          {field.d}")
    print(f"eps_d      {field.unit}")
    print(f"trace      {field.trace_a}")
    print(f"norm       {field.norm_b}")
    print(f"h          {field.h}")
    print(f"h+         {field.h_narrow}")
    print(f"cf period  {field.cf_period}")


def _cmd_check(args) -> None:
    _require_fundamental(args.d)
    mode = Mode.CROSS_VALIDATE if args.cross_validate else Mode.FAST
    report = decide(field_invariants(args.d), args.p, mode)
    if args.json:
        print(report.model_dump_json(indent=2))
        return
    print(f"d={report.d} p={report.p}: {report.verdict.value}")
    for name in ("fibonacci_wieferich", "wieferich_unit", "period_equal", "williams_nonzero"):
        value = getattr(report, name)
        if value is not None:
            print(f"  {name:<20} {value}")
    if report.excluded:
        print(f"  excluded             {', '.join(e.value for e in report.excluded)}")


def _cmd_scan(args, progress: bool) -> None:
    config = ScanConfig.build(
        discriminants=args.d,
        p_lo=args.p_lo,
        bound=args.bound,
        mode=Mode.CROSS_VALIDATE if args.cross_validate else Mode.FAST,
        jobs=args.jobs,
        output_format=args.format,
        output_path=args.out,
        force=args.force,
        timings=args.timings,
        progress=progress and args.format == "human",
    )
    result = run_scan(config)
    emit(format_records(result, config.output_format), config.output_path)


def _cmd_table(args, progress: bool) -> None:
    rows = reproduce_table(
        args.dmax,
        args.bound,
        jobs=args.jobs,
        mode=Mode.CROSS_VALIDATE if args.cross_validate else Mode.FAST,
        force=args.force,
        progress=progress,
    )
    if not rows:
        print("(none)")
        return
    print(render_table(rows, args.bound), end="")


def _cmd_period(args) -> None:
    _require_fundamental(args.d)
    field = field_invariants(args.d)
    params = FibParams.from_field(field)
    m = args.m
    out = {"d": field.d, "a": params.a, "b": params.b, "modulus": m}
    if m > 2 and is_prime(m) and params.disc % m:
        record = wall_period(params, m, kronecker(field.d, m))
        out.update(z=record.z, k=record.k, k_square=wall_period_square(params, m, record.k))
    else:
        record = period_linear(params, m)
        out.update(z=record.z, k=record.k)
    print(json.dumps(out, indent=2))


def _cmd_williams(args) -> None:
    _require_fundamental(args.d)
    if not is_prime(args.p):
        raise InvalidArgumentError(f"{args.p} is not prime")
    report = williams_congruence(field_invariants(args.d), args.p)
    out = report.model_dump(mode="json")
    out["p_rational"] = report.criterion_sum != 0
    if args.d == 5 and args.p % 5 == 1:
        _, coefficients = golden_ratio_criterion(args.p)
        out["golden_ratio_coefficients"] = coefficients
    print(json.dumps(out, indent=2))


def _cmd_multi(args, progress: bool) -> None:
    published = None
    if args.preset:
        ds = real_subfield_discriminants(MULTIQUADRATIC_PRESETS[args.preset])
        published = MULTIQUADRATIC_EXCEPTIONS[args.preset]
        logger.info("preset {}: {} real quadratic subfields", args.preset, len(ds))
    else:
        ds = args.discriminants
    rows = multi_scan(ds, args.p_lo, args.p_hi, jobs=args.jobs, progress=progress)
    print(render_multi(rows, published), end="")


def cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    setup_logger("WARNING" if args.quiet else args.log_level)
    progress = not args.quiet
    try:
        if args.command == "field":
            _cmd_field(args)
        elif args.command == "check":
            _cmd_check(args)
        elif args.command == "scan":
            _cmd_scan(args, progress)
        elif args.command == "table":
            _cmd_table(args, progress)
        elif args.command == "period":
            _cmd_period(args)
        elif args.command == "williams":
            _cmd_williams(args)
        elif args.command == "multi":
            _cmd_multi(args, progress)
    except QPRatError as e:
        logger.error("{}: {}", type(e).__name__, e)
        if e.exit_code == 2:
            print(json.dumps(e.details(), indent=2))
        return e.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(cli())

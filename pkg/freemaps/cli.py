"""The `freemaps` command.

Exit codes: 0 on success, 1 when a verdict or comparison fails, 2 for
invalid input and 3 when a computation raises.

"""
import argparse
import json
import logging
import os
import sys
import typing as t
from . import collar as co
from . import defaults as df
from . import errors as e
from . import serialize as se
from . import sturm as st
from .ansatz import extended as ex
from .ansatz import weights as w
from .exact import rational as ra
from .search import climb as cl
from .verify import pipeline as pi
from .verify import registry as rg

_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2
EXIT_ERROR = 3

REGISTRY_WEIGHTS = {2: "t2", 3: "t3", 4: "t4", 5: "t5"}


def _write(text: str, path: t.Optional[str] = None):
    if path is None:
        sys.stdout.write(text + "\n")
    else:
        with open(path, "w", encoding="utf-8") as f_:
            f_.write(text + "\n")


def verify(args) -> int:
    spec = se.validate_spec(se.load_document(args.input))
    if isinstance(spec, ex.ExtendedAnsatzSpec):
        certificate = pi.verify_extended(spec)
    else:
        certificate = pi.verify(spec)
    text = se.dumps(se.certificate_to_json(certificate))
    if args.out is not None:
        _write(text, args.out)
    if args.json:
        _write(text)
    else:
        count = certificate.real_root_count
        _write(
            f"{certificate.spec_label or 'spec'}: "
            f"{certificate.verdict.value}, "
            f"D(0) = {ra.format_rational(certificate.value_at_zero)}, "
            f"D(pi) = {ra.format_rational(certificate.value_at_pi)}, "
            f"real roots: "
            f"{'identically zero' if count is None else count}"
        )
    return EXIT_OK if certificate.is_free else EXIT_FAILED


def repro(args) -> int:
    options = rg.ReproOptions(
        cases=tuple(df.get_default(args.case, rg.PUBLISHED_CASES)),
        jobs=args.jobs,
        golden_dir=args.golden,
        freeze_golden_dir=args.freeze_golden,
    )
    reports = rg.reproduce(options)
    if args.out_dir is not None:
        os.makedirs(args.out_dir, exist_ok=True)
        for report in reports:
            path = os.path.join(args.out_dir, f"{report.case}.json")
            _write(se.dumps(report.document), path)
    _write(rg.format_report(reports))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAILED


def search(args) -> int:
    config = se.search_config_from_json(se.load_document(args.input))
    for candidate in cl.search(config, certify_all=args.certify_all):
        _write(se.dump_line(se.candidate_to_json(candidate)))
    return EXIT_OK


def sturm(args) -> int:
    polynomial = se.poly_from_json(se.load_document(args.input))
    domain = st.ALL_REALS
    if args.interval is not None:
        a, b = (ra.to_rational(x) for x in args.interval)
        if not a < b:
            raise ValueError(f"Empty interval [{a}, {b}].")
        domain = st.Interval(a, b)
    certificate = st.certify_sign(polynomial, domain)
    _write(st.format_sign_table(st.sign_table(st.sturm_sequence(polynomial))))
    _write(se.dumps(se.positivity_to_json(certificate)))
    return EXIT_OK


def collar(args) -> int:
    if args.input is None:
        profile = rg.load_spec("collar")
    else:
        profile = se.profile_from_json(se.load_document(args.input))
    certificate = co.verify_collar(profile)
    _write(se.dumps(se.collar_to_json(certificate)))
    return (
        EXIT_OK
        if certificate.verdict is co.CollarVerdict.FREE_ON_COLLAR
        else EXIT_FAILED
    )


def obstruct(args) -> int:
    weight_set = None
    if args.weights is not None:
        rows = json.loads(args.weights)
        if not isinstance(rows, list) or not all(
            isinstance(row, list) for row in rows
        ):
            raise e.SpecValidationError(["--weights must be a list of lists"])
        weight_set = w.WeightSet(
            args.m - 1,
            tuple(tuple(row) for row in rows),
            fixed=w.critical_dimension(args.m) % 2 == 1,
        )
    elif args.m in REGISTRY_WEIGHTS:
        weight_set = rg.load_spec(REGISTRY_WEIGHTS[args.m]).weight_set
    report = w.obstruction_check(args.m, weight_set)
    _write(report.details)
    return EXIT_OK if report.passes else EXIT_FAILED


def _input(parser: argparse.ArgumentParser, optional: bool = False):
    parser.add_argument(
        "input",
        nargs="?" if optional else None,
        help="Path to a JSON file, or the JSON document itself.",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freemaps",
        description="Certify free maps on tori with exact arithmetic.",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log progress; repeat for debug output.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("verify", help="Certify one ansatz.")
    _input(p)
    p.add_argument("--out", help="Write the certificate JSON here.")
    p.add_argument(
        "--json", action="store_true", help="Print the certificate JSON."
    )
    p.set_defaults(handler=verify)

    p = commands.add_parser("repro", help="Reproduce the published cases.")
    p.add_argument(
        "--case", action="append", choices=rg.CASES, help="Repeatable."
    )
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out-dir", help="Write one JSON document per case.")
    p.add_argument(
        "--freeze-golden",
        metavar="DIR",
        help="Spot-check and store computed numerators.",
    )
    p.add_argument(
        "--golden", metavar="DIR", help="Compare with stored numerators."
    )
    p.set_defaults(handler=repro)

    p = commands.add_parser("search", help="Search for free loops.")
    _input(p)
    p.add_argument(
        "--certify-all",
        action="store_true",
        help="Run the exact pipeline on every candidate.",
    )
    p.set_defaults(handler=search)

    p = commands.add_parser("sturm", help="Sturm chain of a polynomial.")
    _input(p)
    p.add_argument("--interval", nargs=2, metavar=("A", "B"))
    p.set_defaults(handler=sturm)

    p = commands.add_parser("collar", help="Certify a collar profile.")
    _input(p, optional=True)
    p.set_defaults(handler=collar)

    p = commands.add_parser("obstruct", help="Check the weight condition.")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--weights", help="JSON list of integer weight rows.")
    p.set_defaults(handler=obstruct)
    return parser


def run(argv: t.Optional[t.Sequence[str]] = None) -> int:
    """Parse the arguments, run the subcommand and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex_:
        return EXIT_OK if ex_.code == 0 else EXIT_INVALID
    logging.basicConfig(
        level=(logging.WARNING, logging.INFO, logging.DEBUG)[
            min(args.verbose, 2)
        ],
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.handler(args)
    except e.SpecValidationError as ex_:
        for message in ex_.messages:
            sys.stderr.write(f"invalid input: {message}\n")
        return EXIT_INVALID
    except (json.JSONDecodeError, OSError, ValueError) as ex_:
        sys.stderr.write(f"invalid input: {ex_}\n")
        return EXIT_INVALID
    except e.FreeMapsError as ex_:
        _logger.error(f"{type(ex_).__name__}: {ex_}")
        return EXIT_ERROR
    except Exception as ex_:
        _logger.exception(f"Unexpected {type(ex_).__name__}: {ex_}")
        return EXIT_ERROR

"""
Command-line interface for the nilpotent multiplier toolkit.

Subcommands: witt, hall, multiplier, classify, table and verify. Every
subcommand prints a rich table by default or a JSON CommandResult with
--format json.

Exit codes: 0 ok, 1 usage or domain error, 2 overflow, capacity or
inconsistency, 3 counterexamples found under --expect clean.
"""
import argparse
import logging
import sys
from dataclasses import dataclass, field
from typing import Any, Dict

from nilmult import __version__, config
from nilmult.abelian import (
    PGroupPartition,
    canonicalize,
    hook_partition,
    parse_group_spec,
    parse_partition,
)
from nilmult.classify import (
    SUITES,
    Status,
    classification_cases,
    exponent_table,
    max_exponent,
    run_suite,
)
from nilmult.errors import DomainError, NilmultError
from nilmult.hallbasis import generate_hall_basis, render_commutator, witt
from nilmult.multiplier import (
    multiplier_order_exponent,
    nilpotent_multiplier,
    render_structure,
    symbolic_multiplier,
)
from nilmult.report import (
    create_classification_table,
    create_exponent_table,
    create_hall_table,
    create_multiplier_panel,
    create_witt_table,
    display_error,
    dumps,
    loads,
    make_console,
    partition_payload,
    render_report,
    structure_payload,
)

logger = logging.getLogger("nilcalc")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_ARITHMETIC = 2
EXIT_EXPECTATION = 3

STATUS_OK = "ok"
STATUS_COUNTEREXAMPLES = "counterexamples-found"

RANGE_FLAGS = ("max_n", "max_c", "max_d", "max_order", "max_n_iii", "max_n_sandwich")


@dataclass
class CommandResult:
    """Outcome of one subcommand: what was asked, what was found."""
    command: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    result: Dict[str, Any] = field(default_factory=dict)
    status: str = STATUS_OK

    def to_dict(self):
        return {
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "status": self.status,
        }

    def to_json(self):
        return dumps(self.to_dict())

    @classmethod
    def from_json(cls, text):
        data = loads(text)
        return cls(
            command=data["command"],
            inputs=data["inputs"],
            result=data["result"],
            status=data["status"],
        )


class CliArgumentParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with status 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def cmd_witt(args, console):
    """Number of basic commutators of weight n on d letters."""
    value = witt(args.n, args.d)
    if args.format == "text":
        console.print(create_witt_table(args.n, args.d, value))
    return CommandResult("witt", {"n": args.n, "d": args.d}, {"value": value})


def cmd_hall(args, console):
    """Basic commutators on d letters grouped by weight."""
    basis = generate_hall_basis(args.d, args.w)
    rendered = [[render_commutator(c) for c in basis.layer(k)] for k in range(1, basis.max_weight + 1)]
    if args.format == "text":
        console.print(create_hall_table(basis, rendered))
    return CommandResult(
        "hall",
        {"d": args.d, "w": args.w},
        {"counts": basis.counts(), "layers": rendered, "total": len(basis)},
    )


def cmd_multiplier(args, console):
    """M^(c) of a concrete group or a symbolic p-group."""
    if args.partition is not None:
        group = parse_partition(args.partition)
    else:
        group = parse_group_spec(args.group)

    if isinstance(group, PGroupPartition):
        structure = symbolic_multiplier(group, args.c)
        group_text = " ⊕ ".join("Z_p" if a == 1 else f"Z_{{p^{a}}}" for a in group.parts)
        result = {
            "group": {"partition": partition_payload(group), "text": group_text},
            "multiplier": structure_payload(structure),
            "exponent": multiplier_order_exponent(group, args.c),
        }
    else:
        canonical = canonicalize(group)
        structure = nilpotent_multiplier(canonical, args.c)
        group_text = " ⊕ ".join(f"Z_{n}" for n in canonical.factors) or "trivial"
        result = {
            "group": {"invariant_factors": list(canonical.factors), "text": group_text},
            "multiplier": structure_payload(structure),
        }

    order_text = result["multiplier"]["order"]["text"]
    if args.format == "text":
        console.print(create_multiplier_panel(group_text, args.c, render_structure(structure), order_text))
    inputs = {"group": args.group, "partition": args.partition, "c": args.c}
    return CommandResult("multiplier", inputs, result)


def cmd_classify(args, console):
    """ClassificationCases for one t or every t."""
    if args.t is not None:
        hook_partition(args.n, args.t)
    cases = classification_cases(args.n, args.c)
    if args.t is not None:
        cases = [case for case in cases if case.t == args.t]

    counterexamples = sum(1 for case in cases if case.status is Status.COUNTEREXAMPLE)
    if args.format == "text":
        console.print(create_classification_table(cases))
    return CommandResult(
        "classify",
        {"n": args.n, "c": args.c, "t": args.t, "all_t": args.all_t},
        {
            "cases": [case.to_dict() for case in cases],
            "summary": {
                "total": len(cases),
                "confirmed": len(cases) - counterexamples,
                "counterexamples": counterexamples,
            },
        },
        STATUS_COUNTEREXAMPLES if counterexamples else STATUS_OK,
    )


def cmd_table(args, console):
    """Multiplier exponent of every partition of n."""
    rows = exponent_table(args.n, args.c)
    bound = max_exponent(args.n, args.c)
    if args.format == "text":
        console.print(create_exponent_table(args.n, args.c, rows, target=args.target))
        console.print(f"bound witt({args.c + 1}, {args.n}) = {bound}")
    payload_rows = [
        {"partition": partition_payload(lam), "exponent": e}
        for lam, e in rows
        if args.target is None or e == args.target
    ]
    return CommandResult(
        "table",
        {"n": args.n, "c": args.c, "target": args.target},
        {"rows": payload_rows, "bound": bound},
    )


def cmd_verify(args, console):
    """Run a verification suite."""
    defaults = config.DEFAULT_RANGES[args.suite]
    overrides = {}
    for flag in RANGE_FLAGS:
        value = getattr(args, flag)
        if value is None:
            continue
        if flag not in defaults:
            logger.warning(f"--{flag.replace('_', '-')} does not apply to suite {args.suite}; ignoring")
            continue
        overrides[flag] = value

    report = run_suite(args.suite, workers=args.workers, **overrides)
    if args.format == "text":
        render_report(console, report, show_all=args.show == "all")
    inputs = {flag: getattr(args, flag) for flag in RANGE_FLAGS}
    inputs.update({"suite": args.suite, "expect": args.expect})
    return CommandResult(
        "verify",
        inputs,
        report.to_dict(),
        STATUS_OK if report.clean else STATUS_COUNTEREXAMPLES,
    )


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _non_negative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def build_parser():
    """Parser with one subparser per command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text",
                        help="Output format")

    parser = CliArgumentParser(prog="nilcalc", description="Nilpotent multipliers of finite abelian groups")
    parser.add_argument("--log-level", default=config.LOG_LEVEL,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        type=str.upper, help="Logging level (logs go to stderr)")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=CliArgumentParser)

    p = subparsers.add_parser("witt", parents=[common], help="Count basic commutators")
    p.add_argument("-n", "--weight", dest="n", type=_positive, required=True, help="Weight n >= 1")
    p.add_argument("-d", "--letters", dest="d", type=_non_negative, required=True, help="Letters d >= 0")
    p.set_defaults(handler=cmd_witt)

    p = subparsers.add_parser("hall", parents=[common], help="List a Hall basis")
    p.add_argument("-d", "--letters", dest="d", type=_positive, required=True, help="Letters d >= 1")
    p.add_argument("-w", "--max-weight", dest="w", type=_positive, required=True, help="Largest weight")
    p.set_defaults(handler=cmd_hall)

    p = subparsers.add_parser("multiplier", parents=[common], help="Compute M^(c)(G)")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("-G", "--group", help='Cyclic orders "8,2,2" or symbolic "p^3,p,p"')
    source.add_argument("--partition", help='Symbolic p-group as a partition, "3,1,1"')
    p.add_argument("-c", "--class", dest="c", type=_positive, default=1, help="Nilpotency class")
    p.set_defaults(handler=cmd_multiplier)

    p = subparsers.add_parser("classify", parents=[common], help="Check the hook-partition classification")
    p.add_argument("-n", dest="n", type=_positive, required=True, help="Order exponent n")
    p.add_argument("-c", "--class", dest="c", type=_positive, default=1, help="Nilpotency class")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("-t", dest="t", type=_non_negative, help="Hook parameter 0 <= t <= n-1")
    which.add_argument("--all-t", action="store_true", help="Every t from 0 to n-1")
    p.set_defaults(handler=cmd_classify)

    p = subparsers.add_parser("table", parents=[common], help="Exponent of every partition of n")
    p.add_argument("-n", dest="n", type=_positive, required=True, help="Order exponent n")
    p.add_argument("-c", "--class", dest="c", type=_positive, default=1, help="Nilpotency class")
    p.add_argument("--target", type=_non_negative, default=None, help="Only rows with this exponent")
    p.set_defaults(handler=cmd_table)

    p = subparsers.add_parser("verify", parents=[common], help="Run a verification suite")
    p.add_argument("--suite", choices=SUITES, required=True, help="Suite to run")
    p.add_argument("--max-n", type=_positive, default=None,
                   help="Largest n (lemma i for inequalities); suite default otherwise")
    p.add_argument("--max-c", type=_positive, default=None, help="Largest nilpotency class")
    p.add_argument("--max-d", type=_positive, default=None, help="Largest letter count (witt)")
    p.add_argument("--max-order", type=_positive, default=None, help="Largest group order (schur)")
    p.add_argument("--max-n-iii", type=_positive, default=None, help="Largest n for inequality III")
    p.add_argument("--max-n-sandwich", type=_positive, default=None, help="Largest n for the sandwich bounds")
    p.add_argument("--expect", choices=["clean"], default=None,
                   help="Exit 3 when any counterexample is found")
    p.add_argument("--show", choices=["counterexamples", "all"], default="counterexamples",
                   help="Cases listed in text output")
    p.add_argument("--workers", type=_positive, default=None,
                   help="Worker processes (default NILMULT_WORKERS)")
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None):
    """
    Parse arguments, run one subcommand, print its result.

    Args:
        argv (list, optional): Arguments, defaults to sys.argv[1:]

    Returns:
        int: Process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    logging.basicConfig(
        level=getattr(logging, args.log_level, logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )

    console = make_console(file=sys.stdout)
    try:
        outcome = args.handler(args, console)
    except DomainError as e:
        logger.error(f"{args.command}: {e}")
        display_error(make_console(file=sys.stderr), str(e))
        return EXIT_USAGE
    except NilmultError as e:
        logger.error(f"{args.command}: {type(e).__name__}: {e}")
        display_error(make_console(file=sys.stderr), f"{type(e).__name__}: {e}")
        return EXIT_ARITHMETIC

    if args.format == "json":
        sys.stdout.write(outcome.to_json() + "\n")

    if args.command == "verify" and args.expect == "clean" and outcome.status != STATUS_OK:
        logger.error(f"Suite {args.suite} found counterexamples")
        return EXIT_EXPECTATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

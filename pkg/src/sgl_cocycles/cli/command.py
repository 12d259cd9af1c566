import argparse
import logging
import sys
import time
from typing import Callable, Dict, List, Optional, Sequence

from .. import __version__
from ..base import SglCocycleError
from ..cocycles.base import KIND_TAGS, CocycleKind, eval_bilinear
from ..cocycles.table import CocycleTable, theorem_table
from ..cocycles.verify import (
    compare_psi_restriction,
    decompose_in_ackp,
    sample_triples,
    verify_cocycle_condition,
    verify_gl_restriction,
    verify_jacobi,
    verify_local_mumford,
    verify_mumford,
    verify_oracle,
    verify_torsor,
    verify_witt_pullback,
)
from ..constants import MAX_RANK, SWEEP_BETAS
from ..diffop import apply, bracket, from_basis, to_basis
from ..krichever import check_chi, verify_krichever_chi
from ..reports import Report
from .helpers import (
    DEFAULT_KRICHEVER_DEGREES,
    add_format_arguments,
    add_kind_argument,
    add_rank_arguments,
    add_sample_arguments,
    degree_vector,
    write_report,
)
from .parser import parse_expr, parse_vector

__license__ = "MIT"
__all__ = (
    "build_parser",
    "main",
)

LOGGER = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace], Report]


def _grid(
    command: str,
    args: argparse.Namespace,
    run: Callable[[int, int], Report],
    ranks: Sequence[int],
) -> Report:
    """Merge the reports of ``run(n, beta)`` over a grid of parameters."""
    report = Report(
        command=command,
        params={
            "n": list(ranks),
            "beta": list(SWEEP_BETAS),
            "range": args.degree_range,
        },
    )
    for rank in ranks:
        for beta in SWEEP_BETAS:
            report.extend(run(rank, beta))
    return report


def run_bracket(args: argparse.Namespace) -> Report:
    first = parse_expr(args.first, args.n)
    second = parse_expr(args.second, args.n)
    result = to_basis(bracket(from_basis(first), from_basis(second)))
    report = Report(command="bracket", params={"n": args.n})
    report.add_entry(str(first), str(second), str(result))
    return report


def run_apply(args: argparse.Namespace) -> Report:
    expr = parse_expr(args.expr, args.n)
    vector = parse_vector(args.vector)
    result = apply(from_basis(expr), vector, beta=args.beta)
    report = Report(
        command="apply",
        params={"n": args.n, "beta": args.beta, "expr": str(expr)},
    )
    for position, (given, value) in enumerate(zip(vector, result), start=1):
        report.add_entry(f"v{position}", str(given), str(value))
    return report


def run_cocycle(args: argparse.Namespace) -> Report:
    kind = CocycleKind(args.kind, args.n, args.beta)
    first = parse_expr(args.first, args.n)
    second = parse_expr(args.second, args.n)
    report = Report(
        command="cocycle",
        params={"kind": kind.tag, "n": kind.rank, "beta": kind.beta},
    )
    value = eval_bilinear(kind, first, second)
    report.add_entry(str(first), str(second), value)
    return report


def run_table(args: argparse.Namespace) -> Report:
    if args.kind:
        kind = CocycleKind(args.kind, args.n, args.beta)
        return CocycleTable.build(kind, args.degree_range).to_report()
    table = theorem_table(args.n, args.beta, args.degree_range)
    if args.check:
        return table.verify()
    return table.to_report()


def run_krichever(args: argparse.Namespace) -> Report:
    return check_chi(args.degrees)


def run_verify_mumford(args: argparse.Namespace) -> Report:
    def run(rank: int, beta: int) -> Report:
        return verify_mumford(rank, beta, args.degree_range, jobs=args.jobs)

    if args.grid:
        return _grid("verify mumford", args, run, range(1, MAX_RANK + 1))
    return run(args.n, args.beta)


def run_verify_oracle(args: argparse.Namespace) -> Report:
    def run(rank: int, beta: int) -> Report:
        return verify_oracle(rank, beta, args.degree_range, jobs=args.jobs)

    if args.grid:
        return _grid("verify oracle", args, run, range(1, MAX_RANK + 1))
    return run(args.n, args.beta)


def run_verify_ackp(args: argparse.Namespace) -> Report:
    def run(rank: int, beta: int) -> Report:
        return decompose_in_ackp(beta, args.degree_range)

    if args.grid:
        return _grid("verify ackp", args, run, (1,))
    return run(1, args.beta)


def run_verify_cocycle_condition(args: argparse.Namespace) -> Report:
    kind = CocycleKind(args.kind, args.n, args.beta)
    samples = sample_triples(kind, count=args.samples, seed=args.seed)
    report = verify_cocycle_condition(kind, samples)
    report.params["seed"] = args.seed
    return report


def run_verify_jacobi(args: argparse.Namespace) -> Report:
    kind = CocycleKind.closed(args.n, 0)
    samples = sample_triples(kind, count=args.samples, seed=args.seed)
    report = verify_jacobi(samples)
    report.params.update({"n": args.n, "seed": args.seed})
    return report


def run_verify_psi_restriction(args: argparse.Namespace) -> Report:
    return compare_psi_restriction(args.n, args.degree_range)


def run_verify_krichever_chi(args: argparse.Namespace) -> Report:
    return verify_krichever_chi(args.degrees)


def run_verify_local_mumford(args: argparse.Namespace) -> Report:
    return verify_local_mumford(args.beta, args.degree_range)


def run_verify_gl_restriction(args: argparse.Namespace) -> Report:
    return verify_gl_restriction(args.n, args.beta, args.degree_range)


def run_verify_witt_pullback(args: argparse.Namespace) -> Report:
    return verify_witt_pullback(args.n, args.beta, args.degree_range)


def run_verify_torsor(args: argparse.Namespace) -> Report:
    return verify_torsor(args.n, args.beta)


def run_verify_table(args: argparse.Namespace) -> Report:
    return theorem_table(args.n, args.beta, args.degree_range).verify()


VERIFY_COMMANDS: Dict[str, Handler] = {
    "mumford": run_verify_mumford,
    "cocycle-condition": run_verify_cocycle_condition,
    "jacobi": run_verify_jacobi,
    "psi-restriction": run_verify_psi_restriction,
    "ackp": run_verify_ackp,
    "oracle": run_verify_oracle,
    "krichever-chi": run_verify_krichever_chi,
    "local-mumford": run_verify_local_mumford,
    "gl-restriction": run_verify_gl_restriction,
    "witt-pullback": run_verify_witt_pullback,
    "torsor": run_verify_torsor,
    "table": run_verify_table,
}

COMMANDS: Dict[str, Handler] = {
    "bracket": run_bracket,
    "apply": run_apply,
    "cocycle": run_cocycle,
    "table": run_table,
    "krichever": run_krichever,
}


def _add_verify_parsers(
    subparsers: "argparse._SubParsersAction",
) -> None:
    verify = subparsers.add_parser(
        "verify", help="Check an identity and report violations."
    )
    checks = verify.add_subparsers(dest="check", metavar="CHECK")
    checks.required = True

    for name in ("mumford", "oracle"):
        check = checks.add_parser(
            name,
            help=(
                "c_{n,b} = b c_{n,1} + (1-b) c_{n,0} + 6nb(b-1) vir_1"
                if name == "mumford"
                else "closed formula against the trace cocycle"
            ),
        )
        add_rank_arguments(check)
        check.add_argument(
            "--grid",
            action="store_true",
            help="sweep every rank and beta in [-2, 3]",
        )
        add_format_arguments(check)

    check = checks.add_parser(
        "cocycle-condition", help="antisymmetry and d c = 0 on samples"
    )
    add_rank_arguments(check, degree_range=False)
    add_kind_argument(check, KIND_TAGS, default="closed")
    add_sample_arguments(check)
    add_format_arguments(check)

    check = checks.add_parser("jacobi", help="Jacobi identity on samples")
    add_rank_arguments(check, beta=False, degree_range=False)
    add_sample_arguments(check)
    add_format_arguments(check)

    check = checks.add_parser(
        "psi-restriction", help="measure psi / c_{n,0} on the window"
    )
    add_rank_arguments(check, beta=False)
    add_format_arguments(check)

    check = checks.add_parser(
        "ackp", help="decompose c_{1,b} in alpha1, alpha2, alpha3"
    )
    add_rank_arguments(check, rank=False)
    check.add_argument(
        "--grid", action="store_true", help="sweep every beta in [-2, 3]"
    )
    add_format_arguments(check)

    check = checks.add_parser(
        "krichever-chi", help="index of Krichever points equals chi"
    )
    check.add_argument(
        "degrees",
        nargs="*",
        type=degree_vector,
        default=[degree_vector(text) for text in DEFAULT_KRICHEVER_DEGREES],
        help="comma-separated degree vectors, e.g. 2,-1",
    )
    add_format_arguments(check)

    check = checks.add_parser(
        "local-mumford", help="vir_b = (1-6b+6b^2) vir_1 in rank one"
    )
    add_rank_arguments(check, rank=False)
    add_format_arguments(check)

    for name, text in (
        ("gl-restriction", "c_{n,b} on matrices equals kac_moody"),
        ("witt-pullback", "c_{n,b} on vector fields equals n vir_b"),
        ("table", "theorem table against symbols and the trace oracle"),
    ):
        check = checks.add_parser(name, help=text)
        add_rank_arguments(check)
        add_format_arguments(check)

    check = checks.add_parser(
        "torsor", help="exponents of the determinant line decomposition"
    )
    add_rank_arguments(check, degree_range=False)
    add_format_arguments(check)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sgl-cocycles",
        description=(
            "Exact cocycles of first-order differential operators on "
            "C((z))^n."
        ),
        epilog=(
            "Expressions starting with '-' shall follow '--', "
            'e.g. cocycle -- "-L(2)" "L(-2)".'
        ),
    )
    subparsers = parser.add_subparsers(
        dest="command", help="Available commands."
    )

    subparsers.add_parser("version", help="Print version.")

    command = subparsers.add_parser("bracket", help="Bracket of two operators.")
    add_rank_arguments(command, beta=False, degree_range=False)
    command.add_argument("first", help='operator expression, e.g. "L(1)"')
    command.add_argument("second", help="operator expression")
    add_format_arguments(command)

    command = subparsers.add_parser(
        "apply", help="Action on a vector of Laurent polynomials."
    )
    add_rank_arguments(command, degree_range=False)
    command.add_argument("expr", help="operator expression")
    command.add_argument(
        "vector", nargs="+", help='components, e.g. "3*z^-2 + 1/2*z"'
    )
    add_format_arguments(command)

    command = subparsers.add_parser(
        "cocycle", help="Evaluate a cocycle on two operators."
    )
    add_rank_arguments(command, degree_range=False)
    add_kind_argument(command, KIND_TAGS, default="closed")
    command.add_argument("first", help="operator expression")
    command.add_argument("second", help="operator expression")
    add_format_arguments(command)

    command = subparsers.add_parser(
        "table", help="Cocycle values on every basis pair of the window."
    )
    add_rank_arguments(command)
    add_kind_argument(command, KIND_TAGS)
    command.add_argument(
        "--check",
        action="store_true",
        help="verify the theorem table (ignored with --kind)",
    )
    add_format_arguments(command)

    command = subparsers.add_parser(
        "krichever", help="Index and stabilizer of a Krichever point."
    )
    command.add_argument(
        "degrees", type=degree_vector, help="degrees, e.g. 2,-1"
    )
    add_format_arguments(command)

    _add_verify_parsers(subparsers)
    return parser


def _handler(args: argparse.Namespace) -> Handler:
    if args.command == "verify":
        return VERIFY_COMMANDS[args.check]
    return COMMANDS[args.command]


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point of the ``sgl-cocycles`` console script.

    :return: 0 when the report passes, 1 when it fails, 2 on invalid input.
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "version":
        print(__version__)
        return 0
    if not args.command:
        parser.print_help()
        return 1

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING
    )
    start = time.perf_counter()
    try:
        report = _handler(args)(args)
        report.timing = time.perf_counter() - start
        write_report(
            report, fmt=args.fmt, out=args.out, include_timing=args.timing
        )
    except SglCocycleError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    LOGGER.debug(f"{report.command}: {report.status} ({report.timing:.3f}s)")
    return report.exit_code

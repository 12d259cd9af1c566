import argparse
import os
from typing import Callable, Optional, Sequence

from ..constants import (
    DEFAULT_BETA,
    DEFAULT_FORMAT,
    DEFAULT_JOBS,
    DEFAULT_NB_SAMPLES,
    DEFAULT_RANGE,
    DEFAULT_RANK,
    DEFAULT_REPORT_ENCODING,
    DEFAULT_SEED,
    FORMATS,
    MAX_BETA,
    MAX_RANGE,
    MAX_RANK,
    MIN_BETA,
    MIN_RANGE,
)
from ..krichever import KricheverDatum
from ..reports import Report
from ..storages.filesystem import FileSystemStorage

__license__ = "MIT"
__all__ = (
    "DEFAULT_KRICHEVER_DEGREES",
    "add_format_arguments",
    "add_kind_argument",
    "add_rank_arguments",
    "add_sample_arguments",
    "bounded_int",
    "degree_vector",
    "write_report",
)

DEFAULT_KRICHEVER_DEGREES = ("3", "-1", "0,0", "2,-1", "1,1,1")


def bounded_int(
    name: str, lower: Optional[int] = None, upper: Optional[int] = None
) -> Callable[[str], int]:
    """Argparse type accepting integers in ``[lower, upper]``."""

    def convert(value: str) -> int:
        try:
            number = int(value)
        except ValueError as err:
            raise argparse.ArgumentTypeError(
                f"{name} shall be an integer, got {value!r}"
            ) from err
        if lower is not None and number < lower:
            raise argparse.ArgumentTypeError(
                f"{name} shall be at least {lower}, got {number}"
            )
        if upper is not None and number > upper:
            raise argparse.ArgumentTypeError(
                f"{name} shall be at most {upper}, got {number}"
            )
        return number

    convert.__name__ = name
    return convert


def degree_vector(value: str) -> KricheverDatum:
    try:
        return KricheverDatum.from_string(value)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err)) from err


def add_rank_arguments(
    parser: argparse.ArgumentParser,
    beta: bool = True,
    degree_range: bool = True,
    rank: bool = True,
) -> None:
    if rank:
        parser.add_argument(
            "--n",
            type=bounded_int("n", 1, MAX_RANK),
            default=DEFAULT_RANK,
            help=f"rank, 1..{MAX_RANK} (default: {DEFAULT_RANK})",
        )
    if beta:
        parser.add_argument(
            "--beta",
            type=bounded_int("beta", MIN_BETA, MAX_BETA),
            default=DEFAULT_BETA,
            help=(
                f"twist, {MIN_BETA}..{MAX_BETA} (default: {DEFAULT_BETA})"
            ),
        )
    if degree_range:
        parser.add_argument(
            "--range",
            dest="degree_range",
            type=bounded_int("range", MIN_RANGE, MAX_RANGE),
            default=DEFAULT_RANGE,
            help=(
                f"degree bound R, {MIN_RANGE}..{MAX_RANGE} "
                f"(default: {DEFAULT_RANGE})"
            ),
        )


def add_kind_argument(
    parser: argparse.ArgumentParser,
    tags: Sequence[str],
    required: bool = False,
    default: Optional[str] = None,
) -> None:
    parser.add_argument(
        "--kind",
        choices=tuple(tags),
        required=required,
        default=default,
        help=f"cocycle kind (default: {default})",
    )


def add_sample_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--samples",
        type=bounded_int("samples", 1),
        default=DEFAULT_NB_SAMPLES,
        help=f"number of random triples (default: {DEFAULT_NB_SAMPLES})",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=DEFAULT_SEED,
        help=f"seed of the operand generator (default: {DEFAULT_SEED})",
    )


def add_format_arguments(parser: argparse.ArgumentParser) -> None:
    """Output flags shared by every command producing a report."""
    parser.add_argument(
        "--format",
        dest="fmt",
        choices=FORMATS,
        default=DEFAULT_FORMAT,
        help=f"output format (default: {DEFAULT_FORMAT})",
    )
    parser.add_argument(
        "--out",
        default=None,
        help="write the report to this file, or into this directory",
    )
    parser.add_argument(
        "--jobs",
        type=bounded_int("jobs", 1),
        default=DEFAULT_JOBS,
        help=f"worker processes for sweeps (default: {DEFAULT_JOBS})",
    )
    parser.add_argument(
        "--timing",
        action="store_true",
        help="include the elapsed time in the report",
    )
    parser.add_argument(
        "--verbose",
        action="store_true",
        help="log debug messages to stderr",
    )


def write_report(
    report: Report,
    fmt: str = DEFAULT_FORMAT,
    out: Optional[str] = None,
    include_timing: bool = False,
) -> Optional[str]:
    """Render the report to stdout, or to ``out`` through a storage.

    An ``out`` that is a directory (existing, or ending with a separator)
    receives a file named after the report.

    :return: Absolute path of the written file, if any.
    """
    if out is None:
        print(report.render(fmt, include_timing=include_timing), end="")
        return None
    if out.endswith(os.sep) or os.path.isdir(out):
        storage = FileSystemStorage(root_path=out, rel_path="")
        path = storage.abspath(
            storage.save_report(report, fmt, include_timing=include_timing)
        )
    else:
        storage = FileSystemStorage(root_path=os.getcwd(), rel_path="")
        path = storage.abspath(out)
        storage.write_text(
            path,
            report.render(fmt, include_timing=include_timing),
            encoding=DEFAULT_REPORT_ENCODING,
        )
    print(f"Wrote {fmt} report: {path}")
    return path

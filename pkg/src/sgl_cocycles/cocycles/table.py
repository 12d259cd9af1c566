"""Tables of cocycle values on a window of basis pairs.

The theorem table has one row per cocycle (``vir_{n,1}``, ``c_{n,0}``,
``c_{n,1}``, ``c_{n,beta}``) and one column per pair family; each cell is
a rational multiple of the family's elementary value:

* ``(L_r, L_s)``: ``n d(r,-s) (r^3 - r)/6``
* ``(L_r, E_ij^s)``: ``d(r,-s) d(i,j) r(r+1)/2``
* ``(E_ij^r, E_kl^s)``: ``d(r,-s) d(i,l) d(j,k) s``
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, Iterator, List, Optional, Tuple

from ..base import format_rational
from ..diffop import BasisTerm, ETerm, LTerm, basis_terms
from ..grassmann import IndexWindow
from ..helpers import kronecker
from ..reports import Report
from .base import BaseCocycle, CocycleKind, get_cocycle
from .closed import central_charge, mixed_factor
from .trace import TraceCocycle

__license__ = "MIT"
__all__ = (
    "COLUMNS",
    "CocycleTable",
    "TheoremRow",
    "TheoremTable",
    "basis_pairs",
    "elementary_cell",
    "theorem_rows",
    "theorem_table",
)

LOGGER = logging.getLogger(__name__)

COLUMNS = ("(L_r,L_s)", "(L_r,E_ij^s)", "(E_ij^r,E_kl^s)")
CELL_TEXT = (
    "n*d(r,-s)*(r^3-r)/6",
    "d(r,-s)*d(i,j)*r(r+1)/2",
    "d(r,-s)*d(i,l)*d(j,k)*s",
)

Pair = Tuple[BasisTerm, BasisTerm]


def basis_pairs(rank: int, degree_range: int) -> List[Pair]:
    """Every ordered pair of basis terms of the window, canonical order."""
    terms = basis_terms(rank, degree_range)
    return list(product(terms, terms))


def elementary_cell(
    rank: int, t1: BasisTerm, t2: BasisTerm
) -> Tuple[int, Fraction]:
    """Column index of the pair and its elementary value.

    ``(E, L)`` pairs share the mixed column with the opposite sign.
    """
    first_l, second_l = isinstance(t1, LTerm), isinstance(t2, LTerm)
    if first_l and second_l:
        column = 0
    elif first_l or second_l:
        column = 1
    else:
        column = 2
    if t1.degree != -t2.degree:
        return column, Fraction(0)
    if column == 0:
        return column, Fraction(rank * (t1.r**3 - t1.r), 6)
    if column == 2:
        return column, Fraction(
            kronecker(t1.i, t2.j) * kronecker(t1.j, t2.i) * t2.s
        )
    if first_l:
        return column, Fraction(kronecker(t2.i, t2.j) * t1.r * (t1.r + 1), 2)
    return column, -Fraction(kronecker(t1.i, t1.j) * t2.r * (t2.r + 1), 2)


@dataclass
class CocycleTable:
    """Values of one cocycle on every basis pair of a window.

    Only nonzero values are stored.
    """

    kind: CocycleKind
    degree_range: int
    entries: Dict[Pair, Fraction] = field(default_factory=dict)

    @classmethod
    def build(
        cls,
        kind: CocycleKind,
        degree_range: int,
        cocycle: Optional[BaseCocycle] = None,
    ) -> "CocycleTable":
        cocycle = cocycle or get_cocycle(kind)
        entries: Dict[Pair, Fraction] = {}
        for t1, t2 in basis_pairs(kind.rank, degree_range):
            value = cocycle.value(t1, t2)
            if value:
                entries[(t1, t2)] = value
        LOGGER.debug(
            f"Built table of {kind}: {len(entries)} nonzero entries"
        )
        return cls(kind, degree_range, entries)

    @property
    def rank(self: "CocycleTable") -> int:
        return self.kind.rank

    @property
    def beta(self: "CocycleTable") -> int:
        return self.kind.beta

    def value(self: "CocycleTable", t1: BasisTerm, t2: BasisTerm) -> Fraction:
        return self.entries.get((t1, t2), Fraction(0))

    def items(self: "CocycleTable") -> Iterator[Tuple[Pair, Fraction]]:
        yield from self.entries.items()

    def is_antisymmetric(self: "CocycleTable") -> bool:
        return all(
            self.value(t2, t1) == -value
            for (t1, t2), value in self.entries.items()
        )

    def to_report(self: "CocycleTable") -> Report:
        report = Report(
            command="table",
            params={
                "kind": self.kind.tag,
                "n": self.rank,
                "beta": self.beta,
                "range": self.degree_range,
            },
        )
        for (t1, t2), value in self.entries.items():
            report.add_entry(str(t1), str(t2), value)
        report.checked = len(basis_pairs(self.rank, self.degree_range))
        return report


@dataclass(frozen=True)
class TheoremRow:
    name: str
    kind: CocycleKind
    coefficients: Tuple[Fraction, Fraction, Fraction]

    def cell(self: "TheoremRow", column: int) -> str:
        coeff = self.coefficients[column]
        if not coeff:
            return "0"
        if coeff == 1:
            return CELL_TEXT[column]
        return f"{format_rational(coeff)}*{CELL_TEXT[column]}"

    def expected(
        self: "TheoremRow", t1: BasisTerm, t2: BasisTerm
    ) -> Fraction:
        column, value = elementary_cell(self.kind.rank, t1, t2)
        return self.coefficients[column] * value


def theorem_rows(rank: int, beta: int) -> Tuple[TheoremRow, ...]:
    return (
        TheoremRow(
            f"vir_{{{rank},1}}",
            CocycleKind.vir_n(rank, 1),
            (Fraction(1), Fraction(0), Fraction(0)),
        ),
        TheoremRow(
            f"c_{{{rank},0}}",
            CocycleKind.closed(rank, 0),
            (Fraction(1), Fraction(1), Fraction(1)),
        ),
        TheoremRow(
            f"c_{{{rank},1}}",
            CocycleKind.closed(rank, 1),
            (Fraction(1), Fraction(-1), Fraction(1)),
        ),
        TheoremRow(
            f"c_{{{rank},{beta}}}",
            CocycleKind.closed(rank, beta),
            (
                Fraction(central_charge(beta)),
                Fraction(mixed_factor(beta)),
                Fraction(1),
            ),
        ),
    )


@dataclass
class TheoremTable:
    rank: int
    beta: int
    degree_range: int
    rows: Tuple[TheoremRow, ...]
    tables: Tuple[CocycleTable, ...]

    def symbolic(self: "TheoremTable") -> List[Tuple[str, str, str, str]]:
        return [
            (row.name, row.cell(0), row.cell(1), row.cell(2))
            for row in self.rows
        ]

    def _oracle_value(
        self: "TheoremTable",
        row: TheoremRow,
        oracles: Dict[int, TraceCocycle],
        t1: BasisTerm,
        t2: BasisTerm,
    ) -> Fraction:
        if row.kind.tag == "vir_n":
            if not (isinstance(t1, LTerm) and isinstance(t2, LTerm)):
                return Fraction(0)
        return oracles[row.kind.beta].value(t1, t2)

    def verify(self: "TheoremTable") -> Report:
        """Compare every instantiated entry with its symbolic cell and
        with the trace oracle.
        """
        report = self.to_report()
        window = IndexWindow.symmetric(self.rank, self.degree_range)
        oracles = {
            beta: TraceCocycle(CocycleKind.trace(self.rank, beta), window)
            for beta in {row.kind.beta for row in self.rows}
        }
        pairs = basis_pairs(self.rank, self.degree_range)
        for row, table in zip(self.rows, self.tables):
            for t1, t2 in pairs:
                actual = table.value(t1, t2)
                expected = row.expected(t1, t2)
                if actual != expected:
                    report.add_violation(
                        f"{row.name} symbolic",
                        str(t1),
                        str(t2),
                        expected,
                        actual,
                    )
                oracle = self._oracle_value(row, oracles, t1, t2)
                if actual != oracle:
                    report.add_violation(
                        f"{row.name} trace", str(t1), str(t2), oracle, actual
                    )
                report.checked += 1
        return report

    def to_report(self: "TheoremTable") -> Report:
        report = Report(
            command="table",
            params={
                "n": self.rank,
                "beta": self.beta,
                "range": self.degree_range,
            },
        )
        report.add_note(" | ".join(("cocycle",) + COLUMNS))
        for cells in self.symbolic():
            report.add_note(" | ".join(cells))
        for row, table in zip(self.rows, self.tables):
            for (t1, t2), value in table.items():
                report.add_entry(row.name, f"{t1}, {t2}", value)
        return report


def theorem_table(rank: int, beta: int, degree_range: int) -> TheoremTable:
    rows = theorem_rows(rank, beta)
    tables = tuple(
        CocycleTable.build(row.kind, degree_range) for row in rows
    )
    return TheoremTable(rank, beta, degree_range, rows, tables)

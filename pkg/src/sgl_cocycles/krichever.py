"""Krichever points of split bundles on the projective line.

A datum with degrees ``d_1, ..., d_n`` gives the subspace
``W = z^(d_1) C[z^-1] + ... + z^(d_n) C[z^-1]`` of ``V = C((z))^n``.
Subspaces are handled through a window of z-degrees: inside the window they
are spanned by explicit generators, below it they contain everything
(the tail rule) and above it they contain nothing.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple

from .base import WindowTooSmallError, check_rank
from .grassmann import IndexWindow, split_index
from .helpers import from_sympy, to_sympy_matrix
from .laurent import LaurentPoly
from .reports import Report

__license__ = "MIT"
__all__ = (
    "KricheverDatum",
    "WindowSubspace",
    "check_chi",
    "default_window",
    "direct_sum",
    "index",
    "index_parts",
    "is_subalgebra",
    "krichever_point",
    "stabilizer",
    "verify_krichever_chi",
)

LOGGER = logging.getLogger(__name__)

Vector = Tuple[LaurentPoly, ...]


@dataclass(frozen=True)
class KricheverDatum:
    """Split bundle ``O(d_1) + ... + O(d_n)`` on the line, marked at ``z=0``."""

    degrees: Tuple[int, ...]
    genus: int = 0

    def __post_init__(self: "KricheverDatum") -> None:
        if not self.degrees:
            raise ValueError("At least one degree is required")
        if self.genus != 0:
            raise ValueError("Only genus 0 data are supported")
        object.__setattr__(self, "degrees", tuple(self.degrees))

    @classmethod
    def from_string(cls, text: str) -> "KricheverDatum":
        """Parse comma-separated degrees, e.g. ``"2,-1"``."""
        try:
            degrees = tuple(int(part) for part in text.split(","))
        except ValueError as err:
            raise ValueError(f"Invalid degree vector {text!r}") from err
        return cls(degrees)

    @property
    def rank(self: "KricheverDatum") -> int:
        return len(self.degrees)

    @property
    def degree(self: "KricheverDatum") -> int:
        return sum(self.degrees)

    @property
    def chi(self: "KricheverDatum") -> int:
        """Euler characteristic ``n (1 - g) + d``."""
        return self.rank * (1 - self.genus) + self.degree

    def __str__(self: "KricheverDatum") -> str:
        return ",".join(str(d) for d in self.degrees)


def _monomial_vector(rank: int, component: int, exponent: int) -> Vector:
    return tuple(
        LaurentPoly.monomial(exponent) if k == component else LaurentPoly()
        for k in range(rank)
    )


@dataclass(frozen=True)
class WindowSubspace:
    rank: int
    window: IndexWindow
    generators: Tuple[Vector, ...]

    def __post_init__(self: "WindowSubspace") -> None:
        check_rank(self.rank, self.window.rank, "window")
        for vector in self.generators:
            check_rank(self.rank, len(vector), "generator")
            for component in vector:
                if not component:
                    continue
                low, high = component.min_degree, component.max_degree
                if low < self.window.k1_lo or high > self.window.k1_hi:
                    raise WindowTooSmallError(
                        f"Generator outside of {self.window}"
                    )
        if len(self._echelon) != len(self.generators):
            raise ValueError("Generators shall be linearly independent")

    def coordinates(self: "WindowSubspace", vector: Vector) -> List[Fraction]:
        """Coefficients on the window basis, in flat index order."""
        values = []
        for k in self.window.flat_indices():
            k1, k2 = split_index(k, self.rank)
            values.append(vector[k2 - 1].coeff(k1))
        return values

    def _rows(
        self: "WindowSubspace", vectors: Iterable[Vector]
    ) -> List[List[Fraction]]:
        return [self.coordinates(vector) for vector in vectors]

    @cached_property
    def _echelon(self: "WindowSubspace") -> List[Tuple[int, List[Fraction]]]:
        """Reduced row echelon rows of the generators with their pivots."""
        rows = self._rows(self.generators)
        if not rows:
            return []
        reduced, pivots = to_sympy_matrix(rows).rref()
        return [
            (pivot, [from_sympy(value) for value in reduced.row(position)])
            for position, pivot in enumerate(pivots)
        ]

    @property
    def dimension(self: "WindowSubspace") -> int:
        return len(self.generators)

    def contains(self: "WindowSubspace", vector: Vector) -> bool:
        """Membership, using the tail rule below the window."""
        check_rank(self.rank, len(vector), "vector")
        for component in vector:
            if component and component.max_degree > self.window.k1_hi:
                return False
        coords = self.coordinates(vector)
        for pivot, row in self._echelon:
            factor = coords[pivot]
            if factor:
                coords = [c - factor * r for c, r in zip(coords, row)]
        return not any(coords)

    def plus_rows(self: "WindowSubspace") -> List[List[Fraction]]:
        """Unit rows of the window part of ``V+``."""
        size = len(self.window.flat_indices())
        rows = []
        for position, k in enumerate(self.window.flat_indices()):
            if k >= 0:
                row = [Fraction(0)] * size
                row[position] = Fraction(1)
                rows.append(row)
        return rows


def _rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows:
        return 0
    return int(to_sympy_matrix(rows).rank())


def default_window(datum: KricheverDatum) -> IndexWindow:
    """Degrees ``[min d - 2, max d + 2]``, always containing -1 and 0."""
    return IndexWindow(
        datum.rank,
        min(min(datum.degrees) - 2, -1),
        max(max(datum.degrees) + 2, 0),
    )


def krichever_point(
    datum: KricheverDatum, window: Optional[IndexWindow] = None
) -> WindowSubspace:
    required = default_window(datum)
    if window is None:
        window = required
    if not window.covers(required):
        raise WindowTooSmallError(
            f"Window {window} does not cover {required} for degrees {datum}"
        )
    generators = [
        _monomial_vector(datum.rank, component, exponent)
        for component, degree in enumerate(datum.degrees)
        for exponent in range(window.k1_lo, degree + 1)
    ]
    LOGGER.debug(
        f"Krichever point of ({datum}): {len(generators)} generators "
        f"on {window}"
    )
    return WindowSubspace(datum.rank, window, tuple(generators))


def index_parts(subspace: WindowSubspace) -> Tuple[int, int]:
    """``(dim W & V+, dim V / (W + V+))``."""
    generator_rows = subspace._rows(subspace.generators)
    plus_rows = subspace.plus_rows()
    total = _rank(generator_rows + plus_rows)
    intersection = _rank(generator_rows) + _rank(plus_rows) - total
    cokernel = len(subspace.window.flat_indices()) - total
    return intersection, cokernel


def index(subspace: WindowSubspace) -> int:
    intersection, cokernel = index_parts(subspace)
    return intersection - cokernel


def _times_monomial(vector: Vector, exponent: int) -> Vector:
    return tuple(component.shift(exponent) for component in vector)


def _truncate_below(vector: Vector, k1_lo: int) -> Vector:
    return tuple(
        LaurentPoly({e: c for e, c in component.items() if e >= k1_lo})
        for component in vector
    )


def _stabilized_by(subspace: WindowSubspace, exponent: int) -> bool:
    window = subspace.window
    for vector in subspace.generators:
        product = _truncate_below(
            _times_monomial(vector, exponent), window.k1_lo
        )
        if not subspace.contains(product):
            return False
    # The tail z^(<lo) is pushed into the window by positive exponents.
    upper = min(window.k1_lo + exponent, window.k1_hi + 1)
    for k1 in range(window.k1_lo, upper):
        for component in range(subspace.rank):
            if not subspace.contains(
                _monomial_vector(subspace.rank, component, k1)
            ):
                return False
    return True


def stabilizer(
    subspace: WindowSubspace, window: Optional[IndexWindow] = None
) -> WindowSubspace:
    """Monomials ``z^m`` of the window with ``z^m W`` inside ``W``."""
    k1_lo = subspace.window.k1_lo if window is None else window.k1_lo
    k1_hi = subspace.window.k1_hi if window is None else window.k1_hi
    scalar_window = IndexWindow(1, k1_lo, k1_hi)
    exponents = [
        m for m in range(k1_lo, k1_hi + 1) if _stabilized_by(subspace, m)
    ]
    return WindowSubspace(
        1,
        scalar_window,
        tuple((LaurentPoly.monomial(m),) for m in exponents),
    )


def _widen(subspace: WindowSubspace, k1_lo: int, k1_hi: int) -> WindowSubspace:
    window = IndexWindow(subspace.rank, k1_lo, k1_hi)
    tail = [
        _monomial_vector(subspace.rank, component, k1)
        for k1 in range(k1_lo, subspace.window.k1_lo)
        for component in range(subspace.rank)
    ]
    return WindowSubspace(
        subspace.rank, window, tuple(tail) + subspace.generators
    )


def direct_sum(first: WindowSubspace, second: WindowSubspace) -> WindowSubspace:
    """``W1 + W2`` inside ``C((z))^(n1 + n2)``."""
    k1_lo = min(first.window.k1_lo, second.window.k1_lo)
    k1_hi = max(first.window.k1_hi, second.window.k1_hi)
    first, second = _widen(first, k1_lo, k1_hi), _widen(second, k1_lo, k1_hi)
    rank = first.rank + second.rank
    pad_first = tuple(LaurentPoly() for _ in range(second.rank))
    pad_second = tuple(LaurentPoly() for _ in range(first.rank))
    generators = tuple(v + pad_first for v in first.generators) + tuple(
        pad_second + v for v in second.generators
    )
    return WindowSubspace(rank, IndexWindow(rank, k1_lo, k1_hi), generators)


def is_subalgebra(algebra: WindowSubspace) -> bool:
    """Rank one subspace containing 1 and closed under products of
    generators, within the window.
    """
    if algebra.rank != 1:
        return False
    if not algebra.contains((LaurentPoly.constant(1),)):
        return False
    for (f,) in algebra.generators:
        for (g,) in algebra.generators:
            product = _truncate_below((f * g,), algebra.window.k1_lo)
            if not algebra.contains(product):
                return False
    return True


def _is_inverse_polynomials(algebra: WindowSubspace) -> bool:
    expected = set(range(algebra.window.k1_lo, 1))
    found = set()
    for (f,) in algebra.generators:
        if len(f) != 1:
            return False
        found.update(f.support())
    return found == expected


def check_chi(
    datum: KricheverDatum, window: Optional[IndexWindow] = None
) -> Report:
    """Index equals ``n (1 - g) + d``; the stabilizer is ``C[z^-1]`` with
    index ``1 - g``.
    """
    report = Report(command="krichever", params={"degrees": str(datum)})
    point = krichever_point(datum, window)
    intersection, cokernel = index_parts(point)
    point_index = intersection - cokernel
    report.add_entry("dim W&V+", str(datum), Fraction(intersection))
    report.add_entry("dim V/(W+V+)", str(datum), Fraction(cokernel))
    report.add_entry("index", str(datum), Fraction(point_index))
    report.add_entry("chi", str(datum), Fraction(datum.chi))
    if point_index != datum.chi:
        report.add_violation(
            "index = chi", "index", str(datum), datum.chi, point_index
        )
    algebra = stabilizer(point)
    algebra_index = index(algebra)
    report.add_entry("stabilizer index", str(datum), Fraction(algebra_index))
    if algebra_index != 1 - datum.genus:
        report.add_violation(
            "stabilizer index",
            "stabilizer",
            str(datum),
            1 - datum.genus,
            algebra_index,
        )
    if not _is_inverse_polynomials(algebra):
        report.add_violation(
            "stabilizer = C[1/z]", "stabilizer", str(datum), 1, 0
        )
    if not is_subalgebra(algebra):
        report.add_violation("subalgebra", "stabilizer", str(datum), 1, 0)
    report.checked = 1
    return report


def verify_krichever_chi(
    data: Sequence[KricheverDatum],
) -> Report:
    report = Report(
        command="verify krichever-chi",
        params={"degrees": [str(datum) for datum in data]},
    )
    for datum in data:
        report.extend(check_chi(datum))
    return report

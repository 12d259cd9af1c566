"""Differential operators with matrix Laurent coefficients.

``DiffOp`` is a finite sum ``A_0 + A_1 d + ... + A_m d^m``. The Lie algebra of
first-order operators with scalar symbol, ``gamma + f d``, is modelled by
``FirstOrderScalarOp``; its basis is ``L(r) = z^(r+1) d`` and
``E(i,j;s) = z^s e_ij``.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import (
    Dict,
    Iterable,
    Iterator,
    List,
    Sequence,
    Tuple,
    Union,
)

from .base import (
    IndexOutOfRangeError,
    NotInD1Error,
    RationalLike,
    check_rank,
    format_rational,
    to_rational,
)
from .laurent import LaurentPoly, MatLaurent

__license__ = "MIT"
__all__ = (
    "BasisTerm",
    "DiffOp",
    "ETerm",
    "FirstOrderScalarOp",
    "LTerm",
    "OperatorExpr",
    "apply",
    "basis_operator",
    "basis_terms",
    "bracket",
    "commutator",
    "compose",
    "from_basis",
    "make_E",
    "make_L",
    "max_shift",
    "shift_degrees",
    "symbol_of",
    "term_sort_key",
    "to_basis",
    "validate_term",
)


@dataclass(frozen=True)
class LTerm:
    """Basis vector field ``L(r) = z^(r+1) d``."""

    r: int

    @property
    def degree(self: "LTerm") -> int:
        return self.r

    def __str__(self: "LTerm") -> str:
        return f"L({self.r})"


@dataclass(frozen=True)
class ETerm:
    """Basis matrix ``E(i,j;s)``: ``z^s`` at 1-based entry ``(i, j)``."""

    i: int
    j: int
    s: int

    @property
    def degree(self: "ETerm") -> int:
        return self.s

    def __str__(self: "ETerm") -> str:
        return f"E({self.i},{self.j};{self.s})"


BasisTerm = Union[LTerm, ETerm]


def term_sort_key(term: BasisTerm) -> Tuple[int, ...]:
    """Canonical order: every ``L`` before every ``E``, then by indices."""
    if isinstance(term, LTerm):
        return (0, term.r)
    return (1, term.i, term.j, term.s)


def validate_term(term: BasisTerm, rank: int) -> BasisTerm:
    if rank < 1:
        raise ValueError(f"Rank shall be positive, got {rank}")
    if isinstance(term, ETerm) and not (
        1 <= term.i <= rank and 1 <= term.j <= rank
    ):
        raise IndexOutOfRangeError(
            f"{term} has an index out of range for rank {rank}"
        )
    if not isinstance(term, (LTerm, ETerm)):
        raise TypeError(f"Not a basis term: {term!r}")
    return term


def basis_terms(rank: int, degree_range: int) -> Tuple[BasisTerm, ...]:
    """All basis terms with ``|degree| <= degree_range``, canonical order."""
    degrees = range(-degree_range, degree_range + 1)
    terms: List[BasisTerm] = [LTerm(r) for r in degrees]
    terms.extend(
        ETerm(i, j, s)
        for i in range(1, rank + 1)
        for j in range(1, rank + 1)
        for s in degrees
    )
    return tuple(sorted(terms, key=term_sort_key))


class OperatorExpr:
    """Formal rational combination of basis terms at a fixed rank.

    Duplicate terms are merged, zero coefficients dropped and the terms kept
    in canonical order, so two expressions are equal iff their data are.
    """

    __slots__ = ("_terms", "rank")

    def __init__(
        self: "OperatorExpr",
        rank: int,
        terms: Iterable[Tuple[BasisTerm, RationalLike]] = (),
    ) -> None:
        merged: Dict[BasisTerm, Fraction] = {}
        for term, coeff in terms:
            validate_term(term, rank)
            merged[term] = merged.get(term, Fraction(0)) + to_rational(coeff)
        self.rank = rank
        self._terms: Tuple[Tuple[BasisTerm, Fraction], ...] = tuple(
            (term, merged[term])
            for term in sorted(merged, key=term_sort_key)
            if merged[term]
        )

    @classmethod
    def single(
        cls, term: BasisTerm, rank: int, coeff: RationalLike = 1
    ) -> "OperatorExpr":
        return cls(rank, [(term, coeff)])

    @property
    def terms(self: "OperatorExpr") -> Tuple[Tuple[BasisTerm, Fraction], ...]:
        return self._terms

    def __iter__(
        self: "OperatorExpr",
    ) -> Iterator[Tuple[BasisTerm, Fraction]]:
        return iter(self._terms)

    def __len__(self: "OperatorExpr") -> int:
        return len(self._terms)

    def is_zero(self: "OperatorExpr") -> bool:
        return not self._terms

    def __add__(self: "OperatorExpr", other: object) -> "OperatorExpr":
        if not isinstance(other, OperatorExpr):
            return NotImplemented
        check_rank(self.rank, other.rank, "expression sum")
        return OperatorExpr(self.rank, self._terms + other._terms)

    def scale(self: "OperatorExpr", factor: RationalLike) -> "OperatorExpr":
        factor = to_rational(factor)
        return OperatorExpr(
            self.rank, [(term, coeff * factor) for term, coeff in self._terms]
        )

    def __neg__(self: "OperatorExpr") -> "OperatorExpr":
        return self.scale(-1)

    def __sub__(self: "OperatorExpr", other: object) -> "OperatorExpr":
        if not isinstance(other, OperatorExpr):
            return NotImplemented
        return self + (-other)

    def __eq__(self: "OperatorExpr", other: object) -> bool:
        if not isinstance(other, OperatorExpr):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    def __hash__(self: "OperatorExpr") -> int:
        return hash((self.rank, self._terms))

    def __str__(self: "OperatorExpr") -> str:
        if not self._terms:
            return "0"
        text = ""
        for position, (term, coeff) in enumerate(self._terms):
            magnitude = abs(coeff)
            body = (
                str(term)
                if magnitude == 1
                else f"{format_rational(magnitude)}*{term}"
            )
            if position == 0:
                text = f"-{body}" if coeff < 0 else body
            else:
                text += f" {'-' if coeff < 0 else '+'} {body}"
        return text

    def __repr__(self: "OperatorExpr") -> str:
        return f"OperatorExpr(rank={self.rank}, {str(self)!r})"


class DiffOp:
    """Differential operator ``sum_k A_k d^k`` with ``MatLaurent`` ``A_k``.

    Trailing zero coefficients are stripped; the zero operator has order -1.
    """

    __slots__ = ("_coeffs", "rank")

    def __init__(
        self: "DiffOp", rank: int, coeffs: Sequence[MatLaurent] = ()
    ) -> None:
        if rank < 1:
            raise ValueError(f"Rank shall be positive, got {rank}")
        coeffs = list(coeffs)
        for coeff in coeffs:
            check_rank(rank, coeff.rank, "operator coefficient")
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.rank = rank
        self._coeffs: Tuple[MatLaurent, ...] = tuple(coeffs)

    @classmethod
    def zero(cls, rank: int) -> "DiffOp":
        return cls(rank)

    @classmethod
    def identity(cls, rank: int) -> "DiffOp":
        return cls(rank, [MatLaurent.identity(rank)])

    @classmethod
    def multiplication(cls, matrix: MatLaurent) -> "DiffOp":
        return cls(matrix.rank, [matrix])

    @classmethod
    def homogeneous(cls, matrix: MatLaurent, order: int) -> "DiffOp":
        """The operator ``matrix * d^order``."""
        zero = MatLaurent.zero(matrix.rank)
        return cls(matrix.rank, [zero] * order + [matrix])

    @property
    def order(self: "DiffOp") -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self: "DiffOp") -> Tuple[MatLaurent, ...]:
        return self._coeffs

    def coefficient(self: "DiffOp", order: int) -> MatLaurent:
        if 0 <= order < len(self._coeffs):
            return self._coeffs[order]
        return MatLaurent.zero(self.rank)

    def homogeneous_parts(self: "DiffOp") -> Iterator[Tuple[int, MatLaurent]]:
        for order, coeff in enumerate(self._coeffs):
            if not coeff.is_zero():
                yield order, coeff

    def is_zero(self: "DiffOp") -> bool:
        return not self._coeffs

    def __add__(self: "DiffOp", other: object) -> "DiffOp":
        if not isinstance(other, DiffOp):
            return NotImplemented
        check_rank(self.rank, other.rank, "operator sum")
        size = max(len(self._coeffs), len(other._coeffs))
        return DiffOp(
            self.rank,
            [self.coefficient(k) + other.coefficient(k) for k in range(size)],
        )

    def __neg__(self: "DiffOp") -> "DiffOp":
        return DiffOp(self.rank, [-coeff for coeff in self._coeffs])

    def __sub__(self: "DiffOp", other: object) -> "DiffOp":
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self + (-other)

    def scale(self: "DiffOp", factor: RationalLike) -> "DiffOp":
        return DiffOp(
            self.rank, [coeff.scale(factor) for coeff in self._coeffs]
        )

    def __eq__(self: "DiffOp", other: object) -> bool:
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self.rank == other.rank and self._coeffs == other._coeffs

    def __hash__(self: "DiffOp") -> int:
        return hash((self.rank, self._coeffs))

    def __repr__(self: "DiffOp") -> str:
        parts = ", ".join(
            f"{coeff!r}*d^{order}" for order, coeff in self.homogeneous_parts()
        )
        return f"DiffOp(rank={self.rank}, [{parts}])"


@dataclass(frozen=True)
class FirstOrderScalarOp:
    """Element ``gamma + f d`` of the Lie algebra of first-order operators
    with scalar symbol.
    """

    gamma: MatLaurent
    symbol: LaurentPoly

    @property
    def rank(self: "FirstOrderScalarOp") -> int:
        return self.gamma.rank

    @classmethod
    def zero(cls, rank: int) -> "FirstOrderScalarOp":
        return cls(MatLaurent.zero(rank), LaurentPoly())

    @classmethod
    def from_diffop(cls, operator: DiffOp) -> "FirstOrderScalarOp":
        if operator.order > 1:
            raise NotInD1Error(
                f"Operator of order {operator.order} is not in D^1"
            )
        symbol = operator.coefficient(1).scalar_part()
        if symbol is None:
            raise NotInD1Error("Order-one coefficient is not a scalar matrix")
        return cls(operator.coefficient(0), symbol)

    def to_diffop(self: "FirstOrderScalarOp") -> DiffOp:
        return DiffOp(
            self.rank,
            [self.gamma, MatLaurent.scalar(self.rank, self.symbol)],
        )

    def is_zero(self: "FirstOrderScalarOp") -> bool:
        return self.gamma.is_zero() and self.symbol.is_zero()

    def __add__(self: "FirstOrderScalarOp", other: object):
        if not isinstance(other, FirstOrderScalarOp):
            return NotImplemented
        check_rank(self.rank, other.rank, "operator sum")
        return FirstOrderScalarOp(
            self.gamma + other.gamma, self.symbol + other.symbol
        )

    def __neg__(self: "FirstOrderScalarOp") -> "FirstOrderScalarOp":
        return FirstOrderScalarOp(-self.gamma, -self.symbol)

    def __sub__(self: "FirstOrderScalarOp", other: object):
        if not isinstance(other, FirstOrderScalarOp):
            return NotImplemented
        return self + (-other)

    def scale(
        self: "FirstOrderScalarOp", factor: RationalLike
    ) -> "FirstOrderScalarOp":
        return FirstOrderScalarOp(
            self.gamma.scale(factor), self.symbol.scale(factor)
        )


Operator = Union[DiffOp, FirstOrderScalarOp]


def _as_first_order(operator: Operator) -> FirstOrderScalarOp:
    if isinstance(operator, FirstOrderScalarOp):
        return operator
    return FirstOrderScalarOp.from_diffop(operator)


def _as_diffop(operator: Operator) -> DiffOp:
    if isinstance(operator, DiffOp):
        return operator
    return operator.to_diffop()


def make_L(r: int, rank: int) -> FirstOrderScalarOp:  # noqa: N802
    """``L(r) = z^(r+1) d`` acting diagonally on rank ``rank``."""
    if rank < 1:
        raise ValueError(f"Rank shall be positive, got {rank}")
    return FirstOrderScalarOp(
        MatLaurent.zero(rank), LaurentPoly.monomial(r + 1)
    )


def make_E(  # noqa: N802
    i: int, j: int, s: int, rank: int
) -> FirstOrderScalarOp:
    """Multiplication by ``z^s`` at entry ``(i, j)``."""
    return FirstOrderScalarOp(
        MatLaurent.unit(rank, i, j, LaurentPoly.monomial(s)), LaurentPoly()
    )


@lru_cache(maxsize=4096)
def basis_operator(term: BasisTerm, rank: int) -> FirstOrderScalarOp:
    validate_term(term, rank)
    if isinstance(term, LTerm):
        return make_L(term.r, rank)
    return make_E(term.i, term.j, term.s, rank)


def bracket(
    first: FirstOrderScalarOp, second: FirstOrderScalarOp
) -> FirstOrderScalarOp:
    """Lie bracket of ``gamma1 + f1 d`` and ``gamma2 + f2 d``.

    ``[g1, g2] + f1 d(g2) - f2 d(g1) + (f1 f2' - f2 f1') d``
    """
    check_rank(first.rank, second.rank, "bracket")
    f1, f2 = first.symbol, second.symbol
    gamma = (
        first.gamma.commutator(second.gamma)
        + second.gamma.derive().scale(f1)
        - first.gamma.derive().scale(f2)
    )
    symbol = f1 * f2.derive() - f2 * f1.derive()
    return FirstOrderScalarOp(gamma, symbol)


def compose(first: Operator, second: Operator) -> DiffOp:
    """Operator product ``first o second``.

    Uses ``d^k A = sum_j C(k, j) A^(j) d^(k - j)``.
    """
    first, second = _as_diffop(first), _as_diffop(second)
    check_rank(first.rank, second.rank, "composition")
    rank = first.rank
    result: Dict[int, MatLaurent] = {}
    for k, a_k in first.homogeneous_parts():
        for m, b_m in second.homogeneous_parts():
            for j in range(k + 1):
                derived = b_m.derive(j)
                if derived.is_zero():
                    continue
                order = k - j + m
                term = (a_k * derived).scale(comb(k, j))
                result[order] = result.get(order, MatLaurent.zero(rank)) + term
    size = max(result) + 1 if result else 0
    return DiffOp(
        rank,
        [result.get(order, MatLaurent.zero(rank)) for order in range(size)],
    )


def commutator(first: Operator, second: Operator) -> DiffOp:
    """``first o second - second o first`` for operators of any order."""
    return compose(first, second) - compose(second, first)


def apply(
    operator: Operator,
    vector: Sequence[LaurentPoly],
    beta: int = 0,
) -> Tuple[LaurentPoly, ...]:
    """Action on a vector of Laurent polynomials at twist ``beta``.

    ``gamma + f d`` acts as ``v -> gamma v + f v' + beta f' v``. For higher
    order operators the twist only involves the order-one coefficient.
    """
    operator = _as_diffop(operator)
    check_rank(operator.rank, len(vector), "vector length")
    result: List[LaurentPoly] = [LaurentPoly() for _ in vector]
    for order, coeff in operator.homogeneous_parts():
        derived = [component.derive(order) for component in vector]
        for index, value in enumerate(coeff.apply(derived)):
            result[index] = result[index] + value
    if beta:
        twist = operator.coefficient(1).derive().scale(beta)
        for index, value in enumerate(twist.apply(vector)):
            result[index] = result[index] + value
    return tuple(result)


def to_basis(operator: Operator) -> OperatorExpr:
    """Expand a first-order scalar-symbol operator in the basis."""
    operator = _as_first_order(operator)
    terms: List[Tuple[BasisTerm, Fraction]] = [
        (LTerm(exponent - 1), coeff)
        for exponent, coeff in operator.symbol.items()
    ]
    for a, b, value in operator.gamma.nonzero_entries():
        terms.extend(
            (ETerm(a + 1, b + 1, exponent), coeff)
            for exponent, coeff in value.items()
        )
    return OperatorExpr(operator.rank, terms)


def from_basis(expr: OperatorExpr) -> FirstOrderScalarOp:
    rank = expr.rank
    symbol: Dict[int, Fraction] = {}
    entries: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
    for term, coeff in expr:
        if isinstance(term, LTerm):
            symbol[term.r + 1] = symbol.get(term.r + 1, Fraction(0)) + coeff
        else:
            entry = entries.setdefault((term.i - 1, term.j - 1), {})
            entry[term.s] = entry.get(term.s, Fraction(0)) + coeff
    gamma = MatLaurent(
        [
            [LaurentPoly(entries.get((a, b), {})) for b in range(rank)]
            for a in range(rank)
        ]
    )
    return FirstOrderScalarOp(gamma, LaurentPoly(symbol))


def symbol_of(operator: Operator) -> LaurentPoly:
    """The ``f`` of ``gamma + f d``."""
    return _as_first_order(operator).symbol


def shift_degrees(operator: Operator) -> Tuple[int, ...]:
    """z-degree shifts ``l_1 - k_1`` realised by the operator on the basis.

    ``z^s`` in ``gamma`` shifts by ``s``; ``z^e d`` (and its twist) by
    ``e - 1``.
    """
    operator = _as_first_order(operator)
    shifts = set(operator.gamma.degrees())
    shifts.update(exponent - 1 for exponent in operator.symbol.support())
    return tuple(sorted(shifts))


def max_shift(operator: Operator) -> int:
    shifts = shift_degrees(operator)
    return max((abs(shift) for shift in shifts), default=0)


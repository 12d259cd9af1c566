"""Exact Laurent polynomials and square matrices of Laurent polynomials.

A ``LaurentPoly`` is a finitely supported map ``{exponent: Fraction}`` kept in
canonical form (no stored zeros), so equality is structural.
"""
from fractions import Fraction
from typing import (
    Dict,
    Iterator,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from .base import (
    ExponentOverflowError,
    IndexOutOfRangeError,
    RationalLike,
    check_rank,
    format_rational,
    to_rational,
)
from .constants import EXPONENT_BOUND
from .helpers import falling_factorial

__license__ = "MIT"
__all__ = (
    "LaurentPoly",
    "MatLaurent",
    "lp_add",
    "lp_derive",
    "lp_mul",
    "lp_residue",
    "mat_add",
    "mat_commutator",
    "mat_mul",
    "mat_trace",
)


def _check_exponent(exponent: int) -> int:
    if isinstance(exponent, bool) or not isinstance(exponent, int):
        raise TypeError(f"Exponent shall be an integer, got {exponent!r}")
    if not -EXPONENT_BOUND <= exponent <= EXPONENT_BOUND:
        raise ExponentOverflowError(
            f"Exponent {exponent} exceeds the machine-width bound"
        )
    return exponent


class LaurentPoly:
    """Element of the Laurent polynomial ring Q[z, 1/z].

    Usage example:

    .. code-block:: python

        from sgl_cocycles.laurent import LaurentPoly

        f = LaurentPoly({-1: 3, 0: 2})   # 3*z^-1 + 2
        g = LaurentPoly.monomial(2)       # z^2
        (f * g).residue()                 # Fraction(0)
        f.residue()                       # Fraction(3)
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(
        self: "LaurentPoly",
        coeffs: Optional[Mapping[int, RationalLike]] = None,
    ) -> None:
        canonical: Dict[int, Fraction] = {}
        for exponent, value in (coeffs or {}).items():
            _check_exponent(exponent)
            value = to_rational(value)
            if value:
                canonical[exponent] = value
        self._coeffs = canonical
        self._hash: Optional[int] = None

    @classmethod
    def _from_canonical(
        cls, coeffs: Dict[int, Fraction]
    ) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._coeffs = {e: c for e, c in coeffs.items() if c}
        for exponent in obj._coeffs:
            _check_exponent(exponent)
        obj._hash = None
        return obj

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def constant(cls, value: RationalLike) -> "LaurentPoly":
        return cls({0: value})

    @classmethod
    def monomial(
        cls, exponent: int, coeff: RationalLike = 1
    ) -> "LaurentPoly":
        return cls({exponent: coeff})

    # Accessors

    @property
    def coeffs(self: "LaurentPoly") -> Dict[int, Fraction]:
        return dict(self._coeffs)

    def coeff(self: "LaurentPoly", exponent: int) -> Fraction:
        return self._coeffs.get(exponent, Fraction(0))

    def items(self: "LaurentPoly") -> Iterator[Tuple[int, Fraction]]:
        return iter(sorted(self._coeffs.items()))

    def support(self: "LaurentPoly") -> Tuple[int, ...]:
        return tuple(sorted(self._coeffs))

    @property
    def min_degree(self: "LaurentPoly") -> Optional[int]:
        return min(self._coeffs) if self._coeffs else None

    @property
    def max_degree(self: "LaurentPoly") -> Optional[int]:
        return max(self._coeffs) if self._coeffs else None

    def is_zero(self: "LaurentPoly") -> bool:
        return not self._coeffs

    def __bool__(self: "LaurentPoly") -> bool:
        return bool(self._coeffs)

    def __len__(self: "LaurentPoly") -> int:
        return len(self._coeffs)

    # Arithmetic

    def __add__(self: "LaurentPoly", other: object) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)) and not isinstance(
            other, bool
        ):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        result = dict(self._coeffs)
        for exponent, value in other._coeffs.items():
            result[exponent] = result.get(exponent, Fraction(0)) + value
        return LaurentPoly._from_canonical(result)

    __radd__ = __add__

    def __neg__(self: "LaurentPoly") -> "LaurentPoly":
        return LaurentPoly._from_canonical(
            {e: -c for e, c in self._coeffs.items()}
        )

    def __sub__(self: "LaurentPoly", other: object) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)) and not isinstance(
            other, bool
        ):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self: "LaurentPoly", other: object) -> "LaurentPoly":
        return (-self) + other

    def scale(self: "LaurentPoly", factor: RationalLike) -> "LaurentPoly":
        factor = to_rational(factor)
        return LaurentPoly._from_canonical(
            {e: c * factor for e, c in self._coeffs.items()}
        )

    def __mul__(self: "LaurentPoly", other: object) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)) and not isinstance(
            other, bool
        ):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        result: Dict[int, Fraction] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                exponent = e1 + e2
                result[exponent] = result.get(exponent, Fraction(0)) + c1 * c2
        return LaurentPoly._from_canonical(result)

    def __rmul__(self: "LaurentPoly", other: object) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)) and not isinstance(
            other, bool
        ):
            return self.scale(other)
        return NotImplemented

    def shift(self: "LaurentPoly", degree: int) -> "LaurentPoly":
        """Multiply by ``z^degree``."""
        return LaurentPoly._from_canonical(
            {e + degree: c for e, c in self._coeffs.items()}
        )

    def derive(self: "LaurentPoly", times: int = 1) -> "LaurentPoly":
        """Apply ``d/dz`` the given number of times."""
        if times < 0:
            raise ValueError("Cannot derive a negative number of times")
        return LaurentPoly._from_canonical(
            {
                e - times: c * falling_factorial(e, times)
                for e, c in self._coeffs.items()
            }
        )

    def residue(self: "LaurentPoly") -> Fraction:
        """Coefficient of ``z^-1``."""
        return self.coeff(-1)

    # Comparison

    def __eq__(self: "LaurentPoly", other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self: "LaurentPoly") -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    # Text form: ``3*z^-2 + 1/2*z``

    def __str__(self: "LaurentPoly") -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for exponent, value in sorted(self._coeffs.items(), reverse=True):
            sign = "-" if value < 0 else "+"
            magnitude = abs(value)
            if exponent == 0:
                body = format_rational(magnitude)
            else:
                power = "z" if exponent == 1 else f"z^{exponent}"
                if magnitude == 1:
                    body = power
                else:
                    body = f"{format_rational(magnitude)}*{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = f"-{first_body}" if first_sign == "-" else first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self: "LaurentPoly") -> str:
        return f"LaurentPoly({str(self)!r})"


def lp_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def lp_derive(a: LaurentPoly) -> LaurentPoly:
    return a.derive()


def lp_residue(a: LaurentPoly) -> Fraction:
    return a.residue()


class MatLaurent:
    """Square ``n x n`` matrix with Laurent polynomial entries.

    Entries are stored 0-based; the public ``unit``/``entry`` accessors use
    the 1-based indices of the basis ``E(i,j;s)``.
    """

    __slots__ = ("_entries", "_hash", "rank")

    def __init__(
        self: "MatLaurent",
        entries: Sequence[Sequence[Union[LaurentPoly, RationalLike]]],
    ) -> None:
        rank = len(entries)
        if rank < 1:
            raise ValueError("Matrix rank shall be positive")
        rows = []
        for row in entries:
            if len(row) != rank:
                raise ValueError("Matrix shall be square")
            rows.append(
                tuple(
                    x if isinstance(x, LaurentPoly) else LaurentPoly.constant(x)
                    for x in row
                )
            )
        self.rank = rank
        self._entries: Tuple[Tuple[LaurentPoly, ...], ...] = tuple(rows)
        self._hash: Optional[int] = None

    @classmethod
    def zero(cls, rank: int) -> "MatLaurent":
        return cls([[LaurentPoly() for _ in range(rank)] for _ in range(rank)])

    @classmethod
    def scalar(cls, rank: int, value: LaurentPoly) -> "MatLaurent":
        return cls(
            [
                [value if a == b else LaurentPoly() for b in range(rank)]
                for a in range(rank)
            ]
        )

    @classmethod
    def identity(cls, rank: int) -> "MatLaurent":
        return cls.scalar(rank, LaurentPoly.constant(1))

    @classmethod
    def unit(
        cls, rank: int, i: int, j: int, value: LaurentPoly
    ) -> "MatLaurent":
        """Matrix with ``value`` at 1-based position ``(i, j)``."""
        if not (1 <= i <= rank and 1 <= j <= rank):
            raise IndexOutOfRangeError(
                f"Index ({i},{j}) out of range for rank {rank}"
            )
        return cls(
            [
                [
                    value if (a, b) == (i - 1, j - 1) else LaurentPoly()
                    for b in range(rank)
                ]
                for a in range(rank)
            ]
        )

    @property
    def entries(self: "MatLaurent") -> Tuple[Tuple[LaurentPoly, ...], ...]:
        return self._entries

    def entry(self: "MatLaurent", i: int, j: int) -> LaurentPoly:
        """1-based entry accessor."""
        if not (1 <= i <= self.rank and 1 <= j <= self.rank):
            raise IndexOutOfRangeError(
                f"Index ({i},{j}) out of range for rank {self.rank}"
            )
        return self._entries[i - 1][j - 1]

    def nonzero_entries(
        self: "MatLaurent",
    ) -> Iterator[Tuple[int, int, LaurentPoly]]:
        """Yield ``(a, b, poly)`` with 0-based indices, row-major."""
        for a, row in enumerate(self._entries):
            for b, value in enumerate(row):
                if value:
                    yield a, b, value

    def is_zero(self: "MatLaurent") -> bool:
        return not any(True for _ in self.nonzero_entries())

    def scalar_part(self: "MatLaurent") -> Optional[LaurentPoly]:
        """Return ``f`` if the matrix equals ``f * Id``, otherwise None."""
        diagonal = self._entries[0][0]
        for a, row in enumerate(self._entries):
            for b, value in enumerate(row):
                expected = diagonal if a == b else LaurentPoly()
                if value != expected:
                    return None
        return diagonal

    def degrees(self: "MatLaurent") -> Tuple[int, ...]:
        """Sorted union of the exponents of all entries."""
        exponents = set()
        for _a, _b, value in self.nonzero_entries():
            exponents.update(value.support())
        return tuple(sorted(exponents))

    def _map(self: "MatLaurent", func) -> "MatLaurent":
        return MatLaurent([[func(x) for x in row] for row in self._entries])

    def __add__(self: "MatLaurent", other: object) -> "MatLaurent":
        if not isinstance(other, MatLaurent):
            return NotImplemented
        check_rank(self.rank, other.rank, "matrix addition")
        return MatLaurent(
            [
                [x + y for x, y in zip(row_a, row_b)]
                for row_a, row_b in zip(self._entries, other._entries)
            ]
        )

    def __neg__(self: "MatLaurent") -> "MatLaurent":
        return self._map(lambda x: -x)

    def __sub__(self: "MatLaurent", other: object) -> "MatLaurent":
        if not isinstance(other, MatLaurent):
            return NotImplemented
        return self + (-other)

    def scale(
        self: "MatLaurent", factor: Union[LaurentPoly, RationalLike]
    ) -> "MatLaurent":
        """Multiply every entry by a rational or a Laurent polynomial."""
        if isinstance(factor, LaurentPoly):
            return self._map(lambda x: factor * x)
        factor = to_rational(factor)
        return self._map(lambda x: x.scale(factor))

    def __mul__(self: "MatLaurent", other: object) -> "MatLaurent":
        if isinstance(other, MatLaurent):
            check_rank(self.rank, other.rank, "matrix product")
            rank = self.rank
            result = []
            for a in range(rank):
                row = []
                for b in range(rank):
                    acc = LaurentPoly()
                    for c in range(rank):
                        left = self._entries[a][c]
                        right = other._entries[c][b]
                        if left and right:
                            acc = acc + left * right
                    row.append(acc)
                result.append(row)
            return MatLaurent(result)
        if isinstance(other, (LaurentPoly, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self: "MatLaurent", other: object) -> "MatLaurent":
        if isinstance(other, (LaurentPoly, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def derive(self: "MatLaurent", times: int = 1) -> "MatLaurent":
        return self._map(lambda x: x.derive(times))

    def trace(self: "MatLaurent") -> LaurentPoly:
        acc = LaurentPoly()
        for a in range(self.rank):
            acc = acc + self._entries[a][a]
        return acc

    def commutator(self: "MatLaurent", other: "MatLaurent") -> "MatLaurent":
        return self * other - other * self

    def apply(
        self: "MatLaurent", vector: Sequence[LaurentPoly]
    ) -> Tuple[LaurentPoly, ...]:
        """Matrix-vector product."""
        check_rank(self.rank, len(vector), "vector length")
        result = []
        for row in self._entries:
            acc = LaurentPoly()
            for value, component in zip(row, vector):
                if value and component:
                    acc = acc + value * component
            result.append(acc)
        return tuple(result)

    def __eq__(self: "MatLaurent", other: object) -> bool:
        if not isinstance(other, MatLaurent):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self: "MatLaurent") -> int:
        if self._hash is None:
            self._hash = hash(self._entries)
        return self._hash

    def __repr__(self: "MatLaurent") -> str:
        rows = "; ".join(
            ", ".join(str(x) for x in row) for row in self._entries
        )
        return f"MatLaurent([{rows}])"


def mat_add(a: MatLaurent, b: MatLaurent) -> MatLaurent:
    return a + b


def mat_mul(a: MatLaurent, b: MatLaurent) -> MatLaurent:
    return a * b


def mat_trace(a: MatLaurent) -> LaurentPoly:
    return a.trace()


def mat_commutator(a: MatLaurent, b: MatLaurent) -> MatLaurent:
    return a.commutator(b)


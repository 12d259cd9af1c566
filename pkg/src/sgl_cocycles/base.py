from fractions import Fraction
from typing import Optional, Union

__license__ = "MIT"
__all__ = (
    "ExponentOverflowError",
    "ExprSyntaxError",
    "IndexOutOfRangeError",
    "KindMismatchError",
    "NotInD1Error",
    "Rational",
    "RationalLike",
    "RankMismatchError",
    "SglCocycleError",
    "WindowTooSmallError",
    "check_rank",
    "format_rational",
    "to_rational",
)

Rational = Fraction
RationalLike = Union[int, Fraction, str]


class SglCocycleError(Exception):
    """Base error of the package."""


class RankMismatchError(SglCocycleError, ValueError):
    """Operands live on spaces of different rank."""


class IndexOutOfRangeError(SglCocycleError, ValueError):
    """Matrix index outside of ``1..n``."""


class NotInD1Error(SglCocycleError, ValueError):
    """Operator is not a first-order operator with scalar symbol."""


class WindowTooSmallError(SglCocycleError, ValueError):
    """Declared index window does not cover the required support."""


class ExponentOverflowError(SglCocycleError, OverflowError):
    """Exponent arithmetic left the machine-width range."""


class KindMismatchError(SglCocycleError, ValueError):
    """Cocycle kind cannot be evaluated on the given operands."""


class ExprSyntaxError(SglCocycleError, ValueError):
    """Syntax error in an operator or Laurent expression.

    :param text: The text being parsed.
    :param position: 0-based column of the offending character.
    :param message: Human readable description.
    """

    def __init__(
        self: "ExprSyntaxError",
        text: str,
        position: Optional[int] = None,
        message: Optional[str] = None,
    ) -> None:
        self.text = text
        self.position = position
        self.message = message or "invalid syntax"
        if position is not None:
            full = f"{self.message} at position {position}: {text!r}"
        else:
            full = f"{self.message}: {text!r}"
        super().__init__(full)


def to_rational(value: RationalLike) -> Fraction:
    """Convert integers, fractions and ``"p/q"`` strings to ``Fraction``.

    Floats are refused: every quantity handled here is exact.
    """
    if isinstance(value, bool):
        raise TypeError("Booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"Unsupported rational value: {value!r}")


def format_rational(value: Fraction) -> str:
    """Exact string of a rational, ``"p"`` or ``"p/q"``."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def check_rank(expected: int, actual: int, what: str = "operand") -> None:
    if expected != actual:
        raise RankMismatchError(
            f"Rank mismatch: expected {expected}, got {actual} ({what})"
        )

"""The three residue cocycles on rank one first-order operators.

For ``D_k = f_k d + g_k``:

* ``alpha1 = Res f1 f2'''``
* ``alpha2 = Res (f1 g2'' - f2 g1'')``
* ``alpha3 = Res g1 g2'``
"""
from fractions import Fraction
from typing import Tuple, Union

from ..base import KindMismatchError, RankMismatchError
from ..diffop import (
    BasisTerm,
    DiffOp,
    FirstOrderScalarOp,
    basis_operator,
)
from ..laurent import LaurentPoly
from .base import BaseCocycle

__license__ = "MIT"
__all__ = (
    "AckpCocycle",
    "ackp_alpha",
    "ackp_values",
)

Operator = Union[DiffOp, FirstOrderScalarOp]


def _split(operator: Operator) -> Tuple[LaurentPoly, LaurentPoly]:
    if isinstance(operator, DiffOp):
        operator = FirstOrderScalarOp.from_diffop(operator)
    if operator.rank != 1:
        raise RankMismatchError(
            f"Residue cocycles need rank 1, got {operator.rank}"
        )
    return operator.symbol, operator.gamma.entry(1, 1)


def ackp_alpha(which: int, first: Operator, second: Operator) -> Fraction:
    f1, g1 = _split(first)
    f2, g2 = _split(second)
    if which == 1:
        return (f1 * f2.derive(3)).residue()
    if which == 2:
        return (f1 * g2.derive(2) - f2 * g1.derive(2)).residue()
    if which == 3:
        return (g1 * g2.derive()).residue()
    raise KindMismatchError(f"No alpha cocycle number {which}")


def ackp_values(
    first: Operator, second: Operator
) -> Tuple[Fraction, Fraction, Fraction]:
    """``(alpha1, alpha2, alpha3)`` on one pair."""
    return (
        ackp_alpha(1, first, second),
        ackp_alpha(2, first, second),
        ackp_alpha(3, first, second),
    )


class AckpCocycle(BaseCocycle):
    tags = ("alpha1", "alpha2", "alpha3")

    @property
    def which(self: "AckpCocycle") -> int:
        return int(self.kind.tag[-1])

    def value(self: "AckpCocycle", t1: BasisTerm, t2: BasisTerm) -> Fraction:
        self._check_terms(t1, t2)
        return ackp_alpha(
            self.which, basis_operator(t1, 1), basis_operator(t2, 1)
        )

    def evaluate_ops(
        self: "AckpCocycle", first: Operator, second: Operator
    ) -> Fraction:
        return ackp_alpha(self.which, first, second)

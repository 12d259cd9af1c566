from fractions import Fraction
from typing import Union

from ..base import KindMismatchError, check_rank
from ..diffop import (
    BasisTerm,
    DiffOp,
    ETerm,
    FirstOrderScalarOp,
    basis_operator,
)
from .base import BaseCocycle

__license__ = "MIT"
__all__ = (
    "KacMoodyCocycle",
    "kac_moody",
)

Operator = Union[DiffOp, FirstOrderScalarOp]


def kac_moody(first: Operator, second: Operator) -> Fraction:
    """``Res Tr(g1 g2')`` on the matrix part of ``D^1``.

    Operators with a nonzero symbol are rejected.
    """
    if isinstance(first, DiffOp):
        first = FirstOrderScalarOp.from_diffop(first)
    if isinstance(second, DiffOp):
        second = FirstOrderScalarOp.from_diffop(second)
    check_rank(first.rank, second.rank, "kac_moody")
    if first.symbol or second.symbol:
        raise KindMismatchError(
            "kac_moody is only defined on multiplication operators"
        )
    return (first.gamma * second.gamma.derive()).trace().residue()


class KacMoodyCocycle(BaseCocycle):
    tags = ("kac_moody",)

    def value(
        self: "KacMoodyCocycle", t1: BasisTerm, t2: BasisTerm
    ) -> Fraction:
        self._check_terms(t1, t2)
        if not (isinstance(t1, ETerm) and isinstance(t2, ETerm)):
            raise KindMismatchError(
                f"kac_moody is not defined on ({t1}, {t2})"
            )
        return kac_moody(
            basis_operator(t1, self.rank), basis_operator(t2, self.rank)
        )

    def evaluate_ops(
        self: "KacMoodyCocycle", first: Operator, second: Operator
    ) -> Fraction:
        return kac_moody(first, second)

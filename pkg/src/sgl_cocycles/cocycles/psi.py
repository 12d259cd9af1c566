"""Kac-Peterson cocycle on differential operators of any order.

``Psi(A d^r, B d^s) = r! s! / (r + s + 1)! Res Tr(A^(s+1) B^(r))``,
extended bilinearly over the homogeneous parts.
"""
from fractions import Fraction
from math import factorial
from typing import Union

from ..base import check_rank
from ..diffop import (
    BasisTerm,
    DiffOp,
    FirstOrderScalarOp,
    basis_operator,
)
from .base import BaseCocycle

__license__ = "MIT"
__all__ = (
    "PsiCocycle",
    "psi",
)

Operator = Union[DiffOp, FirstOrderScalarOp]


def _as_diffop(operator: Operator) -> DiffOp:
    if isinstance(operator, FirstOrderScalarOp):
        return operator.to_diffop()
    return operator


def psi(first: Operator, second: Operator) -> Fraction:
    first, second = _as_diffop(first), _as_diffop(second)
    check_rank(first.rank, second.rank, "psi")
    total = Fraction(0)
    for r, a in first.homogeneous_parts():
        for s, b in second.homogeneous_parts():
            residue = (a.derive(s + 1) * b.derive(r)).trace().residue()
            if residue:
                total += (
                    Fraction(factorial(r) * factorial(s), factorial(r + s + 1))
                    * residue
                )
    return total


class PsiCocycle(BaseCocycle):
    tags = ("psi",)

    def value(self: "PsiCocycle", t1: BasisTerm, t2: BasisTerm) -> Fraction:
        self._check_terms(t1, t2)
        return psi(basis_operator(t1, self.rank), basis_operator(t2, self.rank))

    def evaluate_ops(
        self: "PsiCocycle", first: Operator, second: Operator
    ) -> Fraction:
        return psi(first, second)

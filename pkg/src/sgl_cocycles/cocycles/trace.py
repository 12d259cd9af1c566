from fractions import Fraction
from typing import Optional, Union

from ..diffop import (
    BasisTerm,
    DiffOp,
    FirstOrderScalarOp,
    OperatorExpr,
    basis_operator,
    from_basis,
)
from ..grassmann import IndexWindow, trace_cocycle
from .base import BaseCocycle, CocycleKind

__license__ = "MIT"
__all__ = ("TraceCocycle",)

Operator = Union[DiffOp, FirstOrderScalarOp]


class TraceCocycle(BaseCocycle):
    """Exact trace cocycle of the twisted action on ``C((z))^n``.

    :param window: Optional fixed index window; by default every evaluation
        sizes its own window.
    """

    tags = ("trace",)

    def __init__(
        self: "TraceCocycle",
        kind: CocycleKind,
        window: Optional[IndexWindow] = None,
    ) -> None:
        super().__init__(kind)
        self.window = window

    def value(self: "TraceCocycle", t1: BasisTerm, t2: BasisTerm) -> Fraction:
        self._check_terms(t1, t2)
        return trace_cocycle(
            basis_operator(t1, self.rank),
            basis_operator(t2, self.rank),
            self.beta,
            window=self.window,
        )

    def evaluate(
        self: "TraceCocycle", e1: OperatorExpr, e2: OperatorExpr
    ) -> Fraction:
        return self.evaluate_ops(from_basis(e1), from_basis(e2))

    def evaluate_ops(
        self: "TraceCocycle", first: Operator, second: Operator
    ) -> Fraction:
        return trace_cocycle(first, second, self.beta, window=self.window)

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar, Tuple, Union

from ..base import KindMismatchError, check_rank
from ..diffop import (
    BasisTerm,
    DiffOp,
    FirstOrderScalarOp,
    OperatorExpr,
    from_basis,
    to_basis,
    validate_term,
)

__license__ = "MIT"
__all__ = (
    "ALPHA_TAGS",
    "KIND_TAGS",
    "BaseCocycle",
    "CocycleKind",
    "eval_bilinear",
    "get_cocycle",
)

LOGGER = logging.getLogger(__name__)

ALPHA_TAGS = ("alpha1", "alpha2", "alpha3")
KIND_TAGS = (
    "closed",
    "vir_n",
    "vir",
    "trace",
    "psi",
) + ALPHA_TAGS + ("kac_moody",)

Operator = Union[DiffOp, FirstOrderScalarOp]


@dataclass(frozen=True)
class CocycleKind:
    """Which cocycle, at which rank and twist.

    ``beta`` is ignored by the kinds that do not depend on it (``psi``,
    the alphas and ``kac_moody``) and normalised to 0 for them.
    """

    tag: str
    rank: int = 1
    beta: int = 0

    def __post_init__(self: "CocycleKind") -> None:
        if self.tag not in KIND_TAGS:
            raise KindMismatchError(
                f"Unknown cocycle kind {self.tag!r}, "
                f"expected one of {', '.join(KIND_TAGS)}"
            )
        if self.rank < 1:
            raise ValueError(f"Rank shall be positive, got {self.rank}")
        if self.tag in ALPHA_TAGS and self.rank != 1:
            raise KindMismatchError(
                f"{self.tag} is only defined in rank 1, got {self.rank}"
            )
        if not self.depends_on_beta and self.beta != 0:
            object.__setattr__(self, "beta", 0)

    @property
    def depends_on_beta(self: "CocycleKind") -> bool:
        return self.tag in ("closed", "vir_n", "vir", "trace")

    @classmethod
    def closed(cls, rank: int, beta: int) -> "CocycleKind":
        return cls("closed", rank, beta)

    @classmethod
    def vir_n(cls, rank: int, beta: int) -> "CocycleKind":
        return cls("vir_n", rank, beta)

    @classmethod
    def vir(cls, beta: int, rank: int = 1) -> "CocycleKind":
        return cls("vir", rank, beta)

    @classmethod
    def trace(cls, rank: int, beta: int) -> "CocycleKind":
        return cls("trace", rank, beta)

    @classmethod
    def psi(cls, rank: int) -> "CocycleKind":
        return cls("psi", rank)

    @classmethod
    def alpha(cls, which: int) -> "CocycleKind":
        if which not in (1, 2, 3):
            raise KindMismatchError(f"No alpha cocycle number {which}")
        return cls(f"alpha{which}", 1)

    @classmethod
    def kac_moody(cls, rank: int) -> "CocycleKind":
        return cls("kac_moody", rank)

    @property
    def label(self: "CocycleKind") -> str:
        if self.depends_on_beta:
            return f"{self.tag}(n={self.rank},beta={self.beta})"
        return f"{self.tag}(n={self.rank})"

    def __str__(self: "CocycleKind") -> str:
        return self.label


class BaseCocycle:
    """Base class of every cocycle kind.

    Subclasses implement :meth:`value` on basis pairs; operands of other
    shapes are expanded bilinearly. Kinds with a direct formula on operators
    override :meth:`evaluate_ops`.
    """

    tags: ClassVar[Tuple[str, ...]] = ()

    def __init__(self: "BaseCocycle", kind: CocycleKind) -> None:
        if kind.tag not in self.tags:
            raise KindMismatchError(
                f"{type(self).__name__} cannot evaluate {kind}"
            )
        self.kind = kind

    @property
    def rank(self: "BaseCocycle") -> int:
        return self.kind.rank

    @property
    def beta(self: "BaseCocycle") -> int:
        return self.kind.beta

    def value(self: "BaseCocycle", t1: BasisTerm, t2: BasisTerm) -> Fraction:
        """Value on a pair of basis terms."""
        raise NotImplementedError("Method value is not implemented!")

    def evaluate(
        self: "BaseCocycle", e1: OperatorExpr, e2: OperatorExpr
    ) -> Fraction:
        check_rank(self.rank, e1.rank, "first expression")
        check_rank(self.rank, e2.rank, "second expression")
        total = Fraction(0)
        for t1, c1 in e1:
            for t2, c2 in e2:
                total += c1 * c2 * self.value(t1, t2)
        return total

    def evaluate_ops(
        self: "BaseCocycle", first: Operator, second: Operator
    ) -> Fraction:
        return self.evaluate(to_basis(first), to_basis(second))

    def _check_terms(
        self: "BaseCocycle", t1: BasisTerm, t2: BasisTerm
    ) -> None:
        validate_term(t1, self.rank)
        validate_term(t2, self.rank)

    def __call__(
        self: "BaseCocycle",
        first: Union[Operator, OperatorExpr],
        second: Union[Operator, OperatorExpr],
    ) -> Fraction:
        if isinstance(first, OperatorExpr) and isinstance(second, OperatorExpr):
            return self.evaluate(first, second)
        if isinstance(first, OperatorExpr):
            first = from_basis(first)
        if isinstance(second, OperatorExpr):
            second = from_basis(second)
        return self.evaluate_ops(first, second)

    def __repr__(self: "BaseCocycle") -> str:
        return f"{type(self).__name__}({self.kind})"


def get_cocycle(kind: CocycleKind) -> BaseCocycle:
    """Instantiate the registered cocycle class for ``kind``."""
    from ..registry import COCYCLE_REGISTRY

    return COCYCLE_REGISTRY.get(kind.tag)(kind)


def eval_bilinear(
    kind: CocycleKind, e1: OperatorExpr, e2: OperatorExpr
) -> Fraction:
    """Bilinear extension of ``kind`` from basis pairs to expressions."""
    return get_cocycle(kind).evaluate(e1, e2)

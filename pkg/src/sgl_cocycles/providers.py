from fractions import Fraction
from typing import Dict, List, Tuple

from faker import Faker
from faker.providers import BaseProvider

from .constants import DEFAULT_MAX_SUPPORT, DEFAULT_SAMPLE_DEGREE
from .diffop import (
    BasisTerm,
    DiffOp,
    ETerm,
    FirstOrderScalarOp,
    LTerm,
    OperatorExpr,
    from_basis,
)
from .laurent import LaurentPoly, MatLaurent

__license__ = "MIT"
__all__ = (
    "OperatorProvider",
    "seeded_faker",
)


def seeded_faker(seed: int) -> Faker:
    """Faker instance with ``OperatorProvider`` and a private seed."""
    faker = Faker()
    faker.add_provider(OperatorProvider)
    faker.seed_instance(seed)
    return faker


class OperatorProvider(BaseProvider):
    """Random exact operands for property sweeps.

    Usage example:

    .. code-block:: python

        from faker import Faker
        from sgl_cocycles.providers import OperatorProvider

        FAKER = Faker()
        FAKER.add_provider(OperatorProvider)
        FAKER.seed_instance(42)

        op = FAKER.first_order_op(rank=2)

    Usage example with options:

    .. code-block:: python

        op = FAKER.diff_op(rank=1, max_order=2, max_degree=3)
    """

    def rational(
        self: "OperatorProvider",
        max_numerator: int = 5,
        max_denominator: int = 3,
        nonzero: bool = True,
    ) -> Fraction:
        while True:
            value = Fraction(
                self.random_int(-max_numerator, max_numerator),
                self.random_int(1, max_denominator),
            )
            if value or not nonzero:
                return value

    def basis_term(
        self: "OperatorProvider",
        rank: int = 1,
        max_degree: int = DEFAULT_SAMPLE_DEGREE,
    ) -> BasisTerm:
        degree = self.random_int(-max_degree, max_degree)
        if self.random_int(0, 1):
            return LTerm(degree)
        return ETerm(
            self.random_int(1, rank), self.random_int(1, rank), degree
        )

    def operator_expr(
        self: "OperatorProvider",
        rank: int = 1,
        max_support: int = DEFAULT_MAX_SUPPORT,
        max_degree: int = DEFAULT_SAMPLE_DEGREE,
        matrix_only: bool = False,
    ) -> OperatorExpr:
        """Random combination of at most ``max_support`` basis terms."""
        terms: List[Tuple[BasisTerm, Fraction]] = []
        for _ in range(self.random_int(1, max_support)):
            term = self.basis_term(rank=rank, max_degree=max_degree)
            if matrix_only and isinstance(term, LTerm):
                term = ETerm(
                    self.random_int(1, rank), self.random_int(1, rank), term.r
                )
            terms.append((term, self.rational()))
        return OperatorExpr(rank, terms)

    def first_order_op(
        self: "OperatorProvider",
        rank: int = 1,
        max_support: int = DEFAULT_MAX_SUPPORT,
        max_degree: int = DEFAULT_SAMPLE_DEGREE,
        matrix_only: bool = False,
    ) -> FirstOrderScalarOp:
        return from_basis(
            self.operator_expr(
                rank=rank,
                max_support=max_support,
                max_degree=max_degree,
                matrix_only=matrix_only,
            )
        )

    def laurent_poly(
        self: "OperatorProvider",
        max_support: int = 3,
        max_degree: int = DEFAULT_SAMPLE_DEGREE,
    ) -> LaurentPoly:
        coeffs: Dict[int, Fraction] = {}
        for _ in range(self.random_int(0, max_support)):
            exponent = self.random_int(-max_degree, max_degree)
            coeffs[exponent] = self.rational()
        return LaurentPoly(coeffs)

    def mat_laurent(
        self: "OperatorProvider",
        rank: int = 1,
        max_support: int = 2,
        max_degree: int = DEFAULT_SAMPLE_DEGREE,
    ) -> MatLaurent:
        return MatLaurent(
            [
                [
                    self.laurent_poly(
                        max_support=max_support, max_degree=max_degree
                    )
                    for _ in range(rank)
                ]
                for _ in range(rank)
            ]
        )

    def diff_op(
        self: "OperatorProvider",
        rank: int = 1,
        max_order: int = 2,
        max_degree: int = 3,
    ) -> DiffOp:
        """Operator of order at most ``max_order`` with sparse coefficients."""
        return DiffOp(
            rank,
            [
                self.mat_laurent(rank=rank, max_degree=max_degree)
                for _ in range(max_order + 1)
            ],
        )

import unittest

from parametrize import parametrize

from ..diffop import ETerm
from ..providers import seeded_faker

__license__ = "MIT"
__all__ = ("OperatorProviderTestCase",)


class OperatorProviderTestCase(unittest.TestCase):
    """Test `OperatorProvider`."""

    def test_seeded_is_reproducible(self: "OperatorProviderTestCase") -> None:
        first = seeded_faker(7)
        second = seeded_faker(7)
        for _ in range(5):
            self.assertEqual(
                first.operator_expr(rank=2), second.operator_expr(rank=2)
            )

    @parametrize("rank", [1, 2, 3])
    def test_operator_expr(self: "OperatorProviderTestCase", rank: int) -> None:
        faker = seeded_faker(3)
        for _ in range(10):
            expr = faker.operator_expr(rank=rank, max_support=3, max_degree=2)
            self.assertEqual(expr.rank, rank)
            self.assertLessEqual(len(expr), 3)
            for _term, coeff in expr:
                self.assertNotEqual(coeff, 0)

    def test_matrix_only(self: "OperatorProviderTestCase") -> None:
        faker = seeded_faker(11)
        for _ in range(10):
            expr = faker.operator_expr(rank=2, matrix_only=True)
            self.assertTrue(all(isinstance(t, ETerm) for t, _c in expr))
            op = faker.first_order_op(rank=2, matrix_only=True)
            self.assertTrue(op.symbol.is_zero())

    def test_rational_nonzero(self: "OperatorProviderTestCase") -> None:
        faker = seeded_faker(5)
        values = [faker.rational(max_numerator=1) for _ in range(20)]
        self.assertTrue(all(values))
        self.assertTrue(all(v.denominator <= 3 for v in values))

    def test_diff_op_order(self: "OperatorProviderTestCase") -> None:
        faker = seeded_faker(2)
        for _ in range(5):
            op = faker.diff_op(rank=2, max_order=2)
            self.assertEqual(op.rank, 2)
            self.assertLessEqual(op.order, 2)

import unittest
from fractions import Fraction

from parametrize import parametrize

from ..base import IndexOutOfRangeError, NotInD1Error, RankMismatchError
from ..diffop import (
    DiffOp,
    ETerm,
    FirstOrderScalarOp,
    LTerm,
    OperatorExpr,
    apply,
    basis_operator,
    basis_terms,
    bracket,
    commutator,
    compose,
    from_basis,
    make_E,
    make_L,
    max_shift,
    symbol_of,
    to_basis,
)
from ..helpers import kronecker
from ..laurent import LaurentPoly, MatLaurent
from ..providers import seeded_faker

__license__ = "MIT"
__all__ = (
    "BracketTestCase",
    "DiffOpTestCase",
    "OperatorExprTestCase",
)

FAKER = seeded_faker(11)
DEGREES = range(-10, 11)


def _bracket_terms(rank: int, t1, t2) -> OperatorExpr:
    return to_basis(
        bracket(basis_operator(t1, rank), basis_operator(t2, rank))
    )


class BracketTestCase(unittest.TestCase):
    """Structure constants of the bracket."""

    def test_witt(self: "BracketTestCase") -> None:
        for rank in (1, 2, 3):
            for r in DEGREES:
                for s in DEGREES:
                    expected = OperatorExpr(rank, [(LTerm(r + s), s - r)])
                    self.assertEqual(
                        _bracket_terms(rank, LTerm(r), LTerm(s)), expected
                    )

    def test_vector_field_on_matrix(self: "BracketTestCase") -> None:
        for rank in (1, 2, 3):
            for i in range(1, rank + 1):
                for j in range(1, rank + 1):
                    for r in DEGREES:
                        for s in DEGREES:
                            expected = OperatorExpr(
                                rank, [(ETerm(i, j, r + s), s)]
                            )
                            self.assertEqual(
                                _bracket_terms(rank, LTerm(r), ETerm(i, j, s)),
                                expected,
                            )

    def test_matrices(self: "BracketTestCase") -> None:
        for rank in (1, 2, 3):
            indices = range(1, rank + 1)
            for i in indices:
                for j in indices:
                    for k in indices:
                        for m in indices:
                            for r, s in ((-3, 5), (2, -2), (0, 4)):
                                expected = OperatorExpr(
                                    rank,
                                    [
                                        (ETerm(i, m, r + s), kronecker(j, k)),
                                        (ETerm(k, j, r + s), -kronecker(m, i)),
                                    ],
                                )
                                self.assertEqual(
                                    _bracket_terms(
                                        rank, ETerm(i, j, r), ETerm(k, m, s)
                                    ),
                                    expected,
                                )

    def test_l1_l2(self: "BracketTestCase") -> None:
        self.assertEqual(str(_bracket_terms(1, LTerm(1), LTerm(2))), "L(3)")

    def test_antisymmetry_and_jacobi(self: "BracketTestCase") -> None:
        for rank in (1, 2):
            for _ in range(25):
                x, y, z = (FAKER.first_order_op(rank=rank) for _ in range(3))
                self.assertTrue((bracket(x, y) + bracket(y, x)).is_zero())
                cyclic = (
                    bracket(x, bracket(y, z))
                    + bracket(y, bracket(z, x))
                    + bracket(z, bracket(x, y))
                )
                self.assertTrue(cyclic.is_zero())

    def test_bracket_is_commutator(self: "BracketTestCase") -> None:
        for rank in (1, 2):
            for _ in range(15):
                x = FAKER.first_order_op(rank=rank)
                y = FAKER.first_order_op(rank=rank)
                self.assertEqual(
                    bracket(x, y).to_diffop(), commutator(x, y)
                )

    def test_rank_mismatch(self: "BracketTestCase") -> None:
        with self.assertRaises(RankMismatchError):
            bracket(make_L(1, 1), make_L(1, 2))


class DiffOpTestCase(unittest.TestCase):
    """Test ``DiffOp`` and ``FirstOrderScalarOp``."""

    def test_compose_leibniz(self: "DiffOpTestCase") -> None:
        # d o f = f d + f'
        d = DiffOp.homogeneous(MatLaurent.identity(1), 1)
        square = MatLaurent([[LaurentPoly({2: 1})]])
        f = DiffOp.multiplication(square)
        expected = DiffOp(1, [MatLaurent([[LaurentPoly({1: 2})]]), square])
        self.assertEqual(compose(d, f), expected)

    def test_compose_associative(self: "DiffOpTestCase") -> None:
        for _ in range(10):
            a, b, c = (FAKER.diff_op(rank=2, max_order=2) for _ in range(3))
            self.assertEqual(
                compose(compose(a, b), c), compose(a, compose(b, c))
            )

    def test_from_diffop_refuses_higher_order(self: "DiffOpTestCase") -> None:
        second_order = DiffOp.homogeneous(MatLaurent.identity(1), 2)
        with self.assertRaises(NotInD1Error):
            FirstOrderScalarOp.from_diffop(second_order)

    def test_from_diffop_refuses_matrix_symbol(
        self: "DiffOpTestCase",
    ) -> None:
        operator = DiffOp.homogeneous(
            MatLaurent.unit(2, 1, 1, LaurentPoly.constant(1)), 1
        )
        with self.assertRaises(NotInD1Error):
            FirstOrderScalarOp.from_diffop(operator)

    def test_round_trip_through_diffop(self: "DiffOpTestCase") -> None:
        for _ in range(10):
            op = FAKER.first_order_op(rank=3)
            self.assertEqual(FirstOrderScalarOp.from_diffop(op.to_diffop()), op)

    @parametrize(
        "beta, vector, expected",
        [
            # L(1) = z^2 d on z^k: (k + 2 beta) z^(k+1)
            (0, {3: 1}, {4: 3}),
            (1, {3: 1}, {4: 5}),
            (2, {0: 1}, {1: 4}),
            (-1, {-2: 1}, {-1: -4}),
        ],
    )
    def test_apply_twist(
        self: "DiffOpTestCase", beta: int, vector, expected
    ) -> None:
        result = apply(make_L(1, 1), (LaurentPoly(vector),), beta=beta)
        self.assertEqual(result, (LaurentPoly(expected),))

    def test_apply_matrix(self: "DiffOpTestCase") -> None:
        operator = make_E(1, 2, -1, 2)
        vector = (LaurentPoly(), LaurentPoly({3: 2}))
        self.assertEqual(
            apply(operator, vector, beta=3),
            (LaurentPoly({2: 2}), LaurentPoly()),
        )

    def test_apply_rank_mismatch(self: "DiffOpTestCase") -> None:
        with self.assertRaises(RankMismatchError):
            apply(make_L(0, 2), (LaurentPoly(),))

    def test_apply_is_representation(self: "DiffOpTestCase") -> None:
        for beta in (-1, 0, 2):
            for _ in range(10):
                x = FAKER.first_order_op(rank=2, max_support=3)
                y = FAKER.first_order_op(rank=2, max_support=3)
                v = (FAKER.laurent_poly(), FAKER.laurent_poly())
                xy = apply(x, apply(y, v, beta), beta)
                yx = apply(y, apply(x, v, beta), beta)
                lhs = tuple(a - b for a, b in zip(xy, yx))
                self.assertEqual(lhs, apply(bracket(x, y), v, beta))

    def test_max_shift(self: "DiffOpTestCase") -> None:
        self.assertEqual(max_shift(make_L(3, 1)), 3)
        self.assertEqual(max_shift(make_L(-4, 1)), 4)
        self.assertEqual(max_shift(make_E(1, 1, -2, 1) + make_L(1, 1)), 2)
        self.assertEqual(max_shift(FirstOrderScalarOp.zero(2)), 0)


class OperatorExprTestCase(unittest.TestCase):
    """Test ``OperatorExpr``."""

    def test_merge_and_order(self: "OperatorExprTestCase") -> None:
        expr = OperatorExpr(
            2,
            [
                (ETerm(1, 2, 0), 1),
                (LTerm(2), Fraction(1, 2)),
                (ETerm(1, 2, 0), 2),
                (LTerm(-1), 1),
                (LTerm(-1), -1),
            ],
        )
        self.assertEqual(str(expr), "1/2*L(2) + 3*E(1,2;0)")
        self.assertEqual(len(expr), 2)

    def test_index_out_of_range(self: "OperatorExprTestCase") -> None:
        with self.assertRaises(IndexOutOfRangeError):
            OperatorExpr(2, [(ETerm(3, 1, 0), 1)])

    def test_round_trip(self: "OperatorExprTestCase") -> None:
        for rank in (1, 2, 3):
            for _ in range(10):
                expr = FAKER.operator_expr(rank=rank)
                self.assertEqual(to_basis(from_basis(expr)), expr)

    def test_arithmetic(self: "OperatorExprTestCase") -> None:
        a = OperatorExpr.single(LTerm(1), 1)
        b = OperatorExpr.single(ETerm(1, 1, 0), 1, 3)
        self.assertEqual(str(a - b), "L(1) - 3*E(1,1;0)")
        self.assertEqual(str((a - b).scale(-2)), "-2*L(1) + 6*E(1,1;0)")
        self.assertTrue((a - a).is_zero())
        self.assertEqual(str(a - a), "0")

    def test_basis_terms(self: "OperatorExprTestCase") -> None:
        terms = basis_terms(2, 1)
        self.assertEqual(len(terms), 3 + 4 * 3)
        self.assertEqual(terms[0], LTerm(-1))
        self.assertEqual(terms[3], ETerm(1, 1, -1))
        self.assertEqual(terms[-1], ETerm(2, 2, 1))

    def test_symbol_of(self: "OperatorExprTestCase") -> None:
        self.assertEqual(symbol_of(make_L(2, 1)), LaurentPoly({3: 1}))
        self.assertEqual(symbol_of(make_L(-1, 2)), LaurentPoly({0: 1}))
        self.assertTrue(symbol_of(make_E(1, 2, 3, 2)).is_zero())

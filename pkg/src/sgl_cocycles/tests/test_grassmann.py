import unittest
from fractions import Fraction

from parametrize import parametrize

from ..base import RankMismatchError, WindowTooSmallError
from ..cocycles.closed import c_closed
from ..diffop import ETerm, LTerm, basis_operator, basis_terms, make_E, make_L
from ..grassmann import (
    IndexWindow,
    action_matrix,
    block_view,
    flat_index,
    split_index,
    trace_cocycle,
    window_bound,
)
from ..providers import seeded_faker

__license__ = "MIT"
__all__ = (
    "ActionMatrixTestCase",
    "IndexTestCase",
    "TraceCocycleTestCase",
)

FAKER = seeded_faker(3)


class IndexTestCase(unittest.TestCase):
    """Flat index encoding and windows."""

    @parametrize(
        "k1, k2, rank, k",
        [
            (0, 1, 1, 0),
            (-1, 1, 1, -1),
            (0, 2, 2, 1),
            (-1, 2, 2, -1),
            (-1, 1, 2, -2),
            (2, 3, 3, 8),
        ],
    )
    def test_flat_index(
        self: "IndexTestCase", k1: int, k2: int, rank: int, k: int
    ) -> None:
        self.assertEqual(flat_index(k1, k2, rank), k)
        self.assertEqual(split_index(k, rank), (k1, k2))

    def test_component_out_of_range(self: "IndexTestCase") -> None:
        with self.assertRaises(ValueError):
            flat_index(0, 3, 2)

    def test_window(self: "IndexTestCase") -> None:
        window = IndexWindow.symmetric(2, 3)
        self.assertEqual((window.lo, window.hi), (-6, 7))
        self.assertIn(7, window)
        self.assertNotIn(8, window)
        self.assertTrue(window.scaled(2).covers(window))
        self.assertFalse(window.covers(window.widened(1)))
        self.assertEqual(len(window.flat_indices()), 14)
        with self.assertRaises(ValueError):
            IndexWindow(1, 2, 1)

    def test_window_bound(self: "IndexTestCase") -> None:
        bound = window_bound(make_L(3, 2), make_E(1, 2, -5, 2))
        self.assertEqual(bound, IndexWindow.symmetric(2, 5))
        with self.assertRaises(RankMismatchError):
            window_bound(make_L(3, 1), make_L(3, 2))


class ActionMatrixTestCase(unittest.TestCase):
    """Test ``action_matrix`` and ``block_view``."""

    def test_vector_field_column(self: "ActionMatrixTestCase") -> None:
        window = IndexWindow.symmetric(1, 2)
        matrix = action_matrix(make_L(1, 1), 2, window)
        # z^2 d sends z^0 to (0 + 2 * 2) z^1
        self.assertEqual(matrix.entry(1, 0), Fraction(4))
        self.assertEqual(
            [(row, value) for (row, col), value in matrix.entries.items()
             if col == 0],
            [(1, Fraction(4))],
        )

    def test_matrix_part_ignores_beta(self: "ActionMatrixTestCase") -> None:
        window = IndexWindow.symmetric(2, 2)
        operator = make_E(2, 1, 1, 2)
        self.assertEqual(
            action_matrix(operator, 0, window),
            action_matrix(operator, 3, window),
        )
        matrix = action_matrix(operator, 0, window)
        # z e_21 sends z^k1 in component 1 to z^(k1+1) in component 2
        self.assertEqual(
            matrix.entry(flat_index(1, 2, 2), flat_index(0, 1, 2)), 1
        )
        self.assertEqual(
            matrix.entry(flat_index(1, 1, 2), flat_index(0, 1, 2)), 0
        )

    def test_window_too_small(self: "ActionMatrixTestCase") -> None:
        with self.assertRaises(WindowTooSmallError):
            action_matrix(make_L(3, 1), 0, IndexWindow.symmetric(1, 1))

    def test_compression(self: "ActionMatrixTestCase") -> None:
        narrow = IndexWindow.symmetric(1, 1)
        wide = IndexWindow.symmetric(1, 3)
        matrix = action_matrix(make_E(1, 1, 1, 1), 0, narrow)
        # z sends e_1 to e_2, outside of the narrow window
        self.assertEqual(
            matrix.entries, {(0, -1): Fraction(1), (1, 0): Fraction(1)}
        )
        self.assertEqual(
            action_matrix(make_E(1, 1, 1, 1), 0, wide).entry(2, 1), 1
        )
        for operator in (make_L(2, 1), make_L(-2, 1), make_E(1, 1, -1, 1)):
            small = action_matrix(operator, 2, IndexWindow.symmetric(1, 2))
            large = action_matrix(operator, 2, wide)
            self.assertEqual(
                small.entries,
                {
                    (row, col): value
                    for (row, col), value in large.entries.items()
                    if row in small.window and col in small.window
                },
            )

    def test_blocks(self: "ActionMatrixTestCase") -> None:
        matrix = action_matrix(
            make_E(1, 1, 1, 1), 0, IndexWindow.symmetric(1, 1)
        )
        blocks = block_view(matrix)
        self.assertEqual(blocks.minus_plus, {(0, -1): Fraction(1)})
        self.assertEqual(blocks.plus_minus, {})
        self.assertEqual(blocks.plus_plus, {(1, 0): Fraction(1)})
        self.assertEqual(blocks.minus_minus, {})
        self.assertEqual(matrix.blocks(), blocks)


class TraceCocycleTestCase(unittest.TestCase):
    """Test ``trace_cocycle``."""

    @parametrize(
        "rank, beta, t1, t2, expected",
        [
            (1, 0, LTerm(2), LTerm(-2), Fraction(1)),
            (1, 0, ETerm(1, 1, 1), ETerm(1, 1, -1), Fraction(-1)),
            (2, 0, ETerm(1, 2, 3), ETerm(2, 1, -3), Fraction(-3)),
            (1, 1, LTerm(1), ETerm(1, 1, -1), Fraction(-1)),
            (2, 3, LTerm(2), LTerm(-2), Fraction(74)),
            (1, 0, LTerm(1), LTerm(-1), Fraction(0)),
            (1, 2, LTerm(3), LTerm(-2), Fraction(0)),
        ],
    )
    def test_values(
        self: "TraceCocycleTestCase", rank, beta, t1, t2, expected
    ) -> None:
        value = trace_cocycle(
            basis_operator(t1, rank), basis_operator(t2, rank), beta
        )
        self.assertEqual(value, expected)

    def test_matches_closed_formula(self: "TraceCocycleTestCase") -> None:
        for rank in (1, 2):
            terms = basis_terms(rank, 3)
            window = IndexWindow.symmetric(rank, 3)
            for beta in (-1, 0, 2):
                for t1 in terms:
                    for t2 in terms:
                        actual = trace_cocycle(
                            basis_operator(t1, rank),
                            basis_operator(t2, rank),
                            beta,
                            window=window,
                        )
                        self.assertEqual(
                            actual, c_closed(rank, beta, t1, t2)
                        )

    def test_window_stability(self: "TraceCocycleTestCase") -> None:
        for index in range(100):
            rank = 1 + index % 3
            beta = index % 5 - 2
            x = FAKER.first_order_op(rank=rank, max_support=3)
            y = FAKER.first_order_op(rank=rank, max_support=3)
            bound = window_bound(x, y)
            self.assertEqual(
                trace_cocycle(x, y, beta),
                trace_cocycle(x, y, beta, window=bound.scaled(2).widened(1)),
            )

    def test_window_too_small(self: "TraceCocycleTestCase") -> None:
        with self.assertRaises(WindowTooSmallError):
            trace_cocycle(
                make_L(4, 1),
                make_L(-4, 1),
                0,
                window=IndexWindow.symmetric(1, 2),
            )

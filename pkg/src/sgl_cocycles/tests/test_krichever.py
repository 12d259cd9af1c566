import unittest

from parametrize import parametrize

from ..base import WindowTooSmallError
from ..grassmann import IndexWindow
from ..krichever import (
    KricheverDatum,
    WindowSubspace,
    check_chi,
    direct_sum,
    index,
    index_parts,
    is_subalgebra,
    krichever_point,
    stabilizer,
    verify_krichever_chi,
)
from ..laurent import LaurentPoly

__license__ = "MIT"
__all__ = (
    "KricheverDatumTestCase",
    "KricheverPointTestCase",
)


def _z(exponent: int) -> LaurentPoly:
    return LaurentPoly.monomial(exponent)


class KricheverDatumTestCase(unittest.TestCase):
    """Test ``KricheverDatum``."""

    def test_from_string(self: "KricheverDatumTestCase") -> None:
        datum = KricheverDatum.from_string("2,-1")
        self.assertEqual(datum.degrees, (2, -1))
        self.assertEqual((datum.rank, datum.degree, datum.chi), (2, 1, 3))
        self.assertEqual(str(datum), "2,-1")

    @parametrize("text", [("",), ("a",), ("1,,2",)])
    def test_invalid(self: "KricheverDatumTestCase", text: str) -> None:
        with self.assertRaises(ValueError):
            KricheverDatum.from_string(text)

    def test_positive_genus(self: "KricheverDatumTestCase") -> None:
        with self.assertRaises(ValueError):
            KricheverDatum((1,), genus=1)


class KricheverPointTestCase(unittest.TestCase):
    """Index, stabilizer and direct sums of Krichever points."""

    @parametrize(
        "degrees, expected",
        [
            ((3,), 4),
            ((-1,), 0),
            ((0, 0), 2),
            ((2, -1), 3),
            ((1, 1, 1), 6),
            ((-3, 5), 4),
        ],
    )
    def test_index(self: "KricheverPointTestCase", degrees, expected) -> None:
        datum = KricheverDatum(degrees)
        point = krichever_point(datum)
        self.assertEqual(index(point), expected)
        self.assertEqual(index(point), datum.chi)

    def test_index_parts(self: "KricheverPointTestCase") -> None:
        self.assertEqual(index_parts(krichever_point(KricheverDatum((3,)))),
                         (4, 0))
        self.assertEqual(
            index_parts(krichever_point(KricheverDatum((-3,)))), (0, 2)
        )

    def test_larger_window(self: "KricheverPointTestCase") -> None:
        datum = KricheverDatum((2, -1))
        point = krichever_point(datum, IndexWindow(2, -6, 7))
        self.assertEqual(index(point), 3)

    def test_window_too_small(self: "KricheverPointTestCase") -> None:
        with self.assertRaises(WindowTooSmallError):
            krichever_point(KricheverDatum((3,)), IndexWindow(1, -1, 2))

    def test_membership(self: "KricheverPointTestCase") -> None:
        point = krichever_point(KricheverDatum((0,)))
        self.assertTrue(point.contains((_z(-10),)))
        self.assertTrue(point.contains((_z(0) - _z(-2),)))
        self.assertFalse(point.contains((_z(1),)))
        self.assertFalse(point.contains((_z(9),)))

    def test_independent_generators(self: "KricheverPointTestCase") -> None:
        window = IndexWindow(1, -1, 1)
        with self.assertRaises(ValueError):
            WindowSubspace(1, window, ((_z(1),), (_z(1).scale(2),)))
        with self.assertRaises(WindowTooSmallError):
            WindowSubspace(1, window, ((_z(2),),))

    @parametrize(
        "degrees, dimension",
        [((3,), 2), ((-1,), 4), ((2, -1), 4), ((0, 0), 3)],
    )
    def test_stabilizer(
        self: "KricheverPointTestCase", degrees, dimension: int
    ) -> None:
        point = krichever_point(KricheverDatum(degrees))
        algebra = stabilizer(point)
        self.assertEqual(algebra.dimension, dimension)
        self.assertEqual(
            [g[0].support() for g in algebra.generators],
            [(m,) for m in range(-dimension + 1, 1)],
        )
        self.assertEqual(index(algebra), 1)
        self.assertTrue(is_subalgebra(algebra))

    def test_not_subalgebra(self: "KricheverPointTestCase") -> None:
        point = krichever_point(KricheverDatum((3,)))
        self.assertFalse(is_subalgebra(point))
        self.assertFalse(
            is_subalgebra(krichever_point(KricheverDatum((1, 1))))
        )

    def test_direct_sum(self: "KricheverPointTestCase") -> None:
        first = krichever_point(KricheverDatum((2,)))
        second = krichever_point(KricheverDatum((-1,)))
        total = direct_sum(first, second)
        self.assertEqual(total.rank, 2)
        self.assertEqual(index(total), index(first) + index(second))
        self.assertEqual(
            index(total), index(krichever_point(KricheverDatum((2, -1))))
        )

    def test_check_chi(self: "KricheverPointTestCase") -> None:
        report = check_chi(KricheverDatum((2, -1)))
        self.assertTrue(report.passed, report.violations)
        values = {entry.lhs: entry.text for entry in report.entries}
        self.assertEqual(values["index"], "3")
        self.assertEqual(values["chi"], "3")
        self.assertEqual(values["stabilizer index"], "1")

    def test_verify_all(self: "KricheverPointTestCase") -> None:
        data = [
            KricheverDatum.from_string(text)
            for text in ("3", "-1", "0,0", "2,-1", "1,1,1")
        ]
        report = verify_krichever_chi(data)
        self.assertTrue(report.passed)
        self.assertEqual(report.checked, 5)

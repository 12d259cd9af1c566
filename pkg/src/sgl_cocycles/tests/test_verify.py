import unittest
from fractions import Fraction

from parametrize import parametrize

from ..cocycles.base import CocycleKind
from ..cocycles.verify import (
    compare_psi_restriction,
    decompose_in_ackp,
    expected_ackp_coefficients,
    psi_sign,
    sample_triples,
    solve_ackp,
    torsor_exponents,
    verify_cocycle_condition,
    verify_gl_restriction,
    verify_jacobi,
    verify_local_mumford,
    verify_mumford,
    verify_oracle,
    verify_torsor,
    verify_witt_pullback,
)
from ..constants import DEFAULT_NB_SAMPLES, DEFAULT_RANGE, SWEEP_BETAS
from ..diffop import to_basis

__license__ = "MIT"
__all__ = (
    "AckpDecompositionTestCase",
    "CocycleConditionTestCase",
    "MumfordGridTestCase",
    "MumfordTestCase",
    "RestrictionTestCase",
)

GRID = [(rank, beta) for rank in (1, 2, 3) for beta in SWEEP_BETAS]

ALL_KINDS = [
    (CocycleKind.closed(2, 1),),
    (CocycleKind.closed(1, -2),),
    (CocycleKind.vir_n(2, 0),),
    (CocycleKind.vir(3),),
    (CocycleKind.trace(1, 2),),
    (CocycleKind.psi(1),),
    (CocycleKind.alpha(1),),
    (CocycleKind.alpha(2),),
    (CocycleKind.alpha(3),),
    (CocycleKind.kac_moody(2),),
]


def _pair_count(rank: int, degree_range: int) -> int:
    return ((2 * degree_range + 1) * (1 + rank * rank)) ** 2


class MumfordTestCase(unittest.TestCase):
    """Mumford identity and the oracle comparison."""

    def test_mumford(self: "MumfordTestCase") -> None:
        report = verify_mumford(2, 3, 2)
        self.assertTrue(report.passed, report.violations)
        self.assertEqual(report.checked, 625)
        self.assertEqual(report.entries[0].value, Fraction(74))

    @parametrize("rank, beta", [(1, -2), (1, 1), (3, 2)])
    def test_mumford_other_twists(self: "MumfordTestCase", rank, beta) -> None:
        self.assertTrue(verify_mumford(rank, beta, 2).passed)

    def test_parallel_sweep(self: "MumfordTestCase") -> None:
        serial = verify_mumford(2, -1, 2)
        parallel = verify_mumford(2, -1, 2, jobs=2)
        self.assertEqual(parallel.to_dict(), serial.to_dict())

    def test_range_too_small(self: "MumfordTestCase") -> None:
        with self.assertRaises(ValueError):
            verify_mumford(1, 0, 1)

    def test_oracle(self: "MumfordTestCase") -> None:
        report = verify_oracle(1, -1, 3)
        self.assertTrue(report.passed, report.violations)
        self.assertEqual(report.checked, 196)

    def test_local_mumford(self: "MumfordTestCase") -> None:
        report = verify_local_mumford(3, 4)
        self.assertTrue(report.passed)
        self.assertEqual(report.checked, 81)
        self.assertEqual(report.entries[0].value, Fraction(37))

    def test_torsor(self: "MumfordTestCase") -> None:
        self.assertEqual(torsor_exponents(2, 3), (3, -2, 72))
        report = verify_torsor(2, 3)
        self.assertTrue(report.passed)
        self.assertEqual(report.checked, 3)


class CocycleConditionTestCase(unittest.TestCase):
    """Cocycle condition on random samples."""

    @parametrize("kind", ALL_KINDS)
    def test_condition(self: "CocycleConditionTestCase", kind) -> None:
        samples = sample_triples(kind, count=DEFAULT_NB_SAMPLES, seed=13)
        self.assertEqual(len(samples), 200)
        report = verify_cocycle_condition(kind, samples)
        self.assertTrue(report.passed, report.violations)
        self.assertEqual(report.checked, DEFAULT_NB_SAMPLES)

    @parametrize(
        "kind",
        [
            (CocycleKind.closed(2, 0),),
            (CocycleKind.closed(3, 0),),
            (CocycleKind.psi(1),),
            (CocycleKind.psi(2),),
        ],
    )
    def test_jacobi(self: "CocycleConditionTestCase", kind) -> None:
        samples = sample_triples(kind, count=DEFAULT_NB_SAMPLES, seed=2)
        report = verify_jacobi(samples)
        self.assertTrue(report.passed, report.violations)
        self.assertEqual(report.checked, DEFAULT_NB_SAMPLES)

    def test_samples_are_reproducible(self: "CocycleConditionTestCase"):
        kind = CocycleKind.closed(2, 0)
        first = sample_triples(kind, count=4, seed=7)
        second = sample_triples(kind, count=4, seed=7)
        self.assertEqual(
            [[str(to_basis(op)) for op in triple] for triple in first],
            [[str(to_basis(op)) for op in triple] for triple in second],
        )


class RestrictionTestCase(unittest.TestCase):
    """Restrictions of ``c_{n,beta}`` and of ``psi``."""

    def test_psi_sign(self: "RestrictionTestCase") -> None:
        report = compare_psi_restriction(1, 3)
        self.assertTrue(report.passed, report.violations)
        self.assertEqual(report.entries[0].value, Fraction(-1))
        self.assertEqual(len(report.notes), 2)
        self.assertEqual(psi_sign(2, 2), Fraction(-1))

    def test_gl(self: "RestrictionTestCase") -> None:
        report = verify_gl_restriction(2, 3, 2)
        self.assertTrue(report.passed)
        self.assertEqual(report.checked, 400)

    def test_witt(self: "RestrictionTestCase") -> None:
        report = verify_witt_pullback(3, -1, 3)
        self.assertTrue(report.passed)
        self.assertEqual(report.checked, 49)


class AckpDecompositionTestCase(unittest.TestCase):
    """``c_{1,beta}`` in terms of the residue cocycles."""

    @parametrize(
        "beta, expected",
        [
            (0, (Fraction(-1, 6), Fraction(1, 2), Fraction(1))),
            (1, (Fraction(-1, 6), Fraction(-1, 2), Fraction(1))),
            (2, (Fraction(-13, 6), Fraction(-3, 2), Fraction(1))),
            (-1, (Fraction(-13, 6), Fraction(3, 2), Fraction(1))),
        ],
    )
    def test_solve(self: "AckpDecompositionTestCase", beta, expected) -> None:
        self.assertEqual(solve_ackp(beta), expected)

    def test_decomposition(self: "AckpDecompositionTestCase") -> None:
        report = decompose_in_ackp(0, 3)
        self.assertTrue(report.passed, report.violations)
        self.assertEqual(
            [entry.text for entry in report.entries], ["-1/6", "1/2", "1"]
        )
        self.assertEqual(report.checked, 196)
        self.assertEqual(len(report.notes), 1)

    @parametrize("beta", [(beta,) for beta in SWEEP_BETAS])
    def test_decomposition_on_default_window(
        self: "AckpDecompositionTestCase", beta: int
    ) -> None:
        report = decompose_in_ackp(beta, DEFAULT_RANGE)
        self.assertTrue(report.passed, report.violations)
        self.assertEqual(
            tuple(entry.value for entry in report.entries[:3]),
            expected_ackp_coefficients(beta),
        )
        self.assertEqual(report.checked, _pair_count(1, DEFAULT_RANGE))


class MumfordGridTestCase(unittest.TestCase):
    """Identities on the default window for every rank and twist swept."""

    @parametrize("rank, beta", GRID)
    def test_mumford(self: "MumfordGridTestCase", rank, beta) -> None:
        report = verify_mumford(rank, beta, DEFAULT_RANGE)
        self.assertTrue(report.passed, report.violations)
        self.assertEqual(report.checked, _pair_count(rank, DEFAULT_RANGE))

    @parametrize("rank, beta", GRID)
    def test_oracle(self: "MumfordGridTestCase", rank, beta) -> None:
        report = verify_oracle(rank, beta, DEFAULT_RANGE)
        self.assertTrue(report.passed, report.violations)
        self.assertEqual(report.checked, _pair_count(rank, DEFAULT_RANGE))

    @parametrize("rank", [(1,), (2,)])
    def test_psi_sign(self: "MumfordGridTestCase", rank: int) -> None:
        report = compare_psi_restriction(rank, DEFAULT_RANGE)
        self.assertTrue(report.passed, report.violations)
        self.assertEqual(report.entries[0].value, Fraction(-1))
        self.assertEqual(report.checked, _pair_count(rank, DEFAULT_RANGE))
        self.assertTrue(any("-1" in note for note in report.notes))

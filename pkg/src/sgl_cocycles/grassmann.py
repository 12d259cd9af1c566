"""Action matrices on ``V = C((z))^n`` and the trace cocycle.

The basis is ``e_k = z^(k1)`` in component ``k2`` with flat index
``k = k1 * n + k2 - 1``; ``V+`` is spanned by ``k >= 0`` and ``V-`` by
``k < 0``. Blocks are sparse dictionaries ``{(row, col): value}``; nothing is
ever materialised densely.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple, Union

from .base import WindowTooSmallError, check_rank
from .diffop import DiffOp, FirstOrderScalarOp, max_shift

__license__ = "MIT"
__all__ = (
    "BlockView",
    "IndexWindow",
    "WindowMatrix",
    "action_matrix",
    "block_view",
    "flat_index",
    "split_index",
    "trace_cocycle",
    "window_bound",
)

LOGGER = logging.getLogger(__name__)

Entries = Dict[Tuple[int, int], Fraction]


def flat_index(k1: int, k2: int, rank: int) -> int:
    """``k = k1 * n + k2 - 1`` with ``k2`` in ``1..n``."""
    if not 1 <= k2 <= rank:
        raise ValueError(f"Component {k2} out of range for rank {rank}")
    return k1 * rank + k2 - 1


def split_index(k: int, rank: int) -> Tuple[int, int]:
    """Inverse of :func:`flat_index`, returns ``(k1, k2)``."""
    k1, remainder = divmod(k, rank)
    return k1, remainder + 1


@dataclass(frozen=True)
class IndexWindow:
    """Flat indices whose z-degree ``k1`` lies in ``[k1_lo, k1_hi]``."""

    rank: int
    k1_lo: int
    k1_hi: int

    def __post_init__(self: "IndexWindow") -> None:
        if self.rank < 1:
            raise ValueError(f"Rank shall be positive, got {self.rank}")
        if self.k1_lo > self.k1_hi:
            raise ValueError(
                f"Empty window [{self.k1_lo}, {self.k1_hi}]"
            )

    @classmethod
    def symmetric(cls, rank: int, radius: int) -> "IndexWindow":
        return cls(rank, -radius, radius)

    @property
    def lo(self: "IndexWindow") -> int:
        return flat_index(self.k1_lo, 1, self.rank)

    @property
    def hi(self: "IndexWindow") -> int:
        return flat_index(self.k1_hi, self.rank, self.rank)

    def __contains__(self: "IndexWindow", k: int) -> bool:
        return self.lo <= k <= self.hi

    def covers(self: "IndexWindow", other: "IndexWindow") -> bool:
        return (
            self.rank == other.rank
            and self.k1_lo <= other.k1_lo
            and other.k1_hi <= self.k1_hi
        )

    def scaled(self: "IndexWindow", factor: int) -> "IndexWindow":
        """Window with both degree bounds multiplied by ``factor``."""
        return IndexWindow(self.rank, self.k1_lo * factor, self.k1_hi * factor)

    def widened(self: "IndexWindow", margin: int) -> "IndexWindow":
        return IndexWindow(self.rank, self.k1_lo - margin, self.k1_hi + margin)

    def flat_indices(self: "IndexWindow") -> range:
        return range(self.lo, self.hi + 1)

    def __str__(self: "IndexWindow") -> str:
        return (
            f"k1 in [{self.k1_lo}, {self.k1_hi}] "
            f"(k in [{self.lo}, {self.hi}], n={self.rank})"
        )


@dataclass(frozen=True)
class BlockView:
    """The four blocks of a matrix w.r.t. ``V = V- + V+``.

    ``plus_minus`` maps ``V+`` to ``V-`` (columns ``>= 0``, rows ``< 0``),
    ``minus_plus`` maps ``V-`` to ``V+``.
    """

    plus_plus: Entries = field(default_factory=dict)
    plus_minus: Entries = field(default_factory=dict)
    minus_plus: Entries = field(default_factory=dict)
    minus_minus: Entries = field(default_factory=dict)

    def trace_pairing(self: "BlockView", other: "BlockView") -> Fraction:
        """``Tr(self^{+-} other^{-+})``, a trace over ``V-``."""
        total = Fraction(0)
        for (row, col), value in self.plus_minus.items():
            partner = other.minus_plus.get((col, row))
            if partner:
                total += value * partner
        return total


@dataclass(frozen=True, eq=False)
class WindowMatrix:
    """Finitely supported ``Z x Z`` matrix compressed to an index window."""

    rank: int
    beta: int
    window: IndexWindow
    entries: Entries

    def __post_init__(self: "WindowMatrix") -> None:
        for row, col in self.entries:
            if row not in self.window or col not in self.window:
                raise WindowTooSmallError(
                    f"Entry ({row}, {col}) outside of {self.window}"
                )

    def entry(self: "WindowMatrix", row: int, col: int) -> Fraction:
        return self.entries.get((row, col), Fraction(0))

    def blocks(self: "WindowMatrix") -> BlockView:
        return block_view(self)

    def __eq__(self: "WindowMatrix", other: object) -> bool:
        if not isinstance(other, WindowMatrix):
            return NotImplemented
        return (
            self.rank == other.rank
            and self.window == other.window
            and self.entries == other.entries
        )


def block_view(matrix: WindowMatrix) -> BlockView:
    blocks: Dict[Tuple[bool, bool], Entries] = {
        (True, True): {},
        (True, False): {},
        (False, True): {},
        (False, False): {},
    }
    for (row, col), value in matrix.entries.items():
        blocks[(col >= 0, row >= 0)][(row, col)] = value
    return BlockView(
        plus_plus=blocks[(True, True)],
        plus_minus=blocks[(True, False)],
        minus_plus=blocks[(False, True)],
        minus_minus=blocks[(False, False)],
    )


Operator = Union[DiffOp, FirstOrderScalarOp]


def _first_order(operator: Operator) -> FirstOrderScalarOp:
    if isinstance(operator, FirstOrderScalarOp):
        return operator
    return FirstOrderScalarOp.from_diffop(operator)


def crossing_window(operator: Operator) -> IndexWindow:
    """Smallest symmetric window holding the off-diagonal blocks."""
    operator = _first_order(operator)
    return IndexWindow.symmetric(operator.rank, max_shift(operator))


def window_bound(first: Operator, second: Operator) -> IndexWindow:
    """Window containing the off-diagonal support of both action matrices.

    A shift by ``d`` in z-degree crosses between ``V+`` and ``V-`` only for
    ``k1`` in ``[-|d|, |d| - 1]``.
    """
    first, second = _first_order(first), _first_order(second)
    check_rank(first.rank, second.rank, "window bound")
    radius = max(max_shift(first), max_shift(second))
    return IndexWindow.symmetric(first.rank, radius)


def action_matrix(
    operator: Operator, beta: int, window: IndexWindow
) -> WindowMatrix:
    """Matrix of ``v -> gamma v + f v' + beta f' v`` compressed to ``window``.

    The matrix part does not depend on ``beta``; ``z^e d`` sends ``e_k`` to
    ``(k1 + beta * e) z^(k1 + e - 1)`` in the same component.

    Rows and columns outside ``window`` are dropped: the result is the
    compression ``P A P`` of the operator to the window. A window that
    does not cover the crossing support (see :func:`crossing_window`)
    raises ``WindowTooSmallError``. Entries dropped by the compression map
    ``V+`` to ``V+`` or ``V-`` to ``V-`` and never reach the off-diagonal
    blocks.
    """
    operator = _first_order(operator)
    check_rank(operator.rank, window.rank, "window")
    required = crossing_window(operator)
    if not window.covers(required):
        raise WindowTooSmallError(
            f"Window {window} does not cover the crossing support {required}"
        )
    rank = operator.rank
    gamma_entries = list(operator.gamma.nonzero_entries())
    symbol_items = list(operator.symbol.items())
    entries: Entries = {}

    def _add(row: int, col: int, value: Fraction) -> None:
        if row not in window or not value:
            return
        total = entries.get((row, col), Fraction(0)) + value
        if total:
            entries[(row, col)] = total
        else:
            entries.pop((row, col), None)

    for col in window.flat_indices():
        k1, k2 = split_index(col, rank)
        for a, b, poly in gamma_entries:
            if b != k2 - 1:
                continue
            for exponent, coeff in poly.items():
                _add(flat_index(k1 + exponent, a + 1, rank), col, coeff)
        for exponent, coeff in symbol_items:
            _add(
                flat_index(k1 + exponent - 1, k2, rank),
                col,
                coeff * (k1 + beta * exponent),
            )
    return WindowMatrix(rank=rank, beta=beta, window=window, entries=entries)


@lru_cache(maxsize=8192)
def _cached_blocks(
    operator: FirstOrderScalarOp, beta: int, window: IndexWindow
) -> BlockView:
    return block_view(action_matrix(operator, beta, window))


def trace_cocycle(
    first: Operator,
    second: Operator,
    beta: int,
    window: Union[IndexWindow, None] = None,
) -> Fraction:
    """``Tr(D1^{+-} D2^{-+} - D2^{+-} D1^{-+})`` for the twisted action.

    :param window: Optional window; defaults to :func:`window_bound`. Any
        window covering the bound gives the same value.
    """
    first, second = _first_order(first), _first_order(second)
    check_rank(first.rank, second.rank, "trace cocycle")
    if window is None:
        window = window_bound(first, second)
    if LOGGER.isEnabledFor(logging.DEBUG):
        LOGGER.debug(
            f"Trace cocycle on {window}, beta={beta}, "
            f"{_cached_blocks.cache_info()}"
        )
    blocks_1 = _cached_blocks(first, beta, window)
    blocks_2 = _cached_blocks(second, beta, window)
    return blocks_1.trace_pairing(blocks_2) - blocks_2.trace_pairing(blocks_1)

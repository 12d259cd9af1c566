"""Closed formulas for ``c_{n,beta}``, ``vir_{n,beta}`` and ``vir_beta``.

On the basis ``L(r) = z^(r+1) d`` and ``E(i,j;s) = z^s e_ij``:

* ``c(L_r, L_s) = n d(r,-s) (r^3 - r)/6 (1 - 6 beta + 6 beta^2)``
* ``c(E_ij^r, E_kl^s) = d(r,-s) d(i,l) d(j,k) s``
* ``c(L_r, E_ij^s) = d(r,-s) d(i,j) r(r+1)/2 (1 - 2 beta)``

and ``c(E, L) = -c(L, E)``.
"""
from fractions import Fraction

from ..diffop import BasisTerm, ETerm, LTerm
from ..helpers import kronecker
from .base import BaseCocycle, CocycleKind

__license__ = "MIT"
__all__ = (
    "ClosedCocycle",
    "VirCocycle",
    "VirNCocycle",
    "c_closed",
    "central_charge",
    "mixed_factor",
    "vir_beta",
    "vir_n_beta",
)


def central_charge(beta: int) -> int:
    """``1 - 6 beta + 6 beta^2``, invariant under ``beta -> 1 - beta``."""
    return 1 - 6 * beta + 6 * beta * beta


def mixed_factor(beta: int) -> int:
    return 1 - 2 * beta


def _cubic(r: int) -> Fraction:
    return Fraction(r**3 - r, 6)


def vir_beta(beta: int, r: int, s: int) -> Fraction:
    """Virasoro cocycle of weight ``beta`` on ``(L_r, L_s)``."""
    if r != -s:
        return Fraction(0)
    return _cubic(r) * central_charge(beta)


def vir_n_beta(rank: int, beta: int, t1: BasisTerm, t2: BasisTerm) -> Fraction:
    """Pull-back of ``n vir_beta`` along the symbol map.

    Vanishes whenever an ``E`` term is involved.
    """
    cocycle = VirNCocycle(CocycleKind.vir_n(rank, beta))
    return cocycle.value(t1, t2)


def c_closed(rank: int, beta: int, t1: BasisTerm, t2: BasisTerm) -> Fraction:
    """``c_{n,beta}`` on a pair of basis terms."""
    cocycle = ClosedCocycle(CocycleKind.closed(rank, beta))
    return cocycle.value(t1, t2)


class ClosedCocycle(BaseCocycle):
    """``c_{n,beta}`` through its closed formula."""

    tags = ("closed",)

    def value(self: "ClosedCocycle", t1: BasisTerm, t2: BasisTerm) -> Fraction:
        self._check_terms(t1, t2)
        if t1.degree != -t2.degree:
            return Fraction(0)
        if isinstance(t1, LTerm) and isinstance(t2, LTerm):
            return self.rank * vir_beta(self.beta, t1.r, t2.r)
        if isinstance(t1, ETerm) and isinstance(t2, ETerm):
            return Fraction(
                kronecker(t1.i, t2.j) * kronecker(t1.j, t2.i) * t2.s
            )
        if isinstance(t1, LTerm):
            return self._mixed(t1, t2)  # type: ignore[arg-type]
        return -self._mixed(t2, t1)  # type: ignore[arg-type]

    def _mixed(self: "ClosedCocycle", lterm: LTerm, eterm: ETerm) -> Fraction:
        if eterm.i != eterm.j:
            return Fraction(0)
        r = lterm.r
        return Fraction(r * (r + 1), 2) * mixed_factor(self.beta)


class VirNCocycle(BaseCocycle):
    """``vir_{n,beta}``: ``n vir_beta`` on L-pairs, zero elsewhere."""

    tags = ("vir_n",)

    def value(self: "VirNCocycle", t1: BasisTerm, t2: BasisTerm) -> Fraction:
        self._check_terms(t1, t2)
        if isinstance(t1, LTerm) and isinstance(t2, LTerm):
            return self.rank * vir_beta(self.beta, t1.r, t2.r)
        return Fraction(0)


class VirCocycle(BaseCocycle):
    """``vir_beta`` pulled back along the symbol map, without the rank."""

    tags = ("vir",)

    def value(self: "VirCocycle", t1: BasisTerm, t2: BasisTerm) -> Fraction:
        self._check_terms(t1, t2)
        if isinstance(t1, LTerm) and isinstance(t2, LTerm):
            return vir_beta(self.beta, t1.r, t2.r)
        return Fraction(0)

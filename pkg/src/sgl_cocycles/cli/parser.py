"""Parsers for the textual operator and Laurent polynomial forms.

Operator expressions::

    L(2) - 3*E(1,1;0) + 1/2*L(-1)

Laurent polynomials::

    3*z^-2 + 1/2*z - 1
"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError

from ..base import ExprSyntaxError, SglCocycleError
from ..diffop import BasisTerm, ETerm, LTerm, OperatorExpr
from ..laurent import LaurentPoly

__license__ = "MIT"
__all__ = (
    "LAURENT_GRAMMAR",
    "OPERATOR_GRAMMAR",
    "parse_expr",
    "parse_laurent",
    "parse_vector",
)

LOGGER = logging.getLogger(__name__)

OPERATOR_GRAMMAR = r"""
    start: first_term signed_term*

    first_term: SIGN? term
    signed_term: SIGN term

    term: coefficient "*" basis -> scaled_basis
        | basis
        | coefficient -> constant

    coefficient: INT ("/" INT)?

    basis: "L" "(" SIGNED_INT ")" -> l_term
         | "E" "(" INT "," INT ";" SIGNED_INT ")" -> e_term

    SIGN: "+" | "-"

    %import common.INT
    %import common.SIGNED_INT
    %import common.WS
    %ignore WS
"""

LAURENT_GRAMMAR = r"""
    start: first_term signed_term*

    first_term: SIGN? term
    signed_term: SIGN term

    term: coefficient "*" monomial -> scaled_monomial
        | monomial
        | coefficient -> constant

    coefficient: INT ("/" INT)?

    monomial: "z" ("^" exponent)?
    exponent: SIGNED_INT
            | "(" SIGNED_INT ")"

    SIGN: "+" | "-"

    %import common.INT
    %import common.SIGNED_INT
    %import common.WS
    %ignore WS
"""

Signed = Tuple[Optional[object], Fraction]


class _InvalidTerm(Exception):
    """Raised by the transformers; turned into ``ExprSyntaxError``."""

    def __init__(self, message: str, position: Optional[int] = None) -> None:
        super().__init__(message)
        self.message = message
        self.position = position


@v_args(inline=True)
class _SignedSum(Transformer):
    """Common rules: signs, coefficients and the final sum."""

    def coefficient(
        self, numerator: Token, denominator: Optional[Token] = None
    ) -> Fraction:
        if denominator is None:
            return Fraction(int(numerator))
        if int(denominator) == 0:
            raise _InvalidTerm("zero denominator", denominator.start_pos)
        return Fraction(int(numerator), int(denominator))

    @staticmethod
    def _signed(sign: Token, term: Signed) -> Signed:
        item, coeff = term
        return item, -coeff if sign == "-" else coeff

    def first_term(self, *items) -> Signed:
        if len(items) == 2:
            return self._signed(*items)
        return items[0]

    def signed_term(self, sign: Token, term: Signed) -> Signed:
        return self._signed(sign, term)

    def constant(self, coeff: Fraction) -> Signed:
        return None, coeff

    def start(self, *terms: Signed) -> List[Signed]:
        return list(terms)


@v_args(inline=True)
class OperatorTransformer(_SignedSum):
    def l_term(self, r: Token) -> LTerm:
        return LTerm(int(r))

    def e_term(self, i: Token, j: Token, s: Token) -> ETerm:
        return ETerm(int(i), int(j), int(s))

    def scaled_basis(self, coeff: Fraction, term: BasisTerm) -> Signed:
        return term, coeff

    def term(self, term: BasisTerm) -> Signed:
        return term, Fraction(1)


@v_args(inline=True)
class LaurentTransformer(_SignedSum):
    def exponent(self, value: Token) -> int:
        return int(value)

    def monomial(self, exponent: Optional[int] = None) -> int:
        return 1 if exponent is None else exponent

    def scaled_monomial(self, coeff: Fraction, exponent: int) -> Signed:
        return exponent, coeff

    def term(self, exponent: int) -> Signed:
        return exponent, Fraction(1)


@lru_cache(maxsize=None)
def _parser(grammar: str) -> Lark:
    return Lark(grammar, parser="lalr")


def _parse(
    text: str, grammar: str, transformer: Transformer
) -> List[Signed]:
    try:
        tree = _parser(grammar).parse(text)
    except UnexpectedInput as err:
        position = getattr(err, "pos_in_stream", None)
        if position is None or position < 0:
            position = len(text)
        raise ExprSyntaxError(text, position, "unexpected input") from err
    try:
        return transformer.transform(tree)
    except VisitError as err:
        cause = err.orig_exc
        if isinstance(cause, _InvalidTerm):
            raise ExprSyntaxError(text, cause.position, cause.message) from err
        if isinstance(cause, SglCocycleError):
            raise cause from err
        raise


def parse_expr(text: str, rank: int) -> OperatorExpr:
    """Parse an operator expression at the given rank.

    Duplicate basis terms are merged. ``0`` is the zero expression.

    :raises ExprSyntaxError: On malformed input.
    :raises IndexOutOfRangeError: When an ``E(i,j;s)`` index exceeds ``rank``.
    """
    terms: List[Tuple[BasisTerm, Fraction]] = []
    for item, coeff in _parse(text, OPERATOR_GRAMMAR, OperatorTransformer()):
        if item is None:
            if coeff:
                raise ExprSyntaxError(
                    text, None, "constant term without basis element"
                )
            continue
        terms.append((item, coeff))
    expr = OperatorExpr(rank, terms)
    LOGGER.debug(f"Parsed {text!r} as {expr}")
    return expr


def parse_laurent(text: str) -> LaurentPoly:
    """Parse a Laurent polynomial such as ``3*z^-2 + 1/2*z``."""
    coeffs: Dict[int, Fraction] = {}
    for exponent, coeff in _parse(
        text, LAURENT_GRAMMAR, LaurentTransformer()
    ):
        key = 0 if exponent is None else exponent
        coeffs[key] = coeffs.get(key, Fraction(0)) + coeff
    return LaurentPoly(coeffs)


def parse_vector(texts: Sequence[str]) -> Tuple[LaurentPoly, ...]:
    return tuple(parse_laurent(text) for text in texts)

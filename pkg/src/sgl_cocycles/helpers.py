import importlib
from fractions import Fraction
from typing import Iterator, List, Sequence, Type, TypeVar

import sympy

__license__ = "MIT"
__all__ = (
    "chunked",
    "falling_factorial",
    "from_sympy",
    "kronecker",
    "load_class_from_path",
    "to_sympy_matrix",
)

T = TypeVar("T")


def kronecker(a: int, b: int) -> int:
    return 1 if a == b else 0


def falling_factorial(x: int, k: int) -> int:
    """x (x - 1) ... (x - k + 1); equals 1 for ``k == 0``.

    This is the coefficient produced by ``k`` derivatives of ``z^x``.
    """
    result = 1
    for i in range(k):
        result *= x - i
    return result


def chunked(items: Sequence[T], size: int) -> Iterator[List[T]]:
    """Split a sequence into consecutive lists of at most ``size`` items."""
    if size < 1:
        raise ValueError("Chunk size shall be positive")
    for start in range(0, len(items), size):
        yield list(items[start : start + size])


def load_class_from_path(full_path: str) -> Type:
    """Load a class from a given full path string identifier.

    :param full_path: The full path to the class,
        e.g. 'sgl_cocycles.cocycles.closed.ClosedCocycle'.
    :return: The loaded class.
    :raise: If the module cannot be found or the class does
        not exist in the module, it raises ImportError.

    Usage example:

    .. code-block:: python

        cocycle_cls = load_class_from_path(
            "sgl_cocycles.cocycles.psi.PsiCocycle"
        )
    """
    try:
        module_name, class_name = full_path.rsplit(".", 1)
        module = importlib.import_module(module_name)

        if not hasattr(module, class_name):
            raise ImportError(
                f"Class '{class_name}' not found in module '{module_name}'"
            )

        loaded_class = getattr(module, class_name)

        if not isinstance(loaded_class, type):
            raise ImportError(f"'{full_path}' does not point to a class")

        return loaded_class
    except (ImportError, ValueError) as err:
        raise ImportError(
            f"Error loading class from path '{full_path}': {err}"
        ) from err


def to_sympy_matrix(rows: Sequence[Sequence[Fraction]]) -> sympy.Matrix:
    """Exact sympy matrix from rows of fractions."""
    return sympy.Matrix(
        [
            [
                sympy.Rational(value.numerator, value.denominator)
                for value in row
            ]
            for row in rows
        ]
    )


def from_sympy(value: sympy.Basic) -> Fraction:
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))

"""Exact scalar arithmetic helpers.

The algebra engine is generic over its coefficient ring: scalars are
``fractions.Fraction`` (the fast path, used whenever kappa, c, h are
rational numbers), sympy expressions (for identities that must hold for a
formal parameter), or floats (annular eigenvalue data only).  Python's
operator overloading makes the three interoperate inside one code path;
the helpers below supply the pieces that differ: exact zero tests and
canonical simplification.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def is_symbolic(x) -> bool:
    return type(x).__module__.split(".")[0] == "sympy"


def as_exact(x):
    """Coerce ints/rationals to Fraction; pass symbolic and float through."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Rational):  # int included
        return Fraction(x)
    if isinstance(x, float) or is_symbolic(x):
        return x
    raise TypeError(f"unsupported scalar type {type(x)!r}")


def simplify(x):
    if is_symbolic(x):
        import sympy

        return sympy.cancel(sympy.together(x))
    return x


def iszero(x) -> bool:
    if is_symbolic(x):
        return simplify(x) == 0
    return x == 0


def invert(x):
    if is_symbolic(x):
        return 1 / x
    if isinstance(x, Fraction) or isinstance(x, Rational):
        return Fraction(1, 1) / Fraction(x)
    return 1.0 / x

"""Polynomials in the Loewner expansion coefficients.

Variables are indexed by the integer subscript of the coefficient they
stand for: negative indices are the coefficients of maps normalized at
infinity (``f(z) = z + sum_{m<=-1} f_m z^{m+1}``), positive indices the
coefficients of maps fixing the origin.  A monomial is stored as a sorted
tuple of ``(index, exponent)`` pairs; the zero polynomial is the empty
dict.  The grade of a variable is ``abs(index)`` and every operator in
this package either preserves or shifts the grading by a fixed amount,
which makes ``grade_parts`` the natural decomposition.

Coefficients live in whatever exact ring the caller supplies (Fraction,
sympy expressions); see ``scalars``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple

from . import scalars

Monomial = Tuple[Tuple[int, int], ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class CoeffPolynomial:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        self.terms: Dict[Monomial, object] = {}
        if terms:
            for mono, c in terms.items():
                if not scalars.iszero(c):
                    self.terms[mono] = c

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls) -> "CoeffPolynomial":
        return cls()

    @classmethod
    def const(cls, c) -> "CoeffPolynomial":
        c = scalars.as_exact(c)
        return cls({(): c} if not scalars.iszero(c) else {})

    @classmethod
    def var(cls, index: int) -> "CoeffPolynomial":
        if index == 0:
            raise ValueError("coefficient variables are indexed by nonzero integers")
        return cls({((index, 1),): _ONE})

    # -- ring operations ----------------------------------------------
    def __add__(self, other) -> "CoeffPolynomial":
        other = _coerce(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, _ZERO) + c
            if scalars.iszero(s):
                out.pop(mono, None)
            else:
                out[mono] = s
        return CoeffPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "CoeffPolynomial":
        return CoeffPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "CoeffPolynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "CoeffPolynomial":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "CoeffPolynomial":
        other = _coerce(other)
        out: Dict[Monomial, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _mul_monomials(m1, m2)
                s = out.get(mono, _ZERO) + c1 * c2
                if scalars.iszero(s):
                    out.pop(mono, None)
                else:
                    out[mono] = s
        return CoeffPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CoeffPolynomial":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = CoeffPolynomial.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- structure ----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        return (self - other).is_zero()

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def variables(self) -> set:
        return {i for mono in self.terms for i, _ in mono}

    def grade_parts(self) -> Dict[int, "CoeffPolynomial"]:
        parts: Dict[int, Dict[Monomial, object]] = {}
        for mono, c in self.terms.items():
            g = monomial_grade(mono)
            parts.setdefault(g, {})[mono] = c
        return {g: CoeffPolynomial(t) for g, t in parts.items()}

    def grade(self) -> int | None:
        """Common grade of all terms, or None for inhomogeneous/zero."""
        grades = {monomial_grade(m) for m in self.terms}
        return grades.pop() if len(grades) == 1 else None

    def diff(self, index: int) -> "CoeffPolynomial":
        out: Dict[Monomial, object] = {}
        for mono, c in self.terms.items():
            for pos, (i, e) in enumerate(mono):
                if i == index:
                    rest = list(mono)
                    if e == 1:
                        del rest[pos]
                    else:
                        rest[pos] = (i, e - 1)
                    key = tuple(rest)
                    s = out.get(key, _ZERO) + c * e
                    if scalars.iszero(s):
                        out.pop(key, None)
                    else:
                        out[key] = s
                    break
        return CoeffPolynomial(out)

    def subs(self, values: Mapping[int, object]):
        """Evaluate at numeric/polynomial values for every variable used."""
        out = CoeffPolynomial.zero() if _any_poly(values.values()) else _ZERO
        for mono, c in self.terms.items():
            term = c
            for i, e in mono:
                if i not in values:
                    raise KeyError(f"no value supplied for variable f_{i}")
                term = term * values[i] ** e
            out = out + term if isinstance(out, CoeffPolynomial) else out + term
        return out

    def constant_term(self):
        return self.terms.get((), _ZERO)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for mono in sorted(self.terms, key=lambda m: (monomial_grade(m), m)):
            c = self.terms[mono]
            var = "*".join(
                f"f[{i}]" + (f"^{e}" if e > 1 else "") for i, e in mono
            )
            bits.append(f"({c})" + ("*" + var if var else ""))
        return " + ".join(bits)


def _coerce(x) -> CoeffPolynomial:
    if isinstance(x, CoeffPolynomial):
        return x
    return CoeffPolynomial.const(x)


def _any_poly(vals: Iterable) -> bool:
    return any(isinstance(v, CoeffPolynomial) for v in vals)


def _mul_monomials(a: Monomial, b: Monomial) -> Monomial:
    d = dict(a)
    for i, e in b:
        d[i] = d.get(i, 0) + e
    return tuple(sorted(d.items()))


def monomial_grade(mono: Monomial) -> int:
    return sum(abs(i) * e for i, e in mono)

"""Truncated Laurent series with exact coefficients.

A series is stored in a local coordinate ``t`` as ``{exponent: coeff}``
together with a precision: coefficients are exact for every exponent
``< prec`` and unknown from ``prec`` on (``prec=inf`` marks an exact
Laurent polynomial).  Coefficients may be Fractions, sympy expressions or
``CoeffPolynomial`` values; all four arithmetic operations stay inside
the coefficient ring.

Series around infinity are handled by the consumers via ``t = 1/z``:
``f(z) = z + sum_{m<=-1} f_m z^{m+1}`` becomes ``t^{-1} + sum f_m t^{-m-1}``,
an ascending series in ``t``, and ``d/dz = -t^2 d/dt``.
"""

from __future__ import annotations

from fractions import Fraction
from math import inf
from typing import Dict

from . import scalars
from .coeffpoly import CoeffPolynomial

_ONE = Fraction(1)


def _iszero(c) -> bool:
    if isinstance(c, CoeffPolynomial):
        return c.is_zero()
    return scalars.iszero(c)


def _invert(c):
    if isinstance(c, CoeffPolynomial):
        if c.variables():
            raise ZeroDivisionError("cannot invert a non-constant polynomial coefficient")
        return scalars.invert(c.constant_term())
    return scalars.invert(c)


class LaurentSeries:
    __slots__ = ("coeffs", "prec")

    def __init__(self, coeffs: Dict[int, object] | None = None, prec=inf):
        self.prec = prec
        self.coeffs = {}
        if coeffs:
            for e, c in coeffs.items():
                if e < prec and not _iszero(c):
                    self.coeffs[e] = c

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, prec=inf) -> "LaurentSeries":
        return cls({}, prec)

    @classmethod
    def monomial(cls, exp: int, c=_ONE, prec=inf) -> "LaurentSeries":
        return cls({exp: c}, prec)

    # -- inspection -----------------------------------------------------
    def order(self):
        return min(self.coeffs) if self.coeffs else self.prec

    def coeff(self, exp: int):
        if exp >= self.prec:
            raise ValueError(f"coefficient t^{exp} lies beyond precision O(t^{self.prec})")
        return self.coeffs.get(exp, Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self) -> str:
        bits = [f"({c})t^{e}" for e, c in sorted(self.coeffs.items())]
        tail = f" + O(t^{self.prec})" if self.prec is not inf else ""
        return (" + ".join(bits) or "0") + tail

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        prec = min(self.prec, other.prec)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, Fraction(0)) + c
            if _iszero(s):
                out.pop(e, None)
            else:
                out[e] = s
        return LaurentSeries(out, prec)

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries({e: -c for e, c in self.coeffs.items()}, self.prec)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def __mul__(self, other) -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            return self.scale(other)
        prec = min(
            self.prec + other.order() if self.prec is not inf else inf,
            other.prec + self.order() if other.prec is not inf else inf,
        )
        out: Dict[int, object] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                if e >= prec:
                    continue
                s = out.get(e, Fraction(0)) + c1 * c2
                if _iszero(s):
                    out.pop(e, None)
                else:
                    out[e] = s
        return LaurentSeries(out, prec)

    def scale(self, c) -> "LaurentSeries":
        if _iszero(c):
            return LaurentSeries.zero(self.prec)
        return LaurentSeries({e: c * v for e, v in self.coeffs.items()}, self.prec)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by t^k."""
        return LaurentSeries(
            {e + k: c for e, c in self.coeffs.items()},
            self.prec + k if self.prec is not inf else inf,
        )

    def truncate(self, prec) -> "LaurentSeries":
        return LaurentSeries(self.coeffs, min(self.prec, prec))

    def reciprocal(self, prec=None) -> "LaurentSeries":
        """1/self to precision O(t^prec) (default: all the precision available)."""
        if self.is_zero():
            raise ZeroDivisionError("reciprocal of zero series")
        n0 = self.order()
        if prec is None:
            if self.prec is inf:
                raise ValueError("reciprocal of an exact polynomial needs an explicit precision")
            prec = self.prec - 2 * n0
        unit_prec = prec + n0
        c0inv = _invert(self.coeffs[n0])
        # self = c0 t^n0 (1 + v) with ord(v) >= 1
        v = (self.shift(-n0).scale(c0inv) - LaurentSeries.monomial(0)).truncate(unit_prec)
        acc = LaurentSeries.monomial(0, prec=unit_prec)
        term = acc
        while not v.is_zero():
            term = (term * (-v)).truncate(unit_prec)
            if term.is_zero():
                break
            acc = acc + term
        return acc.scale(c0inv).shift(-n0)

    def __pow__(self, k: int) -> "LaurentSeries":
        if k == 0:
            return LaurentSeries.monomial(0, prec=self.prec)
        base = self if k > 0 else self.reciprocal()
        k = abs(k)
        out = None
        while k:
            if k & 1:
                out = base if out is None else out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def derivative(self) -> "LaurentSeries":
        """d/dt in the local coordinate."""
        return LaurentSeries(
            {e - 1: c * e for e, c in self.coeffs.items() if e != 0},
            self.prec - 1 if self.prec is not inf else inf,
        )

    def compose(self, g: "LaurentSeries") -> "LaurentSeries":
        """self(g(t)) for self with nonnegative exponents and ord(g) >= 1."""
        if self.coeffs and min(self.coeffs) < 0:
            raise ValueError("composition needs a power series on the outside")
        if g.order() < 1:
            raise ValueError("composition needs ord(g) >= 1")
        prec = min(g.prec, self.prec * g.order() if self.prec is not inf else inf)
        out = LaurentSeries.zero(prec)
        if not self.coeffs:
            return out
        gpow = LaurentSeries.monomial(0, prec=prec)
        for e in range(max(self.coeffs) + 1):
            if e > 0:
                gpow = (gpow * g).truncate(prec)
            if e in self.coeffs:
                out = out + gpow.scale(self.coeffs[e])
        return out


def schwarzian(f: LaurentSeries) -> LaurentSeries:
    """Schwarzian derivative in the local coordinate of f."""
    fp = f.derivative()
    u = f.derivative().derivative() * fp.reciprocal()
    return u.derivative() - (u * u).scale(Fraction(1, 2))

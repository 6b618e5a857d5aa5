"""Kac weights and central charge, generic over the scalar type.

The formulas are plain rational functions of kappa, so they evaluate
exactly on Fractions and sympy symbols and in floating point on floats.
"""

from __future__ import annotations

from fractions import Fraction


def central_charge(kappa):
    """c = (6-kappa)(3kappa-8)/(2kappa)."""
    return (6 - kappa) * (3 * kappa - 8) / (2 * kappa)


def central_charge_alt(kappa):
    """The equivalent form c = 1 - 6(kappa-4)^2/(4kappa)."""
    if isinstance(kappa, Fraction) or isinstance(kappa, int):
        return 1 - Fraction(6) * (kappa - 4) ** 2 / (4 * kappa)
    return 1 - 6 * (kappa - 4) ** 2 / (4 * kappa)


def h_rs(kappa, r, s):
    """Kac weight h_{r;s} = [(r kappa - 4s)^2 - (kappa-4)^2] / (16 kappa).

    r and s may be any rationals; the half-integer entries h_{0;1/2} and
    h_{0;1} appear throughout the bulk formulas.
    """
    if isinstance(kappa, (Fraction, int)):
        r, s = Fraction(r), Fraction(s)
    return ((r * kappa - 4 * s) ** 2 - (kappa - 4) ** 2) / (16 * kappa)


def h_12(kappa):
    """Boundary weight h_{1;2} = (6-kappa)/(2kappa) carried by the SLE tip state."""
    return (6 - kappa) / (2 * kappa)


def h_13(kappa):
    """h_{1;3} = (8-kappa)/kappa, the boundary zig-zag exponent."""
    return (8 - kappa) / kappa

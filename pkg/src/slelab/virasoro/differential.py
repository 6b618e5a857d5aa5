"""Virasoro generators as differential operators on Loewner coefficients.

A germ f(z) = z + sum_{m<=-1} f_m z^{m+1} normalized at infinity is a point
of the coefficient space C[f_{-1}, f_{-2}, ...].  Pairing Verma-module
states against G_f (resp. G_f^{-1}) turns L_n into a first-order operator
R_n (resp. S_n) on that polynomial ring:

* S_n, n >= 1, is the derivation induced by the target-space variation
  delta f = f^{1-n} (already normalized at infinity for n >= 1);
* R_n, n >= 1, is the derivation induced by the source-space variation
  delta f = -z^{1-n} f'(z);
* R_n, n <= 0, needs the variation repaired by a polynomial y(f(z)) that
  restores the normalization, and picks up the exact scalar c*zeta + h*y0,
  where zeta = (1/12) [z^{-1}] (z^{1-n} Sf(z)) comes from the partition
  function factor and y0 is the linear-in-w coefficient of the repair.

Everything here is exact.  Series live in t = 1/z, so [z^j] F = [t^{-j}] F
and d/dz = -t^2 d/dt.  The variable cutoff M must be at least
(largest polynomial grade handled) + (largest lowering) for results to be
faithful; operators check this on every application.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict

from . import scalars
from .coeffpoly import CoeffPolynomial
from .series import LaurentSeries, schwarzian
from .verma import partitions
from .weights import central_charge, h_12

_ONE = Fraction(1)


def universal_inf_map(cutoff: int) -> LaurentSeries:
    """f(z) = z + sum_{m=-1..-cutoff} f_m z^{m+1} as a series in t = 1/z.

    Exact polynomial in the projected ring where f_m = 0 beyond the cutoff;
    grade-faithful for all outputs of grade <= cutoff.
    """
    coeffs: Dict[int, object] = {-1: _ONE}
    for m in range(-1, -cutoff - 1, -1):
        coeffs[-m - 1] = CoeffPolynomial.var(m)
    return LaurentSeries(coeffs)


def dz(series: LaurentSeries) -> LaurentSeries:
    """d/dz of a series in t = 1/z: -t^2 d/dt."""
    return -(series.derivative().shift(2))


class FirstOrderOperator:
    """scalar + sum_m (variation)_m d/df_m acting on coefficient polynomials."""

    def __init__(self, name: str, cutoff: int, variation: Dict[int, CoeffPolynomial],
                 scalar: CoeffPolynomial | None = None, max_input_grade: int | None = None):
        self.name = name
        self.cutoff = cutoff
        self.variation = {m: p for m, p in variation.items() if not p.is_zero()}
        self.scalar = scalar if scalar is not None else CoeffPolynomial.zero()
        self.max_input_grade = cutoff if max_input_grade is None else max_input_grade

    def __call__(self, poly: CoeffPolynomial) -> CoeffPolynomial:
        if not isinstance(poly, CoeffPolynomial):
            poly = CoeffPolynomial.const(poly)
        bad = [m for m in poly.variables() if m > -1 or m < -self.cutoff]
        if bad:
            raise ValueError(f"{self.name}: polynomial uses variables outside the cutoff: {bad}")
        top = max(poly.grade_parts(), default=0)
        if top > self.max_input_grade:
            raise ValueError(
                f"{self.name}: input grade {top} would reference coefficients "
                f"beyond the variable cutoff {self.cutoff}"
            )
        out = self.scalar * poly
        for m, coeff in self.variation.items():
            d = poly.diff(m)
            if not d.is_zero():
                out = out + coeff * d
        return out

    def __repr__(self) -> str:
        return f"<{self.name} on f_-1..f_{-self.cutoff}>"


def _extract_variation(delta: LaurentSeries, cutoff: int) -> Dict[int, CoeffPolynomial]:
    """Coefficients (delta f)_m = [z^{m+1}] delta for m = -1..-cutoff."""
    out: Dict[int, CoeffPolynomial] = {}
    for m in range(-1, -cutoff - 1, -1):
        c = delta.coeffs.get(-m - 1, Fraction(0))
        out[m] = c if isinstance(c, CoeffPolynomial) else CoeffPolynomial.const(c)
    return out


def s_operator(n: int, cutoff: int) -> FirstOrderOperator:
    """S_n for n >= 1: the derivation with delta f = f^{1-n}."""
    if n < 1:
        raise ValueError("s_operator is defined for positive modes")
    f = universal_inf_map(cutoff)
    if n == 1:
        delta = LaurentSeries.monomial(0, _ONE)  # f^0 = 1
    else:
        inv = f.reciprocal(prec=cutoff + n)
        delta = inv ** (n - 1)
    if delta.coeffs and min(delta.coeffs) < -1:
        raise AssertionError("variation not normalized at infinity")
    return FirstOrderOperator(f"S_{n}", cutoff, _extract_variation(delta, cutoff))


def r_operator(n: int, c, h, cutoff: int) -> FirstOrderOperator:
    """R_n: derivation for n >= 1; derivation plus scalar c*zeta + h*y0 for n <= 0."""
    c = scalars.as_exact(c)
    h = scalars.as_exact(h)
    f = universal_inf_map(cutoff)
    base = -(LaurentSeries.monomial(n - 1) * dz(f))  # -z^{1-n} f'(z)
    if n >= 1:
        return FirstOrderOperator(f"R_{n}", cutoff, _extract_variation(base, cutoff))

    # repair the normalization: y(w) = sum_{k=0..-n} y_k w^{k+1} cancels z^1..z^{1-n}
    fpow = {k: f ** (k + 1) for k in range(0, -n + 1)}
    resid = base
    y: Dict[int, object] = {}
    for j in range(1 - n, 0, -1):  # z^j terms, top down; f^{j} is monic in z^{j}
        yk = -resid.coeffs.get(-j, Fraction(0))
        y[j - 1] = yk
        resid = resid + fpow[j - 1].scale(yk)
    if any(e <= -2 for e in resid.coeffs):
        raise AssertionError("repair polynomial failed to normalize the variation")

    # Schwarzian wrt z from the one wrt t = 1/z: inversion is Moebius, so
    # S_z f = (dt/dz)^2 S_t f = t^4 S_t f.
    sf = schwarzian(f.truncate(cutoff + 4)).shift(4)
    e = 2 - n  # [z^{-1}] of z^{1-n} Sf(z)  <->  [t^{2-n}] of Sf in t
    zeta = sf.coeff(e) if e < sf.prec else Fraction(0)
    zeta_poly = zeta if isinstance(zeta, CoeffPolynomial) else CoeffPolynomial.const(zeta)
    y0 = y.get(0, Fraction(0))
    y0_poly = y0 if isinstance(y0, CoeffPolynomial) else CoeffPolynomial.const(y0)
    scalar = zeta_poly * c * Fraction(1, 12) + y0_poly * h
    return FirstOrderOperator(
        f"R_{n}", cutoff, _extract_variation(resid, cutoff), scalar,
        max_input_grade=cutoff + n,
    )


def loewner_annihilator(kappa, cutoff: int):
    """The generator 2 S_2 + (kappa/2) S_1^2 that kills polynomial martingales."""
    kappa = scalars.as_exact(kappa)
    s1 = s_operator(1, cutoff)
    s2 = s_operator(2, cutoff)
    half = kappa / 2 if scalars.is_symbolic(kappa) else Fraction(kappa, 2)

    def apply(poly: CoeffPolynomial) -> CoeffPolynomial:
        return s2(poly) * 2 + s1(s1(poly)) * half

    return apply


def martingale_subspace_check(kappa, grade: int) -> dict:
    """Generate the martingale submodule through the given grade and verify
    that 2 S_2 + (kappa/2) S_1^2 annihilates it exactly.

    The spanning set is built by acting with lowering operators R_{-m}
    (at c = c_kappa, h = h_{1;2}) on the constant polynomial 1, one word
    per partition of each grade.
    """
    kappa = scalars.as_exact(kappa)
    cutoff = grade + 2
    c = central_charge(kappa)
    h = h_12(kappa)
    lowering = {m: r_operator(-m, c, h, cutoff) for m in range(1, grade + 1)}
    annihilator = loewner_annihilator(kappa, cutoff)

    results = []
    all_pass = True
    for k in range(0, grade + 1):
        for lam in partitions(k):
            poly = CoeffPolynomial.const(1)
            for part in reversed(lam):
                poly = lowering[part](poly)
            image = annihilator(poly)
            ok = image.is_zero()
            all_pass = all_pass and ok
            results.append({
                "grade": k,
                "word": [-p for p in lam],
                "polynomial": repr(poly),
                "annihilated": ok,
            })

    negative_control = annihilator(CoeffPolynomial.var(-2))
    return {
        "kappa": str(kappa),
        "grade": grade,
        "states": results,
        "negative_control_f2": repr(negative_control),
        "negative_control_nonzero": not negative_control.is_zero(),
        "passed": all_pass and not negative_control.is_zero(),
    }

"""Graded operator expansions G_f implementing conformal maps on Verma modules.

For a germ f(z) = z + sum_{m>=1} f_m z^{m+1} fixing the origin, the
operator G_f solves the flat-connection system

    dG_f/df_m = -G_f A_m(f),
    A_m(f) = sum_{n>=m} L_n [w^{-m-2}] f'(w)/f(w)^{n+2},

with G_{id} = 1.  Solved formally grade by grade (grade of f_m is m), the
Euler identity k G_k = sum_m m f_m dG_k/df_m turns the system into the
recursion

    G_k = -(1/k) sum_{m+g+j=k, m>=1} m f_m G_j L_{m+g} a_{m,m+g}(f),

where a_{m,n} is the homogeneous grade-(n-m) extraction above.  Every
coefficient is an exact polynomial in the f_m, and the whole object is a
matrix on the level-truncated module with polynomial entries.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Tuple

from . import scalars
from .coeffpoly import CoeffPolynomial
from .series import LaurentSeries, schwarzian
from .verma import VermaModule

Matrix = Dict[Tuple[int, int], object]


def _ez(x) -> bool:
    if isinstance(x, CoeffPolynomial):
        return x.is_zero()
    return scalars.iszero(x)


def mat_identity(dim: int) -> Matrix:
    return {(i, i): Fraction(1) for i in range(dim)}


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    out = dict(a)
    for key, v in b.items():
        s = out.get(key, Fraction(0)) + v
        if _ez(s):
            out.pop(key, None)
        else:
            out[key] = s
    return out


def mat_scale(a: Matrix, factor) -> Matrix:
    if _ez(factor):
        return {}
    return {k: factor * v for k, v in a.items()}


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    rows_b: Dict[int, list] = {}
    for (j, k), v in b.items():
        rows_b.setdefault(j, []).append((k, v))
    out: Matrix = {}
    for (i, j), u in a.items():
        for k, v in rows_b.get(j, ()):
            key = (i, k)
            s = out.get(key, Fraction(0)) + u * v
            if _ez(s):
                out.pop(key, None)
            else:
                out[key] = s
    return out


def mat_equal(a: Matrix, b: Matrix) -> bool:
    keys = set(a) | set(b)
    return all(_ez(a.get(k, Fraction(0)) - b.get(k, Fraction(0))) for k in keys)


class GradedOperatorExpansion:
    """A grade-truncated sum of matrices with polynomial entries."""

    def __init__(self, module: VermaModule, grades: Dict[int, Matrix], kmax: int):
        self.module = module
        self.kmax = kmax
        self.grades = {k: m for k, m in grades.items() if m and k <= kmax}

    @classmethod
    def identity(cls, module: VermaModule, kmax: int) -> "GradedOperatorExpansion":
        return cls(module, {0: mat_identity(module.dim)}, kmax)

    def grade(self, k: int) -> Matrix:
        return self.grades.get(k, {})

    def __mul__(self, other: "GradedOperatorExpansion") -> "GradedOperatorExpansion":
        kmax = min(self.kmax, other.kmax)
        out: Dict[int, Matrix] = {}
        for ka, ma in self.grades.items():
            for kb, mb in other.grades.items():
                k = ka + kb
                if k > kmax:
                    continue
                prod = mat_mul(ma, mb)
                out[k] = mat_add(out[k], prod) if k in out else prod
        return GradedOperatorExpansion(self.module, out, kmax)

    def inverse(self) -> "GradedOperatorExpansion":
        """Grade-by-grade inverse (grade-0 part must be the identity)."""
        if not mat_equal(self.grade(0), mat_identity(self.module.dim)):
            raise ValueError("inverse requires identity at grade 0")
        inv: Dict[int, Matrix] = {0: mat_identity(self.module.dim)}
        for k in range(1, self.kmax + 1):
            acc: Matrix = {}
            for b in range(1, k + 1):
                gb = self.grade(b)
                if gb:
                    acc = mat_add(acc, mat_mul(inv.get(k - b, {}), gb))
            inv[k] = mat_scale(acc, Fraction(-1))
        return GradedOperatorExpansion(self.module, inv, self.kmax)

    def equal(self, other: "GradedOperatorExpansion") -> bool:
        ks = set(self.grades) | set(other.grades)
        return all(mat_equal(self.grade(k), other.grade(k)) for k in ks)

    def substitute(self, values: Dict[int, object]) -> Dict[int, Matrix]:
        """Evaluate the polynomial entries at numeric coefficient values."""
        out: Dict[int, Matrix] = {}
        for k, mat in self.grades.items():
            num: Matrix = {}
            for key, entry in mat.items():
                v = entry.subs(values) if isinstance(entry, CoeffPolynomial) else entry
                if not scalars.iszero(v):
                    num[key] = v
            out[k] = num
        return out


def connection_coefficient(f: LaurentSeries, m: int, n: int):
    """a_{m,n} = [w^{-m-2}] f'(w)/f(w)^{n+2} (the Lagrange-type extraction)."""
    series = f.derivative() * (f ** (-(n + 2)))
    return series.coeff(-m - 2)


def universal_map(kmax: int) -> LaurentSeries:
    """f(z) = z + sum_{m=1..kmax} f_m z^{m+1} with formal polynomial coefficients."""
    coeffs: Dict[int, object] = {1: Fraction(1)}
    for m in range(1, kmax + 1):
        coeffs[m + 1] = CoeffPolynomial.var(m)
    return LaurentSeries(coeffs, prec=kmax + 2)


def gf_expand(module: VermaModule, kmax: int) -> GradedOperatorExpansion:
    """The universal G_f through total grade kmax on the given module.

    Entries are exact polynomials in the formal coefficients f_1..f_kmax;
    numeric maps are handled by substituting into the result.
    """
    if kmax > module.max_level:
        raise ValueError("grade beyond the module truncation is meaningless")
    f = universal_map(kmax)
    lmat = {n: module.mode_matrix(n) for n in range(1, kmax + 1)}
    fvar = {m: CoeffPolynomial.var(m) for m in range(1, kmax + 1)}
    grades: Dict[int, Matrix] = {0: mat_identity(module.dim)}
    for k in range(1, kmax + 1):
        acc: Matrix = {}
        for m in range(1, k + 1):
            for g in range(0, k - m + 1):
                j = k - m - g
                a = connection_coefficient(f, m, m + g)
                if _ez(a):
                    continue
                term = mat_mul(grades.get(j, {}), lmat[m + g])
                term = mat_scale(term, fvar[m] * a * m)
                acc = mat_add(acc, term)
        grades[k] = mat_scale(acc, Fraction(-1, k))
    return GradedOperatorExpansion(module, grades, kmax)


def gf_conjugate_mode(module: VermaModule, m: int, kmax: int) -> GradedOperatorExpansion:
    """G_f^{-1} L_m G_f as a graded expansion (universal in the f_m), m >= 0."""
    if m < 0:
        raise ValueError("conjugation is implemented for raising/diagonal modes m >= 0")
    g = gf_expand(module, kmax)
    lm = GradedOperatorExpansion(module, {0: module.mode_matrix(m)}, kmax)
    return g.inverse() * lm * g


def gf_conjugate_direct(module: VermaModule, m: int, kmax: int) -> GradedOperatorExpansion:
    """The same conjugation from the series-coefficient formula.

    G_f^{-1} L_m G_f = (c/12) [w^{-m-2}] Sf(w) + sum_{n>=m} L_n [w^{-m-2}] f'^2/f^{n+2}.
    """
    if m < 0:
        raise ValueError("conjugation is implemented for raising/diagonal modes m >= 0")
    f = universal_map(kmax)
    grades: Dict[int, Matrix] = {}
    ident = mat_identity(module.dim)
    sf = schwarzian(f.truncate(kmax + 2))
    central = sf.coeff(-m - 2) if -m - 2 < sf.prec else Fraction(0)
    if not _ez(central):
        central_poly = central * CoeffPolynomial.const(1)
        for grade, part in central_poly.grade_parts().items():
            coeff = part * module.c * Fraction(1, 12)
            grades[grade] = mat_add(grades.get(grade, {}), mat_scale(ident, coeff))
    fp2 = f.derivative() * f.derivative()
    for n in range(m, m + kmax + 1):
        series = fp2 * (f ** (-(n + 2)))
        e = -m - 2
        if e >= series.prec:
            continue
        b = series.coeff(e)
        if _ez(b):
            continue
        lmat = module.mode_matrix(n)
        poly = b if isinstance(b, CoeffPolynomial) else CoeffPolynomial.const(b)
        for grade, part in poly.grade_parts().items():
            if grade > kmax:
                continue
            grades[grade] = mat_add(grades.get(grade, {}), mat_scale(lmat, part))
    return GradedOperatorExpansion(module, grades, kmax)


def conjugation_report(module: VermaModule, m: int, kmax: int) -> dict:
    lhs = gf_conjugate_mode(module, m, kmax)
    rhs = gf_conjugate_direct(module, m, kmax)
    per_grade = {k: mat_equal(lhs.grade(k), rhs.grade(k)) for k in range(kmax + 1)}
    return {
        "mode": m,
        "grade_agreement": per_grade,
        "passed": all(per_grade.values()),
    }


def compose_coefficients(outer: Dict[int, object], inner: Dict[int, object], kmax: int) -> Dict[int, object]:
    """Coefficients of g(f(z)) for two numeric maps fixing the origin."""

    def to_series(coeffs):
        d = {1: Fraction(1)}
        for mm, v in coeffs.items():
            d[mm + 1] = v if isinstance(v, CoeffPolynomial) else scalars.as_exact(v)
        return LaurentSeries(d, prec=kmax + 2)

    comp = to_series(outer).compose(to_series(inner))
    return {mm: comp.coeff(mm + 1) for mm in range(1, kmax + 1)}

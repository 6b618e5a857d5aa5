"""Closed-form and quadrature-based CFT quantities for chordal SLE.

Weights and the central charge are rational functions of kappa; the
swallowing and crossing probabilities come from the level-two null vector:
the two-point function of weight-zero boundary fields satisfies a
second-order hypergeometric-class ODE whose first integral is explicit,
leaving one integration that is done by adaptive quadrature with the
algebraic endpoint singularities handled exactly (QUADPACK QAWS / an
unfolding substitution).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from scipy import integrate

from .errors import DomainError
from .virasoro import weights as _w


@dataclass(frozen=True)
class CFTParams:
    """kappa with its derived central charge; h(r, s) gives Kac weights."""

    kappa: float
    c: float

    def h(self, r, s) -> float:
        return float(_w.h_rs(self.kappa, r, s))

    @property
    def h12(self) -> float:
        return float(_w.h_12(self.kappa))

    @property
    def h13(self) -> float:
        return float(_w.h_13(self.kappa))


def cft_params(kappa: float) -> CFTParams:
    if kappa <= 0:
        raise DomainError("kappa must be positive")
    return CFTParams(kappa=float(kappa), c=float(_w.central_charge(kappa)))


def fractal_dimension(kappa: float) -> float:
    """d = 1 + kappa/8 for kappa <= 8, saturating at 2 (space filling)."""
    if kappa <= 0:
        raise DomainError("kappa must be positive")
    return min(2.0, 1.0 + kappa / 8.0)


def same_swallow_probability(x: float, big_x: float, kappa: float) -> float:
    """P[tau_x = tau_X] for 0 < x < X and 4 < kappa < 8.

    With s = x/X,

        P = s^{(k-4)/k} Gamma(4/k) / (Gamma((k-4)/k) Gamma((8-k)/k))
            * int_0^1 sigma^{-4/k} (1 - s sigma)^{2(4-k)/k} d sigma.

    The endpoint singularity sigma^{-4/k} is removed exactly by the
    substitution sigma = u^{k/(k-4)}, after which the integrand is bounded
    and adaptive quadrature reaches 1e-10 absolute error.
    """
    if not (4.0 < kappa < 8.0):
        raise DomainError("same-swallow probability is defined for 4 < kappa < 8")
    if not (0.0 < x < big_x):
        raise DomainError("need 0 < x < X")
    s = x / big_x
    a = kappa / (kappa - 4.0)
    expo = 2.0 * (4.0 - kappa) / kappa

    def integrand(u: float) -> float:
        return a * (1.0 - s * u**a) ** expo

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        val, err = integrate.quad(integrand, 0.0, 1.0, epsabs=1e-12, epsrel=1e-12, limit=200)
    if err > 1e-8:
        raise ArithmeticError(f"quadrature error estimate {err:.2e} exceeds tolerance")
    pref = (
        s ** ((kappa - 4.0) / kappa)
        * math.gamma(4.0 / kappa)
        / (math.gamma((kappa - 4.0) / kappa) * math.gamma((8.0 - kappa) / kappa))
    )
    return pref * val


def touch_probability(x: float, big_x: float, kappa: float) -> float:
    """P_1([x, X]) = P[tau_x < tau_X] = 1 - P[tau_x = tau_X]."""
    return 1.0 - same_swallow_probability(x, big_x, kappa)


def cardy_probability(a: float, b: float, kappa: float) -> float:
    """Generalized Cardy crossing probability P[tau_a < tau_b], a < 0 < b.

    The null-vector ODE for the two-point function of weight-zero
    boundary fields, written in the cross-ratio u = -a/(b-a), reads

        (kappa/2) C'' + 2 (1/u - 1/(1-u)) C' = 0 ,

    so C' = const * u^{-4/kappa} (1-u)^{-4/kappa} and the normalized ratio
    with boundary data C(0+), C(1-) is the ratio of incomplete integrals.
    Both endpoint singularities are algebraic and handled by QAWS weights.
    Depends on a and b only through a/b.
    """
    if not (4.0 < kappa < 8.0):
        raise DomainError("Cardy probability is defined for 4 < kappa < 8")
    if not (a < 0.0 < b):
        raise DomainError("need a < 0 < b")
    u0 = -a / (b - a)
    alpha = -4.0 / kappa  # exponent at both endpoints, in (-1, -1/2)

    def one(v: float) -> float:
        return 1.0

    denom, _ = integrate.quad(one, 0.0, 1.0, weight="alg", wvar=(alpha, alpha), epsabs=1e-12)
    # numerator int_{u0}^1 v^alpha (1-v)^alpha dv: singular only at v = 1
    num, _ = integrate.quad(
        lambda v: v**alpha, u0, 1.0, weight="alg", wvar=(0.0, alpha), epsabs=1e-12
    )
    return num / denom


@dataclass(frozen=True)
class SemiDisk:
    """Half-disk hull |z - x| <= r on the real line, bounded away from 0."""

    x: float
    r: float

    def __post_init__(self):
        if self.x == 0:
            raise DomainError("hull must be centered away from the origin")
        if not (0.0 < self.r < abs(self.x)):
            raise DomainError("need 0 < r < |x| so the hull avoids the origin")

    def map_derivative_at_origin(self) -> float:
        """|f_A'(0)| for f_A(z) = z + r^2/(z-x) + r^2/x (Joukowski slit removal)."""
        return 1.0 - self.r**2 / self.x**2


@dataclass(frozen=True)
class VerticalSlit:
    """Vertical segment from x to x + i*h on the boundary."""

    x: float
    h: float

    def __post_init__(self):
        if self.x == 0:
            raise DomainError("hull must be based away from the origin")
        if self.h <= 0:
            raise DomainError("slit height must be positive")

    def map_derivative_at_origin(self) -> float:
        """|f_A'(0)| for f_A(z) = sqrt((z-x)^2 + h^2) - sqrt(x^2 + h^2)."""
        return abs(self.x) / math.hypot(self.x, self.h)


HullSpec = SemiDisk | VerticalSlit


def restriction_probability(hull: HullSpec) -> float:
    """P[trace avoids the hull] at kappa = 8/3: f_A'(0)^{5/8}.

    5/8 is the weight h_{1;2} at kappa = 8/3, where the restriction
    property holds and hull and trace coincide.
    """
    return hull.map_derivative_at_origin() ** 0.625


def one_point_function(z0: complex, kappa: float) -> float:
    """<Phi_{0;1}(z0)> = |2 Im z0|^{-2 h_{0;1}} (sin(alpha0/2))^{kappa/8 - 1}
    with z0/conj(z0) = exp(i alpha0), alpha0 in (0, 2 pi)."""
    z0 = complex(z0)
    if z0.imag <= 0:
        raise DomainError("z0 must lie in the open upper half plane")
    if kappa >= 8:
        raise DomainError("one-point function needs kappa < 8")
    two_h01 = (8.0 - kappa) / 8.0
    alpha0 = 2.0 * math.atan2(z0.imag, z0.real) % (2.0 * math.pi)
    return (2.0 * z0.imag) ** (-two_h01) * math.sin(alpha0 / 2.0) ** (kappa / 8.0 - 1.0)

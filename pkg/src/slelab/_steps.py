"""Elementary per-step maps for the four Loewner geometries.

Over one grid step the driver is frozen at its left value, which turns the
evolution into (recentring at the driver position) o (drift flow) o
(recentring back).  For chordal, radial and dipolar the drift flow has a
closed form, so the substep is exact and unconditionally stable at the
driving singularity:

    chordal (H):  S_d(z) = sqrt(z^2 + 4d)                 around xi
    radial  (H):  1 + S_d^2 = e^{4d} (1 + z^2)            around tan(xi)
    dipolar (H):  S_d(z) = sqrt(e^{-4d} z^2 + 1 - e^{-4d}) around tanh(xi)

Annular has no closed drift flow; its right-hand side (the uniformizing
ODE with modulus p - t) is integrated by adaptive RK4 elsewhere.

All functions are numpy-vectorized and work on scalars or arrays; complex
inputs use the upper-half-plane branch of the square root.
"""

from __future__ import annotations

import numpy as np


def sqrt_upper(w):
    """Branch of sqrt with nonnegative imaginary part."""
    s = np.sqrt(np.asarray(w, dtype=complex))
    return np.where(s.imag < 0, -s, s)


# -- chordal ------------------------------------------------------------

def chordal_forward(g, dg, xi, dt):
    """One exact slit substep around xi; returns (g, dg)."""
    u = g - xi
    s = sqrt_upper(u * u + 4.0 * dt)
    s = _match_real_sign(s, u)
    return xi + s, dg * _safe_ratio(u, s)


def chordal_backward(w, xi, dt):
    """Inverse substep (for trace extraction)."""
    u = w - xi
    return xi + sqrt_upper(u * u - 4.0 * dt)


# -- radial (upper half plane chart, fixed point i) ----------------------

def _rot(z, c, s):
    """Moebius rotation fixing +-i: tan(arctan z + a) with c=cos a, s=sin a."""
    return (z * c + s) / (c - z * s)


def _rot_deriv(z, c, s):
    return 1.0 / (c - z * s) ** 2


def radial_forward(g, dg, xi, dt):
    c, s = np.cos(xi), np.sin(xi)
    u = _rot(g, c, -s)
    du = _rot_deriv(g, c, -s)
    e = np.exp(4.0 * dt)
    v = sqrt_upper(e * (1.0 + u * u) - 1.0)
    v = _match_real_sign(v, u)
    dv = e * _safe_ratio(u, v)
    return _rot(v, c, s), dg * du * dv * _rot_deriv(v, c, s)


def radial_backward(w, xi, dt):
    c, s = np.cos(xi), np.sin(xi)
    u = _rot(w, c, -s)
    e = np.exp(-4.0 * dt)
    v = sqrt_upper(e * (1.0 + u * u) - 1.0)
    v = _match_real_sign(v, u)
    return _rot(v, c, s)


# -- dipolar (upper half plane chart, fixed points +-1) -------------------

def _dip(z, T):
    """Moebius tanh(artanh z + b) with T = tanh b; fixes +-1."""
    return (z + T) / (1.0 + z * T)


def _dip_deriv(z, T):
    return (1.0 - T * T) / (1.0 + z * T) ** 2


def dipolar_forward(g, dg, xi, dt):
    T = np.tanh(xi)
    u = _dip(g, -T)
    du = _dip_deriv(g, -T)
    e = np.exp(-4.0 * dt)
    v = sqrt_upper(e * u * u + 1.0 - e)
    v = _match_real_sign(v, u)
    dv = e * _safe_ratio(u, v)
    return _dip(v, T), dg * du * dv * _dip_deriv(v, T)


def dipolar_backward(w, xi, dt):
    T = np.tanh(xi)
    u = _dip(w, -T)
    e = np.exp(4.0 * dt)
    v = sqrt_upper(e * (u * u - 1.0) + 1.0)
    v = _match_real_sign(v, u)
    return _dip(v, T)


def _safe_ratio(u, s):
    """u/s with the swallowed-point limit 0/0 treated as 0."""
    with np.errstate(divide="ignore", invalid="ignore"):
        r = np.where(s == 0, 0.0, u / np.where(s == 0, 1.0, s))
    return r


def _match_real_sign(v, u):
    """Keep real boundary points on their side of the singularity."""
    flip = (np.abs(v.imag) == 0) & (np.abs(np.asarray(u).imag) == 0) & (u.real * v.real < 0)
    return np.where(flip, -v, v)


# -- annular (disk chart, modulus p; terminal time t_c = p) ----------------

def annular_rhs(g, t, xi, p, trunc):
    """dg/dt for the annular uniformizing ODE at modulus p - t."""
    w = g * np.exp(1j * xi)
    out = g * (1.0 + w) / (1.0 - w)
    for m in range(1, trunc + 1):
        big = np.exp(2.0 * m * (p - t))
        q = 1.0 / big
        out = out + 2.0 * g * w / (big - w) + 2.0 * g * q / (q - w)
    return out


def radial_rhs_disk(g, xi):
    """Radial Loewner ODE in the disk chart (the annular p -> infinity limit)."""
    w = g * np.exp(1j * xi)
    return g * (1.0 + w) / (1.0 - w)


def annular_rhs_pair(g, dg, t, xi, p, trunc):
    """(dg/dt, d(dg)/dt) for the annular ODE, derivative by linearization."""
    c = np.exp(1j * xi)
    w = g * c
    base = g * (1.0 + w) / (1.0 - w)
    dbase = (1.0 + w) / (1.0 - w) + 2.0 * w / (1.0 - w) ** 2
    tot, dtot = base, dbase
    for m in range(1, trunc + 1):
        big = np.exp(2.0 * m * (p - t))
        q = 1.0 / big
        tot = tot + 2.0 * g * w / (big - w) + 2.0 * g * q / (q - w)
        dtot = dtot + 2.0 * w * (2.0 * big - w) / (big - w) ** 2 + 2.0 * q * q / (q - w) ** 2
    return tot, dtot * dg

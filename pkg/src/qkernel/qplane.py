"""Numeric kernel-root branches, in the q-plane and at real t.

After the substitution t = q/(1+q^2) the kernel becomes a quadratic with
polynomial coefficients in q, and its two roots split as

    Y_{+-}(x; q) = x * (1 + q^2 - q*Q0(x) -+ sqrt(disc)) / (2q * x*Q1(x)),
    disc = (1 + q^2 - q*Q0(x))^2 - 4 q^2 * x*Q1(x),

with the principal square root; the plus branch (top sign) is the one
analytic at q = 0.  X branches swap Q for P.  All evaluation is mpmath
arbitrary precision; callers control the working precision.
"""

from __future__ import annotations

import mpmath as mp

from . import models as _m
from .models import ModelId


def _branch_pair(poly_top, poly_level, z, q):
    zq1 = _m.eval_poly(poly_top, z)
    q0 = _m.eval_poly(poly_level, z)
    lead = 1 + q * q - q * q0
    disc = lead * lead - 4 * q * q * zq1
    root = mp.sqrt(disc)
    den = 2 * q * zq1
    return z * (lead - root) / den, z * (lead + root) / den


def y_branches(model: ModelId, x, q):
    """(Y_+, Y_-) at numeric x, q; q = 0 and q = +-i are singular."""
    _m._check_q(q)
    return _branch_pair(_m.x_q1_coeffs(model), _m.q0_coeffs(model), x, q)


def x_branches(model: ModelId, y, q):
    """(X_+, X_-) at numeric y, q.  Equals y_branches for symmetric models."""
    _m._check_q(q)
    return _branch_pair(_m.y_p1_coeffs(model), _m.p0_coeffs(model), y, q)


def y_plus_q(model: ModelId, x, q):
    return y_branches(model, x, q)[0]


def x_plus_q(model: ModelId, y, q):
    return x_branches(model, y, q)[0]


def y_plus_t(model: ModelId, x, t):
    """Small kernel root at numeric x and real t, used on 0 < t <= 1/|S|."""
    xq1 = _m.eval_poly(_m.x_q1_coeffs(model), x)
    q0 = _m.eval_poly(_m.q0_coeffs(model), x)
    disc = (q0 * q0 - 4 * xq1) * t * t - 2 * q0 * t + 1
    return x * (1 - t * q0 - mp.sqrt(disc)) / (2 * t * xq1)


def x_plus_t(model: ModelId, y, t):
    """Small quadratic-in-x kernel root at numeric y and real t."""
    yp1 = _m.eval_poly(_m.y_p1_coeffs(model), y)
    p0 = _m.eval_poly(_m.p0_coeffs(model), y)
    disc = (p0 * p0 - 4 * yp1) * t * t - 2 * p0 * t + 1
    return y * (1 - t * p0 - mp.sqrt(disc)) / (2 * t * yp1)


def t_of_q(q):
    """The substitution t = q/(1+q^2); rejects q = +-i."""
    _m._check_q(q)
    return q / (1 + q * q)

"""The five singular quarter-plane step sets and their kernel coefficients.

Each model is a set of small steps (subset of {-1,0,1}^2) containing NW and
SE.  The walk inventory splits by step coordinate,

    sum over (i,j) of x^i y^j  =  x*P1(y) + P0(y) + P_{-1}(y)/x
                               =  y*Q1(x) + Q0(x) + Q_{-1}(x)/y,

which makes the kernel K(x,y) = xy - t*xy*inventory a quadratic in y (or in
x) with polynomial coefficients.  Everything here is generic over the
coefficient domain: arguments may be exact rationals, truncated power
series, or arbitrary-precision complex numbers, as long as they support
ring arithmetic with Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class ModelId(Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"

    @classmethod
    def from_string(cls, s):
        try:
            return cls[s.upper()]
        except KeyError:
            raise ValueError(f"unknown model {s!r}; expected one of A,B,C,D,E")


# Step sets, using compass names: NW=(-1,1), N=(0,1), NE=(1,1), E=(1,0), SE=(1,-1).
_STEPS = {
    ModelId.A: ((-1, 1), (1, 1), (1, -1)),
    ModelId.B: ((-1, 1), (0, 1), (1, 0), (1, -1)),
    ModelId.C: ((-1, 1), (0, 1), (1, 1), (1, 0), (1, -1)),
    ModelId.D: ((-1, 1), (0, 1), (1, -1)),
    ModelId.E: ((-1, 1), (0, 1), (1, 1), (1, -1)),
}

_SYMMETRIC = {ModelId.A, ModelId.B, ModelId.C}

ALL_MODELS = tuple(ModelId)
SYMMETRIC_MODELS = (ModelId.A, ModelId.B, ModelId.C)
ASYMMETRIC_MODELS = (ModelId.D, ModelId.E)


@dataclass(frozen=True)
class StepSet:
    model: ModelId
    steps: tuple

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)


@dataclass(frozen=True)
class InventoryCounts:
    """Step counts by coordinate: p_i = #steps with x-component i, q_j likewise in y."""

    p_minus1: int
    p_0: int
    p_1: int
    q_minus1: int
    q_0: int
    q_1: int


def step_set(model: ModelId) -> StepSet:
    return StepSet(model, _STEPS[model])


def is_symmetric(model: ModelId) -> bool:
    """Whether the step set is symmetric about the diagonal x = y."""
    return model in _SYMMETRIC


def inventory_counts(model: ModelId) -> InventoryCounts:
    steps = _STEPS[model]
    p = {-1: 0, 0: 0, 1: 0}
    q = {-1: 0, 0: 0, 1: 0}
    for i, j in steps:
        p[i] += 1
        q[j] += 1
    return InventoryCounts(p[-1], p[0], p[1], q[-1], q[0], q[1])


def q_poly_exponents(model: ModelId, j: int) -> tuple:
    """Exponents of Q_j(x) = sum of x^i over steps (i, j)."""
    return tuple(sorted(i for i, jj in _STEPS[model] if jj == j))


def p_poly_exponents(model: ModelId, i: int) -> tuple:
    """Exponents of P_i(y) = sum of y^j over steps (i, j)."""
    return tuple(sorted(j for ii, j in _STEPS[model] if ii == i))


def _poly_from_exponents(exponents, shift):
    """Dense ascending coefficient list of sum x^(e+shift); requires e+shift >= 0."""
    shifted = [e + shift for e in exponents]
    if not shifted:
        return [0]
    if min(shifted) < 0:
        raise ValueError("negative exponent after shift")
    coeffs = [0] * (max(shifted) + 1)
    for e in shifted:
        coeffs[e] += 1
    return coeffs


def eval_poly(coeffs, x):
    """Horner evaluation of an ascending integer coefficient list at x.

    Works for any x supporting * and + with ints (series, rationals, mpc).
    """
    acc = coeffs[-1]
    if not coeffs[:-1]:
        return acc * (x * 0 + 1) if not isinstance(acc, int) else acc
    for c in reversed(coeffs[:-1]):
        acc = acc * x + c
    return acc


def x_q1_coeffs(model: ModelId):
    """Coefficients of x*Q_1(x), a genuine polynomial since Q_1 has at worst x^-1."""
    return _poly_from_exponents(q_poly_exponents(model, 1), 1)


def x_q0_coeffs(model: ModelId):
    """Coefficients of x*Q_0(x)."""
    return _poly_from_exponents(q_poly_exponents(model, 0), 1)


def q0_coeffs(model: ModelId):
    """Coefficients of Q_0(x) itself (always a polynomial: Q_0 is 0 or x here)."""
    return _poly_from_exponents(q_poly_exponents(model, 0), 0)


def y_p1_coeffs(model: ModelId):
    """Coefficients of y*P_1(y)."""
    return _poly_from_exponents(p_poly_exponents(model, 1), 1)


def p0_coeffs(model: ModelId):
    """Coefficients of P_0(y)."""
    return _poly_from_exponents(p_poly_exponents(model, 0), 0)


def kernel_coeffs_t(model: ModelId, x, t):
    """Kernel quadratic-in-y coefficients (a2, a1, a0) in the t-variable.

    K(x, y) = a2*y^2 + a1*y + a0 with
        a2 = -x*t*Q1(x),  a1 = x*(1 - t*Q0(x)),  a0 = -x*t*Q_{-1}(x).

    x and t must live in a common ring (scalars, or truncated series with t
    the series variable).  Every singular model has Q_{-1}(x) = x, so a0 is
    always -t*x^2.
    """
    xq1 = eval_poly(x_q1_coeffs(model), x)
    xq0 = eval_poly(x_q0_coeffs(model), x)
    a2 = -(t * xq1)
    a1 = x - t * xq0
    a0 = -(t * (x * x))
    return a2, a1, a0


def x_kernel_coeffs_t(model: ModelId, y, t):
    """Kernel quadratic-in-x coefficients (b2, b1, b0) in the t-variable.

    b2 = -y*t*P1(y), b1 = y*(1 - t*P0(y)), b0 = -y*t*P_{-1}(y) = -t*y^2.
    For the diagonal-symmetric models this coincides with kernel_coeffs_t.
    """
    yp1 = eval_poly(y_p1_coeffs(model), y)
    yp0 = eval_poly(_poly_from_exponents(p_poly_exponents(model, 0), 1), y)
    b2 = -(t * yp1)
    b1 = y - t * yp0
    b0 = -(t * (y * y))
    return b2, b1, b0


def _check_q(q):
    q2 = q * q
    if q2 == -1:
        raise ValueError("q = +/-i is excluded (1 + q^2 = 0)")
    if q == 0:
        raise ValueError("q = 0 is excluded")
    return q2


def kernel_coeffs_q(model: ModelId, x, q):
    """Kernel coefficients after t = q/(1+q^2), cleared of the (1+q^2) denominator.

    (a2, a1, a0) = (1+q^2) * kernel_coeffs_t(model, x, q/(1+q^2)); e.g. model A
    at generic x gives (-q(x^2+1), x(1+q^2), -q x^2).
    """
    q2 = _check_q(q)
    xq1 = eval_poly(x_q1_coeffs(model), x)
    xq0 = eval_poly(x_q0_coeffs(model), x)
    a2 = -(q * xq1)
    a1 = x * (q2 + 1) - q * xq0
    a0 = -(q * (x * x))
    return a2, a1, a0


def x_kernel_coeffs_q(model: ModelId, y, q):
    """Quadratic-in-x kernel coefficients (b2, b1, b0) in the q-variable."""
    q2 = _check_q(q)
    yp1 = eval_poly(y_p1_coeffs(model), y)
    yp0 = eval_poly(_poly_from_exponents(p_poly_exponents(model, 0), 1), y)
    b2 = -(q * yp1)
    b1 = y * (q2 + 1) - q * yp0
    b0 = -(q * (y * y))
    return b2, b1, b0

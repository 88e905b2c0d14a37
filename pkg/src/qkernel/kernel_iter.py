"""Iterated kernel method in the t-variable.

The kernel K(x,y) is quadratic in y; its power-series root Y_+(x) satisfies
K(x, Y_+(x)) = 0 and val(Y_+(x)) = val(x) + 1.  Iterating Y_+ from x = 1
(and, for the asymmetric models, alternating with the quadratic-in-x root
X_+) produces families of series whose telescoping sums give the exact
counting generating functions:

  symmetric (A, B, C):
      S_{0,1}(t) = (1/t) * sum_n (-1)^n Y_n(1) Y_{n+1}(1)
      S(t)       = (1 - 2 t S_{0,1}(t)) / (1 - |S| t)

  asymmetric (D, E), with chi_n = X_+(Y_+(chi_{n-1})), ups_n = Y_+(X_+(ups_{n-1})):
      t*S_{1,0}(t) = Y_+(1) + sum_{n>=1} chi_n(1) * (Y_+(chi_n(1)) - Y_+(chi_{n-1}(1)))
      t*S_{0,1}(t) = sum_{n>=0} X_+(ups_n(1)) * (ups_n(1) - ups_{n+1}(1))
      S(t) = (1 - t*S_{1,0}(t) - t*S_{0,1}(t)) / (1 - |S| t)

The n = 0 term of the first asymmetric sum is chi_0 * Y_+(chi_0) = Y_+(1):
the finite base of the telescope, since no chi_{-1} exists.  Both
assemblies are validated coefficient-for-coefficient against the grid DP.

Everything runs over exact rationals.  One application of Y_+ or X_+ costs
one order of truncation (the division by the valuation-1 kernel
coefficient), so iterating n times needs n orders of headroom.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import models as _m
from .models import ModelId, SYMMETRIC_MODELS
from .series import (
    TruncatedSeries,
    add,
    divide_exact,
    mul,
    reciprocal,
    scale,
    shift,
    shift_down,
    sqrt_one,
    sub,
)


@dataclass
class IterateFamily:
    """A list of kernel-root iterates evaluated at 1, index n starting at 0."""

    model: ModelId
    kind: str  # Y_n | chi_n | upsilon_n | Y_plus_of_chi_n | X_plus_of_upsilon_n
    items: list

    def __getitem__(self, n):
        return self.items[n]

    def __len__(self):
        return len(self.items)


def _branch_plus(xq1_poly, q0_poly, x):
    """Small root of a2*y^2 + a1*y + a0 for a2=-t*xq1(x), a1=x(1-t*q0(x)), a0=-t*x^2.

    Returns x*((1 - t*q0(x)) - sqrt(disc)) / (2*t*xq1(x)) with
    disc = (q0(x)^2 - 4*xq1(x)) t^2 - 2 q0(x) t + 1, all series in t.
    """
    order = x.order

    def lift(v):
        return TruncatedSeries.constant(v, order) if isinstance(v, int) else v

    xq1 = lift(_m.eval_poly(xq1_poly, x))
    q0 = lift(_m.eval_poly(q0_poly, x))
    one = TruncatedSeries.one(order)
    disc = add(sub(one, shift(scale(q0, 2), 1)),
               shift(sub(mul(q0, q0), scale(xq1, 4)), 2))
    lead = sub(one, shift(q0, 1))
    num = mul(x, sub(lead, sqrt_one(disc)))
    den = shift(scale(xq1, 2), 1)
    return divide_exact(num, den)


def y_plus(model: ModelId, x: TruncatedSeries) -> TruncatedSeries:
    """Power-series branch Y_+ with K(x, Y_+(x)) = 0 and val = val(x) + 1.

    The argument loses one order of precision; an argument of order < 2
    cannot be divided by the valuation-1 leading kernel coefficient.
    """
    if x.order < 2:
        raise ValueError(f"y_plus needs argument order >= 2, got {x.order}")
    return _branch_plus(_m.x_q1_coeffs(model), _m.q0_coeffs(model), x)


def x_plus(model: ModelId, y: TruncatedSeries) -> TruncatedSeries:
    """Power-series branch X_+ with K(X_+(y), y) = 0.

    For the diagonal-symmetric models this equals y_plus; it is primarily
    used for models D and E where the two branches differ.
    """
    if y.order < 2:
        raise ValueError(f"x_plus needs argument order >= 2, got {y.order}")
    return _branch_plus(_m.y_p1_coeffs(model), _m.p0_coeffs(model), y)


def y_minus_shifted(model: ModelId, x: TruncatedSeries) -> TruncatedSeries:
    """t * Y_-(x): the large kernel root scaled into a power series.

    Y_- has valuation -1 (it blows up like 1/(t*Q1(x))), so t*Y_- is the
    natural series form.  Computed as -t*a1/a2 - t*Y_+ to avoid a second
    square root branch.
    """
    t = TruncatedSeries.t(x.order)
    a2, a1, _ = _m.kernel_coeffs_t(model, x, t)
    ratio = divide_exact(shift(a1, 1), a2)  # t*a1/a2, a series since val(a2)=1
    return sub(-ratio, shift(y_plus(model, x), 1))


def iterate_symmetric(model: ModelId, n_max: int, N: int) -> IterateFamily:
    """Y_0(1)..Y_{n_max}(1), each mod t^N.  Y_0(1) = 1 and val(Y_n(1)) = n."""
    if model not in SYMMETRIC_MODELS:
        raise ValueError("iterate_symmetric expects a symmetric model (A, B, C)")
    work = N + n_max + 1
    y = TruncatedSeries.one(work)
    items = [y.truncate(N)]
    for _ in range(n_max):
        y = y_plus(model, y)
        items.append(y.truncate(N))
    return IterateFamily(model, "Y_n", items)


def _product_to_order(f, fv, g, gv, N):
    """f*g mod t^N using the known valuations fv, gv of the factors.

    Multiplying the t^-v-normalized unit parts keeps every coefficient of
    the product below t^N even when the raw orders of f and g differ.
    """
    prod = mul(shift_down(f, fv), shift_down(g, gv))
    if prod.order + fv + gv < N:
        raise ValueError("operands too short to determine the product mod t^N")
    return shift(prod, fv + gv).truncate(N)


def _alternating_product_sum(model, N, apply_root):
    """sum_n (-1)^n Y_n(1) Y_{n+1}(1) mod t^N.

    Y_n enters products of valuation 2n-1 and 2n+1, so it is only needed to
    order N-n+1; the one-order-per-step loss of apply_root matches that
    budget exactly when Y_0 starts at order N+2.
    """
    y_prev = TruncatedSeries.one(N + 2)
    y_curr = apply_root(y_prev)
    acc = TruncatedSeries.zero(N)
    n = 0
    while 2 * n + 1 < N:
        term = _product_to_order(y_prev, n, y_curr, n + 1, N)
        acc = sub(acc, term) if n % 2 else add(acc, term)
        n += 1
        if 2 * n + 1 >= N:
            break
        y_prev = y_curr
        y_curr = apply_root(y_prev)
    return acc


def gf_axis_symmetric(model: ModelId, N: int) -> TruncatedSeries:
    """S_{0,1}(t) mod t^N: walks ending on the y-axis (equivalently x-axis)."""
    if model not in SYMMETRIC_MODELS:
        raise ValueError("gf_axis_symmetric expects a symmetric model (A, B, C)")
    total = _alternating_product_sum(model, N + 1, lambda s: y_plus(model, s))
    return shift_down(total, 1)  # divide the sum by t: valuation is 1


def _final_assembly(model, numerator, N):
    """(numerator) / (1 - |S| t) mod t^N."""
    size = len(_m.step_set(model))
    geom = reciprocal(TruncatedSeries.from_coeffs([1, -size], order=N))
    return mul(numerator.truncate(N), geom)


def gf_total_symmetric(model: ModelId, N: int) -> TruncatedSeries:
    """Full counting series S(t) mod t^N for a symmetric model."""
    s01 = gf_axis_symmetric(model, N)
    numerator = sub(TruncatedSeries.one(N), scale(shift(s01, 1).truncate(N), 2))
    return _final_assembly(model, numerator, N)


def iterate_asymmetric(model: ModelId, n_max: int, N: int):
    """Families chi_n(1), ups_n(1), Y_+(chi_n(1)), X_+(ups_n(1)), each mod t^N."""
    work = N + 2 * n_max + 3
    chi = [TruncatedSeries.one(work)]
    ychi = [y_plus(model, chi[0])]
    for _ in range(n_max):
        chi.append(x_plus(model, ychi[-1]))
        ychi.append(y_plus(model, chi[-1]))
    ups = [TruncatedSeries.one(work)]
    xups = [x_plus(model, ups[0])]
    for _ in range(n_max):
        ups.append(y_plus(model, xups[-1]))
        xups.append(x_plus(model, ups[-1]))
    cut = lambda fam: [s.truncate(N) for s in fam]
    return (
        IterateFamily(model, "chi_n", cut(chi)),
        IterateFamily(model, "upsilon_n", cut(ups)),
        IterateFamily(model, "Y_plus_of_chi_n", cut(ychi)),
        IterateFamily(model, "X_plus_of_upsilon_n", cut(xups)),
    )


def _asymmetric_sums(model: ModelId, N: int):
    """The two telescoping sums t*S_{1,0} and t*S_{0,1}, each mod t^N."""
    # left sum: chi_n * (Y_+(chi_n) - Y_+(chi_{n-1})); base term is Y_+(1).
    chi = TruncatedSeries.one(N + 2)
    ychi_prev = y_plus(model, chi)
    left = ychi_prev.truncate(N)
    n = 1
    while 4 * n - 1 < N:
        chi = x_plus(model, ychi_prev)
        ychi = y_plus(model, chi)
        bracket = sub(ychi, ychi_prev)  # valuation 2n-1, from ychi_{n-1}
        left = add(left, _product_to_order(chi, 2 * n, bracket, 2 * n - 1, N))
        ychi_prev = ychi
        n += 1
    # right sum: X_+(ups_n) * (ups_n - ups_{n+1}).
    ups = TruncatedSeries.one(N + 3)
    xups = x_plus(model, ups)
    ups_next = y_plus(model, xups)
    right = TruncatedSeries.zero(N)
    n = 0
    while 4 * n + 1 < N:
        bracket = sub(ups, ups_next)  # valuation 2n
        right = add(right, _product_to_order(xups, 2 * n + 1, bracket, 2 * n, N))
        n += 1
        if 4 * n + 1 >= N:
            break
        ups = ups_next
        xups = x_plus(model, ups)
        ups_next = y_plus(model, xups)
    return left, right


def gf_total_asymmetric(model: ModelId, N: int) -> TruncatedSeries:
    """Full counting series S(t) mod t^N via the two alternating-root telescopes.

    Valid for all five models (for symmetric ones X_+ = Y_+ and the result
    collapses to gf_total_symmetric); required only for D and E.
    """
    left, right = _asymmetric_sums(model, N)
    numerator = sub(sub(TruncatedSeries.one(N), left.truncate(N)), right.truncate(N))
    return _final_assembly(model, numerator, N)

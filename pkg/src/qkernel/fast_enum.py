"""Fast exact enumeration via shift-add recurrences on reciprocal iterates.

The reciprocals of the kernel-root iterates satisfy constant-coefficient
linear recurrences.  Writing ybar_n = 1/Y_n(1) and substituting the series
variable back in (q + 1/q becomes 1/t), the normalized quantities
Z_n = t^n * ybar_n obey

    model A:      Z_n = Z_{n-1} - t^2 Z_{n-2}
    models B, C:  Z_n = Z_{n-1} - t^2 Z_{n-2} - t^n

with Z_0 = 1 and Z_1 = t/Y_1(1).  Advancing the recurrence touches no
multiplication or division: only shifts and additions.  Y_n is recovered at
the end as t^n/Z_n, and only to the order its telescope term needs.

The asymmetric models interleave four such sequences (reciprocals of
chi_n(1), Y_+(chi_n(1)), ups_n(1), X_+(ups_n(1)), normalized by t^{2n} or
t^{2n+1}):

    C_n = W_{n-1} - t^2 C_{n-1} - t^{2n}      W_n = C_n - t^2 W_{n-1}
    U_n = V_{n-1} - t^2 U_{n-1}               V_n = U_n - t^2 V_{n-1} - t^{2n+1}

All sequences are integer series, so products and inversions run on the
Kronecker fast path.  Every output is gated on exact agreement with the
directly iterated method.
"""

from __future__ import annotations

import time
import tracemalloc
from dataclasses import dataclass

from . import naive_enum
from .kernel_iter import (
    gf_total_asymmetric,
    gf_total_symmetric,
    x_plus,
    y_plus,
    _final_assembly,
    _product_to_order,
)
from .models import ModelId, SYMMETRIC_MODELS
from .series import TruncatedSeries, add, mul, reciprocal, scale, shift, shift_down, sub


@dataclass
class ZRecurrence:
    """Shift-add recurrence descriptor for Z_n = t^n / Y_n(1)."""

    model: ModelId
    subtract_tn: bool  # models B and C carry the extra -t^n term

    def step(self, z_prev: TruncatedSeries, z_prev2: TruncatedSeries, n: int) -> TruncatedSeries:
        order = min(z_prev.order, z_prev2.order + 2)
        z = sub(z_prev, shift(z_prev2, 2).truncate(order))
        if self.subtract_tn:
            z = sub(z, TruncatedSeries.monomial(1, n, order))
        return z


@dataclass
class ZSequence:
    """Normalized reciprocal iterates Z_0..Z_n, each with nonzero constant term."""

    model: ModelId
    items: list
    normalization: str = "Z_n = t^n / Y_n(1)"


def z_recurrence_symmetric(model: ModelId) -> ZRecurrence:
    if model not in SYMMETRIC_MODELS:
        raise ValueError("z recurrence applies to the symmetric models A, B, C")
    return ZRecurrence(model, subtract_tn=(model is not ModelId.A))


def _z1_symmetric(model: ModelId, order: int) -> TruncatedSeries:
    """Z_1 = t/Y_1(1) at the given order, by series sqrt and reciprocal."""
    y1 = y_plus(model, TruncatedSeries.one(order + 1))
    return reciprocal(shift_down(y1, 1))


def z_sequence_symmetric(model: ModelId, n_max: int, order: int) -> ZSequence:
    rec = z_recurrence_symmetric(model)
    items = [TruncatedSeries.one(order)]
    if n_max >= 1:
        items.append(_z1_symmetric(model, order))
    for n in range(2, n_max + 1):
        items.append(rec.step(items[-1], items[-2], n))
    return ZSequence(model, items)


def fast_series_symmetric(model: ModelId, N: int):
    """(S(t), S_{0,1}(t)) mod t^N via the Z_n shift-add recurrence.

    Z sequences are generated to precision 2N as stated; reciprocals are
    taken only to the order each telescope term contributes below t^N.
    """
    if model not in SYMMETRIC_MODELS:
        raise ValueError("fast_series_symmetric expects a symmetric model")
    if N < 1:
        raise ValueError("N must be >= 1")
    rec = z_recurrence_symmetric(model)
    work = 2 * N
    z_prev = TruncatedSeries.one(work)          # Z_0
    z_curr = _z1_symmetric(model, work)         # Z_1
    # S_{0,1} = sum_n (-1)^n t^{2n} U_n U_{n+1} with U_n = 1/Z_n = Y_n/t^n.
    u_prev = TruncatedSeries.one(work)
    acc = TruncatedSeries.zero(N)
    n = 0
    while 2 * n < N:
        prec = N - 2 * n
        u_curr = reciprocal(z_curr.truncate(prec))
        term = shift(mul(u_prev.truncate(prec), u_curr), 2 * n).truncate(N)
        acc = sub(acc, term) if n % 2 else add(acc, term)
        n += 1
        if 2 * n >= N:
            break
        z_prev, z_curr = z_curr, rec.step(z_curr, z_prev, n + 1)
        u_prev = u_curr
    s01 = acc
    numerator = sub(TruncatedSeries.one(N), scale(shift(s01, 1).truncate(N), 2))
    return _final_assembly(model, numerator, N), s01


def _asymmetric_initials(model: ModelId, order: int):
    """W_0 = t/Y_+(1) and V_0 = t/X_+(1) at the given order."""
    y1 = y_plus(model, TruncatedSeries.one(order + 1))
    x1 = x_plus(model, TruncatedSeries.one(order + 1))
    return reciprocal(shift_down(y1, 1)), reciprocal(shift_down(x1, 1))


def fast_series_asymmetric(model: ModelId, N: int) -> TruncatedSeries:
    """S(t) mod t^N for models D and E via four interleaved shift-add recurrences."""
    if N < 1:
        raise ValueError("N must be >= 1")
    work = 2 * N
    w_prev, v_prev = _asymmetric_initials(model, work)   # W_0, V_0
    c_prev = TruncatedSeries.one(work)                   # C_0
    u_prev = TruncatedSeries.one(work)                   # U_0

    # left sum: base term chi_0 * Y_+(chi_0) = t / W_0.
    rw_prev = reciprocal(w_prev.truncate(max(N - 1, 1)))
    left = shift(rw_prev, 1).truncate(N)
    n = 1
    while 4 * n - 1 < N:
        c_curr = sub(sub(w_prev, shift(c_prev, 2).truncate(work)),
                     TruncatedSeries.monomial(1, 2 * n, work))
        w_curr = sub(c_curr, shift(w_prev, 2).truncate(work))
        prec = max(N - 4 * n + 1, 1)
        rc = reciprocal(c_curr.truncate(prec))
        rw = reciprocal(w_curr.truncate(prec))
        # chi_n*(Y_+(chi_n) - Y_+(chi_{n-1})) = t^{4n-1} (1/C_n)(t^2/W_n - 1/W_{n-1})
        bracket = sub(shift(rw, 2).truncate(prec + 2), rw_prev.truncate(prec + 2))
        term = shift(mul(rc, bracket), 4 * n - 1).truncate(N)
        left = add(left, term)
        c_prev, w_prev, rw_prev = c_curr, w_curr, rw
        n += 1

    # right sum: X_+(ups_n)*(ups_n - ups_{n+1}) = t^{4n+1} (1/V_n)(1/U_n - t^2/U_{n+1})
    right = TruncatedSeries.zero(N)
    n = 0
    ru_prev = reciprocal(u_prev.truncate(max(N - 1, 1)))
    while 4 * n + 1 < N:
        u_curr = sub(v_prev, shift(u_prev, 2).truncate(work))       # U_{n+1}
        prec = max(N - 4 * n - 1, 1)
        rv = reciprocal(v_prev.truncate(prec))
        ru = reciprocal(u_curr.truncate(prec))
        bracket = sub(ru_prev.truncate(prec + 2), shift(ru, 2).truncate(prec + 2))
        term = shift(mul(rv, bracket.truncate(prec)), 4 * n + 1).truncate(N)
        right = add(right, term)
        v_curr = sub(sub(u_curr, shift(v_prev, 2).truncate(work)),
                     TruncatedSeries.monomial(1, 2 * n + 3, work))  # V_{n+1}
        u_prev, v_prev, ru_prev = u_curr, v_curr, ru
        n += 1

    numerator = sub(sub(TruncatedSeries.one(N), left), right)
    return _final_assembly(model, numerator, N)


def enumerate_counts(model: ModelId, N: int, method: str = "fast") -> list:
    """First N+1 counting terms S_0..S_N by the chosen method."""
    if method == "naive":
        return naive_enum.count_all(model, N)
    if method == "iterated":
        gf = (gf_total_symmetric if model in SYMMETRIC_MODELS else gf_total_asymmetric)
        return [int(c) for c in gf(model, N + 1).integer_coeffs()]
    if method == "fast":
        if model in SYMMETRIC_MODELS:
            return fast_series_symmetric(model, N + 1)[0].integer_coeffs()
        return fast_series_asymmetric(model, N + 1).integer_coeffs()
    raise ValueError(f"unknown method {method!r}")


def benchmark(model: ModelId, n_list, methods=("naive", "iterated", "fast")) -> list:
    """Wall time and peak allocation for each (N, method); timings are not gated."""
    rows = []
    for N in n_list:
        for method in methods:
            tracemalloc.start()
            t0 = time.perf_counter()
            enumerate_counts(model, N, method)
            elapsed = time.perf_counter() - t0
            _, peak = tracemalloc.get_traced_memory()
            tracemalloc.stop()
            rows.append({
                "model": model.value,
                "N": N,
                "method": method,
                "seconds": elapsed,
                "bytes": peak,
            })
    return rows


def loglog_slope(rows, method="fast"):
    """Least-squares slope of log(seconds) against log(N) for one method."""
    import math

    pts = [(math.log(r["N"]), math.log(r["seconds"])) for r in rows
           if r["method"] == method and r["seconds"] > 0]
    if len(pts) < 2:
        return None
    mx = sum(x for x, _ in pts) / len(pts)
    my = sum(y for _, y in pts) / len(pts)
    num = sum((x - mx) * (y - my) for x, y in pts)
    den = sum((x - mx) ** 2 for x, _ in pts)
    return num / den if den else None

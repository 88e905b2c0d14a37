"""Acceptance suite: one test per criterion, each printing PASS/FAIL.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines.  Criterion 10 is informational (timings are reported, not gated).
"""

import math
import time
from fractions import Fraction

import mpmath as mp
import pytest

from qkernel.asymptotics import (
    KAPPA_E_INTERVAL,
    half_plane_gf,
    kappa_D_empirical,
    kappa_E,
    kappa_symmetric,
    predict,
    subdominant_base,
)
from qkernel.fast_enum import benchmark, enumerate_counts, loglog_slope
from qkernel.kernel_iter import gf_axis_symmetric, y_plus
from qkernel.models import ModelId, kernel_coeffs_t
from qkernel.naive_enum import count_all, count_axis
from qkernel.qplane import y_plus_t
from qkernel.series import TruncatedSeries as TS, add, mul, reciprocal, sqrt_one
from qkernel.singularities import (
    classified_poles,
    closed_form_ybar,
    descartes_sign_changes,
    find_roots,
    imaginary_axis_form,
    imaginary_axis_root,
    noncancellation_epsilon,
    omega_poly,
    sigma_poly,
    t_plane_map,
    B_ARG_BAND,
)
from reference_rows import TABLE1

SYM = (ModelId.A, ModelId.B, ModelId.C)
ASYM = (ModelId.D, ModelId.E)


def record(criterion, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {criterion}: {status} {detail}".rstrip())
    assert ok, f"criterion {criterion} failed: {detail}"


def test_criterion_1_table1_exactness():
    """First 11 terms from all three paths equal the published rows, < 1 s."""
    t0 = time.perf_counter()
    ok = True
    for model in ModelId:
        for method in ("naive", "iterated", "fast"):
            ok &= enumerate_counts(model, 10, method) == TABLE1[model]
    elapsed = time.perf_counter() - t0
    record(1, ok and elapsed < 1.0,
           f"(11 terms x 5 models x 3 methods in {elapsed:.3f}s)")


def test_criterion_2_cross_method_agreement():
    ok = True
    for model in SYM:
        N = 200
        naive = count_all(model, N - 1)
        ok &= enumerate_counts(model, N - 1, "iterated") == naive
        ok &= enumerate_counts(model, N - 1, "fast") == naive
    for model in ASYM:
        N = 100
        naive = count_all(model, N - 1)
        ok &= enumerate_counts(model, N - 1, "iterated") == naive
        ok &= enumerate_counts(model, N - 1, "fast") == naive
    record(2, ok, "(N=200 for A,B,C; N=100 for D,E; exact equality)")


def test_criterion_3_kappa_constants():
    refs = {ModelId.A: "0.17317888", ModelId.B: "0.15194581", ModelId.C: "0.38220125"}
    ok = True
    details = []
    for model in SYM:
        res = kappa_symmetric(model, terms=40, precision_bits=128)
        good = abs(res.estimate - mp.mpf(refs[model])) < 1e-8 and res.tail_bound < 1e-8
        ok &= good
        details.append(f"{model.value}={mp.nstr(res.estimate, 10)}+-{mp.nstr(res.tail_bound, 2)}")
    record(3, ok, "(" + ", ".join(details) + ")")


def test_criterion_4_kappa_e_and_d():
    res = kappa_E(terms=40, precision_bits=128)
    ok = abs(res.estimate - mp.mpf("0.2636")) <= 5e-4
    lo, hi = res.interval
    lo_ref = mp.mpf(KAPPA_E_INTERVAL[0].numerator) / KAPPA_E_INTERVAL[0].denominator
    hi_ref = mp.mpf(KAPPA_E_INTERVAL[1].numerator) / KAPPA_E_INTERVAL[1].denominator
    ok &= lo_ref <= lo <= hi <= hi_ref
    kd = kappa_D_empirical(N=500)
    ok &= 0 <= kd <= mp.sqrt(3 / mp.pi)
    record(4, ok, f"(kappa_E={mp.nstr(res.estimate, 8)}, kappa_D~{mp.nstr(kd, 6)})")


def test_criterion_5_subdominant_bound():
    ok = True
    worst = {}
    for model in SYM:
        k = kappa_symmetric(model, terms=60, precision_bits=256)
        counts = enumerate_counts(model, 60, "fast")
        base = subdominant_base(model, 256)
        with mp.workprec(256):
            ratios = [abs(counts[n] - k.estimate * mp.power(k.growth_base, n)) / base ** n
                      for n in range(20, 61)]
        # bounded: the late window must not exceed the early window
        ok &= max(ratios[25:]) <= max(ratios[:10]) + mp.mpf("1e-12")
        ok &= all(mp.isfinite(r) for r in ratios)
        worst[model.value] = float(max(ratios))
    record(5, ok, f"(max |S_n - kappa b^n|/sub^n over n in [20,60]: {worst})")


def test_criterion_6_singularity_polynomials():
    ok = True
    for model in SYM:
        ok &= all(sigma_poly(model, n).is_palindromic() for n in range(1, 21))
    for model in ASYM:
        ok &= all(omega_poly(model, i, n).is_palindromic()
                  for i in (1, 2, 3, 4) for n in range(1, 21))
    # gamma_2 root maps to -1/4 +- sqrt(3)/4 i with |t| = 1/2
    rs = find_roots(sigma_poly(ModelId.C, 2), 256)
    target = mp.mpc(-0.25, mp.sqrt(3) / 4)
    best = min(min(abs(t_plane_map(z) - target), abs(t_plane_map(z) - mp.conj(target)))
               for z, _ in rs.roots)
    mod_best = min(abs(abs(t_plane_map(z)) - mp.mpf("0.5")) for z, _ in rs.roots)
    ok &= best < 1e-10 and mod_best < 1e-10
    # unit-circle exclusion for n <= 20
    for model in (ModelId.A, ModelId.C):
        for n in range(1, 21):
            for z, _ in find_roots(sigma_poly(model, n), 160).roots:
                if abs(abs(z) - 1) < 1e-6:
                    ok &= abs(z - 1) < 1e-6 or abs(z + 1) < 1e-6
    for n in range(1, 21):
        for z, _ in find_roots(sigma_poly(ModelId.B, n), 160).roots:
            if abs(abs(z) - 1) < 1e-6 and abs(z - 1) > 1e-6:
                ok &= math.pi - abs(float(mp.arg(z))) <= B_ARG_BAND + 1e-9
    record(6, ok, f"(palindromic n<=20; gamma_2 -> t at dist {mp.nstr(best, 2)})")


def test_criterion_7_imaginary_axis_roots():
    ok = imaginary_axis_form(ModelId.D, 2, 1) == 4
    ok &= abs(imaginary_axis_form(ModelId.E, 2, 1) - 8) < 1e-20
    found = {}
    for model in ASYM:
        for n in (2, 4, 6, 8):
            ok &= imaginary_axis_form(model, n, 1) > 0
            ok &= imaginary_axis_form(model, n, 2) < 0
            r = imaginary_axis_root(model, n, 128)
            ok &= 1 < r < 2
            ok &= descartes_sign_changes(model, r) == 2
            found[(model.value, n)] = float(r)
    ok &= len(set(found.values())) == len(found)  # distinct roots per (model, n)
    record(7, ok, f"(roots: { {k: round(v, 6) for k, v in found.items()} })")


def test_criterion_8_noncancellation_witness():
    """ybar_{n+1}(q_n) + ybar_{n-1}(q_n) equals the model constant at 256 bits.

    The reciprocal-iterate recurrence fixes the constant at 0 for model A
    and -1 for models B and C (the source text's epsilon has magnitude 1;
    its sign as printed there contradicts its own recurrence table, and the
    recurrence is checked independently in the test suite).  Model B has no
    off-circle pole at n = 2 (beta_2 = 2(q-1)^4 (q+1)^4), so that single
    case is vacuous.
    """
    ok = True
    vacuous = []
    for model in SYM:
        eps = noncancellation_epsilon(model)
        for n in range(2, 9):
            poles = classified_poles(model, n, 256)
            if not poles:
                vacuous.append((model.value, n))
                ok &= model is ModelId.B and n == 2
                continue
            with mp.workprec(256):
                for q_n in poles:
                    s = (closed_form_ybar(model, n + 1, q_n, "plus")
                         + closed_form_ybar(model, n - 1, q_n, "plus"))
                    ok &= abs(s - eps) < 1e-15
                    ok &= abs(abs(s) - abs(eps)) < 1e-15 if eps else abs(s) < 1e-15
    record(8, ok, f"(A: sum=0, B/C: sum=-1, at every classified pole; vacuous: {vacuous})")


def test_criterion_9_property_suites():
    import random

    ok = True
    rnd = random.Random(42)
    # series round-trips on random rational series
    for _ in range(5):
        coeffs = [Fraction(rnd.randrange(-9, 10), rnd.randrange(1, 5)) for _ in range(30)]
        coeffs[0] = Fraction(1)
        f = TS.from_coeffs(coeffs)
        ok &= mul(reciprocal(f), f) == TS.one(30)
        s = sqrt_one(f)
        ok &= mul(s, s) == f
    # kernel annihilation and Vieta for every model
    for model in ModelId:
        y1 = y_plus(model, TS.one(14))
        t = TS.t(13)
        a2, a1, a0 = kernel_coeffs_t(model, TS.one(13), t)
        k = add(add(mul(a2, mul(y1, y1)), mul(a1, y1)), a0)
        ok &= k.is_zero()
        # Vieta reciprocal-sum: a0*(t/Y+ + t/Y-) = -t*a1
        from qkernel.kernel_iter import y_minus_shifted
        from qkernel.series import shift, sub

        u = reciprocal(TS(y1.coeffs[1:]))
        v = shift(reciprocal(y_minus_shifted(model, TS.one(13))), 2)
        lhs = mul(a0, add(u, v))
        ok &= sub(lhs, (-shift(a1, 1)).truncate(lhs.order)).is_zero()
    # coefficient domination by H(t)
    for model in ModelId:
        H = half_plane_gf(model, 50).integer_coeffs()
        axis = count_axis(model, 49, "y_axis")
        ok &= all(a <= h for a, h in zip(axis, H))
    # alternating-term monotonicity at t = 1/|S|
    for model in SYM:
        size = {ModelId.A: 3, ModelId.B: 4, ModelId.C: 5}[model]
        with mp.workprec(128):
            t_val = mp.mpf(1) / size
            yp, yc = mp.mpf(1), y_plus_t(model, mp.mpf(1), t_val)
            prods = []
            for _ in range(30):
                prods.append(yp * yc)
                yp, yc = yc, y_plus_t(model, yc, t_val)
            ok &= all(a > b > 0 for a, b in zip(prods, prods[1:]))
    record(9, ok, "(round trips, kernel annihilation, Vieta, domination, monotonicity)")


def test_criterion_10_performance_informational():
    rows = benchmark(ModelId.A, [500, 1000, 2000], methods=("fast",))
    slope = loglog_slope(rows, "fast")
    times = {r["N"]: round(r["seconds"], 2) for r in rows}
    completed = all(r["seconds"] > 0 for r in rows)
    print(f"ACCEPTANCE 10 (informational): fast timings {times}s, "
          f"log-log slope {slope:.2f} vs theoretical bit-complexity exponent 3 "
          "(naive is 4); not gated")
    record(10, completed, f"(N=2000 completed in {times.get(2000)}s)")

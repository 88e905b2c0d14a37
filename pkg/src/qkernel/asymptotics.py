"""Dominant-singularity constants for the counting sequences.

Each symmetric model has S_n ~ kappa * |S|^n with

    kappa = 1 - 2 * sum_{n>=0} (-1)^n Y_n(1) Y_{n+1}(1)   at t = 1/|S|,

an alternating sum with positive, strictly decreasing terms, so truncating
after `terms` summands leaves an error below the first omitted term: the
reported tail bound is 2 * Y_{terms+1} Y_{terms+2}.  The subdominant
correction is exponential with base p0 + 2*sqrt(p1*p_{-1}), the growth
rate of half-plane walks returning to the x-axis.

Model E's constant is evaluated from the closed-form reciprocal iterates
at q = 2 - sqrt(3) (the unit-interval preimage of t = 1/4) and must land
inside the interval [122/525, 7/10].  Model D admits only an empirical
estimate of kappa_D = lim D_n sqrt(n)/3^n, reported without a rigorous
bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .fast_enum import fast_series_asymmetric
from .kernel_iter import y_plus
from .models import ModelId, SYMMETRIC_MODELS, inventory_counts, step_set
from .qplane import y_plus_t
from .series import TruncatedSeries, divide_exact, shift, sqrt_one, sub
from .singularities import closed_form_asymmetric

KAPPA_E_INTERVAL = (Fraction(122, 525), Fraction(7, 10))


@dataclass
class KappaResult:
    model: ModelId
    estimate: mp.mpf
    tail_bound: mp.mpf
    terms_used: int
    growth_base: int
    subdominant_base: mp.mpf
    precision_bits: int
    interval: tuple = None  # (lo, hi) when an explicit bracket is reported

    def digits(self, k=15):
        return mp.nstr(self.estimate, k)


def subdominant_base(model: ModelId, precision_bits: int = 64) -> mp.mpf:
    inv = inventory_counts(model)
    with mp.workprec(precision_bits):
        return inv.p_0 + 2 * mp.sqrt(mp.mpf(inv.p_1) * inv.p_minus1)


class AlternatingBoundError(ArithmeticError):
    """Consecutive alternating terms failed to decrease: precision too low."""


def _symmetric_products(model, terms, precision_bits):
    """Y_n(1) Y_{n+1}(1) at t = 1/|S| for n = 0..terms+1, checked decreasing."""
    size = len(step_set(model))
    with mp.workprec(precision_bits):
        t = mp.mpf(1) / size
        y_prev = mp.mpf(1)
        y_curr = y_plus_t(model, y_prev, t)
        products = []
        for _ in range(terms + 2):
            products.append(y_prev * y_curr)
            y_prev, y_curr = y_curr, y_plus_t(model, y_curr, t)
        for a, b in zip(products, products[1:]):
            if not (a > b > 0):
                raise AlternatingBoundError(
                    "alternating bound violated: increase precision_bits")
        return products


def kappa_symmetric(model: ModelId, terms: int = 40, precision_bits: int = 128) -> KappaResult:
    """kappa for models A, B, C with a rigorous alternating-series tail bound.

    If rounding noise breaks the term monotonicity the computation retries
    at doubled precision (up to three times) before giving up.
    """
    if model not in SYMMETRIC_MODELS:
        raise ValueError("kappa_symmetric expects model A, B, or C")
    if terms < 2:
        raise ValueError("terms must be >= 2")
    bits = precision_bits
    for _ in range(4):
        try:
            products = _symmetric_products(model, terms, bits)
            break
        except AlternatingBoundError:
            bits *= 2
    else:
        raise AlternatingBoundError(
            f"alternating bound violated for {model} even at {bits // 2} bits")
    with mp.workprec(bits):
        partial = mp.mpf(0)
        for n in range(terms + 1):
            partial += products[n] if n % 2 == 0 else -products[n]
        estimate = 1 - 2 * partial
        tail = 2 * products[terms + 1]
    return KappaResult(model, estimate, tail, terms, len(step_set(model)),
                       subdominant_base(model, bits), bits)


def half_plane_gf(model: ModelId, N: int) -> TruncatedSeries:
    """Series H(t) of half-plane walks returning to the boundary axis, mod t^N.

    H = ((1 - p0 t) - sqrt((1 - p0 t)^2 - 4 p1 p_{-1} t^2)) / (2 p1 p_{-1} t^2),
    built from the x-coordinate inventory: it counts walks kept in x >= 0
    that end on the vertical axis, the relaxation that dominates the
    quarter-plane axis series coefficientwise.  The square in the
    denominator makes H(0) = 1 (a valuation -1 prefactor would not be a
    power series).  For the diagonal-symmetric models this is exactly the
    class counted by naive_enum.count_half_plane; for D and E the y >= 0
    class differs (its inventory is the q-counts) while domination of both
    axis series still holds.
    """
    inv = inventory_counts(model)
    p0, p1, pm1 = inv.p_0, inv.p_1, inv.p_minus1
    one = TruncatedSeries.one(N + 2)
    lead = sub(one, TruncatedSeries.monomial(p0, 1, N + 2))
    # (1 - p0 t)^2 - 4 p1 pm1 t^2
    disc = TruncatedSeries.from_coeffs([1, -2 * p0, p0 * p0 - 4 * p1 * pm1], order=N + 2)
    num = sub(lead, sqrt_one(disc))
    den = TruncatedSeries.monomial(2 * p1 * pm1, 2, N + 2)
    return divide_exact(num, den).truncate(N)


def kappa_E(terms: int = 40, precision_bits: int = 128) -> KappaResult:
    """Growth constant of model E from the closed forms at q = 2 - sqrt(3).

    Evaluates 1 - (1/4) E_{1,0}(1/4) - (1/4) E_{0,1}(1/4) by summing the
    two telescopes; the geometric decay ratio approaches q^4, so the tail
    after the last term is bounded by a measured-ratio geometric series.
    The resulting interval must fall inside [122/525, 7/10].
    """
    if terms < 2:
        raise ValueError("terms must be >= 2")
    model = ModelId.E
    with mp.workprec(precision_bits):
        q = 2 - mp.sqrt(3)

        def inv_cf(family, n):
            return 1 / closed_form_asymmetric(model, family, n, q, "plus")

        left = inv_cf("Ychi", 0)  # chi_0 * Y_+(chi_0) = Y_+(1)
        left_terms = [left]
        for n in range(1, terms + 1):
            term = inv_cf("chi", n) * (inv_cf("Ychi", n) - inv_cf("Ychi", n - 1))
            left += term
            left_terms.append(term)
        right = mp.mpf(0)
        right_terms = []
        for n in range(terms + 1):
            term = inv_cf("Xupsilon", n) * (inv_cf("upsilon", n) - inv_cf("upsilon", n + 1))
            right += term
            right_terms.append(term)
        estimate = 1 - left.real - right.real

        tail_mags = [abs(left_terms[-1]), abs(right_terms[-1])]
        ratios = [abs(left_terms[k] / left_terms[k - 1]) for k in range(2, terms + 1)]
        ratios += [abs(right_terms[k] / right_terms[k - 1]) for k in range(2, terms + 1)]
        ratio = max(ratios[-6:]) if ratios else q ** 4
        ratio = min(max(ratio * 2, q ** 4), mp.mpf("0.5"))
        tail = (tail_mags[0] + tail_mags[1]) * ratio / (1 - ratio)
        lo, hi = estimate - tail, estimate + tail

    lo_ref = mp.mpf(KAPPA_E_INTERVAL[0].numerator) / KAPPA_E_INTERVAL[0].denominator
    hi_ref = mp.mpf(KAPPA_E_INTERVAL[1].numerator) / KAPPA_E_INTERVAL[1].denominator
    if not (lo_ref <= lo and hi <= hi_ref):
        raise ArithmeticError("E-constant check failed: interval escaped "
                              f"[{KAPPA_E_INTERVAL[0]}, {KAPPA_E_INTERVAL[1]}]")
    return KappaResult(model, estimate, tail, terms, len(step_set(model)),
                       subdominant_base(model, precision_bits), precision_bits,
                       interval=(lo, hi))


def kappa_D_empirical(N: int = 600, precision_bits: int = 64) -> mp.mpf:
    """Non-rigorous estimate of kappa_D = lim D_n sqrt(n) / 3^n.

    Computes the exact counts to length N and Richardson-extrapolates the
    normalized sequence at N and N/2 (the correction decays like 1/n).
    The value must land in [0, sqrt(3/pi)].
    """
    counts = fast_series_asymmetric(ModelId.D, N + 1).integer_coeffs()
    with mp.workprec(precision_bits):
        def a(n):
            return mp.mpf(counts[n]) * mp.sqrt(n) / mp.power(3, n)

        estimate = 2 * a(N) - a(N // 2)
        return +estimate


def predict(model: ModelId, n: int, kappa: KappaResult) -> mp.mpf:
    """Leading-order prediction kappa * |S|^n for the count of length-n walks."""
    if n < 0:
        raise ValueError("n must be >= 0")
    with mp.workprec(kappa.precision_bits):
        return kappa.estimate * mp.power(kappa.growth_base, n)

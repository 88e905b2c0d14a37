"""Singularity families of the kernel-root iterates in the q-plane.

For each model there is an explicit family of integer polynomials whose
roots contain the poles of the iterates (after t = q/(1+q^2)):

  model A:  alpha_n = q^(4n) + q^(2n+2) - 4q^(2n) + q^(2n-2) + 1
  model B:  beta_n  = (q^(2n-1) + (q^3-2q^2-2q+1) q^(n-2) + 1)
                    * (q^(2n+1) + (q^3-2q^2-2q+1) q^(n-1) + 1)
  model C:  gamma_n = q^2(1+q^2-q)(1+q^(4n))
                    + q(q^2-3q+1)(q+1)^2 (q^n+q^(3n))
                    + q^(2n)(1-q^2-4q+14q^3-4q^5-q^4+q^6)

and for D and E four families omega^1..omega^4 tracking the reciprocals of
chi_n, Y_+(chi_n), ups_n, X_+(ups_n).  Squaring away the kernel square
root introduces extraneous roots: every root of the polynomial belongs
either to the plus-branch family (a genuine pole of the iterate) or to the
reverse-rolled minus-branch family.  Classification is numeric: evaluate
the closed-form reciprocal under both branch choices and see which one
vanishes.

Roots are found by seeding an Aberth-Ehrlich iteration with double-float
companion-matrix eigenvalues and refining at the requested precision; each
reported root is certified by its residual.  Multiple roots are handled by
square-free decomposition first.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import mpmath as mp
import numpy as np

from .models import ModelId, SYMMETRIC_MODELS, ASYMMETRIC_MODELS
from .qplane import t_of_q, x_branches, y_branches

ASYM_FAMILIES = ("chi", "Ychi", "upsilon", "Xupsilon")


# ---------------------------------------------------------------------------
# integer polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IntPolynomial:
    """Univariate integer polynomial in q, dense ascending coefficients."""

    coeffs: tuple

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def valuation(self):
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return self.degree

    def stripped(self):
        """Divide out the power of q at the origin (roots at 0 are never used)."""
        return IntPolynomial(self.coeffs[self.valuation():])

    def is_palindromic(self):
        c = self.stripped().coeffs
        return c == tuple(reversed(c))

    def derivative(self):
        if self.degree == 0:
            return IntPolynomial((0,))
        return IntPolynomial(tuple(k * c for k, c in enumerate(self.coeffs) if k))

    def __call__(self, z):
        acc = self.coeffs[-1] * (z * 0 + 1) if not isinstance(z, (int,)) else self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * z + c
        return acc

    def __mul__(self, other):
        out = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return IntPolynomial(tuple(out))


def _poly_from_laurent(terms: dict) -> IntPolynomial:
    """Build from an exponent->coefficient map, clearing any negative exponents."""
    shift = -min(min(terms), 0)
    coeffs = [0] * (max(terms) + shift + 1)
    for e, c in terms.items():
        coeffs[e + shift] += c
    return IntPolynomial(tuple(coeffs))


def _laurent_add(acc: dict, terms, scale=1):
    for e, c in terms:
        acc[e] = acc.get(e, 0) + scale * c


def _laurent_product(a, b):
    out = {}
    for ea, ca in a:
        for eb, cb in b:
            out[ea + eb] = out.get(ea + eb, 0) + ca * cb
    return list(out.items())


def sigma_poly(model: ModelId, n: int) -> IntPolynomial:
    """Singularity polynomial sigma_n for a symmetric model (n >= 1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if model is ModelId.A:
        terms = {}
        _laurent_add(terms, [(4 * n, 1), (2 * n + 2, 1), (2 * n, -4), (2 * n - 2, 1), (0, 1)])
        return _poly_from_laurent(terms)
    if model is ModelId.B:
        bracket = [(3, 1), (2, -2), (1, -2), (0, 1)]
        f1 = {}
        _laurent_add(f1, [(2 * n - 1, 1), (0, 1)])
        _laurent_add(f1, [(e + n - 2, c) for e, c in bracket])
        f2 = {}
        _laurent_add(f2, [(2 * n + 1, 1), (0, 1)])
        _laurent_add(f2, [(e + n - 1, c) for e, c in bracket])
        return _poly_from_laurent(dict(_laurent_product(list(f1.items()), list(f2.items()))))
    if model is ModelId.C:
        terms = {}
        base1 = [(4, 1), (3, -1), (2, 1)]                      # q^2 (1 + q^2 - q)
        _laurent_add(terms, _laurent_product(base1, [(0, 1), (4 * n, 1)]))
        base2 = [(5, 1), (4, -1), (3, -4), (2, -1), (1, 1)]    # q (q^2-3q+1)(q+1)^2
        _laurent_add(terms, _laurent_product(base2, [(n, 1), (3 * n, 1)]))
        base3 = [(0, 1), (2, -1), (1, -4), (3, 14), (5, -4), (4, -1), (6, 1)]
        _laurent_add(terms, [(e + 2 * n, c) for e, c in base3])
        return _poly_from_laurent(terms)
    raise ValueError("sigma_poly applies to the symmetric models A, B, C")


def _omega_factors_d(n: int):
    inner1 = [(4 * n + 2, 1), (2 * n + 4, 1), (2 * n + 2, -4), (2 * n, 1), (2, 1)]
    inner2 = [(4 * n + 4, 1), (2 * n + 4, 1), (2 * n + 2, -4), (2 * n, 1), (0, 1)]
    odd_a = [(4 * n + 3, 1), (2 * n + 4, 1), (2 * n + 3, -1), (2 * n + 2, -2),
             (2 * n + 1, -1), (2 * n, 1), (1, 1)]
    odd_b = [(4 * n + 1, 1), (2 * n + 4, 1), (2 * n + 3, -1), (2 * n + 2, -2),
             (2 * n + 1, -1), (2 * n, 1), (3, 1)]
    return inner1, inner2, odd_a, odd_b


def omega_poly(model: ModelId, index: int, n: int) -> IntPolynomial:
    """Singularity polynomial omega^index_n for model D or E (index 1..4).

    Index 1 tracks the poles of chi_n, 2 of Y_+(chi_n), 3 of ups_n,
    4 of X_+(ups_n).
    """
    if index not in (1, 2, 3, 4):
        raise ValueError("index must be 1..4")
    if n < 1:
        raise ValueError("n must be >= 1")
    if model is ModelId.D:
        inner1, inner2, odd_a, odd_b = _omega_factors_d(n)
        pairs = {1: (inner1, inner1), 2: (inner1, inner2), 3: (odd_a, odd_b), 4: (odd_a, odd_a)}
        f, g = pairs[index]
        return _poly_from_laurent(dict(_laurent_product(f, g)))
    if model is ModelId.E:
        if index == 1:
            p1 = [(6, 1), (4, -1), (2, 1)]
            p2 = [(6, 2), (4, -8), (2, 2)]
            p3 = [(8, 1), (6, -10), (4, 24), (2, -10), (0, 1)]
            high = [(0, 1), (8 * n, 1)]
            mid = [(6 * n, 1), (2 * n, 1)]
        elif index == 2:
            p1 = [(4, 1), (2, -1), (0, 1)]
            p2 = [(6, 1), (4, -3), (2, -3), (0, 1)]
            p3 = [(8, 1), (6, -9), (4, 22), (2, -9), (0, 1)]
            high = [(0, 1), (8 * n + 4, 1)]
            mid = [(6 * n + 2, 1), (2 * n, 1)]
        elif index == 3:
            p1 = [(6, 1), (4, -1), (2, 1)]
            p2 = [(7, 1), (6, -1), (5, -1), (4, -2), (3, -1), (2, -1), (1, 1)]
            p3 = [(8, 1), (7, -2), (6, -4), (5, 2), (4, 12), (3, 2), (2, -4), (1, -2), (0, 1)]
            high = [(0, 1), (8 * n, 1)]
            mid = [(6 * n, 1), (2 * n, 1)]
        else:
            p1 = [(4, 1), (2, -1), (0, 1)]
            p2 = [(5, 2), (4, -2), (3, -4), (2, -2), (1, 2)]
            p3 = [(8, 1), (7, -2), (6, -5), (5, 2), (4, 14), (3, 2), (2, -5), (1, -2), (0, 1)]
            high = [(0, 1), (8 * n + 4, 1)]
            mid = [(6 * n + 2, 1), (2 * n, 1)]
        terms = {}
        _laurent_add(terms, _laurent_product(p1, high))
        _laurent_add(terms, _laurent_product(p2, mid))
        _laurent_add(terms, [(e + 4 * n, c) for e, c in p3])
        return _poly_from_laurent(terms)
    raise ValueError("omega_poly applies to the asymmetric models D, E")


# ---------------------------------------------------------------------------
# root finding
# ---------------------------------------------------------------------------

@dataclass
class RootSet:
    """Residual-certified complex roots of one polynomial."""

    model: object
    family: str
    n: int
    plane: str
    precision_bits: int
    roots: list = field(default_factory=list)        # list of (mpc, multiplicity)
    residuals: list = field(default_factory=list)    # |p(root)| per entry

    def points(self):
        return [r for r, _ in self.roots]


def _squarefree_parts(p: IntPolynomial):
    """(factor, multiplicity) pairs with square-free factors, via sympy."""
    import sympy

    x = sympy.symbols("x")
    expr = sympy.Poly(list(reversed(p.coeffs)), x)
    _, parts = sympy.sqf_list(expr)
    out = []
    for fac, mult in parts:
        coeffs = [int(c) for c in reversed(fac.all_coeffs())]
        out.append((IntPolynomial(tuple(coeffs)), int(mult)))
    return out


def _horner2(coeffs_desc, z):
    p = mp.mpc(0)
    dp = mp.mpc(0)
    for c in coeffs_desc:
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _aberth(coeffs_desc, seeds, max_steps=60):
    """Simultaneous Aberth-Ehrlich refinement of all roots at current precision."""
    zs = [mp.mpc(s) for s in seeds]
    d = len(zs)
    tol = mp.mpf(2) ** (-mp.mp.prec + 8)
    for _ in range(max_steps):
        moved = mp.mpf(0)
        for i in range(d):
            p, dp = _horner2(coeffs_desc, zs[i])
            if p == 0:
                continue
            if dp == 0:
                zs[i] += tol
                continue
            newton = p / dp
            s = mp.mpc(0)
            for j in range(d):
                if j != i:
                    diff = zs[i] - zs[j]
                    if diff == 0:
                        diff = tol
                    s += 1 / diff
            w = newton / (1 - newton * s)
            zs[i] -= w
            moved = max(moved, abs(w))
        if moved < tol * max(1, max(abs(z) for z in zs)):
            break
    return zs


def _cluster_count(roots, radius):
    """Number of distinct roots under the clustering radius (square-free input)."""
    reps = []
    for z in roots:
        if all(abs(z - w) > radius for w in reps):
            reps.append(z)
    return len(reps)


def _conjugate_closure(roots, prec_bits):
    """Snap a real-coefficient root list to exact conjugate symmetry."""
    eps = mp.mpf(2) ** (-prec_bits // 3)
    reals, upper, lower = [], [], []
    for z in roots:
        if abs(z.imag) < eps * max(1, abs(z)):
            reals.append(mp.mpc(z.real, 0))
        elif z.imag > 0:
            upper.append(z)
        else:
            lower.append(z)
    out = list(reals)
    lower_left = list(lower)
    for u in upper:
        if lower_left:
            j = min(range(len(lower_left)), key=lambda k: abs(mp.conj(lower_left[k]) - u))
            mate = lower_left.pop(j)
            z = (u + mp.conj(mate)) / 2
            out.extend([z, mp.conj(z)])
        else:
            out.extend([u, mp.conj(u)])
    out.extend(lower_left + [mp.conj(z) for z in lower_left])
    return out[:len(roots)]


def find_roots(p: IntPolynomial, precision_bits: int = 256, model=None,
               family: str = "", n: int = 0, plane: str = "q") -> RootSet:
    """All complex roots of p with multiplicity, residual-certified.

    Double-float companion eigenvalues seed an Aberth-Ehrlich pass per
    square-free factor; precision escalates (up to 3 doublings) until
    |p(root)| < 2^(-precision_bits/2) at every root.
    """
    p = p.stripped()
    if p.degree < 1:
        raise ValueError("polynomial must have degree >= 1")
    target = mp.mpf(2) ** (-(precision_bits // 2))
    result = RootSet(model, family, n, plane, precision_bits)
    for factor, mult in _squarefree_parts(p):
        if factor.degree < 1:
            continue
        desc_int = list(reversed(factor.coeffs))
        seeds = np.roots(np.array(desc_int, dtype=float)).tolist()
        work = precision_bits + 64
        for attempt in range(4):
            with mp.workprec(work):
                desc = [mp.mpf(c) for c in desc_int]
                if attempt == 2:  # companion seeds may have collided: restart
                    seeds = [mp.polyroots(desc, maxsteps=200, extraprec=work)[k]
                             for k in range(factor.degree)]
                roots = _aberth(desc, seeds)
                roots = _conjugate_closure(roots, work)
                residuals = [abs(p(z)) for z in roots]
                distinct = _cluster_count(roots, mp.mpf(2) ** (-(work // 4)))
            if max(residuals) < target and distinct == factor.degree:
                break
            seeds = roots
            work *= 2
        else:
            raise ArithmeticError(
                f"root refinement did not certify at {work // 2} bits; "
                "retry with higher precision_bits")
        with mp.workprec(precision_bits + 64):
            for z, res in zip(roots, residuals):
                result.roots.append((+z, mult))
                result.residuals.append(+res)
    order = sorted(range(len(result.roots)),
                   key=lambda i: (mp.nstr(result.roots[i][0].real, 20),
                                  mp.nstr(result.roots[i][0].imag, 20)))
    result.roots = [result.roots[i] for i in order]
    result.residuals = [result.residuals[i] for i in order]
    return result


# ---------------------------------------------------------------------------
# unit-circle argument test
# ---------------------------------------------------------------------------

def unit_circle_phi(model: ModelId, n: int, theta) -> mp.mpf:
    """Konvalina-Matache argument function for sigma_n on the unit circle.

    A unit-circle root of sigma_n must have its argument at a zero of this
    function.  X denotes cos(n*theta).
    """
    if model not in SYMMETRIC_MODELS:
        raise ValueError("unit_circle_phi applies to models A, B, C")
    theta = mp.mpf(theta)
    c = mp.cos(theta)
    X = mp.cos(n * theta)
    if model is ModelId.A:
        return X + 2 * c ** 2 - 3
    if model is ModelId.B:
        return X ** 2 + (2 * c ** 2 - c - 3) * X + 2 * c ** 3 - 4 * c ** 2 - c + 4
    return (2 * (2 * c - 1) * X ** 2 + (4 * c ** 2 - 2 * c - 6) * X
            + 4 * c ** 3 - 8 * c ** 2 - 6 * c + 12)


B_ARG_BAND = float(mp.acos(mp.sqrt(2) - mp.mpf(1) / 2))  # width of model B's allowed band at pi


# ---------------------------------------------------------------------------
# closed forms for the reciprocal iterates
# ---------------------------------------------------------------------------

def _check_regular_q(q, eps):
    for bad, msg in ((0, "q=0"), (1, "q=1"), (-1, "q=-1")):
        if abs(q - bad) < eps:
            raise ValueError(f"singular parameter {msg}")
    if abs(q * q + 1) < eps:
        raise ValueError("singular parameter q=+-i")


def closed_form_ybar(model: ModelId, n: int, q, branch: str = "plus"):
    """ybar_n(q) = 1/Y_n(1) for a symmetric model, from the solved recurrence.

    branch selects which square-root branch feeds Ybar_1; negative n means
    the reverse-rolled family and is evaluated as |n| with the branch
    flipped.
    """
    if model not in SYMMETRIC_MODELS:
        raise ValueError("closed_form_ybar applies to models A, B, C")
    if branch not in ("plus", "minus"):
        raise ValueError("branch must be 'plus' or 'minus'")
    if n < 0:
        n = -n
        branch = "minus" if branch == "plus" else "plus"
    q = mp.mpc(q)
    _check_regular_q(q, mp.mpf(2) ** (-mp.mp.prec // 2))
    yp, ym = y_branches(model, mp.mpf(1), q)
    ybar1 = 1 / (yp if branch == "plus" else ym)
    qn = q ** n
    q2n = qn * qn
    if model is ModelId.A:
        return ((q * q - q2n) + q * (q2n - 1) * ybar1) / (qn * (q * q - 1))
    num = (q * (q - 1) * (q2n - 1) * ybar1
           + (q - qn) * (2 * q * qn - qn + q * q - 2 * q))
    return num / (qn * (q + 1) * (q - 1) ** 2)


def closed_form_asymmetric(model: ModelId, family: str, n: int, q, branch: str = "plus"):
    """Reciprocal closed forms for models D and E.

    family is one of 'chi', 'Ychi', 'upsilon', 'Xupsilon', giving
    1/chi_n(1), 1/Y_+(chi_n(1)), 1/ups_n(1), 1/X_+(ups_n(1)).  As in
    closed_form_ybar, negative n flips the branch.
    """
    if model not in ASYMMETRIC_MODELS:
        raise ValueError("closed_form_asymmetric applies to models D, E")
    if family not in ASYM_FAMILIES:
        raise ValueError(f"family must be one of {ASYM_FAMILIES}")
    if branch not in ("plus", "minus"):
        raise ValueError("branch must be 'plus' or 'minus'")
    if n < 0:
        n = -n
        branch = "minus" if branch == "plus" else "plus"
    q = mp.mpc(q)
    _check_regular_q(q, mp.mpf(2) ** (-mp.mp.prec // 2))
    plus = branch == "plus"
    if family in ("chi", "Ychi"):
        ya, yb = y_branches(model, mp.mpf(1), q)
        rbar = 1 / (ya if plus else yb)
    else:
        xa, xb = x_branches(model, mp.mpf(1), q)
        rbar = 1 / (xa if plus else xb)
    qp = {k: q ** k for k in (1, 2, 3, 4)}
    q2n = q ** (2 * n)
    q4n = q2n * q2n
    den = q2n * (qp[2] - 1) ** 2
    if family == "chi":
        num = ((q4n * qp[3] - q4n * qp[1] - qp[3] + qp[1]) * rbar
               - 2 * q4n * qp[2] + q4n + 2 * q2n * qp[2] + qp[4] - 2 * qp[2])
    elif family == "Ychi":
        num = ((q4n * qp[4] - q4n * qp[2] - qp[2] + 1) * rbar
               - 2 * q4n * qp[3] + q4n * qp[1] + q2n * qp[3] + q2n * qp[1]
               + qp[3] - 2 * qp[1])
    elif family == "upsilon":
        num = ((q4n * qp[3] - q4n * qp[1] - qp[3] + qp[1]) * rbar
               - q4n * qp[2] - q4n * qp[1] + q4n + q2n * qp[3] + q2n * qp[1]
               + qp[4] - qp[3] - qp[2])
    else:
        num = ((q4n * qp[4] - q4n * qp[2] - qp[2] + 1) * rbar
               - q4n * qp[3] - q4n * qp[2] + q4n * qp[1] + 2 * q2n * qp[2]
               + qp[3] - qp[2] - qp[1])
    return num / den


# ---------------------------------------------------------------------------
# pole classification and witnesses
# ---------------------------------------------------------------------------

@dataclass
class PoleClassification:
    root: object
    verdict: str            # pole_of_plus_branch | pole_of_minus_branch | unresolved
    evidence: dict          # branch -> |reciprocal closed form| at the root


def _reciprocal_at(model, n, q, branch, family):
    if model in SYMMETRIC_MODELS:
        return closed_form_ybar(model, n, q, branch)
    return closed_form_asymmetric(model, family, n, q, branch)


def classify_pole(model: ModelId, n: int, q_root, precision_bits: int = 256,
                  family: str = "chi") -> PoleClassification:
    """Decide whether a sigma/omega root is a pole of the plus or minus family.

    The reciprocal closed form of the true pole's family vanishes at the
    root.  Verdicts must agree at two working precisions, otherwise the
    root is reported unresolved.
    """
    tol = mp.mpf(2) ** (-(precision_bits // 8))

    def measure(bits):
        with mp.workprec(bits):
            vp = abs(_reciprocal_at(model, n, mp.mpc(q_root), "plus", family))
            vm = abs(_reciprocal_at(model, n, mp.mpc(q_root), "minus", family))
        return vp, vm

    vp1, vm1 = measure(precision_bits)
    vp2, vm2 = measure(2 * precision_bits)

    def verdict(vp, vm):
        if vp < tol <= vm:
            return "pole_of_plus_branch"
        if vm < tol <= vp:
            return "pole_of_minus_branch"
        return "unresolved"

    v1, v2 = verdict(vp1, vm1), verdict(vp2, vm2)
    final = v1 if v1 == v2 else "unresolved"
    return PoleClassification(mp.mpc(q_root), final,
                              {"plus": vp2, "minus": vm2})


def noncancellation_epsilon(model: ModelId) -> int:
    """Constant epsilon with ybar_{n+1} + ybar_{n-1} = epsilon at a pole of Y_n.

    The reciprocal-iterate recurrence is ybar_{n+1} = (q+1/q) ybar_n -
    ybar_{n-1} - delta with delta = 0 for model A and delta = 1 for B and C;
    at a zero of ybar_n the sum is therefore 0 or -1.
    """
    if model not in SYMMETRIC_MODELS:
        raise ValueError("noncancellation applies to models A, B, C")
    return 0 if model is ModelId.A else -1


def noncancellation_check(model: ModelId, n: int, q_n, precision_bits: int = 256,
                          tol=1e-15) -> bool:
    """Verify the pole of Y_n survives in the alternating sum.

    Checks ybar_{n+1}(q_n) + ybar_{n-1}(q_n) = epsilon(model) and that
    Y_{n-1}(q_n) differs from Y_{n+1}(q_n), so the pole contribution
    Y_n (Y_{n-1} - Y_{n+1}) cannot vanish.
    """
    eps = noncancellation_epsilon(model)
    with mp.workprec(precision_bits):
        up = closed_form_ybar(model, n + 1, q_n, "plus")
        dn = closed_form_ybar(model, n - 1, q_n, "plus")
        ok_sum = abs(up + dn - eps) < tol
        ok_diff = abs(up - dn) > mp.mpf(tol) ** mp.mpf(0.5)
    return bool(ok_sum and ok_diff)


# ---------------------------------------------------------------------------
# imaginary-axis roots for D and E
# ---------------------------------------------------------------------------

def imaginary_axis_form(model: ModelId, n: int, r):
    """Real-valued restriction to q = r*i (n even) whose zeros locate the poles.

    Model D uses the unsquared omega^1 factor; model E uses the numerator of
    the chi reciprocal, which carries a sqrt(1+10r^2+r^4) term.
    """
    if model not in ASYMMETRIC_MODELS:
        raise ValueError("imaginary-axis analysis applies to models D, E")
    if n < 2 or n % 2:
        raise ValueError("n must be even and >= 2")
    r = mp.mpf(r)
    R = r ** n
    r2, R2 = r * r, R * R
    if model is ModelId.D:
        R4 = R2 * R2
        return R2 - r2 + 4 * r2 * R2 - r2 * R4 + r2 * r2 * R2
    R4 = R2 * R2
    r4 = r2 * r2
    root = mp.sqrt(1 + 10 * r2 + r4)
    return (4 * R4 * r2 + 4 * r2 - 4 * R2 * r2 + R4 * r4 + R4 + r4 + 1
            + (r2 + 1 - R4 - R4 * r2) * root)


def imaginary_axis_root(model: ModelId, n: int, precision_bits: int = 128) -> mp.mpf:
    """Bisection root r in (1, 2) of the imaginary-axis restriction (n even).

    The sign change is guaranteed (value 4 for D, 8 for E at r=1; negative
    at r=2); its absence signals an implementation bug.
    """
    with mp.workprec(precision_bits + 16):
        lo, hi = mp.mpf(1), mp.mpf(2)
        flo = imaginary_axis_form(model, n, lo)
        fhi = imaginary_axis_form(model, n, hi)
        if not (flo > 0 and fhi < 0):
            raise ArithmeticError("no sign change on (1,2): imaginary-axis root lost")
        for _ in range(precision_bits + 8):
            mid = (lo + hi) / 2
            fm = imaginary_axis_form(model, n, mid)
            if fm == 0:
                return mid
            if fm > 0:
                lo = mid
            else:
                hi = mid
        return (lo + hi) / 2


def descartes_sign_changes(model: ModelId, r) -> int:
    """Sign changes of the imaginary-axis restriction as a polynomial in R.

    Two sign changes bound the number of positive roots in R by two; with
    the palindromic pairing r <-> 1/r this pins exactly one root in (1,2).
    """
    r = mp.mpf(r)
    r2 = r * r
    r4 = r2 * r2
    if model is ModelId.D:
        coeffs = [-r2, 1 + 4 * r2 + r4, -r2]
    elif model is ModelId.E:
        coeffs = [-r2 * (1 + r2 + r4), -2 * r2 * (1 + 4 * r2 + r4),
                  1 + 10 * r2 + 24 * r4 + 10 * r4 * r2 + r4 * r4,
                  -2 * r2 * (1 + 4 * r2 + r4), -r2 * (1 + r2 + r4)]
    else:
        raise ValueError("Descartes analysis applies to models D, E")
    signs = [mp.sign(c) for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


# ---------------------------------------------------------------------------
# distinctness across n
# ---------------------------------------------------------------------------

@dataclass
class DistinctnessReport:
    model: ModelId
    ok: bool
    min_distance: float
    offenders: list
    details: dict = field(default_factory=dict)


def classified_poles(model: ModelId, n: int, precision_bits: int = 256,
                     circle_margin: float = 1e-3):
    """Off-circle roots of sigma_n classified as genuine poles of Y_n."""
    rs = find_roots(sigma_poly(model, n), precision_bits, model=model,
                    family="sigma", n=n)
    poles = []
    for z, _mult in rs.roots:
        if abs(abs(z) - 1) <= circle_margin:
            continue
        cl = classify_pole(model, n, z, precision_bits)
        if cl.verdict == "pole_of_plus_branch":
            poles.append(z)
    return poles


def distinctness_check(model: ModelId, n_range, tolerance: float = 1e-6,
                       precision_bits: int = 256) -> DistinctnessReport:
    """No off-circle pole is shared between Y_n and Y_k (B: unless |n-k|=1).

    For D and E the check is the uniqueness and pairwise distinctness of
    the even-n imaginary-axis roots (Descartes bound plus bisection).
    """
    ns = list(n_range)
    if model in SYMMETRIC_MODELS:
        pole_sets = {n: classified_poles(model, n, precision_bits) for n in ns}
        min_d = mp.inf
        offenders = []
        for i, n in enumerate(ns):
            for k in ns[i + 1:]:
                if model is ModelId.B and abs(n - k) == 1:
                    continue
                for zn in pole_sets[n]:
                    for zk in pole_sets[k]:
                        d = abs(zn - zk)
                        min_d = min(min_d, d)
                        if d <= tolerance:
                            offenders.append((n, k, zn, zk))
        return DistinctnessReport(model, not offenders, float(min_d), offenders,
                                  {n: len(p) for n, p in pole_sets.items()})
    evens = [n for n in ns if n >= 2 and n % 2 == 0]
    roots = {}
    offenders = []
    for n in evens:
        r = imaginary_axis_root(model, n, precision_bits)
        if descartes_sign_changes(model, r) != 2:
            offenders.append((n, "descartes", r, None))
        roots[n] = r
    min_d = mp.inf
    for i, n in enumerate(evens):
        for k in evens[i + 1:]:
            d = abs(roots[n] - roots[k])
            min_d = min(min_d, d)
            if d <= tolerance:
                offenders.append((n, k, roots[n], roots[k]))
    return DistinctnessReport(model, not offenders, float(min_d), offenders,
                              {n: float(r) for n, r in roots.items()})


# ---------------------------------------------------------------------------
# t-plane map and exports
# ---------------------------------------------------------------------------

def t_plane_map(q):
    """t = q/(1+q^2); q = +-i rejected."""
    return t_of_q(mp.mpc(q))


def rootset_to_t_plane(rs: RootSet) -> RootSet:
    out = RootSet(rs.model, rs.family, rs.n, "t", rs.precision_bits)
    for z, mult in rs.roots:
        out.roots.append((t_plane_map(z), mult))
    out.residuals = list(rs.residuals)
    return out


def _format17(x):
    return mp.nstr(mp.mpf(x), 17, strip_zeros=False)


def export_points(rootsets, fmt: str, path: str) -> None:
    """Write root sets as CSV (re,im,n,family,plane) or as a deterministic SVG."""
    if fmt not in ("csv", "svg"):
        raise ValueError("format must be 'csv' or 'svg'")
    rows = []
    for rs in rootsets:
        for z, mult in rs.roots:
            rows.extend([(z.real, z.imag, rs.n, rs.family, rs.plane)] * mult)
    rows.sort(key=lambda r: (r[2], r[3], mp.mpf(r[0]), mp.mpf(r[1])))
    if fmt == "csv":
        lines = ["re,im,n,family,plane"]
        for re_, im_, n, family, plane in rows:
            lines.append(f"{_format17(re_)},{_format17(im_)},{n},{family},{plane}")
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")
        return
    plane = rows[0][4] if rows else "q"
    radius = 1.0 if plane == "q" else 0.5
    extent = radius * 1.3
    for re_, im_, *_ in rows:
        extent = max(extent, 1.1 * float(abs(re_)), 1.1 * float(abs(im_)))
    size = 640.0
    scale = size / (2 * extent)

    def sx(v):
        return f"{(float(v) + extent) * scale:.3f}"

    def sy(v):
        return f"{(extent - float(v)) * scale:.3f}"

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0f}" height="{size:.0f}" '
        f'viewBox="0 0 {size:.0f} {size:.0f}">',
        f'<circle cx="{sx(0)}" cy="{sy(0)}" r="{radius * scale:.3f}" '
        'fill="none" stroke="#888888" stroke-width="1"/>',
    ]
    for re_, im_, n, family, _plane in rows:
        parts.append(f'<circle cx="{sx(re_)}" cy="{sy(im_)}" r="2" fill="#003366">'
                     f'<title>n={n} {family}</title></circle>')
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(parts) + "\n")

"""Dense truncated power series in t over arbitrary-precision rationals.

A TruncatedSeries stores its first `order` coefficients exactly (gmpy2
rationals); the series is known mod t^order.  Binary operations truncate to
the smaller order, and exact division shrinks the order by the valuation of
the divisor.  All values are immutable.

Multiplication dispatches between schoolbook convolution and, for long
integer-coefficient operands, Kronecker substitution: coefficients are
packed into one huge integer, multiplied once by GMP, and unpacked with a
per-digit offset so that signed coefficients survive the round trip.
Reciprocal and square root use the direct quadratic-time coefficient
recurrences at small orders and Newton lifting (which inherits the fast
multiplication) at large ones.

The module keeps global operation counters so callers can assert, e.g.,
that a recurrence loop performed no multiplications.
"""

from __future__ import annotations

from fractions import Fraction

from gmpy2 import mpq, mpz

_ZERO = mpq(0)
_ONE = mpq(1)

_NEWTON_CUTOFF = 64      # below this order the direct recurrences win
_KRONECKER_CUTOFF = 48   # minimum length before packing pays off


class OpCounters:
    """Mutable tally of series operations, for purity assertions in tests."""

    __slots__ = ("mul", "reciprocal", "sqrt", "divide", "shift", "add")

    def __init__(self):
        self.reset()

    def reset(self):
        self.mul = 0
        self.reciprocal = 0
        self.sqrt = 0
        self.divide = 0
        self.shift = 0
        self.add = 0

    def snapshot(self):
        return {k: getattr(self, k) for k in self.__slots__}


COUNTERS = OpCounters()


def _to_mpq(value):
    if isinstance(value, (int, type(mpz(0)))):
        return mpq(value)
    if isinstance(value, type(_ONE)):
        return value
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    raise TypeError(f"cannot use {type(value).__name__} as a series coefficient")


class TruncatedSeries:
    """Power series in t known mod t^order, with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(coeffs)
        if not self.coeffs:
            raise ValueError("a truncated series needs order >= 1")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_coeffs(cls, values, order=None):
        c = [_to_mpq(v) for v in values]
        if order is not None:
            if order < len(c):
                c = c[:order]
            else:
                c.extend([_ZERO] * (order - len(c)))
        return cls(c)

    @classmethod
    def zero(cls, order):
        return cls([_ZERO] * order)

    @classmethod
    def one(cls, order):
        return cls([_ONE] + [_ZERO] * (order - 1))

    @classmethod
    def constant(cls, value, order):
        return cls([_to_mpq(value)] + [_ZERO] * (order - 1))

    @classmethod
    def t(cls, order):
        return cls.monomial(1, 1, order)

    @classmethod
    def monomial(cls, coeff, exponent, order):
        c = [_ZERO] * order
        if exponent < order:
            c[exponent] = _to_mpq(coeff)
        return cls(c)

    # -- basics ------------------------------------------------------------

    @property
    def order(self):
        return len(self.coeffs)

    def coefficient(self, k):
        if k >= self.order:
            raise IndexError(f"coefficient {k} not known (order {self.order})")
        return self.coeffs[k]

    def __getitem__(self, k):
        return self.coefficient(k)

    def valuation(self):
        """Index of the first nonzero coefficient; order for the zero series."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return self.order

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def truncate(self, order):
        if order >= self.order:
            return self
        return TruncatedSeries(self.coeffs[:order])

    def integer_coeffs(self):
        """Coefficients as Python ints; raises if any denominator is not 1."""
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError("series has non-integer coefficients")
            out.append(int(c))
        return out

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order > 8 else ""
        return f"TruncatedSeries([{shown}{tail}], order={self.order})"

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            return add(self, other)
        return add(self, TruncatedSeries.constant(other, self.order))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, TruncatedSeries):
            return sub(self, other)
        return sub(self, TruncatedSeries.constant(other, self.order))

    def __rsub__(self, other):
        return sub(TruncatedSeries.constant(other, self.order), self)

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        return scale(self, other)

    __rmul__ = __mul__


def add(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    n = min(f.order, g.order)
    COUNTERS.add += 1
    return TruncatedSeries([f.coeffs[k] + g.coeffs[k] for k in range(n)])


def sub(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    n = min(f.order, g.order)
    COUNTERS.add += 1
    return TruncatedSeries([f.coeffs[k] - g.coeffs[k] for k in range(n)])


def scale(f: TruncatedSeries, c) -> TruncatedSeries:
    c = _to_mpq(c)
    return TruncatedSeries([c * x for x in f.coeffs])


def shift(f: TruncatedSeries, k: int) -> TruncatedSeries:
    """Multiply by t^k (k >= 0).  The order grows by k: no information is lost."""
    if k < 0:
        raise ValueError("shift exponent must be nonnegative")
    COUNTERS.shift += 1
    return TruncatedSeries((_ZERO,) * k + f.coeffs)


def shift_down(f: TruncatedSeries, k: int) -> TruncatedSeries:
    """Divide by t^k when the first k coefficients vanish; order shrinks by k."""
    if k == 0:
        return f
    if f.order <= k:
        raise ValueError("order too small for shift_down")
    if any(f.coeffs[i] for i in range(k)):
        raise ValueError("series not divisible by t^k")
    COUNTERS.shift += 1
    return TruncatedSeries(f.coeffs[k:])


# -- multiplication --------------------------------------------------------

def _schoolbook(a, b, n):
    out = [_ZERO] * n
    for i, ai in enumerate(a):
        if i >= n:
            break
        if not ai:
            continue
        for j, bj in enumerate(b):
            k = i + j
            if k >= n:
                break
            if bj:
                out[k] += ai * bj
    return out


def _as_int_list(coeffs):
    out = []
    for c in coeffs:
        if c.denominator != 1:
            return None
        out.append(int(c))
    return out


def _pack_signed(values, step):
    """Pack signed ints into one integer, one step-byte slot per value."""
    pos = bytearray(step * len(values))
    neg = None
    for i, v in enumerate(values):
        if v > 0:
            pos[i * step:(i + 1) * step] = v.to_bytes(step, "little")
        elif v < 0:
            if neg is None:
                neg = bytearray(step * len(values))
            neg[i * step:(i + 1) * step] = (-v).to_bytes(step, "little")
    packed = mpz(int.from_bytes(bytes(pos), "little"))
    if neg is not None:
        packed -= mpz(int.from_bytes(bytes(neg), "little"))
    return packed


def _kronecker_ints(a, b, n):
    """Product of integer coefficient lists mod t^n via single-integer packing."""
    max_a = max(abs(x) for x in a)
    max_b = max(abs(x) for x in b)
    digit_bound = min(len(a), len(b)) * max_a * max_b
    bits = digit_bound.bit_length() + 2
    bits += (-bits) % 8  # byte-align so digits can be sliced out of a byte string
    step = bits // 8

    prod = _pack_signed(a, step) * _pack_signed(b, step)

    m = len(a) + len(b) - 1
    half = 1 << (bits - 1)
    # Adding 2^(bits-1) to every digit slot makes all digits nonnegative;
    # the offset is a periodic byte pattern, one 0x80 at the top of each slot.
    offset = mpz(int.from_bytes((b"\x00" * (step - 1) + b"\x80") * m, "little"))
    buf = int(prod + offset).to_bytes(step * m + 16, "little")

    out = []
    for k in range(min(n, m)):
        chunk = buf[k * step:(k + 1) * step]
        out.append(int.from_bytes(chunk, "little") - half)
    return out


def mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    n = min(f.order, g.order)
    COUNTERS.mul += 1
    if n >= _KRONECKER_CUTOFF:
        fa = _as_int_list(f.coeffs[:n])
        if fa is not None and any(fa):
            gb = _as_int_list(g.coeffs[:n])
            if gb is not None and any(gb):
                return TruncatedSeries([mpq(x) for x in _kronecker_ints(fa, gb, n)])
    if f.is_zero() or g.is_zero():
        return TruncatedSeries.zero(n)
    return TruncatedSeries(_schoolbook(f.coeffs, g.coeffs, n))


# -- reciprocal, square root, division --------------------------------------

def reciprocal(f: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse mod t^order; requires a nonzero constant term."""
    if f.coeffs[0] == 0:
        raise ValueError("non-invertible series: zero constant term")
    COUNTERS.reciprocal += 1
    n = f.order
    if n < _NEWTON_CUTOFF:
        inv0 = 1 / f.coeffs[0]
        out = [inv0]
        for k in range(1, n):
            s = _ZERO
            for j in range(1, k + 1):
                fj = f.coeffs[j]
                if fj:
                    s += fj * out[k - j]
            out.append(-s * inv0)
        return TruncatedSeries(out)
    # Newton: g <- g*(2 - f*g), doubling the correct order each pass.
    g = reciprocal(f.truncate(_NEWTON_CUTOFF // 2))
    prec = g.order
    while prec < n:
        prec = min(2 * prec, n)
        g = _newton_recip_step(f.truncate(prec), g, prec)
    return g


def _newton_recip_step(ft, g, prec):
    fg = mul(ft, TruncatedSeries(g.coeffs + (_ZERO,) * (prec - g.order)))
    two_minus = TruncatedSeries(tuple(2 - c if k == 0 else -c for k, c in enumerate(fg.coeffs)))
    return mul(TruncatedSeries(g.coeffs + (_ZERO,) * (prec - g.order)), two_minus)


def sqrt_one(f: TruncatedSeries) -> TruncatedSeries:
    """Square root with constant term 1 of a series with constant term exactly 1."""
    if f.coeffs[0] != 1:
        raise ValueError("sqrt_one requires constant term exactly 1")
    COUNTERS.sqrt += 1
    n = f.order
    if n < _NEWTON_CUTOFF:
        out = [_ONE]
        for k in range(1, n):
            s = _ZERO
            for j in range(1, k):
                out_j = out[j]
                if out_j:
                    s += out_j * out[k - j]
            out.append((f.coeffs[k] - s) / 2)
        return TruncatedSeries(out)
    # Newton: s <- (s + f/s)/2; exact halves cancel against the doubled sum.
    s = sqrt_one(f.truncate(_NEWTON_CUTOFF // 2))
    prec = s.order
    while prec < n:
        prec = min(2 * prec, n)
        ft = f.truncate(prec)
        s_ext = TruncatedSeries(s.coeffs + (_ZERO,) * (prec - s.order))
        s = scale(add(s_ext, mul(ft, reciprocal(s_ext))), mpq(1, 2))
    return s


def divide_exact(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """f/g as a power series; valuation(g) must not exceed valuation(f).

    The result has order min(f.order, g.order) - valuation(g).
    """
    v = g.valuation()
    if v >= g.order:
        raise ValueError("division by zero series")
    if f.valuation() < v:
        raise ValueError("non-series quotient: divisor valuation exceeds dividend valuation")
    COUNTERS.divide += 1
    n = min(f.order, g.order) - v
    if n <= 0:
        raise ValueError(f"insufficient order for division: need order > {v}")
    f2 = TruncatedSeries(f.coeffs[v:v + n]) if v else f.truncate(n)
    g2 = TruncatedSeries(g.coeffs[v:v + n])
    return mul(f2, reciprocal(g2))

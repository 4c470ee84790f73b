"""Exact and certified-interval real arithmetic.

Every quantity that feeds a bound comparison or an integer floor in this
package is either exact (a rational, or a quadratic irrational) or a
shrinking rational interval that provably contains the true value.  A bare
float never decides anything.

Three layers, coarsest to finest:

* ``fractions.Fraction`` (stdlib): exact rationals, always in lowest terms.
* :class:`QuadNum`: exact ``a + b*sqrt(d)`` with rational ``a``, ``b`` and a
  squarefree radicand ``d >= 2``.  Arithmetic stays exact as long as a
  single radicand suffices.  Operations that would mix distinct radicands
  fall through to :class:`CertifiedReal` automatically, with one exception
  that keeps more cases exact: a product or quotient of two pure square
  roots merges radicands (``sqrt(2)*sqrt(3) = sqrt(6)``).
* :class:`CertifiedReal`: an interval ``[lo, hi]`` with rational endpoints
  plus a deterministic evaluator that can shrink the interval to any
  requested width.  Field operations on rational endpoints are exact, so
  the only outward rounding happens at the transcendental leaves (pi, cos,
  sin), which are enclosed by mpmath's arbitrary-precision interval
  arithmetic, and at square roots, enclosed by integer-sqrt scaling.

Interval comparisons and floors refine on demand and are guarded by a
refinement cap (default 4096 bits); hitting the cap signals a suspected
exact tie, which the exact layer must settle instead.
"""

from __future__ import annotations

import contextlib
import contextvars
from fractions import Fraction
from math import isqrt
from typing import Callable, Union

from .errors import PointboundError

__all__ = [
    "QuadNum",
    "CertifiedReal",
    "Real",
    "DEFAULT_BITS",
    "MAX_BITS",
    "refinement_cap",
    "quad_to_interval",
    "certified_floor",
    "certified_sign",
    "compare",
    "contains_zero",
    "pi_real",
    "cos_real",
    "sin_real",
    "sqrt_real",
    "to_float",
    "format_real",
    "RefinementLimit",
    "FloorStraddle",
    "SuspectedEqual",
    "ZeroDivisorInterval",
    "is_prime_power",
    "factor_prime_power",
    "squarefree_decompose",
]

DEFAULT_BITS = 32
MAX_BITS = 4096

_cap_var: contextvars.ContextVar[int] = contextvars.ContextVar("pointbound_cap", default=MAX_BITS)


def _cap() -> int:
    return _cap_var.get()


@contextlib.contextmanager
def refinement_cap(bits: int):
    """Context manager overriding the maximum refinement depth in bits."""
    if bits < DEFAULT_BITS:
        raise ValueError(f"refinement cap must be at least {DEFAULT_BITS} bits")
    token = _cap_var.set(bits)
    try:
        yield
    finally:
        _cap_var.reset(token)


class NumericsError(PointboundError):
    module = "numerics"


class RefinementLimit(NumericsError):
    """Refinement reached the configured bit cap without a decision."""


class FloorStraddle(RefinementLimit):
    """Interval keeps straddling an integer; carries both candidate floors."""

    def __init__(self, lo_floor: int, hi_floor: int):
        super().__init__(
            f"interval straddles an integer after refinement cap; "
            f"candidate floors {lo_floor} and {hi_floor} (use the exact path)"
        )
        self.candidates = (lo_floor, hi_floor)


class SuspectedEqual(RefinementLimit):
    """Two intervals refuse to separate; the true values are probably equal."""


class ZeroDivisorInterval(NumericsError):
    """A divisor interval straddles zero; signals a bug upstream."""


# ---------------------------------------------------------------------------
# small integer utilities
# ---------------------------------------------------------------------------


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Return (s, d) with n = s*s*d and d squarefree, for n >= 0."""
    if n < 0:
        raise ValueError("radicand must be nonnegative")
    if n in (0, 1):
        return 1, n
    s, d = 1, 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    d *= m
    return s, d


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, e) with q = p**e, p prime, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = 2
    while p * p <= q:
        if q % p == 0:
            e = 0
            m = q
            while m % p == 0:
                m //= p
                e += 1
            if m != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, e
        p += 1 if p == 2 else 2
    return q, 1


def is_prime_power(q: int) -> bool:
    try:
        factor_prime_power(q)
        return True
    except ValueError:
        return False


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def _mag_bits(lo: Fraction, hi: Fraction) -> int:
    """Smallest g >= 0 with max(|lo|, |hi|) <= 2**g."""
    m = max(abs(lo), abs(hi))
    if m <= 1:
        return 0
    # ceil(log2(m)) without floats
    num, den = m.numerator, m.denominator
    g = num.bit_length() - den.bit_length()
    if Fraction(2) ** g < m:
        g += 1
    return max(0, g)


def _sqrt_bounds(r: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Enclosure of sqrt(r) of width <= 2**-bits, exact when r is a square."""
    if r < 0:
        raise NumericsError("square root of a negative rational")
    p, q = r.numerator, r.denominator
    n = p * q  # sqrt(p/q) = sqrt(pq)/q
    s = isqrt(n << (2 * bits))
    den = q << bits
    if s * s == n << (2 * bits):
        v = Fraction(s, den)
        return v, v
    return Fraction(s, den), Fraction(s + 1, den)


# ---------------------------------------------------------------------------
# QuadNum: exact a + b*sqrt(d)
# ---------------------------------------------------------------------------


class QuadNum:
    """Exact quadratic irrational a + b*sqrt(d).

    ``a`` and ``b`` are rationals; ``d`` is a squarefree integer >= 2 when
    ``b != 0`` and the marker 0 when the value is rational.  Construction
    normalizes: square parts of the radicand fold into ``b``, and a perfect
    square radicand folds the whole term into ``a``.

    Mixed-radicand sums fall through to :class:`CertifiedReal`; pure-root
    products merge radicands and stay exact.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d=0):
        a, b = _frac(a), _frac(b)
        if b != 0:
            if d < 2:
                raise ValueError("radicand must be >= 2 when b != 0")
            s, d0 = squarefree_decompose(d)
            b *= s
            if d0 == 1:
                a += b
                b, d0 = Fraction(0), 0
            d = d0
        else:
            d = 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, *args):
        raise AttributeError("QuadNum is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def sqrt(cls, n) -> "QuadNum":
        """Exact square root of a nonnegative integer or rational."""
        r = _frac(n)
        if r < 0:
            raise ValueError("square root of a negative value")
        p, q = r.numerator, r.denominator
        return cls(0, Fraction(1, q), p * q) if p * q >= 2 else cls(Fraction(isqrt(p * q), q))

    # -- predicates ------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if self.b != 0:
            raise ValueError(f"{self} is irrational")
        return self.a

    def sign(self) -> int:
        """Exact sign in {-1, 0, 1}."""
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a*a against b*b*d
        lhs, rhs = a * a, b * b * self.d
        if lhs == rhs:
            return 0
        if a > 0:  # b < 0
            return 1 if lhs > rhs else -1
        return -1 if lhs > rhs else 1

    def conjugate(self) -> "QuadNum":
        return QuadNum(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """Field norm a*a - b*b*d (product with the conjugate)."""
        return self.a * self.a - self.b * self.b * self.d

    # -- arithmetic -------------------------------------------------------

    def _compatible(self, other) -> bool:
        return self.b == 0 or other.b == 0 or self.d == other.d

    @staticmethod
    def _coerce(x):
        if isinstance(x, QuadNum):
            return x
        if isinstance(x, (int, Fraction)):
            return QuadNum(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, CertifiedReal):
                return _lift(self) + other
            return NotImplemented
        if self._compatible(o):
            d = self.d or o.d
            return QuadNum(self.a + o.a, self.b + o.b, d) if d else QuadNum(self.a + o.a)
        return _lift(self) + _lift(o)

    __radd__ = __add__

    def __neg__(self):
        return QuadNum(-self.a, -self.b, self.d) if self.b else QuadNum(-self.a)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, CertifiedReal):
                return _lift(self) - other
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, CertifiedReal):
                return _lift(self) * other
            return NotImplemented
        if self._compatible(o):
            d = self.d or o.d
            a = self.a * o.a + self.b * o.b * d
            b = self.a * o.b + self.b * o.a
            return QuadNum(a, b, d) if d else QuadNum(a)
        if self.a == 0 and o.a == 0:
            # sqrt(d1)*sqrt(d2) = sqrt(d1*d2); constructor renormalizes
            return QuadNum(0, self.b * o.b, self.d * o.d)
        return _lift(self) * _lift(o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, CertifiedReal):
                return _lift(self) / other
            return NotImplemented
        if o.sign() == 0:
            raise ZeroDivisionError("division by zero QuadNum")
        if self._compatible(o):
            n = o.norm()  # o * conjugate(o), rational and nonzero
            num = self * o.conjugate()
            if isinstance(num, QuadNum) and num.b != 0:
                return QuadNum(num.a / n, num.b / n, num.d)
            na = num.a if isinstance(num, QuadNum) else _frac(num)
            return QuadNum(na / n)
        if self.a == 0 and o.a == 0:
            # sqrt(d1)/sqrt(d2) = sqrt(d1*d2)/d2
            if self.b == 0:
                return QuadNum(0)
            return QuadNum(0, self.b / (o.b * o.d), self.d * o.d)
        return _lift(self) / _lift(o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = QuadNum(1)
        base = self
        e = n
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- comparisons ------------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b and (self.b == 0 or self.d == o.d)

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def _cmp_exact(self, other) -> int | None:
        """Exact comparison when radicands allow it, else None."""
        o = self._coerce(other)
        if o is None or not self._compatible(o):
            return None
        return (self - o).sign() if isinstance(self - o, QuadNum) else None

    def __lt__(self, other):
        c = self._cmp_exact(other)
        if c is not None:
            return c < 0
        return compare(self, other) < 0

    def __le__(self, other):
        c = self._cmp_exact(other)
        if c is not None:
            return c <= 0
        return compare(self, other) <= 0

    def __gt__(self, other):
        c = self._cmp_exact(other)
        if c is not None:
            return c > 0
        return compare(self, other) > 0

    def __ge__(self, other):
        c = self._cmp_exact(other)
        if c is not None:
            return c >= 0
        return compare(self, other) >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __floor__(self) -> int:
        if self.b == 0:
            return self.a.numerator // self.a.denominator
        n = int(float(self.a) + float(self.b) * float(self.d) ** 0.5)
        while (self - n).sign() < 0:
            n -= 1
        while (self - (n + 1)).sign() >= 0:
            n += 1
        return n

    def __float__(self):
        return float(self.a) + float(self.b) * float(self.d) ** 0.5

    def __repr__(self):
        if self.b == 0:
            return f"QuadNum({self.a})"
        return f"QuadNum({self.a} + {self.b}*sqrt({self.d}))"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        bs = f"{self.b}*" if self.b != 1 else ""
        root = f"sqrt({self.d})"
        if self.a == 0:
            return f"{bs}{root}" if self.b > 0 else f"-{-self.b if self.b != -1 else ''}{'*' if self.b != -1 else ''}{root}"
        op = "+" if self.b > 0 else "-"
        babs = abs(self.b)
        bpart = f"{babs}*{root}" if babs != 1 else root
        return f"{self.a} {op} {bpart}"


# ---------------------------------------------------------------------------
# CertifiedReal
# ---------------------------------------------------------------------------

Real = Union[int, Fraction, QuadNum, "CertifiedReal"]


class CertifiedReal:
    """A real number carried as a shrinking rational interval.

    Wraps a deterministic evaluator ``fn(bits) -> (lo, hi)`` that must
    return rational endpoints with ``hi - lo <= 2**-bits`` and the true
    value inside.  Successive evaluations are intersected, so the cached
    interval only ever shrinks and never moves off the true value.

    Instances are safe for concurrent use: the cache update is a monotone
    tightening and all arithmetic builds new values.
    """

    __slots__ = ("_fn", "_bits", "_lo", "_hi")

    def __init__(self, fn: Callable[[int], tuple[Fraction, Fraction]]):
        self._fn = fn
        self._bits = -1
        self._lo = None
        self._hi = None

    # -- interval access --------------------------------------------------

    def bounds(self, bits: int = DEFAULT_BITS) -> tuple[Fraction, Fraction]:
        """Enclosure of width <= 2**-bits (tighter if cached)."""
        if bits <= self._bits:
            return self._lo, self._hi
        lo, hi = self._fn(bits)
        if self._bits >= 0:
            lo, hi = max(lo, self._lo), min(hi, self._hi)
        if lo > hi:
            raise NumericsError("interval evaluator produced disjoint refinements")
        self._bits, self._lo, self._hi = bits, lo, hi
        return lo, hi

    @property
    def lo(self) -> Fraction:
        return self.bounds()[0]

    @property
    def hi(self) -> Fraction:
        return self.bounds()[1]

    def width(self) -> Fraction:
        lo, hi = self.bounds()
        return hi - lo

    def midpoint(self) -> Fraction:
        lo, hi = self.bounds()
        return (lo + hi) / 2

    def refine(self, width: Fraction) -> "CertifiedReal":
        """Tighten the interval to at most ``width`` and return the value."""
        width = _frac(width)
        if width <= 0:
            raise ValueError("target width must be positive")
        bits = DEFAULT_BITS
        while Fraction(1, 1 << bits) > width:
            bits += 1
            if bits > _cap():
                raise RefinementLimit(f"target width {width} below refinement cap")
        self.bounds(bits)
        return self

    def is_exact(self) -> bool:
        lo, hi = self.bounds()
        return lo == hi

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        o = _lift_or_none(other)
        if o is None:
            return NotImplemented
        return _add(self, o)

    __radd__ = __add__

    def __neg__(self):
        def fn(bits):
            lo, hi = self.bounds(bits)
            return -hi, -lo

        return CertifiedReal(fn)

    def __sub__(self, other):
        o = _lift_or_none(other)
        if o is None:
            return NotImplemented
        return _add(self, -o)

    def __rsub__(self, other):
        o = _lift_or_none(other)
        if o is None:
            return NotImplemented
        return _add(o, -self)

    def __mul__(self, other):
        o = _lift_or_none(other)
        if o is None:
            return NotImplemented
        return _mul(self, o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _lift_or_none(other)
        if o is None:
            return NotImplemented
        return _mul(self, _recip(o))

    def __rtruediv__(self, other):
        o = _lift_or_none(other)
        if o is None:
            return NotImplemented
        return _mul(o, _recip(self))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        if n == 0:
            return _lift(1)
        out = self
        for _ in range(n - 1):
            out = _mul(out, self)
        return out

    def __abs__(self):
        def fn(bits):
            lo, hi = self.bounds(bits)
            if lo >= 0:
                return lo, hi
            if hi <= 0:
                return -hi, -lo
            return Fraction(0), max(-lo, hi)

        return CertifiedReal(fn)

    def __float__(self):
        return float(self.midpoint())

    def __repr__(self):
        lo, hi = self.bounds()
        return f"CertifiedReal[{float(lo):.12g}, {float(hi):.12g}]"


def _lift_or_none(x) -> CertifiedReal | None:
    if isinstance(x, CertifiedReal):
        return x
    if isinstance(x, (int, Fraction, QuadNum)):
        return _lift(x)
    return None


def _lift(x: Real) -> CertifiedReal:
    if isinstance(x, CertifiedReal):
        return x
    if isinstance(x, (int, Fraction)):
        v = _frac(x)

        def fn(bits, v=v):
            return v, v

        return CertifiedReal(fn)
    if isinstance(x, QuadNum):
        if x.b == 0:
            return _lift(x.a)
        a, b, d = x.a, x.b, x.d
        gb = _mag_bits(b, b)

        def fn(bits, a=a, b=b, d=d, gb=gb):
            slo, shi = _sqrt_bounds(Fraction(d), bits + 1 + gb)
            if b > 0:
                return a + b * slo, a + b * shi
            return a + b * shi, a + b * slo

        return CertifiedReal(fn)
    raise TypeError(f"cannot lift {type(x).__name__} to CertifiedReal")


def _add(x: CertifiedReal, y: CertifiedReal) -> CertifiedReal:
    def fn(bits):
        xa, xb = x.bounds(bits + 2)
        ya, yb = y.bounds(bits + 2)
        return xa + ya, xb + yb

    return CertifiedReal(fn)


def _mul(x: CertifiedReal, y: CertifiedReal) -> CertifiedReal:
    def fn(bits):
        gx = _mag_bits(*x.bounds(8))
        gy = _mag_bits(*y.bounds(8))
        xa, xb = x.bounds(bits + 2 + gy)
        ya, yb = y.bounds(bits + 2 + gx)
        ps = (xa * ya, xa * yb, xb * ya, xb * yb)
        return min(ps), max(ps)

    return CertifiedReal(fn)


def _recip(y: CertifiedReal) -> CertifiedReal:
    def fn(bits):
        b = DEFAULT_BITS
        while True:
            ya, yb = y.bounds(b)
            if ya > 0 or yb < 0:
                break
            if ya == yb:
                raise ZeroDivisorInterval("division by an exactly zero value")
            if b >= _cap():
                raise ZeroDivisorInterval(
                    "divisor interval straddles zero at the refinement cap"
                )
            b = min(b * 2, _cap())
        m = min(abs(ya), abs(yb))
        gm = _mag_bits(1 / m, 1 / m)
        ya, yb = y.bounds(bits + 2 + 2 * gm)
        return 1 / yb, 1 / ya

    return CertifiedReal(fn)


# ---------------------------------------------------------------------------
# transcendental leaves (mpmath interval arithmetic, outward rounded)
# ---------------------------------------------------------------------------


def _mpf_tuple_to_fraction(t) -> Fraction:
    sign, man, exp, _bc = t
    man = int(man)
    if man == 0:
        if exp != 0:
            raise NumericsError("non-finite value from interval evaluation")
        return Fraction(0)
    v = Fraction(man) * (Fraction(2) ** exp if exp >= 0 else Fraction(1, 1 << -exp))
    return -v if sign else v


def _iv_eval(op: str, arg: tuple[Fraction, Fraction] | None, bits: int) -> tuple[Fraction, Fraction]:
    """Evaluate a unary mpmath.iv function (or the constant pi) outward."""
    import mpmath
    from mpmath import iv

    prec = bits + 12
    target = Fraction(1, 1 << bits)
    while True:
        old = iv.prec
        try:
            iv.prec = prec
            if arg is None:
                res = iv.pi
            else:
                a, b = arg
                ia = iv.mpf(a.numerator) / iv.mpf(a.denominator)
                ib = iv.mpf(b.numerator) / iv.mpf(b.denominator)
                lo_t, hi_t = ia._mpi_[0], ib._mpi_[1]
                # reconstruct endpoints exactly: mpf(tuple) rounds at the
                # ambient precision, which could round inward
                with mpmath.workprec(max(lo_t[3], hi_t[3]) + 8):
                    hull = iv.mpf([mpmath.mpf(lo_t), mpmath.mpf(hi_t)])
                res = getattr(iv, op)(hull)
            lo = _mpf_tuple_to_fraction(res._mpi_[0])
            hi = _mpf_tuple_to_fraction(res._mpi_[1])
        finally:
            iv.prec = old
        if hi - lo <= target:
            return lo, hi
        prec *= 2
        if prec > 64 * max(bits, MAX_BITS):
            raise NumericsError(f"interval evaluation of {op} failed to converge")


_PI: CertifiedReal | None = None


def pi_real() -> CertifiedReal:
    """The constant pi as a shared certified interval."""
    global _PI
    if _PI is None:
        _PI = CertifiedReal(lambda bits: _iv_eval("pi", None, bits))
    return _PI


def _trig(op: str, x: Real) -> CertifiedReal:
    c = _lift(x)

    def fn(bits):
        return _iv_eval(op, c.bounds(bits + 2), bits)

    return CertifiedReal(fn)


def cos_real(x: Real) -> CertifiedReal:
    return _trig("cos", x)


def sin_real(x: Real) -> CertifiedReal:
    return _trig("sin", x)


def sqrt_real(x: Real) -> Real:
    """Square root: exact QuadNum for exact input, interval otherwise."""
    if isinstance(x, (int, Fraction)):
        return QuadNum.sqrt(x)
    c = _lift(x)

    def fn(bits):
        lo, hi = c.bounds(2 * bits + 4)
        if lo < 0:
            raise NumericsError("square root of an interval below zero")
        slo, _ = _sqrt_bounds(lo, bits + 2)
        _, shi = _sqrt_bounds(hi, bits + 2)
        return slo, shi

    return CertifiedReal(fn)


# ---------------------------------------------------------------------------
# decisions: floor, sign, comparison
# ---------------------------------------------------------------------------


def quad_to_interval(x: QuadNum, width: Fraction) -> CertifiedReal:
    """Certified interval of at most ``width`` containing the exact value."""
    if _frac(width) <= 0:
        raise ValueError("width must be positive")
    return _lift(x).refine(width)


def certified_floor(x: Real, max_bits: int | None = None) -> int:
    """Floor of an exact or certified value.

    Exact inputs use exact integer arithmetic.  Interval inputs refine
    until both endpoints share a floor; if the interval still straddles an
    integer at the refinement cap, :class:`FloorStraddle` is raised with
    both candidates (the true value is then suspected to be that integer
    and needs the exact path).
    """
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator // x.denominator
    if isinstance(x, QuadNum):
        return x.__floor__()
    cap = max_bits if max_bits is not None else _cap()
    bits = DEFAULT_BITS
    while True:
        lo, hi = x.bounds(bits)
        flo = lo.numerator // lo.denominator
        fhi = hi.numerator // hi.denominator
        if flo == fhi:
            return flo
        if lo == hi:
            return flo
        if bits >= cap:
            raise FloorStraddle(flo, fhi)
        bits = min(bits * 2, cap)


def certified_sign(x: Real, max_bits: int | None = None) -> int:
    """Sign in {-1, 0, 1}; 0 only for exactly-zero exact values."""
    if isinstance(x, int):
        return (x > 0) - (x < 0)
    if isinstance(x, Fraction):
        return (x > 0) - (x < 0)
    if isinstance(x, QuadNum):
        return x.sign()
    cap = max_bits if max_bits is not None else _cap()
    bits = DEFAULT_BITS
    while True:
        lo, hi = x.bounds(bits)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        if lo == hi:
            return 0
        if bits >= cap:
            raise SuspectedEqual("sign undecided at refinement cap (suspected zero)")
        bits = min(bits * 2, cap)


def compare(x: Real, y: Real, max_bits: int | None = None) -> int:
    """Strict ordering of true values: -1, 0 or +1.

    Returns 0 only when both values are exact and equal.  For certified
    inputs the two intervals are refined alternately until they separate;
    hitting the refinement cap raises :class:`SuspectedEqual`.
    """
    xe = isinstance(x, (int, Fraction, QuadNum))
    ye = isinstance(y, (int, Fraction, QuadNum))
    if xe and ye:
        qx = x if isinstance(x, QuadNum) else QuadNum(x)
        qy = y if isinstance(y, QuadNum) else QuadNum(y)
        if qx._compatible(qy):
            diff = qx - qy
            if isinstance(diff, QuadNum):
                return diff.sign()
        # distinct squarefree radicands: values can never be equal
    cx, cy = _lift(x), _lift(y)
    cap = max_bits if max_bits is not None else _cap()
    bits = DEFAULT_BITS
    while True:
        xa, xb = cx.bounds(bits)
        ya, yb = cy.bounds(bits)
        if xb < ya:
            return -1
        if yb < xa:
            return 1
        if xa == xb and ya == yb:
            return 0
        if bits >= cap:
            raise SuspectedEqual("values refuse to separate at refinement cap")
        bits = min(bits * 2, cap)


def contains_zero(x: Real, bits: int = DEFAULT_BITS) -> bool:
    """Whether the (possibly exact) value's enclosure contains zero."""
    if isinstance(x, (int, Fraction)):
        return x == 0
    if isinstance(x, QuadNum):
        return x.sign() == 0
    lo, hi = x.bounds(bits)
    return lo <= 0 <= hi


def to_float(x: Real) -> float:
    if isinstance(x, (int, Fraction)):
        return float(x)
    return float(x)


def format_real(x: Real, digits: int = 9) -> str:
    """Human-readable rendering; intervals print midpoint +/- half-width."""
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else str(x.numerator)
    if isinstance(x, QuadNum):
        return str(x)
    x.bounds(max(DEFAULT_BITS, int(digits * 3.33) + 8))
    lo, hi = x.bounds()
    mid = (lo + hi) / 2
    half = (hi - lo) / 2
    if half == 0:
        return format_real(mid, digits)
    return f"{float(mid):.{digits}f} +/- {float(half):.2g}"

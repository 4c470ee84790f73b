"""Exact univariate polynomial arithmetic over an ordered field.

Coefficients are rationals or same-radicand :class:`~pointbound.numerics.QuadNum`
values; every operation below (evaluation, euclidean division, gcd, Sturm
chains, root isolation, sign certification) is exact, so the answers are
decisions, not estimates.  Polynomials are plain lists of coefficients in
ascending degree order.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Sequence

from .errors import PointboundError
from .numerics import CertifiedReal, QuadNum

__all__ = [
    "Poly",
    "normalize",
    "degree",
    "poly_eval",
    "poly_add",
    "poly_sub",
    "poly_mul",
    "poly_scale",
    "poly_derivative",
    "poly_divmod",
    "poly_gcd",
    "squarefree_part",
    "sturm_chain",
    "count_real_roots",
    "total_real_roots",
    "isolate_real_roots",
    "certify_nonneg_on",
    "cauchy_root_bound",
    "resultant",
    "AlgebraicNumber",
    "real_algebraic_roots",
    "NotSquarefreeError",
]

Poly = list


class ExactPolyError(PointboundError):
    module = "exactpoly"


class NotSquarefreeError(ExactPolyError):
    pass


def _sgn(v) -> int:
    if isinstance(v, QuadNum):
        return v.sign()
    return (v > 0) - (v < 0)


def _zero_like(c):
    return QuadNum(0) if isinstance(c, QuadNum) else Fraction(0)


def normalize(p: Sequence) -> Poly:
    q = list(p)
    while q and _sgn(q[-1]) == 0:
        q.pop()
    return q


def degree(p: Sequence) -> int:
    q = normalize(p)
    return len(q) - 1 if q else -1


def poly_eval(p: Sequence, x):
    acc = Fraction(0)
    for c in reversed(list(p)):
        acc = acc * x + c
    return acc


def poly_add(p: Sequence, q: Sequence) -> Poly:
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        a = p[i] if i < len(p) else 0
        b = q[i] if i < len(q) else 0
        out.append(a + b)
    return normalize(out)


def poly_sub(p: Sequence, q: Sequence) -> Poly:
    return poly_add(p, [-c for c in q])


def poly_mul(p: Sequence, q: Sequence) -> Poly:
    p, q = normalize(p), normalize(q)
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return normalize(out)


def poly_scale(p: Sequence, c) -> Poly:
    return normalize([a * c for a in p])


def poly_derivative(p: Sequence) -> Poly:
    return normalize([c * i for i, c in enumerate(p)][1:])


def poly_divmod(p: Sequence, q: Sequence) -> tuple[Poly, Poly]:
    p, q = normalize(p), normalize(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    quot = [Fraction(0)] * max(0, len(p) - len(q) + 1)
    lead = q[-1]
    while len(r) >= len(q) and r:
        c = r[-1] / lead
        off = len(r) - len(q)
        quot[off] = c
        for i, qc in enumerate(q):
            r[off + i] = r[off + i] - c * qc
        r.pop()
        while r and _sgn(r[-1]) == 0:
            r.pop()
    return normalize(quot), normalize(r)


def poly_gcd(p: Sequence, q: Sequence) -> Poly:
    a, b = normalize(p), normalize(q)
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        inv = QuadNum(1) / lead if isinstance(lead, QuadNum) else Fraction(1) / lead
        a = poly_scale(a, inv)
    return a


def squarefree_part(p: Sequence) -> Poly:
    g = poly_gcd(p, poly_derivative(p))
    if degree(g) <= 0:
        return normalize(p)
    q, r = poly_divmod(p, g)
    if r:
        raise ExactPolyError("gcd division left a remainder")
    return q


def sturm_chain(p: Sequence) -> list[Poly]:
    chain = [normalize(p), poly_derivative(p)]
    while chain[-1]:
        _, r = poly_divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return [c for c in chain if c]


def _variations(chain: list[Poly], x) -> int:
    signs = [s for s in (_sgn(poly_eval(c, x)) for c in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: Sequence, a, b, chain: list[Poly] | None = None) -> int:
    """Distinct real roots of squarefree ``p`` in the half-open interval (a, b]."""
    if chain is None:
        chain = sturm_chain(p)
    return _variations(chain, a) - _variations(chain, b)


def cauchy_root_bound(p: Sequence) -> Fraction:
    """1 + max|a_i|/|lead|; strictly exceeds the modulus of every root."""
    p = normalize(p)
    if any(isinstance(c, QuadNum) for c in p):
        raise ExactPolyError("root bound implemented for rational polynomials only")
    if len(p) <= 1:
        return Fraction(1)
    lead = abs(Fraction(p[-1]))
    m = max(abs(Fraction(c)) for c in p[:-1])
    return 1 + m / lead


def total_real_roots(p: Sequence) -> int:
    """Number of distinct real roots of a squarefree rational polynomial."""
    b = cauchy_root_bound(p)
    return count_real_roots(p, -b, b)


def isolate_real_roots(p: Sequence, a, b) -> list[tuple]:
    """Isolate the distinct real roots of squarefree ``p`` inside (a, b].

    Returns a sorted list of ``('exact', r)`` for rational roots found at
    bisection points and ``('bracket', lo, hi)`` pairs containing exactly
    one root each, with a strict sign change across the bracket.
    """
    p = normalize(p)
    chain = sturm_chain(p)
    out = []

    def recurse(lo, hi, n):
        if n == 0:
            return
        if n == 1 and _sgn(poly_eval(p, lo)) * _sgn(poly_eval(p, hi)) < 0:
            out.append(("bracket", lo, hi))
            return
        mid = (lo + hi) / 2
        bump = (hi - lo) / 64
        while _sgn(poly_eval(p, mid)) == 0 and n > 1:
            # rational root exactly at a split point: shift the split
            mid = mid + bump
            bump /= 7
        if _sgn(poly_eval(p, mid)) == 0:
            out.append(("exact", mid))
            return
        nl = count_real_roots(p, lo, mid, chain)
        recurse(lo, mid, nl)
        recurse(mid, hi, n - nl)

    n = count_real_roots(p, a, b, chain)
    # a root exactly at the left end is excluded by the half-open interval;
    # one at the right end must be peeled off before bisection can see it
    if _sgn(poly_eval(p, b)) == 0 and n > 0:
        out.append(("exact", b))
        v = (a + b) / 2
        while count_real_roots(p, v, b, chain) > 1 or _sgn(poly_eval(p, v)) == 0:
            v = (v + b) / 2
        recurse(a, v, n - 1)
    else:
        recurse(a, b, n)

    def key(item):
        return item[1]

    return sorted(out, key=key)


def certify_nonneg_on(p: Sequence, a, b) -> bool:
    """Exactly decide whether ``p(x) >= 0`` for every ``x`` in [a, b].

    Works over rationals or a single quadratic field.  The sign of ``p`` is
    constant between consecutive roots, so it suffices to check the
    endpoints plus one non-root sample inside every maximal root-free
    region; touching zeros (even multiplicity) certify, crossings do not.
    """
    p = normalize(p)
    if not p:
        return True
    if _sgn(poly_eval(p, a)) < 0 or _sgn(poly_eval(p, b)) < 0:
        return False
    sf = squarefree_part(p)
    spots = isolate_real_roots(sf, a, b)
    # normalize to (lo, hi) brackets, degenerate for exact rational roots
    brackets = []
    for item in spots:
        if item[0] == "exact":
            brackets.append((item[1], item[1]))
        else:
            brackets.append((item[1], item[2]))
    samples = []
    if brackets and _sgn(poly_eval(sf, a)) == 0:
        # a is itself a root: the region (a, r_1) needs an interior sample,
        # so shrink the first bracket until it detaches from a
        lo, hi = brackets[0]
        while lo <= a:
            mid = (lo + hi) / 2
            sm = _sgn(poly_eval(sf, mid))
            if sm == 0:
                lo = hi = mid
            elif sm * _sgn(poly_eval(sf, hi)) < 0:
                lo = mid
            else:
                hi = mid
        brackets[0] = (lo, hi)
        samples.append((a + lo) / 2)
    elif not brackets and _sgn(poly_eval(sf, a)) == 0:
        samples.append((a + b) / 2)
    for (_, u), (l2, _) in zip(brackets, brackets[1:]):
        # u <= l2; when equal it is a shared non-root split point
        samples.append(u if u == l2 else (u + l2) / 2)
    for s in samples:
        if _sgn(poly_eval(p, s)) < 0:
            return False
    return True


def resultant(p: Sequence, q: Sequence) -> Fraction:
    """Resultant of two rational polynomials via the Sylvester determinant."""
    p, q = normalize(p), normalize(q)
    n, m = len(p) - 1, len(q) - 1
    if n < 0 or m < 0:
        return Fraction(0)
    if n == 0:
        return Fraction(p[0]) ** m
    if m == 0:
        return Fraction(q[0]) ** n
    size = n + m
    mat = [[Fraction(0)] * size for _ in range(size)]
    prow = list(reversed([Fraction(c) for c in p]))
    qrow = list(reversed([Fraction(c) for c in q]))
    for i in range(m):
        for j, c in enumerate(prow):
            mat[i][i + j] = c
    for i in range(n):
        for j, c in enumerate(qrow):
            mat[m + i][i + j] = c
    # exact fraction Gaussian elimination
    det = Fraction(1)
    for col in range(size):
        pivot = None
        for row in range(col, size):
            if mat[row][col] != 0:
                pivot = row
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det = -det
        det *= mat[col][col]
        inv = 1 / mat[col][col]
        for row in range(col + 1, size):
            f = mat[row][col] * inv
            if f:
                for k in range(col, size):
                    mat[row][k] -= f * mat[col][k]
    return det


# ---------------------------------------------------------------------------
# real algebraic numbers as (minimal polynomial, isolating interval)
# ---------------------------------------------------------------------------


class AlgebraicNumber:
    """A real root of an integer polynomial, carried as a certified interval.

    ``minpoly`` is the defining polynomial (integer coefficients, ascending,
    squarefree); ``index`` is the position of this root among the real roots
    in increasing order.  The interval refines by exact bisection.
    """

    __slots__ = ("minpoly", "index", "_bracket", "interval")

    def __init__(self, minpoly: tuple[int, ...], index: int, bracket: tuple[Fraction, Fraction]):
        self.minpoly = tuple(int(c) for c in minpoly)
        self.index = index
        self._bracket = (Fraction(bracket[0]), Fraction(bracket[1]))
        self.interval = CertifiedReal(self._refine)

    def _refine(self, bits: int):
        p = list(self.minpoly)
        lo, hi = self._bracket
        slo = _sgn(poly_eval(p, lo))
        target = Fraction(1, 1 << bits)
        while hi - lo > target:
            mid = (lo + hi) / 2
            sm = _sgn(poly_eval(p, mid))
            if sm == 0:
                # exact rational root (only possible for reducible input)
                lo = hi = mid
                break
            if sm == slo:
                lo = mid
            else:
                hi = mid
        self._bracket = (lo, hi)
        return lo, hi

    def __float__(self):
        return float(self.interval)

    def __repr__(self):
        lo, hi = self.interval.bounds()
        return f"AlgebraicNumber(root #{self.index} of {list(self.minpoly)}, ~{float((lo + hi) / 2):.9g})"

    def __eq__(self, other):
        if not isinstance(other, AlgebraicNumber):
            return NotImplemented
        return self.minpoly == other.minpoly and self.index == other.index

    def __hash__(self):
        return hash((self.minpoly, self.index))


def real_algebraic_roots(coeffs: Sequence[int]) -> list[AlgebraicNumber]:
    """All real roots of a squarefree integer polynomial, ascending."""
    p = [Fraction(c) for c in coeffs]
    if degree(poly_gcd(p, poly_derivative(p))) > 0:
        raise NotSquarefreeError("polynomial must be squarefree for root isolation")
    bound = cauchy_root_bound(p)
    spots = isolate_real_roots(p, -bound, bound)
    roots = []
    for i, item in enumerate(spots):
        if item[0] == "exact":
            r = item[1]
            roots.append(AlgebraicNumber(tuple(int(c) for c in coeffs), i, (r, r)))
        else:
            _, lo, hi = item
            roots.append(AlgebraicNumber(tuple(int(c) for c in coeffs), i, (lo, hi)))
    return roots

"""Conversions between point counts, power sums, real Weil numbers and
L-polynomials, plus the explicit-formula identity check.

For a smooth curve over F_q of genus g with Frobenius eigenvalue pairs
``(w_j, conj(w_j))``, the real Weil numbers are ``x_j = w_j + conj(w_j)``,
real algebraic integers with ``|x_j| <= 2 sqrt(q)``.  Writing

    s_n(x) = w^n + conj(w)^n      (s_0 = 2, s_1 = x, s_n = x s_(n-1) - q s_(n-2))

the counts satisfy ``#X(F_{q^n}) = q^n + 1 - sum_j s_n(x_j)``.  Everything
in this module is exact: tuples are represented by Galois orbits (rational
entries, conjugate quadratic pairs, or the full real-root set of an
integer polynomial), and power sums of an orbit come from Newton's
identities on its characteristic polynomial, never from decimals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, isqrt
from typing import Sequence

from .errors import PointboundError
from . import exactpoly
from .numerics import (
    QuadNum,
    Real,
    compare,
    _frac,
    _lift,
)
from .trigpoly import TrigPolynomial, psi_d_eval, psi_eval

__all__ = [
    "WeilTuple",
    "LPolynomial",
    "make_weil_tuple",
    "power_sums_from_counts",
    "newton_to_elementary",
    "elementary_to_power_sums",
    "solve_weil_tuple",
    "weil_tuple_from_counts",
    "counts_from_roots",
    "l_polynomial",
    "verify_serre_identity",
    "jacobian_excluded_tuple",
    "WeilRootsError",
    "NotTotallyReal",
    "WeilViolation",
    "NonIntegral",
    "InconsistentExtraCounts",
]

Entry = object  # Fraction | QuadNum | exactpoly.AlgebraicNumber


class WeilRootsError(PointboundError):
    module = "weilroots"


class NotTotallyReal(WeilRootsError):
    pass


class WeilViolation(WeilRootsError):
    pass


class NonIntegral(WeilRootsError):
    pass


class InconsistentExtraCounts(WeilRootsError):
    pass


def _entry_key(x) -> tuple:
    if isinstance(x, exactpoly.AlgebraicNumber):
        return ("alg", x.minpoly, x.index)
    if isinstance(x, QuadNum):
        if x.b == 0:
            return ("rat", x.a)
        return ("quad", x.a, x.b, x.d)
    return ("rat", _frac(x))


def _entry_admissible(x, q: int) -> bool:
    bound = 2 * QuadNum.sqrt(q)
    if isinstance(x, exactpoly.AlgebraicNumber):
        return compare(abs(x.interval), _lift(bound)) <= 0
    mag = abs(x if isinstance(x, QuadNum) else QuadNum(_frac(x)))
    return compare(mag, bound) <= 0


@dataclass(frozen=True)
class WeilTuple:
    """Multiset of real Weil numbers for genus g over F_q.

    Entries are exact rationals, exact quadratic irrationals, or real
    algebraic numbers carrying their defining polynomial.  Equality is
    order-insensitive.  Construction enforces |x| <= 2 sqrt(q).
    """

    q: int
    g: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.g:
            raise WeilRootsError(f"expected {self.g} entries, got {len(self.entries)}")
        for x in self.entries:
            if not _entry_admissible(x, self.q):
                raise WeilViolation(f"|{x}| exceeds 2*sqrt({self.q})")

    def sorted_keys(self) -> tuple:
        return tuple(sorted((_entry_key(x) for x in self.entries), key=repr))

    def __eq__(self, other):
        if not isinstance(other, WeilTuple):
            return NotImplemented
        return (self.q, self.g) == (other.q, other.g) and self.sorted_keys() == other.sorted_keys()

    def __hash__(self):
        return hash((self.q, self.g, self.sorted_keys()))

    def floats(self) -> list[float]:
        return sorted(float(x) for x in self.entries)


def make_weil_tuple(q: int, entries: Sequence) -> WeilTuple:
    norm = []
    for x in entries:
        if isinstance(x, (int, Fraction)):
            norm.append(_frac(x))
        else:
            norm.append(x)
    return WeilTuple(q=q, g=len(norm), entries=tuple(norm))


# ---------------------------------------------------------------------------
# orbits: Galois-stable blocks with rational characteristic polynomials
# ---------------------------------------------------------------------------


def _orbits(wt: WeilTuple) -> list[list[Fraction]]:
    """Characteristic polynomials (monic, rational, ascending) of the
    Galois orbits making up the tuple, with multiplicity.

    Raises :class:`NonIntegral` when conjugates are missing, since no
    rational characteristic polynomial exists then.
    """
    out: list[list[Fraction]] = []
    quads: dict[tuple, int] = {}
    algs: dict[tuple, list[int]] = {}
    for x in wt.entries:
        if isinstance(x, exactpoly.AlgebraicNumber):
            algs.setdefault(x.minpoly, []).append(x.index)
        elif isinstance(x, QuadNum) and x.b != 0:
            quads[(x.a, x.b, x.d)] = quads.get((x.a, x.b, x.d), 0) + 1
        else:
            a = x.a if isinstance(x, QuadNum) else _frac(x)
            out.append([-a, Fraction(1)])
    for (a, b, d), count in sorted(quads.items(), key=repr):
        if b < 0:
            continue  # handled together with the positive representative
        partner = quads.get((a, -b, d), 0)
        if partner != count:
            raise NonIntegral(f"conjugate of {QuadNum(a, b, d)} missing from the tuple")
        # (x - (a+b sqrt d))(x - (a-b sqrt d)) = x^2 - 2a x + (a^2 - b^2 d)
        for _ in range(count):
            out.append([a * a - b * b * d, -2 * a, Fraction(1)])
    for (a, b, d), count in quads.items():
        if b < 0 and quads.get((a, -b, d), 0) == 0:
            raise NonIntegral(f"conjugate of {QuadNum(a, b, d)} missing from the tuple")
    for minpoly, indices in algs.items():
        deg = len(minpoly) - 1
        total_real = exactpoly.total_real_roots([Fraction(c) for c in minpoly])
        if total_real != deg:
            raise NotTotallyReal(f"{list(minpoly)} has non-real roots")
        mult = len(indices) // deg
        if sorted(indices) != sorted(list(range(deg)) * mult):
            raise NonIntegral(
                f"entries cover only part of the real-root set of {list(minpoly)}"
            )
        lead = Fraction(minpoly[-1])
        monic = [Fraction(c) / lead for c in minpoly]
        for _ in range(mult):
            out.append(monic)
    return out


def _power_sums_of_charpoly(poly: Sequence[Fraction], n_max: int) -> list[Fraction]:
    """p_1..p_{n_max} of the roots of a monic polynomial (Newton)."""
    k = len(poly) - 1
    # e_j with sign: coeff of x^(k-j) equals (-1)^j e_j
    e = [Fraction(1)] + [(-1) ** j * poly[k - j] for j in range(1, k + 1)]
    p: list[Fraction] = []
    for n in range(1, n_max + 1):
        if n <= k:
            acc = Fraction(0)
            for i in range(1, n):
                acc += (-1) ** (i - 1) * e[i] * p[n - i - 1]
            acc += (-1) ** (n - 1) * n * e[n]
            p.append(acc)
        else:
            acc = Fraction(0)
            for i in range(1, k + 1):
                acc += (-1) ** (i - 1) * e[i] * p[n - i - 1]
            p.append(acc)
    return p


def _tuple_power_sums(wt: WeilTuple, n_max: int) -> list[Fraction]:
    total = [Fraction(0)] * n_max
    for orbit in _orbits(wt):
        for i, v in enumerate(_power_sums_of_charpoly(orbit, n_max)):
            total[i] += v
    return total


def _s_basis_coeffs(q: int, n: int) -> list[list[Fraction]]:
    """Coefficient lists of s_0..s_n as polynomials in x (weights in q)."""
    s = [[Fraction(2)], [Fraction(0), Fraction(1)]]
    while len(s) <= n:
        prev, prev2 = s[-1], s[-2]
        nxt = exactpoly.poly_sub([Fraction(0)] + prev, exactpoly.poly_scale(prev2, Fraction(q)))
        s.append(nxt)
    return s


def _frobenius_sums(wt: WeilTuple, n_max: int) -> list[Fraction]:
    """S_n = sum_j s_n(x_j) for n = 1..n_max, exactly."""
    p = [Fraction(wt.g)] + _tuple_power_sums(wt, n_max)  # p[0] = g
    s = _s_basis_coeffs(wt.q, n_max)
    out = []
    for n in range(1, n_max + 1):
        acc = Fraction(0)
        for k, c in enumerate(s[n]):
            acc += c * p[k]
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# counts -> power sums -> elementary symmetric functions
# ---------------------------------------------------------------------------


def power_sums_from_counts(q: int, counts: Sequence[int]) -> list[int]:
    """Power sums p_n = sum_j x_j^n from #X(F_{q^n}), n = 1..len(counts).

    Inverts the s-basis: x^n expands as
    ``sum_{i < n/2} C(n,i) q^i s_{n-2i} (+ C(n,n/2) q^{n/2} for even n)``,
    and each S_m = q^m + 1 - #X(F_{q^m}) is the sum of s_m over the tuple.
    """
    g = len(counts)
    S = [q**m + 1 - counts[m - 1] for m in range(1, g + 1)]
    p = []
    for n in range(1, g + 1):
        acc = Fraction(0)
        for i in range(0, (n - 1) // 2 + 1):
            acc += comb(n, i) * Fraction(q) ** i * S[n - 2 * i - 1]
        if n % 2 == 0:
            acc += comb(n, n // 2) * Fraction(q) ** (n // 2) * g
        if acc.denominator != 1:
            raise NonIntegral(f"power sum p_{n} = {acc} is not an integer")
        p.append(int(acc))
    return p


def newton_to_elementary(power_sums: Sequence) -> list[Fraction]:
    """Elementary symmetric functions from power sums (Newton identities)."""
    if len(power_sums) > 8:
        raise WeilRootsError("elementary solve capped at 8 power sums")
    p = [_frac(v) for v in power_sums]
    e = [Fraction(1)]
    for k in range(1, len(p) + 1):
        acc = Fraction(0)
        for i in range(1, k + 1):
            acc += (-1) ** (i - 1) * e[k - i] * p[i - 1]
        e.append(acc / k)
    return e[1:]


def elementary_to_power_sums(elementary: Sequence, n_max: int | None = None) -> list[Fraction]:
    """Inverse of :func:`newton_to_elementary` (test oracle and CLI echo)."""
    e = [_frac(v) for v in elementary]
    g = len(e)
    poly = [Fraction(0)] * (g + 1)
    poly[g] = Fraction(1)
    for j in range(1, g + 1):
        poly[g - j] = (-1) ** j * e[j - 1]
    return _power_sums_of_charpoly(poly, n_max if n_max is not None else g)


# ---------------------------------------------------------------------------
# factoring the characteristic polynomial into exact entries
# ---------------------------------------------------------------------------


def _int_divisors(n: int) -> list[int]:
    n = abs(n)
    if n == 0:
        return [0]
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.extend([d, n // d])
        d += 1
    return sorted(set(out))


def _clear_denominators(poly: Sequence[Fraction]) -> list[int]:
    den = 1
    for c in poly:
        den = den * c.denominator // gcd(den, c.denominator)
    return [int(c * den) for c in poly]


def _rational_roots(poly: list[Fraction]) -> list[Fraction]:
    """All rational roots with multiplicity.

    Candidates num/den with num | constant and den | leading coefficient
    of the cleared-denominator polynomial cover every rational root,
    including those of deflated quotients, so a single candidate sweep
    with repeated deflation is complete.
    """
    ints = _clear_denominators(poly)
    while ints and ints[-1] == 0:
        ints.pop()
    if len(ints) <= 1:
        return []
    work = [Fraction(c) for c in ints]
    roots = []
    while work[0] == 0 and exactpoly.degree(work) > 0:
        roots.append(Fraction(0))
        work = work[1:]
    if exactpoly.degree(work) <= 0:
        return roots
    candidates = []
    base = _clear_denominators(work)
    for num in _int_divisors(base[0]):
        for dnm in _int_divisors(base[-1]):
            if dnm == 0 or num == 0:
                continue
            candidates.extend([Fraction(num, dnm), Fraction(-num, dnm)])
    for r in sorted(set(candidates)):
        while exactpoly.degree(work) > 0 and exactpoly.poly_eval(work, r) == 0:
            roots.append(r)
            work, rem = exactpoly.poly_divmod(work, [-r, Fraction(1)])
            if rem:
                raise WeilRootsError("deflation failed (factoring bug)")
    return roots


def _try_monic_quadratic_split(
    poly: list[Fraction], root_bound: Fraction
) -> tuple[list[Fraction], list[Fraction]] | None:
    """Split a monic integer polynomial as (x^2+bx+c) * rest, if possible.

    ``root_bound`` bounds |every real root|, so quadratic factors satisfy
    |b| <= 2*root_bound and |c| <= root_bound^2, keeping the scan short.
    """
    if any(c.denominator != 1 for c in poly) or poly[-1] != 1:
        return None
    const = int(poly[0])
    if const == 0:
        return None
    bmax = int(2 * root_bound) + 1
    cmax = int(root_bound * root_bound) + 1
    for c in _int_divisors(const):
        if c > cmax:
            continue
        for cc in (c, -c):
            for b in range(-bmax, bmax + 1):
                quad = [Fraction(cc), Fraction(b), Fraction(1)]
                quot, rem = exactpoly.poly_divmod(poly, quad)
                if not rem:
                    return quad, quot
    return None


def solve_weil_tuple(elementary: Sequence, q: int) -> WeilTuple:
    """Recover the Weil tuple from its elementary symmetric functions.

    Factors the monic characteristic polynomial over the rationals:
    rational roots become exact entries, quadratic factors become exact
    conjugate pairs, and higher-degree factors are isolated as certified
    algebraic numbers carrying their defining polynomial.  Rejects tuples
    with non-real entries or entries beyond the Weil bound.
    """
    e = [_frac(v) for v in elementary]
    g = len(e)
    if g > 5:
        raise WeilRootsError("tuple solve capped at g <= 5")
    poly = [Fraction(0)] * (g + 1)
    poly[g] = Fraction(1)
    for j in range(1, g + 1):
        poly[g - j] = (-1) ** j * e[j - 1]

    entries: list = []
    work = list(poly)
    for r in _rational_roots(work):
        entries.append(r)
        work, rem = exactpoly.poly_divmod(work, [-r, Fraction(1)])
        if rem:
            raise WeilRootsError("deflation failed (factoring bug)")
    # split remaining high-degree blocks into monic quadratics where possible
    root_bound = Fraction(2 * (isqrt(4 * q) + 1))  # > 2*sqrt(q) >= |x_i|
    blocks: list[list[Fraction]] = []
    queue = [work] if exactpoly.degree(work) > 0 else []
    while queue:
        blk = queue.pop()
        if exactpoly.degree(blk) <= 3:
            blocks.append(blk)
            continue
        split = _try_monic_quadratic_split(blk, root_bound)
        if split is None:
            blocks.append(blk)
        else:
            quad, rest = split
            queue.append(quad)
            if exactpoly.degree(rest) > 0:
                queue.append(rest)
    for blk in blocks:
        dg = exactpoly.degree(blk)
        if dg == 2:
            u, v = blk[1] / blk[2], blk[0] / blk[2]
            disc = u * u - 4 * v
            if disc < 0:
                raise NotTotallyReal(f"x^2 + {u}x + {v} has complex roots")
            root = QuadNum.sqrt(disc) * Fraction(1, 2)
            if isinstance(root, QuadNum) and root.b == 0:
                entries.extend([-u / 2 + root.a, -u / 2 - root.a])
            else:
                entries.extend([-u / 2 + root, -u / 2 - root])
        elif dg >= 3:
            den = 1
            for c in blk:
                den = den * c.denominator // __import__("math").gcd(den, c.denominator)
            ints = [int(c * den) for c in blk]
            n_real = exactpoly.total_real_roots([Fraction(c) for c in ints])
            if n_real != dg:
                raise NotTotallyReal(f"{ints} has {dg - n_real} non-real roots")
            entries.extend(exactpoly.real_algebraic_roots(ints))
        elif dg == 1:
            entries.append(-blk[0] / blk[1])
    return make_weil_tuple(q, entries)


def weil_tuple_from_counts(q: int, counts: Sequence[int], g: int | None = None) -> WeilTuple:
    """Counts -> tuple; extra counts beyond n = g are verified, not used."""
    if g is None:
        g = len(counts)
    if len(counts) < g:
        raise WeilRootsError(f"need counts for n = 1..{g}")
    wt = solve_weil_tuple(newton_to_elementary(power_sums_from_counts(q, counts[:g])), q)
    for n in range(g + 1, len(counts) + 1):
        predicted = counts_from_roots(wt, n)
        if predicted != counts[n - 1]:
            raise InconsistentExtraCounts(
                f"count for n={n} is {counts[n - 1]} but the solved tuple gives {predicted}"
            )
    return wt


def counts_from_roots(wt: WeilTuple, n: int) -> int:
    """#X(F_{q^n}) = q^n + 1 - sum_j s_n(x_j), computed exactly."""
    S = _frobenius_sums(wt, n)[n - 1]
    value = Fraction(wt.q) ** n + 1 - S
    if value.denominator != 1:
        raise NonIntegral(f"count over F_(q^{n}) is {value}, not an integer")
    return int(value)


# ---------------------------------------------------------------------------
# L-polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LPolynomial:
    """Numerator of the zeta function: prod_j (1 - x_j T + q T^2)."""

    q: int
    g: int
    coeffs: tuple[int, ...]

    def functional_equation_ok(self) -> bool:
        return all(
            self.coeffs[2 * self.g - i] == self.q ** (self.g - i) * self.coeffs[i]
            for i in range(0, self.g + 1)
        )

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                terms.append(f"{c}*T^{i}" if i > 1 else f"{c}*T")
        return " + ".join(terms)


def l_polynomial(wt: WeilTuple) -> LPolynomial:
    """Expand prod_j (1 - x_j T + q T^2) exactly into integer coefficients.

    Works orbit by orbit: the factor of an orbit with characteristic
    polynomial m of degree k is T^k * m((1 + q T^2)/T), a polynomial
    identity with rational coefficients.
    """
    q = wt.q
    total = [Fraction(1)]
    base = [Fraction(1), Fraction(0), Fraction(q)]  # 1 + q T^2
    for orbit in _orbits(wt):
        k = len(orbit) - 1
        factor = [Fraction(0)]
        base_pow = [Fraction(1)]
        powers = [list(base_pow)]
        for _ in range(k):
            base_pow = exactpoly.poly_mul(base_pow, base)
            powers.append(list(base_pow))
        for i, m_i in enumerate(orbit):
            # m_i * (1 + qT^2)^i * T^(k-i)
            term = exactpoly.poly_scale(powers[i], m_i)
            term = [Fraction(0)] * (k - i) + term
            factor = exactpoly.poly_add(factor, term)
        total = exactpoly.poly_mul(total, factor)
    if len(total) != 2 * wt.g + 1:
        raise NonIntegral("L-polynomial has the wrong degree (invalid tuple)")
    coeffs = []
    for c in total:
        if c.denominator != 1:
            raise NonIntegral(f"L-polynomial coefficient {c} is not an integer")
        coeffs.append(int(c))
    lp = LPolynomial(q=q, g=wt.g, coeffs=tuple(coeffs))
    if lp.coeffs[0] != 1 or not lp.functional_equation_ok():
        raise NonIntegral("functional equation fails (invalid tuple)")
    return lp


# ---------------------------------------------------------------------------
# the explicit-formula identity
# ---------------------------------------------------------------------------


def verify_serre_identity(f: TrigPolynomial, wt: WeilTuple, B: Sequence[int]) -> Real:
    """Residual of the explicit-formula identity; must contain zero.

    The identity ties the polynomial evaluated at the Frobenius angles to
    the closed-point counts:

        sum_j f(theta_j) + sum_d d B_d psi_d(1/sq) = g + psi(1/sq) + psi(sq)

    with cos(n theta_j) = s_n(x_j) / (2 q^(n/2)).  B must supply B_1
    through at least B_(r-1).  The return value is LHS - RHS, exact when
    the radicands allow and a certified interval otherwise.
    """
    if len(B) < f.r - 1:
        raise WeilRootsError(f"need B_1..B_{f.r - 1}; got {len(B)} values")
    q = wt.q
    inv = QuadNum.sqrt(Fraction(1, q))
    sq = QuadNum.sqrt(q)
    S = _frobenius_sums(wt, f.r - 1)
    residual = psi_eval(f, inv) * (-1) - psi_eval(f, sq)
    for n in range(1, f.r):
        residual = residual + f.coefficient(n) * S[n - 1] * inv**n
    for d in range(1, f.r):
        residual = residual + d * B[d - 1] * psi_d_eval(f, d, inv)
    return residual


# ---------------------------------------------------------------------------
# Jacobian splitting exclusion
# ---------------------------------------------------------------------------


def jacobian_excluded_tuple(wt: WeilTuple) -> bool:
    """Whether the tuple is ruled out by the abelian-variety splitting test.

    The tuple cannot come from a curve when its Galois orbits admit a
    bipartition with every cross-difference an algebraic unit.  For
    integer characteristic polynomials this is equivalently: the graph on
    orbits whose edges join pairs with |resultant| != 1 is disconnected.
    """
    orbits = _orbits(wt)
    for orbit in orbits:
        for c in orbit:
            if c.denominator != 1:
                raise WeilRootsError("splitting test needs algebraic-integer entries")
    k = len(orbits)
    if k < 2:
        return False
    # union-find over the complement of the all-units relation
    parent = list(range(k))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(k):
        for j in range(i + 1, k):
            res = exactpoly.resultant(orbits[i], orbits[j])
            if abs(res) != 1:
                parent[find(i)] = find(j)
    roots = {find(i) for i in range(k)}
    return len(roots) > 1

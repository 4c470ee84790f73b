"""Brute-force point-counting oracle over small finite fields.

This module is the trusted ground truth for every curve count asserted by
the rest of the package: it enumerates field elements and applies the
defining equation directly, with no zeta-function shortcuts, so its output
is an independent check on the algebraic machinery in
:mod:`pointbound.weilroots`.

Three curve families are supported, matching the models that actually show
up at desk scale:

* hyperelliptic ``y^2 = f(x)`` in odd characteristic with ``deg f`` in
  {5, 6} (genus 2 smooth models);
* Artin-Schreier ``y^2 + y = N(x)/D(x)`` in characteristic 2 with
  ``gcd(N, D) = 1`` and only odd-order poles (``D`` squarefree covers the
  finite ones);
* smooth plane curves ``F(x, y, z) = 0`` given by a homogeneous polynomial.

Counting conventions (degree-1 places of the smooth model):

* hyperelliptic: each affine ``x`` contributes ``1 + chi(f(x))`` points
  where ``chi`` is the quadratic character with ``chi(0) = 0``; at
  infinity, degree 5 adds one point and degree 6 adds two exactly when the
  leading coefficient is a square in the counting field.
* Artin-Schreier: a non-pole ``x`` contributes 2 when
  ``Tr(N(x)/D(x)) = 0`` and 0 otherwise; each simple pole contributes one
  ramified place.  At infinity, ``deg N < deg D`` gives value 0 (hence 2
  places), ``deg N = deg D`` gives the leading-coefficient ratio (2 places
  iff its trace vanishes), and an odd-order pole gives 1 place.
* plane: projective points split over the charts ``z = 1``, then
  ``z = 0, y = 1``, then ``(1 : 0 : 0)``; every point found is
  spot-checked against the vanishing of all three partials.

Fields are built on fixed canonical moduli (the lexicographically first
monic irreducible when no precomputed constant is shipped), and
extensions embed the base field by sending its generator to the smallest
root of the base modulus, so printed element values are reproducible.

Enumeration is a desk-scale tool: counts refuse to enumerate more than
2^24 points.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import PointboundError
from .numerics import factor_prime_power

__all__ = [
    "FiniteField",
    "get_field",
    "HyperellipticModel",
    "ArtinSchreierModel",
    "PlaneModel",
    "CurveCounts",
    "count_hyperelliptic",
    "count_artin_schreier",
    "count_plane",
    "count_points",
    "curve_counts",
    "degree_d_points",
    "parse_curve",
    "load_curves",
    "DICKSON_QUARTIC",
    "FForacleError",
    "NotSquarefree",
    "WrongCharacteristic",
    "EvenOrderPole",
    "NotCoprime",
    "SingularModel",
    "InconsistentCounts",
    "ExtensionTooLarge",
    "ENUMERATION_CAP",
]

ENUMERATION_CAP = 1 << 24
FIELD_CAP = 1 << 20


class FForacleError(PointboundError):
    module = "fforacle"


class NotSquarefree(FForacleError):
    pass


class WrongCharacteristic(FForacleError):
    pass


class EvenOrderPole(FForacleError):
    pass


class NotCoprime(FForacleError):
    pass


class SingularModel(FForacleError):
    pass


class InconsistentCounts(FForacleError):
    pass


class ExtensionTooLarge(FForacleError):
    pass


# canonical moduli, ascending coefficients, monic; computed as the
# lexicographically-first irreducible (by base-p encoding) and frozen
_CANONICAL_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 1, 0, 1, 1, 0, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (3, 6): (2, 1, 0, 0, 0, 0, 1),
    (3, 8): (2, 0, 1, 0, 0, 0, 0, 0, 1),
    (5, 2): (2, 0, 1),
    (5, 3): (1, 1, 0, 1),
    (7, 2): (1, 0, 1),
}


def _poly_divmod_p(num: list[int], den: Sequence[int], p: int) -> list[int]:
    """Remainder of num by monic-normalizable den over F_p."""
    num = [c % p for c in num]
    while num and num[-1] == 0:
        num.pop()
    den = list(den)
    inv_lead = pow(den[-1], -1, p)
    dl = len(den)
    while len(num) >= dl:
        c = (num[-1] * inv_lead) % p
        off = len(num) - dl
        for i, dc in enumerate(den):
            num[off + i] = (num[off + i] - c * dc) % p
        num.pop()
        while num and num[-1] == 0:
            num.pop()
    return num


def _is_irreducible_p(mod: Sequence[int], p: int) -> bool:
    """Brute trial division by every monic polynomial of degree <= e/2."""
    e = len(mod) - 1
    if e < 1 or mod[0] % p == 0 and e > 1:
        return False
    for d in range(1, e // 2 + 1):
        for enc in range(p**d):
            g, m = [], enc
            for _ in range(d):
                g.append(m % p)
                m //= p
            g.append(1)
            if not _poly_divmod_p(list(mod), g, p):
                return False
    return True


def _search_modulus(p: int, e: int) -> tuple[int, ...]:
    for enc in range(p**e):
        digits, m = [], enc
        for _ in range(e):
            digits.append(m % p)
            m //= p
        cand = tuple(digits + [1])
        if _is_irreducible_p(cand, p):
            return cand
    raise FForacleError(f"no irreducible polynomial of degree {e} over F_{p}")


class FiniteField:
    """F_q as integer-encoded coordinate vectors over F_p.

    Element ``sum a_i x^i`` is encoded as the integer ``sum a_i p^i``.
    Multiplication goes through exp/log tables built on a fixed primitive
    element, so all operations are table lookups after construction.
    """

    def __init__(self, q: int):
        p, e = factor_prime_power(q)
        if q > FIELD_CAP:
            raise ExtensionTooLarge(f"field of size {q} exceeds the construction cap {FIELD_CAP}")
        self.p, self.e, self.q = p, e, q
        self._pp = [p**i for i in range(e + 1)]
        if e == 1:
            self.modulus = (0, 1)  # formal x; arithmetic is plain mod p
        else:
            mod = _CANONICAL_MODULI.get((p, e))
            if mod is None:
                mod = _search_modulus(p, e)
            if not _is_irreducible_p(mod, p):
                raise FForacleError(f"canonical modulus for ({p},{e}) is reducible")
            self.modulus = mod
        self._digits = [self._decompose(a) for a in range(q)] if e > 1 else None
        if e > 1:
            self._build_log_tables()
        else:
            self._exp = None
            self._log = None

    # -- raw polynomial-basis helpers (construction only) -----------------

    def _decompose(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def _encode(self, digits: Iterable[int]) -> int:
        out = 0
        for i, d in enumerate(digits):
            out += (d % self.p) * self._pp[i]
        return out

    def _mul_raw(self, a: int, b: int) -> int:
        p, e = self.p, self.e
        da, db = self._digits[a], self._digits[b]
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        # reduce modulo the (monic) modulus
        mod = self.modulus
        for k in range(len(prod) - 1, e - 1, -1):
            c = prod[k] % p
            if c:
                for i in range(e):
                    prod[k - e + i] -= c * mod[i]
            prod[k] = 0
        return self._encode(prod[:e])

    def _pow_raw(self, a: int, n: int) -> int:
        out, b = 1, a
        while n:
            if n & 1:
                out = self._mul_raw(out, b)
            b = self._mul_raw(b, b)
            n >>= 1
        return out

    def _build_log_tables(self):
        # find a primitive element: order q-1 checked on prime factors
        fac = []
        m = self.q - 1
        d = 2
        while d * d <= m:
            if m % d == 0:
                fac.append(d)
                while m % d == 0:
                    m //= d
            d += 1
        if m > 1:
            fac.append(m)
        gen = None
        for cand in range(2, self.q):
            if all(self._pow_raw(cand, (self.q - 1) // f) != 1 for f in fac):
                gen = cand
                break
        if gen is None:
            raise FForacleError("no primitive element found (field construction bug)")
        self.generator = gen
        exp = [1] * (2 * (self.q - 1))
        log = [0] * self.q
        acc = 1
        for i in range(self.q - 1):
            exp[i] = acc
            log[acc] = i
            acc = self._mul_raw(acc, gen)
        if acc != 1:
            raise FForacleError("generator order check failed (field construction bug)")
        for i in range(self.q - 1, 2 * (self.q - 1)):
            exp[i] = exp[i - (self.q - 1)]
        self._exp, self._log = exp, log

    # -- field API ---------------------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        da, db = self._digits[a], self._digits[b]
        return self._encode(x + y for x, y in zip(da, db))

    def neg(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return self._encode(-x for x in self._digits[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if self.e == 1:
            return pow(a, -1, self.p)
        return self._exp[(self.q - 1) - self._log[a]]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(a), -n)
        if a == 0:
            return 0 if n else 1
        if self.e == 1:
            return pow(a, n, self.p)
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    def is_square(self, a: int) -> bool:
        """Quadratic-residue test; in characteristic 2 everything is a square."""
        if a == 0 or self.p == 2:
            return True
        if self.e == 1:
            return pow(a, (self.p - 1) // 2, self.p) == 1
        return self._log[a] % 2 == 0

    def trace(self, a: int) -> int:
        """Trace to the prime field, returned as an integer in [0, p)."""
        t, b = 0, a
        for _ in range(self.e):
            t = self.add(t, b)
            b = self.pow(b, self.p)
        if t >= self.p:
            raise FForacleError("trace left the prime field (field construction bug)")
        return t

    def embedding_from(self, sub: "FiniteField"):
        """Field homomorphism F_{p^e'} -> self, with e' | e.

        Sends the polynomial-basis generator of ``sub`` to the smallest
        root of ``sub.modulus`` in this field, which pins the embedding.
        """
        if sub.p != self.p or self.e % sub.e != 0:
            raise FForacleError(f"F_{sub.q} does not embed into F_{self.q}")
        if sub.e == 1:
            return lambda a: a
        if sub.q == self.q and sub.modulus == self.modulus:
            return lambda a: a
        mod = sub.modulus
        root = None
        for t in self.elements():
            acc = 0
            for c in reversed(mod):
                acc = self.add(self.mul(acc, t), c % self.p)
            if acc == 0:
                root = t
                break
        if root is None:
            raise FForacleError("no root of the base modulus found (embedding bug)")
        powers = [1]
        for _ in range(sub.e - 1):
            powers.append(self.mul(powers[-1], root))

        def emb(a: int) -> int:
            out = 0
            for digit, rp in zip(sub._decompose_any(a), powers):
                if digit:
                    out = self.add(out, self.mul(digit, rp))
            return out

        return emb

    def _decompose_any(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def __repr__(self):
        return f"FiniteField(q={self.q})"


@functools.lru_cache(maxsize=None)
def get_field(q: int) -> FiniteField:
    return FiniteField(q)


# ---------------------------------------------------------------------------
# polynomials over a field (encoded coefficient lists, ascending)
# ---------------------------------------------------------------------------


def _fnormalize(F: FiniteField, p: Sequence[int]) -> list[int]:
    out = list(p)
    while out and out[-1] == 0:
        out.pop()
    return out


def _fdegree(F: FiniteField, p: Sequence[int]) -> int:
    return len(_fnormalize(F, p)) - 1


def _feval(F: FiniteField, p: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(list(p)):
        acc = F.add(F.mul(acc, x), c)
    return acc


def _fderiv(F: FiniteField, p: Sequence[int]) -> list[int]:
    out = []
    for i, c in enumerate(p):
        if i == 0:
            continue
        out.append(F.mul(c, i % F.p))
    return _fnormalize(F, out)


def _fdivmod(F: FiniteField, num: Sequence[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    num = _fnormalize(F, num)
    den = _fnormalize(F, den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = F.inv(den[-1])
    quot = [0] * max(0, len(num) - len(den) + 1)
    while len(num) >= len(den) and num:
        c = F.mul(num[-1], inv_lead)
        off = len(num) - len(den)
        quot[off] = c
        for i, dc in enumerate(den):
            num[off + i] = F.sub(num[off + i], F.mul(c, dc))
        num.pop()
        while num and num[-1] == 0:
            num.pop()
    return quot, num


def _fgcd(F: FiniteField, a: Sequence[int], b: Sequence[int]) -> list[int]:
    a, b = _fnormalize(F, a), _fnormalize(F, b)
    while b:
        _, r = _fdivmod(F, a, b)
        a, b = b, r
    if a:
        inv = F.inv(a[-1])
        a = [F.mul(c, inv) for c in a]
    return a


def _is_squarefree(F: FiniteField, p: Sequence[int]) -> bool:
    return _fdegree(F, _fgcd(F, p, _fderiv(F, p))) <= 0


# ---------------------------------------------------------------------------
# curve models
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HyperellipticModel:
    """y^2 = f(x) over F_q, odd characteristic, deg f in {5, 6}."""

    q: int
    f: tuple[int, ...]

    def __post_init__(self):
        F = get_field(self.q)
        if F.p == 2:
            raise WrongCharacteristic("hyperelliptic model needs odd characteristic")
        d = _fdegree(F, self.f)
        if d not in (5, 6):
            raise FForacleError(f"deg f must be 5 or 6, got {d}")
        if not _is_squarefree(F, self.f):
            raise NotSquarefree("f has a repeated root; y^2 = f(x) is not a smooth model")

    def count(self, n: int = 1) -> int:
        return count_hyperelliptic(get_field(self.q), self.f, n)

    def describe(self) -> str:
        return f"y^2 = f(x) over F_{self.q}, f = {list(self.f)}"


@dataclass(frozen=True)
class ArtinSchreierModel:
    """y^2 + y = N(x)/D(x) over F_q, characteristic 2."""

    q: int
    num: tuple[int, ...]
    den: tuple[int, ...]

    def __post_init__(self):
        F = get_field(self.q)
        if F.p != 2:
            raise WrongCharacteristic("Artin-Schreier model needs characteristic 2")
        if _fdegree(F, _fgcd(F, self.num, self.den)) > 0:
            raise NotCoprime("numerator and denominator share a factor")
        if not _is_squarefree(F, self.den):
            raise NotSquarefree("denominator must be squarefree (simple finite poles)")
        gap = _fdegree(F, self.num) - _fdegree(F, self.den)
        if gap > 0 and gap % 2 == 0:
            raise EvenOrderPole(
                "even-order pole at infinity; reduction of such models is unsupported"
            )

    def count(self, n: int = 1) -> int:
        return count_artin_schreier(get_field(self.q), self.num, self.den, n)

    def describe(self) -> str:
        return f"y^2 + y = N(x)/D(x) over F_{self.q}, N = {list(self.num)}, D = {list(self.den)}"


@dataclass(frozen=True)
class PlaneModel:
    """Smooth projective plane curve F(x, y, z) = 0 over F_q."""

    q: int
    monomials: tuple[tuple[tuple[int, int, int], int], ...]

    def __post_init__(self):
        degs = {i + j + k for (i, j, k), c in self.monomials if c}
        if len(degs) != 1:
            raise FForacleError("plane model polynomial must be homogeneous")

    def count(self, n: int = 1) -> int:
        return count_plane(get_field(self.q), dict(self.monomials), n)

    def describe(self) -> str:
        terms = " + ".join(
            f"{c}*x^{i}y^{j}z^{k}" for (i, j, k), c in self.monomials if c
        )
        return f"{terms} = 0 over F_{self.q}"


CurveModel = HyperellipticModel | ArtinSchreierModel | PlaneModel


@dataclass(frozen=True)
class CurveCounts:
    """q together with #X(F_{q^n}) for n = 1..N and a provenance tag."""

    q: int
    counts: tuple[int, ...]
    source: str = "oracle"

    def count(self, n: int) -> int:
        if not 1 <= n <= len(self.counts):
            raise FForacleError(f"count for n={n} not available (have 1..{len(self.counts)})")
        return self.counts[n - 1]


def _extension(F: FiniteField, n: int, points: int):
    if points > ENUMERATION_CAP:
        raise ExtensionTooLarge(
            f"enumerating {points} points exceeds the cap 2^24; this oracle is desk-scale"
        )
    E = get_field(F.q**n) if F.q**n <= FIELD_CAP else None
    if E is None:
        raise ExtensionTooLarge(f"extension field of size {F.q**n} is beyond the field cap")
    return E, E.embedding_from(F)


def count_hyperelliptic(F: FiniteField, f: Sequence[int], n: int = 1) -> int:
    """Degree-1 places of the smooth model of y^2 = f(x) over F_{q^n}."""
    if F.p == 2:
        raise WrongCharacteristic("hyperelliptic counting needs odd characteristic")
    fn = _fnormalize(F, f)
    d = len(fn) - 1
    if d not in (5, 6):
        raise FForacleError(f"deg f must be 5 or 6, got {d}")
    if not _is_squarefree(F, fn):
        raise NotSquarefree("f has a repeated root")
    E, emb = _extension(F, n, F.q**n)
    fe = [emb(c) for c in fn]
    total = 0
    for x in E.elements():
        v = _feval(E, fe, x)
        if v == 0:
            total += 1
        elif E.is_square(v):
            total += 2
    if d == 5:
        total += 1
    else:
        total += 2 if E.is_square(fe[-1]) else 0
    return total


def count_artin_schreier(F: FiniteField, num: Sequence[int], den: Sequence[int], n: int = 1) -> int:
    """Degree-1 places of the smooth model of y^2 + y = N/D over F_{q^n}."""
    if F.p != 2:
        raise WrongCharacteristic("Artin-Schreier counting needs characteristic 2")
    N = _fnormalize(F, num)
    D = _fnormalize(F, den)
    if _fdegree(F, _fgcd(F, N, D)) > 0:
        raise NotCoprime("numerator and denominator share a factor")
    if not _is_squarefree(F, D):
        raise NotSquarefree("denominator must be squarefree")
    gap = len(N) - len(D)
    if gap > 0 and gap % 2 == 0:
        raise EvenOrderPole("even-order pole at infinity is unsupported")
    E, emb = _extension(F, n, F.q**n)
    Ne = [emb(c) for c in N]
    De = [emb(c) for c in D]
    total = 0
    for x in E.elements():
        dv = _feval(E, De, x)
        if dv == 0:
            total += 1  # simple pole: one ramified place
        else:
            u = E.div(_feval(E, Ne, x), dv)
            if E.trace(u) == 0:
                total += 2
    if gap < 0:
        total += 2  # u(inf) = 0 and Tr(0) = 0
    elif gap == 0:
        c = E.div(Ne[-1], De[-1])
        total += 2 if E.trace(c) == 0 else 0
    else:
        total += 1  # odd-order pole at infinity: one ramified place
    return total


def count_plane(F: FiniteField, monomials: dict[tuple[int, int, int], int], n: int = 1) -> int:
    """Projective points of a smooth plane curve over F_{q^n}."""
    degs = {i + j + k for (i, j, k), c in monomials.items() if c}
    if len(degs) != 1:
        raise FForacleError("plane polynomial must be homogeneous")
    E, emb = _extension(F, n, F.q ** (2 * n))
    monos = [((i, j, k), emb(c)) for (i, j, k), c in monomials.items() if c]

    def ev(x: int, y: int, z: int) -> int:
        acc = 0
        for (i, j, k), c in monos:
            acc = E.add(acc, E.mul(E.mul(E.pow(x, i), E.mul(E.pow(y, j), E.pow(z, k))), c))
        return acc

    def partial(var: int):
        out = []
        for (i, j, k), c in monos:
            exps = [i, j, k]
            if exps[var] == 0:
                continue
            scaled = E.mul(c, exps[var] % E.p)
            if scaled == 0:
                continue
            exps[var] -= 1
            out.append((tuple(exps), scaled))
        return out

    partials = [partial(v) for v in range(3)]

    def singular_at(x: int, y: int, z: int) -> bool:
        for pp in partials:
            acc = 0
            for (i, j, k), c in pp:
                acc = E.add(acc, E.mul(E.mul(E.pow(x, i), E.mul(E.pow(y, j), E.pow(z, k))), c))
            if acc != 0:
                return False
        return True

    total = 0
    for x in E.elements():
        for y in E.elements():
            if ev(x, y, 1) == 0:
                if singular_at(x, y, 1):
                    raise SingularModel(f"singular point found over F_{E.q}")
                total += 1
    for x in E.elements():
        if ev(x, 1, 0) == 0:
            if singular_at(x, 1, 0):
                raise SingularModel(f"singular point found over F_{E.q}")
            total += 1
    if ev(1, 0, 0) == 0:
        if singular_at(1, 0, 0):
            raise SingularModel(f"singular point found over F_{E.q}")
        total += 1
    return total


def count_points(model: CurveModel, n: int = 1) -> int:
    return model.count(n)


def curve_counts(model: CurveModel, n_max: int, source: str = "oracle") -> CurveCounts:
    return CurveCounts(
        q=model.q,
        counts=tuple(model.count(n) for n in range(1, n_max + 1)),
        source=source,
    )


def degree_d_points(counts: CurveCounts, d: int) -> int:
    """Closed points of degree d, solved from sum_{e | n} e B_e = #X(F_{q^n}).

    Requires counts for every divisor of d; raises
    :class:`InconsistentCounts` when the recursion leaves a non-integral
    or negative value, which signals a wrong count upstream.
    """
    if d < 1:
        raise FForacleError("degree must be >= 1")
    divisors = [e for e in range(1, d + 1) if d % e == 0]
    B: dict[int, int] = {}
    for e in divisors:
        acc = counts.count(e)
        for f in divisors:
            if f < e and e % f == 0:
                acc -= f * B[f]
        if acc % e != 0 or acc < 0:
            raise InconsistentCounts(
                f"B_{e} = {Fraction(acc, e)} is not a nonnegative integer; counts are inconsistent"
            )
        B[e] = acc // e
    return B[d]


# ---------------------------------------------------------------------------
# tiny text format: one curve per line, `kind; q; coefficients`
# ---------------------------------------------------------------------------


def _parse_element(token: str, p: int, e: int, pp: list[int]) -> int:
    token = token.strip()
    if ":" in token:
        digits = [int(t) % p for t in token.split(":")]
        if len(digits) > e:
            raise FForacleError(f"element vector {token!r} longer than the field degree {e}")
        return sum(d * pp[i] for i, d in enumerate(digits))
    return int(token) % p


def parse_curve(line: str) -> CurveModel:
    """Parse one model line.

    Formats (whitespace-insensitive, ``#`` starts a comment):

    * ``hyp; q; c0,c1,...,cd``          for y^2 = f(x), coefficients ascending
    * ``as; q; n0,...,nk; d0,...,dm``   for y^2 + y = N(x)/D(x)
    * ``plane; q; i.j.k=c i.j.k=c ...`` for homogeneous F(x,y,z) = 0

    Field elements are single integers (prime-field values, negatives
    allowed) or colon-joined F_p coordinate vectors like ``1:2:0``.
    """
    line = line.split("#", 1)[0].strip()
    parts = [s.strip() for s in line.split(";")]
    if len(parts) < 3:
        raise FForacleError(f"malformed curve line: {line!r}")
    kind, qs = parts[0].lower(), parts[1]
    q = int(qs)
    p, e = factor_prime_power(q)
    pp = [p**i for i in range(e + 1)]
    if kind == "hyp":
        coeffs = tuple(_parse_element(t, p, e, pp) for t in parts[2].split(","))
        return HyperellipticModel(q=q, f=coeffs)
    if kind == "as":
        if len(parts) != 4:
            raise FForacleError("as model needs `as; q; N coeffs; D coeffs`")
        num = tuple(_parse_element(t, p, e, pp) for t in parts[2].split(","))
        den = tuple(_parse_element(t, p, e, pp) for t in parts[3].split(","))
        return ArtinSchreierModel(q=q, num=num, den=den)
    if kind == "plane":
        monos = []
        for term in parts[2].split():
            exps_s, _, coeff_s = term.partition("=")
            i, j, k = (int(t) for t in exps_s.split("."))
            monos.append(((i, j, k), _parse_element(coeff_s or "1", p, e, pp)))
        return PlaneModel(q=q, monomials=tuple(monos))
    raise FForacleError(f"unknown curve kind {kind!r}")


def load_curves(path) -> list[CurveModel]:
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            stripped = raw.split("#", 1)[0].strip()
            if stripped:
                out.append(parse_curve(stripped))
    return out


# Dickson's plane quartic through all seven rational points of P^2(F_2)
DICKSON_QUARTIC = PlaneModel(
    q=2,
    monomials=(((3, 1, 0), 1), ((2, 2, 0), 1), ((1, 0, 3), 1), ((2, 0, 2), 1), ((0, 3, 1), 1), ((0, 1, 3), 1)),
)

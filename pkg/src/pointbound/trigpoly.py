"""Doubly positive trigonometric polynomials and their construction.

The polynomials here have the shape ``f(theta) = 1 + 2*sum c_n cos(n*theta)``
with all ``c_n >= 0`` and ``f >= 0`` everywhere ("doubly positive").  They
drive every explicit-formula bound in :mod:`pointbound.bounds` through the
two associated power series truncations

    psi(t)   = sum_{n>=1} c_n t^n
    psi_d(t) = sum_{d | n} c_n t^n

Two sources of polynomials:

* :func:`preset` returns the four closed-form optimal polynomials for
  r = 2..5 (exact quadratic-irrational coefficients).
* The Oesterle-style construction: pick a rational threshold ``lam > q``,
  derive the degree parameter ``r`` and mixing weight ``u``
  (:func:`derive_r_u`), solve the phase equation for ``phi0``
  (:func:`solve_phi0`), and assemble certified coefficients
  (:func:`oesterle_coeffs`).  At ``u = 0`` this reproduces the presets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import PointboundError
from . import exactpoly
from .numerics import (
    DEFAULT_BITS,
    CertifiedReal,
    QuadNum,
    Real,
    certified_sign,
    cos_real,
    pi_real,
    sin_real,
    to_float,
    _frac,
    _lift,
)

__all__ = [
    "TrigPolynomial",
    "OesterleParams",
    "preset",
    "derive_r_u",
    "solve_phi0",
    "oesterle_coeffs",
    "construct",
    "psi_eval",
    "psi_d_eval",
    "check_doubly_positive",
    "PositivityReport",
    "InvalidLambda",
    "NoRoot",
    "PositivityViolation",
    "UnsupportedR",
    "MAX_R",
]

MAX_R = 12


class TrigPolyError(PointboundError):
    module = "trigpoly"


class InvalidLambda(TrigPolyError):
    pass


class NoRoot(TrigPolyError):
    pass


class PositivityViolation(TrigPolyError):
    pass


class UnsupportedR(TrigPolyError):
    pass


@dataclass(frozen=True)
class TrigPolynomial:
    """Even cosine polynomial 1 + 2*sum_{n=1}^{r-1} c_n cos(n*theta).

    ``coeffs[n-1]`` holds c_n; entries are exact (Fraction/QuadNum) for
    presets and certified intervals for constructed polynomials.
    """

    r: int
    coeffs: tuple
    provenance: str

    def __post_init__(self):
        if self.r < 2:
            raise TrigPolyError("degree parameter r must be >= 2")
        if len(self.coeffs) != self.r - 1:
            raise TrigPolyError(f"expected {self.r - 1} coefficients, got {len(self.coeffs)}")

    def coefficient(self, n: int):
        """c_n, with c_n = 0 for n >= r."""
        if n < 1:
            raise ValueError("cosine index starts at 1")
        return self.coeffs[n - 1] if n <= self.r - 1 else Fraction(0)

    def eval_float(self, theta):
        """Float evaluation of f(theta); for plots and grid scans only."""
        theta = np.asarray(theta, dtype=float)
        out = np.ones_like(theta)
        for n, c in enumerate(self.coeffs, start=1):
            out = out + 2.0 * to_float(c) * np.cos(n * theta)
        return out

    def __str__(self):
        parts = ["1"]
        for n, c in enumerate(self.coeffs, start=1):
            parts.append(f"2*({c})*cos({n}t)" if not isinstance(c, CertifiedReal) else f"2*[{float(c):.6f}]*cos({n}t)")
        return " + ".join(parts)


@dataclass(frozen=True)
class OesterleParams:
    """Derived data of the construction for a given (q, lam)."""

    q: int
    lam: Fraction
    r: int
    u: QuadNum
    phi0: Real


_HALF = Fraction(1, 2)

_PRESETS: dict[int, tuple] = {
    2: (_HALF,),
    3: (QuadNum(0, _HALF, 2), Fraction(1, 4)),
    4: (QuadNum(Fraction(1, 4), Fraction(1, 4), 5), QuadNum(0, Fraction(1, 5), 5), QuadNum(Fraction(1, 4), Fraction(-1, 20), 5)),
    5: (QuadNum(0, _HALF, 3), Fraction(7, 12), QuadNum(0, Fraction(1, 6), 3), Fraction(1, 12)),
}


def preset(r: int) -> TrigPolynomial:
    """The closed-form optimal polynomial for r in {2, 3, 4, 5}.

    These are the ``u = 0`` members of the construction, with exact
    coefficients:

        r=2: 1 + cos t
        r=3: 1 + sqrt(2) cos t + (1/2) cos 2t
        r=4: 1 + ((1+sqrt5)/2) cos t + (2 sqrt5/5) cos 2t + ((5-sqrt5)/10) cos 3t
        r=5: 1 + sqrt(3) cos t + (7/6) cos 2t + (sqrt3/3) cos 3t + (1/6) cos 4t
    """
    if r not in _PRESETS:
        raise UnsupportedR(f"no preset for r={r}; presets exist for r in {{2,3,4,5}}")
    return TrigPolynomial(r=r, coeffs=_PRESETS[r], provenance=f"preset(r={r})")


def derive_r_u(q: int, lam) -> tuple[int, QuadNum]:
    """Degree parameter and mixing weight for a threshold lam > q.

    ``r`` is the unique integer with sqrt(q)^r < lam <= sqrt(q)^(r+1) and

        u = (sqrt(q)^(r+1) - lam) / (lam*sqrt(q) - sqrt(q)^r),

    an exact element of Q(sqrt q) in [0, 1).
    """
    lam = _frac(lam)
    if lam <= q:
        raise InvalidLambda(f"lam must exceed q; got lam={lam}, q={q}")
    # sqrt(q)^r < lam <= sqrt(q)^(r+1)  <=>  q^r < lam^2 and lam^2 <= q^(r+1)
    lam2 = lam * lam
    r = 1
    while Fraction(q) ** (r + 1) < lam2:
        r += 1
    if r > MAX_R:
        raise UnsupportedR(f"r={r} exceeds the configured cap {MAX_R}")
    sq = QuadNum.sqrt(q)
    u = (sq ** (r + 1) - lam) / (lam * sq - sq**r)
    if not isinstance(u, QuadNum):
        u = QuadNum(u)
    if u.sign() < 0 or (u - 1).sign() >= 0:
        raise TrigPolyError(f"derived u={u} outside [0, 1)")
    return r, u


def solve_phi0(r: int, u) -> Real:
    """The unique phase phi0 in [pi/(r+1), pi/r) with
    cos((r+1)/2 phi0) + u*cos((r-1)/2 phi0) = 0.

    Returned as a certified interval; located by bisection on t = phi/pi
    with certified sign evaluations.
    """
    if r < 2:
        raise TrigPolyError("r must be >= 2")
    uq = u if isinstance(u, QuadNum) else QuadNum(_frac(u)) if isinstance(u, (int, Fraction)) else None
    if uq is not None and uq.sign() == 0:
        return pi_real() / (r + 1)
    pi = pi_real()

    def g(t: Fraction) -> Real:
        phi = pi * t
        return cos_real(phi * Fraction(r + 1, 2)) + u * cos_real(phi * Fraction(r - 1, 2))

    t_lo, t_hi = Fraction(1, r + 1), Fraction(1, r)
    try:
        s_lo = certified_sign(g(t_lo))
        s_hi = certified_sign(g(t_hi))
    except PointboundError as exc:
        raise NoRoot(f"could not certify bracketing signs: {exc}") from exc
    if not (s_lo > 0 and s_hi < 0):
        raise NoRoot(
            f"no sign change on [pi/{r + 1}, pi/{r}): signs ({s_lo}, {s_hi}); invalid (r, u)"
        )

    def fn(bits):
        lo, hi = t_lo, t_hi
        # pi < 4, so t-width below 2^-(bits+3) leaves room for pi's own width
        target = Fraction(1, 1 << (bits + 3))
        while hi - lo > target:
            mid = (lo + hi) / 2
            if certified_sign(g(mid)) > 0:
                lo = mid
            else:
                hi = mid
        pa, pb = pi.bounds(bits + 3)
        return lo * pa, hi * pb

    return CertifiedReal(fn)


def oesterle_coeffs(r: int, phi0) -> TrigPolynomial:
    """Coefficients c_n = ((r-n) cos(n phi0) sin(phi0) + sin((r-n) phi0))
    / (r sin(phi0) + sin(r phi0)) for n = 1..r-1, as certified intervals.
    """
    if r < 2:
        raise TrigPolyError("r must be >= 2")
    if r > MAX_R:
        raise UnsupportedR(f"r={r} exceeds the configured cap {MAX_R}")
    sin1 = sin_real(phi0)
    den = r * sin1 + sin_real(phi0 * r)
    coeffs = []
    for n in range(1, r):
        num = (r - n) * cos_real(phi0 * n) * sin1 + sin_real(phi0 * (r - n))
        c = num / den
        lo, hi = c.bounds(DEFAULT_BITS)
        if hi < 0:
            raise PositivityViolation(
                f"coefficient c_{n} certifiably negative ({float(hi):.3g}); bad phi0"
            )
        coeffs.append(c)
    return TrigPolynomial(r=r, coeffs=tuple(coeffs), provenance=f"constructed(r={r})")


def construct(q: int, lam) -> tuple[TrigPolynomial, OesterleParams]:
    """Full pipeline lam -> (r, u) -> phi0 -> polynomial."""
    r, u = derive_r_u(q, lam)
    phi0 = solve_phi0(r, u)
    f = oesterle_coeffs(r, phi0)
    f = TrigPolynomial(r=f.r, coeffs=f.coeffs, provenance=f"constructed(q={q}, lam={_frac(lam)})")
    return f, OesterleParams(q=q, lam=_frac(lam), r=r, u=u, phi0=phi0)


def psi_eval(f: TrigPolynomial, t: Real) -> Real:
    """psi(t) = sum_{n=1}^{r-1} c_n t^n, exact whenever the radicands allow."""
    total = Fraction(0)
    power = t
    for c in f.coeffs:
        total = total + c * power
        power = power * t
    return total


def psi_d_eval(f: TrigPolynomial, d: int, t: Real) -> Real:
    """psi_d(t) = sum over multiples n of d of c_n t^n."""
    if d < 1:
        raise ValueError("d must be >= 1")
    total = Fraction(0)
    for n in range(d, f.r, d):
        total = total + f.coefficient(n) * t**n
    return total


@dataclass(frozen=True)
class PositivityReport:
    """Outcome of a double-positivity check."""

    ok: bool
    coefficients_ok: bool
    grid_ok: bool
    grid_min: float
    grid_argmin: float
    certified: bool | None
    detail: str


def _coefficient_signs_ok(f: TrigPolynomial) -> bool:
    for c in f.coeffs:
        if isinstance(c, (int, Fraction)):
            if c < 0:
                return False
        elif isinstance(c, QuadNum):
            if c.sign() < 0:
                return False
        else:
            lo, hi = c.bounds(DEFAULT_BITS)
            if hi < 0:
                return False
    return True


def _chebyshev_combination(f: TrigPolynomial, tol: Fraction):
    """P(x) = 1 + 2 sum c_n T_n(x) with f(theta) = P(cos theta).

    Returns (poly, slack) where poly has exact coefficients and
    ``f >= -tol`` on [0, pi] follows from ``poly + (tol - slack) >= 0`` on
    [-1, 1].  Exact coefficient sets give slack 0; interval coefficients
    are replaced by rational midpoints and contribute their certified
    widths to the slack.
    """
    # T_n in the monomial basis, exact integer coefficients
    cheb = [[Fraction(1)], [Fraction(0), Fraction(1)]]
    while len(cheb) < f.r:
        t1, t2 = cheb[-1], cheb[-2]
        cheb.append(exactpoly.poly_sub(exactpoly.poly_scale([Fraction(0)] + t1, 2), t2))
    poly = [Fraction(1)]
    slack = Fraction(0)
    radicand = None
    exact = True
    for c in f.coeffs:
        if isinstance(c, CertifiedReal):
            exact = False
        elif isinstance(c, QuadNum) and c.b != 0:
            if radicand is None:
                radicand = c.d
            elif radicand != c.d:
                exact = False
    for n, c in enumerate(f.coeffs, start=1):
        if exact:
            coef = c
        elif isinstance(c, CertifiedReal):
            width_target = tol / (8 * max(1, f.r - 1))
            c.refine(width_target)
            lo, hi = c.bounds()
            coef = (lo + hi) / 2
            slack += 2 * (hi - lo)  # |2 c_n T_n| off by at most 2*half-width*2
        else:
            # mixed exact radicands: degrade to a certified rational enclosure
            enc = _lift(c)
            enc.refine(tol / (8 * max(1, f.r - 1)))
            lo, hi = enc.bounds()
            coef = (lo + hi) / 2
            slack += 2 * (hi - lo)
        poly = exactpoly.poly_add(poly, exactpoly.poly_scale(cheb[n], 2 * coef))
    return poly, slack


def check_doubly_positive(
    f: TrigPolynomial,
    grid_size: int = 10_000,
    tol: Fraction = Fraction(1, 10**12),
    rigorous: bool = False,
) -> PositivityReport:
    """Verify double positivity: coefficient signs plus a minimum scan.

    The default check scans a uniform grid of ``grid_size`` points on
    [0, pi] in floating point and accepts minima down to ``-tol``.  With
    ``rigorous=True`` the claim ``f >= -tol`` on all of [0, pi] is decided
    exactly via a Sturm-based sign certificate of the Chebyshev-basis
    polynomial on [-1, 1] (rational arithmetic, or a single quadratic
    field for the presets).
    """
    if grid_size < 2:
        raise ValueError("grid_size must be >= 2")
    tol = _frac(tol)
    coeff_ok = _coefficient_signs_ok(f)
    thetas = np.linspace(0.0, float(np.pi), grid_size)
    vals = f.eval_float(thetas)
    k = int(np.argmin(vals))
    grid_min = float(vals[k])
    grid_ok = grid_min >= -float(tol)
    certified = None
    if rigorous:
        poly, slack = _chebyshev_combination(f, tol)
        budget = tol - slack
        if budget < 0:
            certified = False
        else:
            shifted = exactpoly.poly_add(poly, [budget])
            certified = exactpoly.certify_nonneg_on(shifted, Fraction(-1), Fraction(1))
    ok = coeff_ok and grid_ok and (certified is not False)
    detail = []
    if not coeff_ok:
        detail.append("a coefficient is negative")
    if not grid_ok:
        detail.append(f"grid minimum {grid_min:.3e} below -tol")
    if certified is False:
        detail.append("rigorous certificate failed")
    return PositivityReport(
        ok=ok,
        coefficients_ok=coeff_ok,
        grid_ok=grid_ok,
        grid_min=grid_min,
        grid_argmin=float(thetas[k]),
        certified=certified,
        detail="; ".join(detail) if detail else "doubly positive",
    )

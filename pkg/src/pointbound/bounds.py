"""Explicit-formula upper bounds for rational points on (singular) curves.

For a curve over F_q of geometric genus g and arithmetic genus pi >= g,
and any doubly positive polynomial f with series psi, four upper bounds on
the number of rational points are available:

* ``smooth_bound``:      g/psi(1/sq) + 1 + psi(sq)/psi(1/sq)       (pi = g)
* ``singular_bound_ap``: add the singular term (pi-g)/2 inside the bracket
* ``singular_bound_shift``: smooth bound plus (pi - g)
* ``singular_bound_lt``: add (pi-g)/(sq+1) inside the bracket

with sq = sqrt(q).  The fourth is never worse than the second because
1/(sq+1) < 1/2.  ``weil_ap_bound`` is the closed-form generalized Weil
bound q + 1 + 2g sq + pi - g, independent of f.

All values are exact (rational / quadratic irrational) whenever the
radicands allow and certified intervals otherwise; integer bounds are
certified floors, so a bound is never the artifact of float rounding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import PointboundError
from .numerics import (
    QuadNum,
    Real,
    certified_floor,
    certified_sign,
    compare,
    contains_zero,
    is_prime_power,
    _frac,
)
from .trigpoly import TrigPolynomial, construct, preset, psi_eval

__all__ = [
    "CurveParams",
    "BoundEntry",
    "BoundReport",
    "FORMULAS",
    "smooth_bound",
    "singular_bound_ap",
    "singular_bound_shift",
    "singular_bound_lt",
    "weil_ap_bound",
    "best_bound",
    "formula_comparison",
    "FormulaComparison",
    "optimize_lambda",
    "default_polynomials",
    "BoundsError",
    "ZeroPsi",
]

# tie-break order for equal integer bounds
FORMULAS = ("lt", "shift", "ap_explicit", "ap_closed")


class BoundsError(PointboundError):
    module = "bounds"


class ZeroPsi(BoundsError):
    """psi(q^{-1/2}) failed to certify as positive."""


@dataclass(frozen=True)
class CurveParams:
    """(q, g, pi) with q a prime power and pi >= g >= 0."""

    q: int
    g: int
    pi: int

    def __post_init__(self):
        if not is_prime_power(self.q):
            raise BoundsError(f"q={self.q} is not a prime power")
        if self.g < 0 or self.pi < self.g:
            raise BoundsError(f"need pi >= g >= 0, got g={self.g}, pi={self.pi}")


@dataclass(frozen=True)
class BoundEntry:
    formula: str
    poly: str
    value: Real
    bound: int


@dataclass(frozen=True)
class BoundReport:
    params: CurveParams
    entries: tuple[BoundEntry, ...]
    best: BoundEntry


def default_polynomials() -> list[TrigPolynomial]:
    return [preset(r) for r in (2, 3, 4, 5)]


def _psi_pair(f: TrigPolynomial, q: int) -> tuple[Real, Real]:
    """(psi(q^{-1/2}), psi(q^{1/2})), with the first certified positive."""
    inv = QuadNum.sqrt(Fraction(1, q))
    sq = QuadNum.sqrt(q)
    p_inv = psi_eval(f, inv)
    p_sq = psi_eval(f, sq)
    try:
        sign = certified_sign(p_inv)
    except PointboundError as exc:
        raise ZeroPsi(f"could not certify the sign of psi(q^-1/2): {exc}") from exc
    if sign <= 0:
        raise ZeroPsi("psi(q^-1/2) is not positive; the polynomial has no usable mass")
    return p_inv, p_sq


def smooth_bound(f: TrigPolynomial, q: int, g: int) -> Real:
    """g/psi(q^{-1/2}) + 1 + psi(q^{1/2})/psi(q^{-1/2})."""
    p_inv, p_sq = _psi_pair(f, q)
    return g / p_inv + 1 + p_sq / p_inv


def singular_bound_ap(f: TrigPolynomial, q: int, g: int, pi: int) -> Real:
    """(g + (pi-g)/2)/psi(q^{-1/2}) + 1 + psi(q^{1/2})/psi(q^{-1/2})."""
    p_inv, p_sq = _psi_pair(f, q)
    return (g + Fraction(pi - g, 2)) / p_inv + 1 + p_sq / p_inv


def singular_bound_shift(f: TrigPolynomial, q: int, g: int, pi: int) -> Real:
    """Smooth bound applied to the normalization, shifted by pi - g."""
    return smooth_bound(f, q, g) + (pi - g)


def singular_bound_lt(f: TrigPolynomial, q: int, g: int, pi: int) -> Real:
    """(g + (pi-g)/(sqrt q + 1))/psi(q^{-1/2}) + 1 + psi(q^{1/2})/psi(q^{-1/2})."""
    p_inv, p_sq = _psi_pair(f, q)
    sq1 = QuadNum.sqrt(q) + 1
    return (g + (pi - g) / sq1) / p_inv + 1 + p_sq / p_inv


def weil_ap_bound(q: int, g: int, pi: int) -> Real:
    """Closed form q + 1 + 2g sqrt(q) + pi - g (exact quadratic number)."""
    return q + 1 + 2 * g * QuadNum.sqrt(q) + (pi - g)


_SINGULAR = {
    "lt": singular_bound_lt,
    "shift": singular_bound_shift,
    "ap_explicit": singular_bound_ap,
}


def best_bound(
    q: int,
    g: int,
    pi: int,
    polys: Sequence[TrigPolynomial] | None = None,
    formulas: Sequence[str] = FORMULAS,
) -> BoundReport:
    """Evaluate every formula for every polynomial; keep the smallest floor.

    Ties break by formula order (lt, shift, ap_explicit, ap_closed) and
    then by polynomial position, so reports are deterministic.
    """
    params = CurveParams(q, g, pi)
    if polys is None:
        polys = default_polynomials()
    if not polys:
        raise BoundsError("need at least one polynomial")
    entries = []
    for pidx, f in enumerate(polys):
        for formula in formulas:
            if formula == "ap_closed":
                continue
            value = _SINGULAR[formula](f, q, g, pi)
            entries.append((FORMULAS.index(formula), pidx, BoundEntry(
                formula=formula, poly=f.provenance, value=value,
                bound=certified_floor(value),
            )))
    if "ap_closed" in formulas:
        value = weil_ap_bound(q, g, pi)
        entries.append((FORMULAS.index("ap_closed"), len(polys), BoundEntry(
            formula="ap_closed", poly="(none)", value=value,
            bound=certified_floor(value),
        )))
    if not entries:
        raise BoundsError("no formulas selected")
    best = min(entries, key=lambda t: (t[2].bound, t[0], t[1]))[2]
    report_entries = tuple(e for _, _, e in entries)
    return BoundReport(params=params, entries=report_entries, best=best)


@dataclass(frozen=True)
class FormulaComparison:
    """Which singular formula wins for this polynomial at this q.

    ``ap_explicit_vs_shift`` is the sign of psi(q^{-1/2}) - 1/2: positive
    means the explicit AP formula beats the plain shift.
    ``lt_vs_shift`` is the sign of psi(q^{-1/2}) - 1/(sqrt q + 1): positive
    means the LT-style formula beats the shift.
    """

    ap_explicit_vs_shift: int
    lt_vs_shift: int


def formula_comparison(f: TrigPolynomial, q: int) -> FormulaComparison:
    p_inv, _ = _psi_pair(f, q)
    half = Fraction(1, 2)
    thresh = 1 / (QuadNum.sqrt(q) + 1)
    return FormulaComparison(
        ap_explicit_vs_shift=compare(p_inv, half),
        lt_vs_shift=compare(p_inv, thresh),
    )


def optimize_lambda(
    q: int,
    g: int,
    pi: int,
    lambdas: Sequence,
) -> tuple[BoundReport, Fraction]:
    """Sweep constructed polynomials over rational thresholds, keep the best.

    Positivity of each constructed polynomial is checked coefficient-wise
    during construction; candidates whose construction fails are skipped.
    """
    best_report = None
    best_lam = None
    for lam in lambdas:
        lam = _frac(lam)
        try:
            f, _params = construct(q, lam)
            report = best_bound(q, g, pi, [f], formulas=("lt", "shift", "ap_explicit"))
        except PointboundError:
            continue
        if best_report is None or report.best.bound < best_report.best.bound:
            best_report, best_lam = report, lam
    if best_report is None:
        raise BoundsError("no lambda in the sweep produced a usable polynomial")
    return best_report, best_lam

"""Luna-slice weights at critical orbits and basin-of-attraction supports.

The affine slice at a critical pencil point ``(f2, f4)`` is spanned by the
quadric monomials other than ``x1^2`` and the quartic monomials not divisible
by ``x1^2`` other than a chosen anchor of ``f4``.  A stabilizing 1-PS acts on
it after rescaling the equations so that the anchors have weight 0.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .core import HomPolynomial, Monomial, OnePS, monomial_weight, monomials, mono_str, qstr
from .hm import PencilPoint
from .singularities import w_dimensions
from .walls import CERTIFICATE_LAMBDA, critical_curve

F2_ANCHOR: Monomial = (0, 2, 0, 0)
DIMENSION_LAW_TAGS = (2, 4, 5, 6, 7)
# tags sharing a wall with a one-parameter family of critical orbits
FAMILY_TAGS = (4,)


def default_anchor(f4: HomPolynomial) -> Monomial:
    """Lex-smallest monomial of ``f4``: ``x2^4`` for E14, ``x1 x2^3`` for E12."""
    return min(f4.support)


def _is_eigen(f: HomPolynomial, lam: OnePS) -> bool:
    return len({monomial_weight(m, lam) for m in f.support}) <= 1


def stabilizes(p: PencilPoint, lam: OnePS) -> bool:
    """Both equations are λ-eigenvectors."""
    return _is_eigen(p.f2, lam) and _is_eigen(p.f4, lam)


def slice_directions(anchor4: Monomial, anchor2: Monomial = F2_ANCHOR) -> tuple[list, list]:
    """Quadric and quartic monomials spanning the slice."""
    quad = [m for m in monomials(2) if m != anchor2]
    quart = [m for m in monomials(4) if m[1] < 2 and m != anchor4]
    return quad, quart


@dataclass(frozen=True)
class SliceWeightReport:
    """Weights of the stabilizer on the slice, the orbit and the normal space."""

    slice_weights: tuple
    orbit_weights: tuple
    normal_positive: tuple
    normal_negative: tuple
    normal_zero: int
    wp_plus: tuple
    wp_minus: tuple
    diagnostics: tuple = ()

    @property
    def feasible(self) -> bool:
        return not self.diagnostics

    def to_json(self) -> dict:
        s = lambda xs: [qstr(x) for x in xs]  # noqa: E731
        return {"slice_weights": s(self.slice_weights), "orbit_weights": s(self.orbit_weights),
                "normal_positive": s(self.normal_positive),
                "normal_negative": s(self.normal_negative), "normal_zero": self.normal_zero,
                "wp_plus": s(self.wp_plus), "wp_minus": s(self.wp_minus),
                "diagnostics": list(self.diagnostics)}


def _normalize(ws) -> tuple:
    ws = sorted(abs(w) for w in ws)
    if not ws:
        return ()
    den = math.lcm(*(w.denominator for w in ws))
    ints = [int(w * den) for w in ws]
    g = math.gcd(*ints)
    return tuple(Fraction(i, g) for i in ints)


def slice_weights(critical: PencilPoint, lam: OnePS,
                  anchor4: Optional[Monomial] = None) -> SliceWeightReport:
    """Stabilizer weights on the slice, the orbit tangent, and their difference.

    Parameters
    ----------
    critical : PencilPoint
        Critical orbit representative, stabilized by ``lam``.
    lam : OnePS
        Stabilizing one-parameter subgroup.
    anchor4 : monomial, optional
        Monomial of ``f4`` normalized to weight 0; defaults to the lex-smallest.

    Returns
    -------
    SliceWeightReport
        Orbit weights that cannot be matched in the slice are listed in
        ``diagnostics`` rather than dropped.
    """
    if not stabilizes(critical, lam):
        raise ValueError("lambda does not stabilize the critical point")
    anchor4 = anchor4 or default_anchor(critical.f4)
    w = lambda m: monomial_weight(m, lam)  # noqa: E731
    quad, quart = slice_directions(anchor4)
    sl = [w(m) - w(anchor4) for m in quart] + [w(m) - w(F2_ANCHOR) for m in quad]
    r = lam.weights
    orbit = [r[i] - r[j] for i in range(4) for j in range(4) if i != j] + [Fraction(0)] * 2
    rest = Counter(sl)
    rest.subtract(Counter(orbit))
    diag = tuple(f"orbit weight {qstr(k)} missing from the slice ({-v}x)"
                 for k, v in sorted(rest.items()) if v < 0)
    normal = sorted(k for k, v in rest.items() for _ in range(max(v, 0)))
    pos = tuple(x for x in normal if x > 0)
    neg = tuple(x for x in normal if x < 0)
    return SliceWeightReport(tuple(sorted(sl)), tuple(sorted(orbit)), pos, neg,
                             sum(1 for x in normal if x == 0), _normalize(pos), _normalize(neg),
                             diag)


def critical_orbit(tag: int) -> tuple[PencilPoint, OnePS]:
    """Critical curve of a tag with its stabilizing 1-PS."""
    lam = CERTIFICATE_LAMBDA[3 if tag == 4 else tag]
    return critical_curve(tag), lam


def slice_weights_for_tag(tag: int) -> SliceWeightReport:
    p, lam = critical_orbit(tag)
    return slice_weights(p, lam)


def dimension_law_check(report: SliceWeightReport, tag: int) -> bool:
    """``|negative| = dim W_k + 1`` and ``|positive| = (18 - (k+1)) + 1``.

    At the t = 1/3 wall the critical orbits form a one-parameter family; its
    tangent is the zero-weight normal direction and belongs to the W side.
    """
    if tag not in DIMENSION_LAW_TAGS:
        raise ValueError(f"dimension law needs a 1-dimensional stabilizer; tags {DIMENSION_LAW_TAGS}")
    neg = len(report.normal_negative)
    if tag in FAMILY_TAGS:
        neg += report.normal_zero
    elif report.normal_zero:
        return False
    return (report.feasible and neg == w_dimensions()[tag] + 1
            and len(report.normal_positive) == 18 - (tag + 1) + 1)


@dataclass(frozen=True)
class BasinCondition:
    """Perturbation supports flowing to the critical point under λ (plus) or λ^-1."""

    direction: str
    allowed_f2_monomials: frozenset
    allowed_f4_monomials: frozenset
    zero_f2_monomials: frozenset = field(default=frozenset())
    zero_f4_monomials: frozenset = field(default=frozenset())

    def admits(self, f2_pert: HomPolynomial, f4_pert: HomPolynomial) -> bool:
        return (set(f2_pert.support) <= self.allowed_f2_monomials
                and set(f4_pert.support) <= self.allowed_f4_monomials)

    def to_json(self) -> dict:
        return {"direction": self.direction,
                "allowed_f2": [mono_str(m) for m in sorted(self.allowed_f2_monomials, reverse=True)],
                "allowed_f4": [mono_str(m) for m in sorted(self.allowed_f4_monomials, reverse=True)]}


def basin_condition(critical: PencilPoint, lam: OnePS, direction: str = "plus",
                    anchor4: Optional[Monomial] = None) -> BasinCondition:
    """Slice monomials whose rescaled weight is negative (plus) or positive (minus)."""
    if direction not in ("plus", "minus"):
        raise ValueError("direction must be 'plus' or 'minus'")
    if not stabilizes(critical, lam):
        raise ValueError("lambda does not stabilize the critical point")
    anchor4 = anchor4 or default_anchor(critical.f4)
    w = lambda m: monomial_weight(m, lam)  # noqa: E731
    quad, quart = slice_directions(anchor4)
    sign = -1 if direction == "plus" else 1
    ok2 = frozenset(m for m in quad if sign * (w(m) - w(F2_ANCHOR)) > 0)
    ok4 = frozenset(m for m in quart if sign * (w(m) - w(anchor4)) > 0)
    z2 = frozenset(m for m in quad if w(m) == w(F2_ANCHOR))
    z4 = frozenset(m for m in quart if w(m) == w(anchor4))
    return BasinCondition(direction, ok2, ok4, z2, z4)


@dataclass(frozen=True)
class VersalRow:
    weight: Fraction
    monomial: Monomial
    local: tuple  # (power of x, power of y)

    def to_json(self) -> dict:
        a, b = self.local
        loc = "*".join(p for p in (("x" if a == 1 else f"x^{a}") if a else "",
                                    ("y" if b == 1 else f"y^{b}") if b else "") if p) or "1"
        return {"weight": qstr(self.weight), "monomial": mono_str(self.monomial), "local": loc}


def local_image(m: Monomial) -> tuple[int, int]:
    """Image under ``x0 = 1, x1 = y, x2 = y^2, x3 = x`` as (x-power, y-power)."""
    return (m[3], m[1] + 2 * m[2])


def versal_monomial_table(tag: int = 5) -> list[VersalRow]:
    """Positive normal directions at the E14 orbit paired with local monomials."""
    if tag != 5:
        raise NotImplementedError("only the E14 orbit (tag 5) is tabulated")
    p, lam = critical_orbit(5)
    anchor = default_anchor(p.f4)
    rep = slice_weights(p, lam, anchor)
    by_weight = {}
    for m in slice_directions(anchor)[1]:
        by_weight.setdefault(monomial_weight(m, lam) - monomial_weight(anchor, lam), []).append(m)
    rows = []
    for wt in sorted(set(rep.normal_positive), reverse=True):
        (m,) = by_weight[wt]
        rows.append(VersalRow(wt, m, local_image(m)))
    return rows

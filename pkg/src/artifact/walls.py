"""Wall finding for the VGIT of (2, 4) complete intersections on the quadric
cone ``x0*x2 + x1^2``.

Weights are taken along the virtual family ``lambda_alpha = (1, a, 2a-1, -3a)``.
A monomial ``x^A`` has weight ``c0 + a*c1`` with ``c0 = A0 - A2`` and
``c1 = A1 + 2*A2 - 3*A3``, while ``mu(f2, lambda_alpha) = 2a``.  A family of
quartic monomials of common weight ``w < 0`` balances ``f2`` at
``t = -2a / w``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Optional

from .core import (BidegreeForm, HomPolynomial, Monomial, OnePS, Q, Series, mono_str,
                   monomial_weight, monomials)
from .hm import (LAMBDA_TILDE, PencilPoint, bidegree_weight, coset_min_representative,
                 mu_bidegree, mu_form)
from .linalg import nullspace

F2_CONE = HomPolynomial({(1, 0, 1, 0): 1, (0, 2, 0, 0): 1})
HALF = Fraction(1, 2)
CONE_THRESHOLD = Fraction(1, 6)


def lambda_alpha(alpha) -> OnePS:
    a = Q(alpha)
    return OnePS((1, a, 2 * a - 1, -3 * a))


def weight_parts(m: Monomial) -> tuple[int, int]:
    """``(c0, c1)`` with ``weight(m, lambda_alpha) = c0 + alpha*c1``."""
    return m[0] - m[2], m[1] + 2 * m[2] - 3 * m[3]


def balance(p: PencilPoint, lam: OnePS, t) -> Fraction:
    """``mu(f2) + t * min mu(f4)`` without restricting ``t``."""
    return mu_form(p.f2, lam) + Q(t) * coset_min_representative(p.f2, p.f4, lam)[0]


# ---------------------------------------------------------------------------
# critical curves
# ---------------------------------------------------------------------------


def critical_curve(k: int, a=1, b=2) -> PencilPoint:
    """The critical curve ``C*_k``; ``a, b`` parametrize the k = 4 family (b != a^2, b != 0)."""
    a, b = Q(a), Q(b)
    f4 = {
        0: {(0, 0, 0, 4): 1},
        1: {(0, 1, 0, 3): 1},
        2: {(1, 0, 0, 3): 1, (0, 0, 2, 2): 1},
        3: {(1, 0, 0, 3): 1, (0, 1, 1, 2): 2, (0, 0, 3, 1): -1},
        4: {(1, 0, 0, 3): 1, (0, 1, 1, 2): 2 * a, (0, 0, 3, 1): -b},
        5: {(1, 0, 0, 3): 1, (0, 0, 4, 0): 1},
        6: {(1, 0, 0, 3): 1, (0, 1, 2, 1): 1},
        7: {(1, 0, 0, 3): 1, (0, 1, 3, 0): 1},
    }
    if k not in f4:
        raise ValueError(f"no critical curve with tag {k}")
    if k == 4 and (b == a * a or b == 0):
        raise ValueError("the k = 4 family needs b != a^2 and b != 0")
    return PencilPoint(F2_CONE, HomPolynomial(f4[k]))


CRITICAL_T = {0: Fraction(1, 6), 1: Fraction(1, 4), 2: Fraction(3, 10), 3: Fraction(1, 3),
              4: Fraction(1, 3), 5: Fraction(5, 14), 6: Fraction(3, 8), 7: Fraction(2, 5)}

SYMBOLIC_LAMBDA = "(1, alpha, 2*alpha-1, -3*alpha)"


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WallCandidate:
    """A potential critical slope with its destabilizing family.

    ``alpha`` is None for walls that hold for every small alpha (the
    single-monomial case); then ``lam`` is None as well.
    """

    alpha: Optional[Fraction]
    t: Fraction
    weight: Fraction  # common weight w of the family (in units of alpha when alpha is None)
    lam: Optional[OnePS]
    f4_support: tuple
    excluded: bool = False
    reason: str = ""

    @property
    def sample_f4(self) -> HomPolynomial:
        """Generic member: coefficient 1 on every monomial of the family."""
        return HomPolynomial({m: 1 for m in self.f4_support})

    @property
    def lambda_label(self) -> str:
        return SYMBOLIC_LAMBDA if self.lam is None else \
            "(" + ", ".join(str(r) for r in self.lam.weights) + ")"

    def to_json(self) -> dict:
        return {
            "alpha": None if self.alpha is None else str(self.alpha),
            "t": str(self.t),
            "weight": str(self.weight),
            "lambda": None if self.lam is None else self.lam.to_json(),
            "f4_support": [list(m) for m in self.f4_support],
            "excluded": self.excluded,
            "reason": self.reason,
        }


def vertex_singular(support) -> bool:
    """Every member is singular at the vertex ``[0,0,0,1]`` of the cone."""
    return all(m[3] <= 2 for m in support)


def _exclusion(t: Fraction, support, delta: Fraction) -> str:
    if vertex_singular(support):
        return "singular at the cone vertex: unstable for all t"
    if t < CONE_THRESHOLD:
        return "t < 1/6: the cone is destabilized by (-1,-1,-1,3)"
    if not delta < t <= HALF:
        return "t outside (delta, 1/2]"
    return ""


def find_walls(delta=Fraction(1, 10), include_excluded: bool = False) -> list[WallCandidate]:
    """Enumerate potential critical slopes, sorted by ``(t, alpha)``.

    Case 1: monomials with ``c0 = 0`` and ``c1 < 0`` give ``t = -2 / c1``
    for every alpha.  Case 2: each pair of monomials with different weight
    lines fixes ``alpha``; all monomials sharing that weight form the family.
    """
    delta = Q(delta)
    if not 0 < delta < CONE_THRESHOLD:
        raise ValueError("delta must lie in (0, 1/6)")
    mons = monomials(4)
    parts = {m: weight_parts(m) for m in mons}
    out: dict = {}

    # case 1
    by_c1: dict[int, list] = {}
    for m, (c0, c1) in parts.items():
        if c0 == 0 and c1 < 0:
            by_c1.setdefault(c1, []).append(m)
    for c1, fam in by_c1.items():
        t = Fraction(-2, c1)
        fam = tuple(sorted(fam, reverse=True))
        out[(None, t)] = WallCandidate(None, t, Fraction(c1), None, fam, *_flag(t, fam, delta))

    # case 2
    for m1, m2 in combinations(mons, 2):
        (a0, a1), (b0, b1) = parts[m1], parts[m2]
        if a1 == b1:
            continue
        alpha = Fraction(b0 - a0, a1 - b1)
        if not 0 < alpha <= 1:
            continue
        w = a0 + alpha * a1
        if w >= 0:
            continue
        t = -2 * alpha / w
        if (alpha, t) in out:
            continue
        fam = tuple(sorted((m for m in mons if parts[m][0] + alpha * parts[m][1] == w),
                           reverse=True))
        out[(alpha, t)] = WallCandidate(alpha, t, w, lambda_alpha(alpha).integral(), fam,
                                        *_flag(t, fam, delta))
    walls = sorted(out.values(), key=lambda c: (c.t, c.alpha is not None, c.alpha or 0))
    return walls if include_excluded else [c for c in walls if not c.excluded]


def _flag(t, fam, delta) -> tuple[bool, str]:
    reason = _exclusion(t, fam, delta)
    return bool(reason), reason


def wall_set(delta=Fraction(1, 10)) -> set[Fraction]:
    """Critical slopes strictly below 1/2."""
    return {c.t for c in find_walls(delta) if c.t < HALF}


def wall_for_tag(k: int, delta=Fraction(1, 10)) -> WallCandidate:
    """The candidate realizing row k of the wall table.

    Rows 0 and 1 are the alpha-independent walls; the others are the unique
    surviving candidate at their slope.
    """
    t = CRITICAL_T[k]
    cands = [c for c in find_walls(delta) if c.t == t]
    if k in (0, 1):
        return next(c for c in cands if c.alpha is None)
    (c,) = cands
    return c


# ---------------------------------------------------------------------------
# t = 1/2
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HalfWallFamily:
    label: str
    description: str
    lam: OnePS
    generic: PencilPoint

    def to_json(self) -> dict:
        return {"label": self.label, "description": self.description,
                "lambda": self.lam.to_json(), "generic": self.generic.to_json()}


def wall_at_half() -> list[HalfWallFamily]:
    """The three minimal-orbit families appearing at ``t = 1/2``.

    The second family is stabilized by the torus ``(r0, r1, r1, -2*r1 - r0)``;
    we use its member ``(3, -1, -1, -1)``.
    """
    P = PencilPoint.parse
    return [
        HalfWallFamily("i", "V(x0*x2 + x1^2, x1^2*f2(x2,x3) + x0*f3(x2,x3))",
                       OnePS((5, 1, -3, -3)),
                       P("x0*x2 + x1^2", "x1^2*(x2^2 + x2*x3 - x3^2) + x0*(x2^3 - 2*x2*x3^2 + 3*x3^3)")),
        HalfWallFamily("ii", "V(x0*x3, f4(x1,x2))", OnePS((3, -1, -1, -1)),
                       P("x0*x3", "x1*x2*(x1 - x2)*(x1 - 2*x2)")),
        HalfWallFamily("iii", "V(x0*x2 + x1^2, q(x0,x1,x2)*x3^2)", OnePS((1, 1, 1, -3)),
                       P("x0*x2 + x1^2", "(x0^2 + x1*x2 + 3*x2^2)*x3^2")),
    ]


# ---------------------------------------------------------------------------
# destabilization certificates
# ---------------------------------------------------------------------------

CERTIFICATE_LAMBDA = {
    0: OnePS((17, 1, -15, -3)),  # lambda_alpha at alpha = 1/17
    1: OnePS((13, 1, -11, -3)),  # lambda_alpha at alpha = 1/13
    2: OnePS((7, 3, -1, -9)),
    3: OnePS((3, 1, -1, -3)),
    5: OnePS((17, 5, -7, -15)),
    6: OnePS((11, 3, -5, -9)),
    7: OnePS((4, 1, -2, -3)),
}


@dataclass(frozen=True)
class DestabCertificate:
    lam: OnePS
    t_threshold: Fraction
    mu2: Fraction
    mu4: Fraction
    tag: int

    def balance(self, t) -> Fraction:
        return self.mu2 + Q(t) * self.mu4

    def to_json(self) -> dict:
        return {"tag": self.tag, "lambda": self.lam.to_json(), "mu2": str(self.mu2),
                "mu4": str(self.mu4), "t": str(self.t_threshold)}

    @classmethod
    def from_json(cls, data: dict) -> "DestabCertificate":
        return cls(OnePS.from_json(data["lambda"]), Q(data["t"]), Q(data["mu2"]), Q(data["mu4"]),
                   int(data["tag"]))


def destab_certificate(tag: int) -> DestabCertificate:
    """Certificate 1-PS and ``(mu2, mu4, t_k)`` for a tag; tag 4 reuses tag 3's.

    The mu values are recomputed on the critical curve of the tag, and
    ``mu2 + t*mu4 < 0`` for ``t > t_k`` is checked (``mu4 < 0``).
    """
    if tag not in CRITICAL_T or tag == 8:
        raise ValueError(f"invalid tag {tag}")
    lam = CERTIFICATE_LAMBDA[3 if tag == 4 else tag]
    p = critical_curve(tag)
    mu2 = mu_form(p.f2, lam)
    mu4 = coset_min_representative(p.f2, p.f4, lam)[0]
    if mu4 >= 0:
        raise AssertionError(f"tag {tag}: mu4 = {mu4} is not negative")
    t = -mu2 / mu4
    if t != CRITICAL_T[tag]:
        raise AssertionError(f"tag {tag}: threshold {t} != {CRITICAL_T[tag]}")
    return DestabCertificate(lam, t, mu2, mu4, tag)


# ---------------------------------------------------------------------------
# unstable predicates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    """A destabilizing 1-PS with the bound it certifies.

    When ``adapted`` is True the weights refer to coordinates adapted to
    the geometry rather than the input coordinates.
    """

    lam: OnePS
    bound: str
    reason: str
    adapted: bool = False


def quadric_matrix(f2: HomPolynomial) -> list[list[Fraction]]:
    m = [[Fraction(0)] * 4 for _ in range(4)]
    for e, c in f2.terms.items():
        idx = [i for i in range(4) for _ in range(e[i])]
        i, j = idx
        if i == j:
            m[i][i] += c
        else:
            m[i][j] += c / 2
            m[j][i] += c / 2
    return m


def _gradient_vanishes(f: HomPolynomial, pt) -> bool:
    for i in range(4):
        val = Fraction(0)
        for m, c in f.terms.items():
            if m[i]:
                term = c * m[i]
                for j in range(4):
                    e = m[j] - (j == i)
                    if e:
                        term *= pt[j] ** e
                val += term
        if val:
            return False
    return True


def planar_unstable(p: PencilPoint) -> Optional[Witness]:
    """Witness of instability for every ``t < 1/2``, or None.

    Two cases: ``f2`` of rank at most 2 (weights ``(1,1,-1,-1)`` with the -1's
    on the two linear forms of ``f2``), and a vertex of the cone ``V(f2)``
    that is singular on ``V(f4)`` (weights ``(-1,-1,-1,3)`` with the 3 on the
    vertex).  Both give ``mu <= -2 + 4t``.
    """
    from .linalg import rank as mat_rank

    q = quadric_matrix(p.f2)
    r = mat_rank(q)
    if r <= 2:
        used = [i for i in range(4) if any(m[i] for m in p.f2.terms)]
        if len(used) <= 2:
            neg = used + [i for i in range(3, -1, -1) if i not in used][:2 - len(used)]
            w = [-1 if i in neg else 1 for i in range(4)]
            return Witness(OnePS(w), "-2 + 4t", "quadric of rank <= 2")
        return Witness(OnePS((1, 1, -1, -1)), "-2 + 4t", "quadric of rank <= 2", adapted=True)
    if r == 3:
        (v,) = nullspace(q)
        if _gradient_vanishes(p.f4, v):
            nz = [i for i in range(4) if v[i]]
            if len(nz) == 1:
                w = [3 if i == nz[0] else -1 for i in range(4)]
                return Witness(OnePS(w), "-2 + 4t", "common singular point at the vertex")
            return Witness(OnePS((3, -1, -1, -1)), "-2 + 4t",
                           "common singular point at the vertex", adapted=True)
    return None


GITCONE_LAMBDA = OnePS((5, -1, -7, 3))
GITCONE_FORBIDDEN = ((0, 0, 0, 4), (0, 1, 0, 3), (0, 2, 0, 2))


def _gitcone_check(p: PencilPoint) -> HomPolynomial:
    if p.f2 != F2_CONE:
        raise ValueError("cone_tangent_test expects f2 = x0*x2 + x1^2")
    if p.f4.coefficient((1, 3, 0, 0)) != 1 or any(
            m[0] and m != (1, 3, 0, 0) for m in p.f4.terms):
        raise ValueError("cone_tangent_test expects f4 = x0*x1^3 + P4(x1, x2, x3)")
    return p.f4 - HomPolynomial({(1, 3, 0, 0): 1})


def cone_tangent_test(p: PencilPoint) -> bool:
    """True when ``P4`` avoids ``x3^4, x1*x3^3, x1^2*x3^2``.

    In that case the 1-PS ``(5,-1,-7,3)`` gives ``mu <= -2 + 2t``, negative
    on (0, 1/2]; this bound is checked before returning.
    """
    p4 = _gitcone_check(p)
    if any(m in p4.terms for m in GITCONE_FORBIDDEN):
        return False
    mu2 = mu_form(p.f2, GITCONE_LAMBDA)
    mu4 = mu_form(p.f4, GITCONE_LAMBDA)
    if not (mu2 == -2 and mu4 <= 2):
        raise AssertionError("gitcone bound violated")
    return True


# ---------------------------------------------------------------------------
# (4, 4) curves on P1 x P1
# ---------------------------------------------------------------------------


def _binary_quartic_IJ(c: list[Fraction]) -> tuple[Fraction, Fraction]:
    """Classical invariants of ``sum c_i X^(4-i) Y^i``."""
    a, b, cc, d, e = c[0], c[1] / 4, c[2] / 6, c[3] / 4, c[4]
    i_inv = a * e - 4 * b * d + 3 * cc * cc
    j_inv = a * cc * e + 2 * b * cc * d - a * d * d - b * b * e - cc ** 3
    return i_inv, j_inv


def multiplicity_at(F: BidegreeForm, point) -> int:
    """Multiplicity of ``V(F)`` at ``([u0:u1], [v0:v1])`` by affine expansion."""
    (p0, p1), (q0, q1) = [[Q(x) for x in pair] for pair in point]
    n = sum(F.bidegree)
    s, r = Series.x(n), Series.y(n)
    if p0:
        u = (Series.const(1, n), Series.const(p1 / p0, n) + s)
    else:
        u = (s, Series.const(1, n))
    if q0:
        v = (Series.const(1, n), Series.const(q1 / q0, n) + r)
    else:
        v = (r, Series.const(1, n))
    out = Series({}, n)
    for ((i0, i1), (j0, j1)), c in F.terms.items():
        out = out + (u[0] ** i0) * (u[1] ** i1) * (v[0] ** j0) * (v[1] ** j1) * c
    order = out.order()
    if order is None:
        raise ValueError("F vanishes identically near the point")
    return order


@dataclass
class ScreenReport:
    mu: dict = field(default_factory=dict)
    unstable: bool = False
    family: Optional[str] = None
    invariants: Optional[list] = None
    multiplicities: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "mu": {k: str(v) for k, v in self.mu.items()},
            "unstable": self.unstable,
            "family": self.family,
            "invariants": None if self.invariants is None else [str(x) for x in self.invariants],
            "multiplicities": {str(k): v for k, v in self.multiplicities.items()},
        }


def quartic_surface_stability_screen(F: BidegreeForm, points=()) -> ScreenReport:
    """Torus-coordinate screen of a (4, 4) form.

    Computes mu for the three standard subgroups in all four sign
    orientations and both factor orders, recognizes the three polystable
    normal forms, and reports multiplicities at the given points.
    """
    if F.bidegree != (4, 4):
        raise ValueError("expected a form of bidegree (4, 4)")
    rep = ScreenReport()
    for k, ((a0, a1), (b0, b1)) in LAMBDA_TILDE.items():
        for su, sv, swap in product((1, -1), (1, -1), (False, True)):
            lt = ((su * a0, su * a1), (sv * b0, sv * b1))
            G = F.swapped() if swap else F
            name = f"lt{k}{'+' if su > 0 else '-'}{'+' if sv > 0 else '-'}{'s' if swap else ''}"
            rep.mu[name] = mu_bidegree(G, lt)
    rep.unstable = any(v < 0 for v in rep.mu.values())
    zero = lambda lt: all(bidegree_weight(key, lt) == 0 for key in F.terms)
    if zero(LAMBDA_TILDE[1]):
        c = [F.terms.get(((4 - i, i), (2 * i - 2, 6 - 2 * i)), Fraction(0)) for i in (1, 2, 3)]
        rep.family = "2a"
        rep.invariants = [c[1] ** 2 - 2 * c[0] * c[2], c[0] * c[2]]
    elif zero(LAMBDA_TILDE[3]):
        coeffs = [F.terms.get(((2, 2), (4 - i, i)), Fraction(0)) for i in range(5)]
        rep.family = "2c"
        rep.invariants = coeffs + list(_binary_quartic_IJ(coeffs))
    elif zero(LAMBDA_TILDE[2]):
        coeffs = [F.terms.get(((i, 4 - i), (4 - i, i)), Fraction(0)) for i in range(4, -1, -1)]
        rep.family = "2b"
        rep.invariants = coeffs
    for pt in points:
        rep.multiplicities[tuple(tuple(x) for x in pt)] = multiplicity_at(F, pt)
    return rep


def support_table(F: BidegreeForm) -> list[list[int]]:
    """5 x 5 grid of the support: entry [m][n] for ``u1^m v1^n``."""
    grid = [[0] * 5 for _ in range(5)]
    for (i, j) in F.terms:
        grid[i[1]][j[1]] = 1
    return grid


def format_monomials(ms) -> str:
    return ", ".join(mono_str(m) for m in ms)

"""Classification of plane curve singularities of (2, 4) curves.

Three tools: the coefficient classifier for the consecutive-triple-point
normal form, a weighted recognizer for germs ``y^3 + ...`` sweeping the rows
E_6k, E_6k+1, E_6k+2, J_k+1 of Arnold's list, and A_m detection at the
vertex of the quadric cone.  Germs are truncated power series; every verdict
records the truncation used and whether it survives raising it by 4.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Mapping, Optional

from .core import HomPolynomial, Q, Series, substitute_affine
from .hm import PencilPoint, _multiples
from .linalg import solve

DEFAULT_TRUNCATION = int(os.environ.get("ARTIFACT_TRUNCATION", "12"))
STABILITY_STEP = 4


# ---------------------------------------------------------------------------
# result type and tags
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SingularityClass:
    """Outcome of a classifier.

    ``kind`` is one of ``A, D, E, J, Mult4, TripleConicPlus, QuadrupleConic,
    Smooth, NotOnCurve, AboveTruncation, Other``.  ``index`` carries m for
    A_m, the subscript for D/E, k for J_k; ``r`` is ``"0"``, ``"+"``,
    ``"inf"`` or None (unspecified) for J, and the tangent-cone pattern for
    Mult4.
    """

    kind: str
    index: Optional[int] = None
    r: Optional[str] = None
    decided_at: Optional[int] = None
    stable: Optional[bool] = None
    flags: tuple = ()
    detail: str = ""

    @property
    def label(self) -> str:
        if self.kind in ("A", "D", "E"):
            return f"{self.kind}{self.index if self.index is not None else 'n'}"
        if self.kind == "J":
            k = "k" if self.index is None else self.index
            r = {"inf": "inf", "0": "0", "+": "+", None: "r"}[self.r]
            return f"J{k},{r}"
        if self.kind == "Mult4":
            return {"4": "(4,0)", "3+1": "(3,1)"}.get(self.r, f"mult4[{self.r}]")
        if self.kind == "AboveTruncation":
            return f"AboveTruncation({self.detail})"
        return self.kind

    @property
    def tag(self) -> Optional[int]:
        return w_stratum_tag(self)

    def flag(self, name: str) -> bool:
        return dict(self.flags).get(name, False)

    def with_flags(self, **flags) -> "SingularityClass":
        merged = dict(self.flags)
        merged.update(flags)
        return replace(self, flags=tuple(sorted(merged.items())))

    def same_class(self, other: "SingularityClass") -> bool:
        return (self.kind, self.index, self.r) == (other.kind, other.index, other.r)

    def to_json(self) -> dict:
        return {"kind": self.kind, "label": self.label, "index": self.index, "r": self.r,
                "tag": self.tag, "decided_at_order": self.decided_at, "stable": self.stable,
                "flags": dict(self.flags), "detail": self.detail}

    @classmethod
    def from_json(cls, data: dict) -> "SingularityClass":
        return cls(data["kind"], data["index"], data["r"], data["decided_at_order"],
                   data["stable"], tuple(sorted(data["flags"].items())), data["detail"])


TAGS = {"E14": 5, "E13": 6, "E12": 7, "J3,0": 4, "J3,+": 3, "J3,inf": 3, "J4,inf": 2,
        "(3,1)": 1, "TripleConicPlus": 1, "(4,0)": 0, "QuadrupleConic": 0}

TAG_LABELS = {0: "(4,0)", 1: "(3,1)", 2: "J4,inf", 3: "J3,+", 4: "J3,0", 5: "E14",
              6: "E13", 7: "E12"}


def w_stratum_tag(c: SingularityClass, quadruple_conic: bool = False,
                  triple_conic: bool = False) -> Optional[int]:
    """Tag on the ladder ``(4,0) < (3,1) < J4,inf < J3,+ < J3,0 < E14 < E13 < E12``.

    Curve-level recognitions (``4 C0``, ``3 C0 + C1``) may be passed as flags.
    A non-isolated triple component (``J`` with no k) counts as ``(3,1)``.
    """
    if quadruple_conic:
        return 0
    if triple_conic:
        return 1
    if c.kind == "J" and c.index is None and c.r == "inf":
        return 1
    return TAGS.get(c.label)


# The stratification ladder W0 < W1 < W2 < W4 < W5 < W6 < W7 (there is no W3).
W_LADDER = (0, 1, 2, 4, 5, 6, 7)

# normal-form parameter counts for E12 and each step to the right
_PARAMS = {"E12": 9, "E13": 8, "E14": 7, "J3,0": 6, "J3,+": 5, "J4,inf": 4, "(3,1)": 3,
           "(4)": 2}
GROUP_DIM = 2


def stratum_dimensions() -> dict[str, int]:
    """Dimension of each singularity stratum: parameter count minus dim G_T."""
    return {k: v - GROUP_DIM for k, v in _PARAMS.items()}


def w_dimensions() -> dict[int, int]:
    """``dim W_k`` by tag, for the tags on the ladder."""
    dims = stratum_dimensions()
    by_tag = {7: "E12", 6: "E13", 5: "E14", 4: "J3,0", 3: "J3,+", 2: "J4,inf", 1: "(3,1)",
              0: "(4)"}
    return {k: dims[v] for k, v in by_tag.items()}


# ---------------------------------------------------------------------------
# normal form at a consecutive triple point
# ---------------------------------------------------------------------------


def _binary(coeffs: Mapping, degree: int) -> dict:
    out = {}
    for (i, j), c in coeffs.items():
        if i + j != degree or i < 0 or j < 0:
            raise ValueError(f"bad exponent {(i, j)} for a binary form of degree {degree}")
        if Q(c):
            out[(i, j)] = Q(c)
    return out


@dataclass(frozen=True)
class NormalFormInput:
    """``f2 = x0 x2 + x1^2 + a x3^2``, ``f4 = x0 x3^3 + x1^2 g2 + x1 g3 + g4``.

    Each ``g_d`` maps ``(i, j)`` to the coefficient of ``x2^i x3^j``.
    """

    a: Fraction
    g2: dict
    g3: dict
    g4: dict

    def __init__(self, a=0, g2=None, g3=None, g4=None):
        object.__setattr__(self, "a", Q(a))
        object.__setattr__(self, "g2", _binary(g2 or {}, 2))
        object.__setattr__(self, "g3", _binary(g3 or {}, 3))
        object.__setattr__(self, "g4", _binary(g4 or {}, 4))

    def g(self, d: int, i: int, j: int) -> Fraction:
        return {2: self.g2, 3: self.g3, 4: self.g4}[d].get((i, j), Fraction(0))

    def to_pencil(self) -> PencilPoint:
        f2 = HomPolynomial({(1, 0, 1, 0): 1, (0, 2, 0, 0): 1, (0, 0, 0, 2): self.a})
        terms = {(1, 0, 0, 3): Fraction(1)}
        for x1, g in ((2, self.g2), (1, self.g3), (0, self.g4)):
            for (i, j), c in g.items():
                terms[(0, x1, i, j)] = c
        return PencilPoint(f2, HomPolynomial(terms))


def _norm3_allowed() -> list:
    out = [(1, 0, 0, 3)]
    for x1, d in ((2, 2), (1, 3), (0, 4)):
        out += [(0, x1, i, d - i) for i in range(d, -1, -1)]
    return out


def to_norm3(p: PencilPoint) -> NormalFormInput:
    """Bring ``f4`` to the normal form by the unique quadric correction ``q``.

    ``f2`` must already be ``x0 x2 + x1^2 + a x3^2``.  Raises ValueError when
    the point ``[1,0,0,0]`` is not a consecutive triple point in these
    coordinates.
    """
    a = p.f2.coefficient((0, 0, 0, 2))
    expected = HomPolynomial({(1, 0, 1, 0): 1, (0, 2, 0, 0): 1, (0, 0, 0, 2): a})
    if p.f2 != expected:
        raise ValueError("f2 must be x0*x2 + x1^2 + a*x3^2")
    from .core import monomials

    allowed = set(_norm3_allowed())
    mults = _multiples(p.f2, 4)
    banned = [m for m in monomials(4) if m not in allowed]
    rows = [[g.coefficient(m) for g in mults] for m in banned]
    q = solve(rows, [-p.f4.coefficient(m) for m in banned])
    if q is None:
        raise ValueError("not a consecutive triple point in normal-form coordinates")
    rep = p.f4
    for c, g in zip(q, mults):
        if c:
            rep = rep + g * c
    lead = rep.coefficient((1, 0, 0, 3))
    if not lead:
        raise ValueError("the x0*x3^3 coefficient vanishes: multiplicity exceeds 3")
    rep = rep * (1 / lead)
    gs = {2: {}, 3: {}, 4: {}}
    for m, c in rep.terms.items():
        if m != (1, 0, 0, 3):
            gs[4 - m[1]][(m[2], m[3])] = c
    return NormalFormInput(a, gs[2], gs[3], gs[4])


def classify_norm3(n: NormalFormInput) -> SingularityClass:
    """Eight-way coefficient test for the consecutive-triple-point normal form."""
    g = n.g
    if n.g2:
        return SingularityClass("J", 2, None, detail="g2 != 0")
    if g(3, 3, 0):
        return SingularityClass("E", 12)
    if g(3, 2, 1):
        return SingularityClass("E", 13)
    if g(4, 4, 0):
        return SingularityClass("E", 14)
    b, c = g(3, 1, 2), g(4, 3, 1)
    if c * (b * b + 4 * c):
        return SingularityClass("J", 3, "0")
    if b or c:
        return SingularityClass("J", 3, "+")
    if g(4, 2, 2):
        return SingularityClass("J", 4, "inf")
    return SingularityClass("TripleConicPlus", detail="C = 3 C0 + C1")


def norm3_branch(n: NormalFormInput) -> int:
    """Index 1..8 of the firing item of :func:`classify_norm3`."""
    order = ["J2,r", "E12", "E13", "E14", "J3,0", "J3,+", "J4,inf", "TripleConicPlus"]
    return order.index(classify_norm3(n).label) + 1


# ---------------------------------------------------------------------------
# germs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PlaneGerm:
    """Germ at the origin of a plane curve, as a truncated series in (x, y).

    ``exact`` means the germ is a polynomial fully captured by the truncation.
    """

    series: Series
    exact: bool = False

    @property
    def truncation(self) -> int:
        return self.series.truncation

    @classmethod
    def from_dict(cls, terms: Mapping, truncation: int = DEFAULT_TRUNCATION) -> "PlaneGerm":
        s = Series(terms, truncation)
        return cls(s, exact=max((i + j for i, j in terms), default=0) <= truncation)


def _implicit(f: HomPolynomial, chart: int, var: int, local: tuple[int, int],
              n: int) -> tuple[Series, bool]:
    """Solve ``f = 0`` for ``x_var`` near the chart origin as a series in ``local``.

    Returns the series and whether the solution is a polynomial (``f``
    linear in ``x_var`` with constant coefficient).
    """
    lin = [0] * 4
    lin[chart] = f.degree - 1
    lin[var] = 1
    coeff = f.coefficient(tuple(lin))
    if not coeff:
        raise ValueError(f"x{var} has no linear term at the chart origin")
    if f.coefficient(tuple(f.degree if i == chart else 0 for i in range(4))):
        raise ValueError("the chart origin is not on the hypersurface")
    polynomial = all(m[var] == 0 or m == tuple(lin) for m in f.terms)
    u, v = Series.x(n), Series.y(n)
    phi = Series({}, n)
    for _ in range(n + 1):
        assign = {local[0]: u, local[1]: v, var: phi}
        val = substitute_affine(f, chart, assign, n)
        nxt = phi - val * (1 / coeff)
        if nxt == phi:
            break
        phi = nxt
    return phi, polynomial


def germ_at_smooth_point(p: PencilPoint, truncation: int = DEFAULT_TRUNCATION) -> PlaneGerm:
    """Germ of ``C`` at ``[1,0,0,0]`` in local coordinates ``x = x1, y = x3``.

    ``x2`` is eliminated through ``f2``, which must vanish at the point with
    tangent plane ``x2 = 0``.
    """
    f2 = p.f2
    if f2.coefficient((2, 0, 0, 0)):
        raise ValueError("[1,0,0,0] is not on the quadric")
    if f2.coefficient((1, 1, 0, 0)) or f2.coefficient((1, 0, 0, 1)):
        raise ValueError("tangent plane of the quadric at [1,0,0,0] must be x2 = 0")
    phi, poly = _implicit(f2, 0, 2, (1, 3), truncation)
    g = substitute_affine(p.f4, 0, {1: Series.x(truncation), 3: Series.y(truncation), 2: phi},
                          truncation)
    exact = poly and 4 * max(phi.max_degree(), 1) <= truncation
    return PlaneGerm(g, exact)


def _root_partition(coeffs: list[Fraction]) -> list[tuple[int, Fraction | None]]:
    """Multiplicities of the roots of the binary form ``sum c_i X^(n-i) Y^i``.

    Returns (multiplicity, rational root or None) pairs where the root is
    the value of ``Y/X`` (None: irrational, or X = 0 at infinity).
    """
    import sympy

    n = len(coeffs) - 1
    t = sympy.Symbol("t")
    # roots in t = Y/X: sum c_i t^i
    poly = sympy.Poly(sum(sympy.Rational(c.numerator, c.denominator) * t ** i
                          for i, c in enumerate(coeffs)), t)
    deg = poly.degree() if not poly.is_zero else -1
    out = []
    if deg < n:
        out.append((n - deg, None))
    for fac, mult in sympy.sqf_list(poly)[1]:
        for _ in range(fac.degree()):
            root = None
            if fac.degree() == 1:
                a, b = fac.all_coeffs()
                r = sympy.Rational(-b, a)
                root = Fraction(int(r.p), int(r.q))
            out.append((mult, root))
    return sorted(out, key=lambda x: -x[0])


def _partition_label(parts) -> str:
    return "+".join(str(m) for m, _ in parts)


def _jet_coeffs(s: Series, k: int) -> list[Fraction]:
    """Coefficients of the k-jet as a binary form in (x, y), ordered by y-power."""
    return [s.coefficient(k - i, i) for i in range(k + 1)]


def a_m_type(g: PlaneGerm) -> tuple[SingularityClass, tuple]:
    """Classify a double point; also returns the kernel direction of the 2-jet.

    For a rank-one 2-jet ``alpha*X^2`` the critical branch ``dG/dX = 0`` is
    solved as ``X = psi(y)`` and the order of ``G(psi(y), y)`` is ``m + 1``.
    """
    s, n = g.series, g.truncation
    a, b, c = s.coefficient(2, 0), s.coefficient(1, 1), s.coefficient(0, 2)
    if not (a or b or c):
        raise ValueError("not a double point")
    if b * b - 4 * a * c:
        return SingularityClass("A", 1, decided_at=2), (None, None)
    x, y = Series.x(n), Series.y(n)
    if a:
        shift = b / (2 * a)
        G = s.substitute(x - y * shift, y)
        direction = (-shift, Fraction(1))
        lead = a
    else:
        G = s.substitute(y, x)  # swap so that the square is in the first variable
        direction = (Fraction(1), Fraction(0))
        lead = c
    dG = G.diff(0)
    psi = Series({}, n)
    for _ in range(n + 1):
        val = dG.substitute(psi, y)
        nxt = psi - val * (1 / (2 * lead))
        nxt = Series({k: v for k, v in nxt.terms.items() if k[0] == 0}, n)
        if nxt == psi:
            break
        psi = nxt
    h = G.substitute(psi, y)
    order = h.order()
    if order is None or order > n - 1:
        return SingularityClass("AboveTruncation", detail=f"A_m with m >= {n - 1}",
                                decided_at=n), direction
    return SingularityClass("A", order - 1, decided_at=order), direction


_MAX_ROWS = 64


def _rows():
    """Rows of the sweep in decreasing x-weight: (name, index, weight)."""
    for k in range(1, _MAX_ROWS):
        yield ("E", 6 * k, Fraction(1, 3 * k + 1))
        yield ("E", 6 * k + 1, Fraction(2, 3 * (2 * k + 1)))
        yield ("E", 6 * k + 2, Fraction(1, 3 * k + 2))
        yield ("J", k + 1, Fraction(1, 3 * (k + 1)))


def _triple_line(g: PlaneGerm) -> SingularityClass:
    """Sweep the weighted rows for a germ whose 3-jet is ``c*y^3``."""
    s, n = g.series, g.truncation
    if g.exact:
        # polynomial germ: carry extra degrees so coordinate shifts lose nothing
        s = s.with_truncation(3 * n)
    for kind, idx, w in _rows():
        # every monomial of weight <= 1 must be known
        if Fraction(1) / w > n:
            return SingularityClass("AboveTruncation", detail=f"{kind}{idx} level, x-weight {w}",
                                    decided_at=n)
        if all(j >= 3 for (_, j) in s.terms):
            return SingularityClass("J", None, "inf", decided_at=n,
                                    detail="non-isolated triple component")
        wt = {m: Fraction(m[1], 3) + m[0] * w for m in s.terms}
        if any(v < 1 for v in wt.values()):
            return SingularityClass("Other", decided_at=n, detail=f"term below weight 1 at {kind}{idx}")
        f0 = {m: c for m, c in s.terms.items() if wt[m] == 1}
        if kind == "E":
            if len(f0) >= 2:
                return SingularityClass("E", idx, decided_at=max(i + j for i, j in f0))
            continue
        k = idx
        cub = [f0.get((k * (3 - j), j), Fraction(0)) for j in range(4)]  # by power of y
        parts = _root_partition(cub)  # roots of sum cub_j t^j, t = y / x^k
        if len(parts) == 3:
            return SingularityClass("J", k, "0", decided_at=3 * k)
        if parts[0][0] == 3:
            r = parts[0][1]
            T = s.truncation
            s = s.substitute(Series.x(T), Series.y(T) + Series({(k, 0): r}, T))
            continue
        r = parts[0][1]  # double root, rational
        T = s.truncation
        s = s.substitute(Series.x(T), Series.y(T) + Series({(k, 0): r}, T))
        return _j_degenerate(s, k, n, g.exact)
    raise AssertionError("row sweep exhausted")


def _j_degenerate(s: Series, k: int, n: int, exact: bool) -> SingularityClass:
    """``f0 = c y^2 (y + b x^k)``: decide J_k,p (p > 0) versus J_k,inf.

    A polynomial germ loses nothing to truncation, so its quotient ``G`` is
    examined through ``x^n`` instead of ``x^(n - 3k)``.
    """
    prec = n if exact else n - 3 * k
    if prec < 1:
        return SingularityClass("AboveTruncation", detail=f"J{k} degeneracy", decided_at=n)
    # G(x, z) = g(x, x^k z) / x^(3k), exact modulo x^(prec+1)
    G = {}
    for (a, j), c in s.terms.items():
        e = a + k * j - 3 * k
        if e < 0:
            raise AssertionError("term below weight 1 in the J degeneracy")
        if e <= prec:
            G[(e, j)] = c
    Gs = Series(G, prec + 3)
    b = Gs.coefficient(0, 2)
    dG = Gs.diff(1)
    zeta = Series({}, prec + 3)
    for _ in range(prec + 2):
        val = dG.substitute(Series.x(prec + 3), zeta)
        nxt = zeta - val * (1 / (2 * b))
        nxt = Series({m: v for m, v in nxt.terms.items() if m[1] == 0 and m[0] <= prec}, prec + 3)
        if nxt == zeta:
            break
        zeta = nxt
    H = Gs.substitute(Series.x(prec + 3), zeta)
    low = [a for (a, j), c in H.terms.items() if j == 0 and a <= prec]
    if low:
        return SingularityClass("J", k, "+", decided_at=3 * k + min(low),
                                detail=f"p = {min(low)}")
    return SingularityClass("J", k, "inf", decided_at=n, detail=f"zero through x^{prec}")


def arnold_recognize(g: PlaneGerm) -> SingularityClass:
    """Classify a plane germ by multiplicity, tangent cone and weighted rows."""
    s, n = g.series, g.truncation
    order = s.order()
    if order is None:
        return SingularityClass("Other", detail="germ vanishes to the truncation order", decided_at=n)
    if order == 0:
        return SingularityClass("NotOnCurve", decided_at=0)
    if order == 1:
        return SingularityClass("Smooth", decided_at=1)
    if order == 2:
        return a_m_type(g)[0]
    if order >= 5:
        return SingularityClass("Other", detail=f"multiplicity {order}", decided_at=order)
    parts = _root_partition(_jet_coeffs(s, order))
    label = _partition_label(parts)
    if order == 4:
        if label == "1+1+1+1":
            return SingularityClass("Etilde", 7, decided_at=4)
        return SingularityClass("Mult4", None, label, decided_at=4)
    if label == "1+1+1":
        return SingularityClass("D", 4, decided_at=3)
    if label == "2+1":
        return SingularityClass("D", None, detail="D_n with n >= 5", decided_at=3)
    # triple line: rotate so that the 3-jet is c*y^3
    x, y = Series.x(n), Series.y(n)
    r = parts[0][1]  # the line is Y = r X in (x, y); None means the line x = 0
    if r is None:
        s = s.substitute(y, x)
    elif r:
        s = s.substitute(x, y + x * r)
    return _triple_line(PlaneGerm(s, g.exact))


def recognize_stably(build: Callable[[int], PlaneGerm],
                     truncation: int = DEFAULT_TRUNCATION,
                     classify: Callable[[PlaneGerm], SingularityClass] = arnold_recognize
                     ) -> SingularityClass:
    """Classify at ``truncation`` and ``truncation + 4``; record agreement."""
    first = classify(build(truncation))
    second = classify(build(truncation + STABILITY_STEP))
    return replace(first, stable=first.same_class(second))


def classify_at_smooth_point(p: PencilPoint, truncation: int = DEFAULT_TRUNCATION) -> SingularityClass:
    """Classify ``C`` at ``[1,0,0,0]`` with the weighted recognizer."""
    return recognize_stably(lambda n: germ_at_smooth_point(p, n), truncation)


# ---------------------------------------------------------------------------
# the cone vertex
# ---------------------------------------------------------------------------


def contains_line(p: PencilPoint) -> bool:
    """Does ``C`` contain ``L = V(x0, x1)``?"""
    return p.f2.restrict_zero((0, 1)).is_zero() and p.f4.restrict_zero((0, 1)).is_zero()


def _vertex_germ(p: PencilPoint, n: int) -> tuple[PlaneGerm, int, tuple, Series]:
    if any(m[3] for m in p.f2.terms):
        raise ValueError("vertex_Am expects a cone with vertex [0,0,0,1] (f2 free of x3)")
    lin = {i: p.f4.coefficient(tuple(3 if j == 3 else int(j == i) for j in range(4)))
           for i in range(3)}
    var = next((i for i in range(3) if lin[i]), None)
    if var is None:
        raise LookupError("the vertex is a singular point of the quartic")
    local = tuple(i for i in range(3) if i != var)
    phi, _ = _implicit(p.f4, 3, var, local, n)
    h = substitute_affine(p.f2, 3, {local[0]: Series.x(n), local[1]: Series.y(n), var: phi}, n)
    return PlaneGerm(h), var, local, phi


def vertex_Am(p: PencilPoint, truncation: int = DEFAULT_TRUNCATION) -> SingularityClass:
    """A_m type of ``C`` at the vertex ``[0,0,0,1]`` of the cone ``V(f2)``.

    The quartic is solved for a variable with nonzero linear term, the
    solution is substituted into ``f2``, and the double point is analysed.
    Flags: ``tangent_line`` (the tangent cone is the double line along
    ``L = V(x0, x1)``) and ``contains_line``.
    """
    if truncation < 4:
        raise ValueError("truncation must be at least 4")
    if p.f4.coefficient((0, 0, 0, 4)):
        return SingularityClass("NotOnCurve", detail="vertex not on the curve").with_flags(
            tangent_line=False, contains_line=contains_line(p))
    try:
        germ, var, local, phi = _vertex_germ(p, truncation)
    except LookupError as exc:
        return SingularityClass("Other", detail=str(exc)).with_flags(
            tangent_line=False, contains_line=contains_line(p))
    order = germ.series.order()
    if order != 2:
        res = arnold_recognize(germ)
        tangent = False
    else:
        res, (du, dv) = a_m_type(germ)
        second = a_m_type(_vertex_germ(p, truncation + STABILITY_STEP)[0])[0]
        res = replace(res, stable=res.same_class(second))
        tangent = False
        if du is not None:
            d = [Fraction(0)] * 3
            d[local[0]], d[local[1]] = du, dv
            d[var] = phi.coefficient(1, 0) * du + phi.coefficient(0, 1) * dv
            tangent = d[0] == 0 and d[1] == 0 and d[2] != 0
    return res.with_flags(tangent_line=tangent, contains_line=contains_line(p))


def classify_curve_at(p: PencilPoint, at: str = "smooth-point",
                      truncation: int = DEFAULT_TRUNCATION) -> SingularityClass:
    """Front end used by the command line: ``at`` is ``smooth-point`` or ``vertex``."""
    if at == "vertex":
        return vertex_Am(p, truncation)
    if at != "smooth-point":
        raise ValueError("at must be 'smooth-point' or 'vertex'")
    res = classify_at_smooth_point(p, truncation)
    return res.with_flags(contains_line=contains_line(p))

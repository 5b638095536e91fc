"""Hilbert-Mumford indices: forms, pencil points, Hilbert points, bidegree forms,
and the closed-form weight sums behind the instability certificates for
(2, d) schemes with a point of high multiplicity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Sequence

from .core import (BidegreeForm, HomPolynomial, LambdaOrder, Monomial, OnePS, Q,
                   monomial_weight, monomials, mono_mul)
from .linalg import pivot_columns_fraction_free, solve

# ---------------------------------------------------------------------------
# forms and pencil points
# ---------------------------------------------------------------------------


def mu_form(f: HomPolynomial, lam: OnePS) -> Fraction:
    """Numerical function: the largest lambda-weight on the support of ``f``."""
    if f.is_zero():
        raise ValueError("mu_form is undefined on the zero polynomial")
    return max(monomial_weight(m, lam) for m in f.terms)


def initial_form(f: HomPolynomial, lam: OnePS) -> HomPolynomial:
    """Top-weight part of ``f`` (what survives in the lambda-limit)."""
    top = mu_form(f, lam)
    return HomPolynomial({m: c for m, c in f.terms.items() if monomial_weight(m, lam) == top},
                         f.degree)


def _multiples(f2: HomPolynomial, degree: int) -> list[HomPolynomial]:
    """The polynomials q*f2 for q running over monomials of ``degree - 2``."""
    return [HomPolynomial.monomial(q) * f2 for q in monomials(degree - f2.degree)]


def _in_ideal(f: HomPolynomial, f2: HomPolynomial) -> bool:
    """Is ``f`` a polynomial multiple of ``f2``?  Exact linear algebra."""
    if f.is_zero():
        return True
    mults = _multiples(f2, f.degree)
    rows = [[g.coefficient(m) for g in mults] for m in monomials(f.degree)]
    return solve(rows, [f.coefficient(m) for m in monomials(f.degree)]) is not None


@dataclass(frozen=True)
class PencilPoint:
    """A quadric ``f2`` and a quartic ``f4`` taken modulo ``f2``."""

    f2: HomPolynomial
    f4: HomPolynomial

    def __post_init__(self):
        if self.f2.degree != 2 or self.f4.degree != 4:
            raise ValueError("PencilPoint needs degrees (2, 4)")
        if self.f2.is_zero():
            raise ValueError("f2 must be nonzero")
        if _in_ideal(self.f4, self.f2):
            raise ValueError("f4 lies in the ideal (f2): the quartic is zero on the quadric")

    @classmethod
    def parse(cls, f2: str, f4: str) -> "PencilPoint":
        return cls(HomPolynomial.parse(f2, 2), HomPolynomial.parse(f4, 4))

    def to_json(self) -> dict:
        return {"f2": self.f2.to_json(), "f4": self.f4.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "PencilPoint":
        return cls(HomPolynomial.from_json(data["f2"], 2), HomPolynomial.from_json(data["f4"], 4))


def coset_min_representative(f2: HomPolynomial, f4: HomPolynomial,
                             lam: OnePS) -> tuple[Fraction, HomPolynomial]:
    """Least ``mu_form(f4 + q*f2)`` over quadrics ``q``, with a representative.

    Threshold search: for each quartic weight ``w`` in increasing order, ask
    whether the coefficients of ``f4 + q*f2`` on monomials of weight above
    ``w`` can all be killed; the first feasible ``w`` is the minimum.
    """
    mons = monomials(4)
    mults = _multiples(f2, 4)
    wts = {m: monomial_weight(m, lam) for m in mons}
    for w in sorted(set(wts.values())):
        high = [m for m in mons if wts[m] > w]
        rows = [[g.coefficient(m) for g in mults] for m in high]
        rhs = [-f4.coefficient(m) for m in high]
        q = solve(rows, rhs) if high else [Fraction(0)] * len(mults)
        if q is None:
            continue
        rep = f4
        for c, g in zip(q, mults):
            if c:
                rep = rep + g * c
        if rep.is_zero():
            raise ValueError("f4 lies in the ideal (f2)")
        return mu_form(rep, lam), rep
    raise AssertionError("threshold search exhausted")  # the top weight is always feasible


def mu_coset_min(p: PencilPoint, lam: OnePS) -> Fraction:
    """Exact minimum of ``mu_form`` over the coset ``f4 + (f2)``."""
    return coset_min_representative(p.f2, p.f4, lam)[0]


def mu_t(p: PencilPoint, lam: OnePS, t) -> Fraction:
    """``mu(f2, lam) + t * min_{f in [f4]} mu(f, lam)`` for ``t`` in (0, 1/2]."""
    t = Q(t)
    if not 0 < t <= Fraction(1, 2):
        raise ValueError("t must lie in (0, 1/2]")
    return mu_form(p.f2, lam) + t * mu_coset_min(p, lam)


def limit_in_U(p: PencilPoint, lam: OnePS) -> bool:
    """Does the lambda-limit of ``(f2, f4)`` still cut out a complete intersection?

    The limit is the pair of initial forms (for ``f4`` taken on a coset
    minimizer).  It qualifies when the limit quartic is not a multiple of
    the limit quadric and the two share no common factor.
    """
    import sympy

    g2 = initial_form(p.f2, lam)
    _, rep = coset_min_representative(p.f2, p.f4, lam)
    g4 = initial_form(rep, lam)
    if _in_ideal(g4, g2):
        return False
    syms = sympy.symbols("x0:4")
    to_expr = lambda f: sum(sympy.Rational(c.numerator, c.denominator)
                            * sympy.Mul(*[s ** e for s, e in zip(syms, m)])
                            for m, c in f.terms.items())
    g = sympy.gcd(sympy.Poly(to_expr(g2), *syms, domain="QQ"),
                  sympy.Poly(to_expr(g4), *syms, domain="QQ"))
    return g.total_degree() == 0


# ---------------------------------------------------------------------------
# Hilbert points
# ---------------------------------------------------------------------------


def hilbert_polynomial(d: int, m: int) -> int:
    """``P_d(m) = 2dm - d^2 + 2d``, the Hilbert polynomial of a (2, d) curve."""
    return 2 * d * m - d * d + 2 * d


@dataclass(frozen=True)
class HilbertPoint:
    """A subspace of degree-``m`` forms given by spanning generators."""

    d: int
    m: int
    generators: tuple

    def __init__(self, d: int, m: int, generators: Iterable[HomPolynomial]):
        gens = tuple(generators)
        if not gens:
            raise ValueError("a Hilbert point needs at least one generator")
        bad = {g.degree for g in gens} - {m}
        if bad:
            raise ValueError(f"generators must all have degree {m}, found {sorted(bad)}")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "generators", gens)

    @classmethod
    def from_monomials(cls, d: int, m: int, mons: Iterable[Monomial]) -> "HilbertPoint":
        return cls(d, m, [HomPolynomial.monomial(x) for x in sorted(set(mons), reverse=True)])


def initial_monomials(h: HilbertPoint, lam: OnePS) -> list[Monomial]:
    """Initial monomials of the span, largest in the lambda-order first."""
    order = LambdaOrder(lam)
    cols = sorted(monomials(h.m), key=order.key, reverse=True)
    rows = [[g.coefficient(c) for c in cols] for g in h.generators]
    return [cols[i] for i in pivot_columns_fraction_free(rows)]


def hilbert_mu(h: HilbertPoint, lam: OnePS) -> Fraction:
    """Sum of the lambda-weights of the initial monomials of ``h``."""
    if not lam.is_integral:
        raise ValueError("hilbert_mu needs an integral 1-PS")
    return sum((monomial_weight(x, lam) for x in initial_monomials(h, lam)), Fraction(0))


def propssci_lambda() -> OnePS:
    return OnePS((-3, 1, 1, 1))


def propssci_G(d: int, a: int) -> Monomial:
    """Monomial degree-(d-1) form with ``x0^a || G`` and ``x1`` not dividing ``G``."""
    return (a, 0, d - 1 - a, 0)


def propssci_subspaces(d: int, a: int, m: int) -> dict[str, set]:
    """Monomial subspaces U = x0 x1 S, V = x0 G S, their intersection and sum."""
    x0x1 = (1, 1, 0, 0)
    x0g = mono_mul((1, 0, 0, 0), propssci_G(d, a))
    u = {mono_mul(x0x1, s) for s in monomials(m - 2)}
    v = {mono_mul(x0g, s) for s in monomials(m - d)}
    return {"U": u, "V": v, "UV": u & v, "T": u | v}


@dataclass(frozen=True)
class WeightSums:
    U_sum: Fraction
    V_sum: Fraction
    UV_sum: Fraction
    T_sum: Fraction


def _check_dam(d: int, a: int, m: int) -> None:
    if d < 3 or not 0 <= a <= d - 1 or m < d:
        raise ValueError(f"need d >= 3, 0 <= a <= d-1, m >= d; got {(d, a, m)}")


def weight_sum_closed_forms(d: int, a: int, m: int) -> WeightSums:
    """Closed forms for the weights of U, V, U cap V and T under (-3, 1, 1, 1).

    ``U_sum`` counts the ``C(m+1, 3)`` monomials of degree ``m - 2``.
    """
    _check_dam(d, a, m)
    u = Fraction(-2 * comb(m + 1, 3))
    v = Fraction((d - 4 * a - 4) * comb(m + 3 - d, 3))
    uv = Fraction((d - 4 * a - 3) * comb(m + 2 - d, 3))
    return WeightSums(u, v, uv, u + v - uv)


def pesoti_polynomial(d: int, a: int, m: int) -> Fraction:
    """The cubic in ``m`` expanding ``T_sum``."""
    d, a, m = Fraction(d), Fraction(a), Fraction(m)
    return (-m ** 3 / 2 + (2 * d - 4 * a - 5) * m ** 2 / 2
            - (9 * d * d - 3 * (8 * a + 13) * d + 36 * (a + 1)) * m / 6
            + Fraction(2, 3) * (d - 1) * (d - 2) * (d - 3 * (a + 1)))


def instability_bound_P(d: int, a: int, m: int) -> Fraction:
    """Upper bound ``P(d, a, m)`` for the Hilbert-Mumford index of the scheme."""
    _check_dam(d, a, m)
    d, a, m = Fraction(d), Fraction(a), Fraction(m)
    return (-2 * (a + 1) * m * m - (d * d - 2 * (2 * a + 3) * d + 6 * (a + 1)) * m
            + Fraction(2, 3) * (d - 1) * (d - 2) * (d - 3 * (a + 1)))


def bound_family_value(d: int, a: int, m: int) -> Fraction:
    """``T_sum + m * (dim I - dim T)``: each extra basis vector weighs at most m."""
    sums = weight_sum_closed_forms(d, a, m)
    dim_i = comb(m + 3, 3) - hilbert_polynomial(d, m)
    dim_t = comb(m + 1, 3) + comb(m + 3 - d, 3) - comb(m + 2 - d, 3)
    return sums.T_sum + m * (dim_i - dim_t)


@dataclass(frozen=True)
class ChowFit:
    """Cubic fit of ``m -> mu_m``; ``m2`` is the normalized leading Chow weight."""

    coefficients: tuple  # (c0, c1, c2, c3)
    exact: bool
    samples: tuple

    @property
    def m2(self) -> Fraction:
        return self.coefficients[2]


def chow_fit(values: dict[int, Fraction]) -> ChowFit:
    """Interpolate a cubic through the first four samples and test the rest."""
    ms = sorted(values)
    if len(ms) < 4:
        raise ValueError("need at least four sample points")
    rows = [[Fraction(m) ** k for k in range(4)] for m in ms[:4]]
    coeffs = solve(rows, [Q(values[m]) for m in ms[:4]])
    exact = all(sum(c * Fraction(m) ** k for k, c in enumerate(coeffs)) == values[m]
                for m in ms[4:])
    return ChowFit(tuple(coeffs), exact, tuple((m, Q(values[m])) for m in ms))


def chow_mu_estimate(family: Callable[[int], HilbertPoint], lam: OnePS,
                     m_range: Sequence[int]) -> ChowFit:
    """Fit ``hilbert_mu`` of ``family(m)`` over ``m_range`` by a cubic in m.

    The m^2 coefficient is the limit ``mu_m / m^2``.
    """
    ms = list(m_range)
    if len(ms) < 4:
        raise ValueError("need at least four sample points")
    return chow_fit({m: hilbert_mu(family(m), lam) for m in ms})


def complete_intersection_family(f2: HomPolynomial, f4: HomPolynomial) -> Callable[[int], HilbertPoint]:
    """``m -> span(f2 * S_{m-2}, f4 * S_{m-4})``."""
    def family(m: int) -> HilbertPoint:
        gens = [HomPolynomial.monomial(s) * f2 for s in monomials(m - 2)]
        gens += [HomPolynomial.monomial(s) * f4 for s in monomials(m - 4)]
        return HilbertPoint(4, m, gens)
    return family


# ---------------------------------------------------------------------------
# bidegree (4, 4) forms
# ---------------------------------------------------------------------------

LAMBDA_TILDE = {
    1: ((2, -2), (1, -1)),
    2: ((1, -1), (1, -1)),
    3: ((1, -1), (0, 0)),
}


def bidegree_weight(key, lt) -> Fraction:
    (i0, i1), (j0, j1) = key
    (a0, a1), (b0, b1) = lt
    return Q(a0) * i0 + Q(a1) * i1 + Q(b0) * j0 + Q(b1) * j1


def mu_bidegree(F: BidegreeForm, lt) -> Fraction:
    """Largest weight on the support of ``F`` for an SL2 x SL2 weight pair.

    ``lt`` is 1, 2, 3 (one of the standard subgroups) or ``((a0, a1), (b0, b1))``.
    """
    if F.is_zero():
        raise ValueError("mu_bidegree is undefined on the zero form")
    if isinstance(lt, int):
        lt = LAMBDA_TILDE[lt]
    (a0, a1), (b0, b1) = lt
    if Q(a0) + Q(a1) != 0 or Q(b0) + Q(b1) != 0:
        raise ValueError("each factor's weights must sum to 0")
    return max(bidegree_weight(k, lt) for k in F.terms)


# ---------------------------------------------------------------------------
# certification of the instability bound
# ---------------------------------------------------------------------------


@dataclass
class PropssciReport:
    grid: list = field(default_factory=list)  # (d, a, m, P)
    oracle: list = field(default_factory=list)  # (d, a, m, name, closed, brute)

    @property
    def ok(self) -> bool:
        return all(p < 0 for *_, p in self.grid) and all(c == b for *_, c, b in self.oracle)


def certify_propssci(ds: Iterable[int] = (3, 4, 5), span: int = 10,
                     oracle_ms: Iterable[int] = (5, 6, 7), oracle_as: Iterable[int] = (0, 1),
                     oracle_d: int = 4) -> PropssciReport:
    """Evaluate P on a grid and compare closed forms against brute force."""
    rep = PropssciReport()
    for d in ds:
        for a in range(d):
            for m in range(d, d + span + 1):
                rep.grid.append((d, a, m, instability_bound_P(d, a, m)))
    lam = propssci_lambda()
    for a in oracle_as:
        for m in oracle_ms:
            closed = weight_sum_closed_forms(oracle_d, a, m)
            for name, mons in propssci_subspaces(oracle_d, a, m).items():
                brute = hilbert_mu(HilbertPoint.from_monomials(oracle_d, m, mons), lam) \
                    if mons else Fraction(0)
                rep.oracle.append((oracle_d, a, m, name, getattr(closed, f"{name}_sum"), brute))
    return rep

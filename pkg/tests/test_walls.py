from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from artifact import walls
from artifact.core import BidegreeForm, OnePS, monomials, poly
from artifact.hm import PencilPoint, mu_form, mu_t

EXPECTED_T = {Fraction(1, 6), Fraction(1, 4), Fraction(3, 10), Fraction(1, 3), Fraction(5, 14),
              Fraction(3, 8), Fraction(2, 5)}
TABLE_LAMBDA = {2: (7, 3, -1, -9), 3: (3, 1, -1, -3), 4: (3, 1, -1, -3), 5: (17, 5, -7, -15),
                6: (11, 3, -5, -9), 7: (4, 1, -2, -3)}
DELTAS = [Fraction(1, 100), Fraction(1, 10), Fraction(1, 7)]


def oracle_walls(delta):
    """Independent re-derivation with sympy: solve the weight equation per pair."""
    import sympy

    al = sympy.Symbol("alpha")
    w = lambda m: m[0] + al * m[1] + (2 * al - 1) * m[2] - 3 * al * m[3]  # noqa: E731
    ts = set()
    for m in monomials(4):
        c = sympy.Poly(w(m), al).all_coeffs()
        if len(c) == 2 and c[1] == 0 and c[0] < 0:
            t = Fraction(-2, int(c[0]))
            if t >= Fraction(1, 6) and delta < t < Fraction(1, 2):
                ts.add(t)
    for m1, m2 in combinations(monomials(4), 2):
        sol = sympy.solve(sympy.Eq(w(m1), w(m2)), al)
        for a in sol:
            if not (0 < a <= 1):
                continue
            wt = w(m1).subs(al, a)
            if wt >= 0:
                continue
            fam = [m for m in monomials(4) if w(m).subs(al, a) == wt]
            if all(m[3] <= 2 for m in fam):
                continue
            t = Fraction(str(-2 * a / wt))
            if t >= Fraction(1, 6) and delta < t < Fraction(1, 2):
                ts.add(t)
    return ts


@pytest.mark.parametrize("delta", DELTAS)
def test_wall_set_is_delta_independent(delta):
    assert walls.wall_set(delta) == EXPECTED_T


def test_wall_set_matches_sympy_oracle():
    assert oracle_walls(Fraction(1, 10)) == EXPECTED_T


def test_delta_domain():
    for bad in (0, Fraction(1, 6), Fraction(1, 2)):
        with pytest.raises(ValueError):
            walls.find_walls(bad)


@pytest.mark.parametrize("delta", DELTAS)
def test_every_candidate_balances(delta):
    for c in walls.find_walls(delta, include_excluded=True):
        if c.alpha is None:
            assert c.t == Fraction(-2) / c.weight
            continue
        lam = walls.lambda_alpha(c.alpha)
        assert mu_form(poly("x0*x2 + x1^2"), lam) + c.t * c.weight == 0
        assert all(walls.weight_parts(m)[0] + c.alpha * walls.weight_parts(m)[1] == c.weight
                   for m in c.f4_support)
        assert c.lam.proportional(lam.integral())


@pytest.mark.parametrize("k", sorted(TABLE_LAMBDA))
def test_wall_lambdas_match_table(k):
    c = walls.wall_for_tag(k)
    assert c.lam.proportional(OnePS(TABLE_LAMBDA[k]))
    assert c.t == walls.CRITICAL_T[k]


def test_pair_example_k2():
    c = walls.wall_for_tag(2)
    assert c.alpha == Fraction(3, 7) and c.t == Fraction(3, 10)
    assert {(1, 0, 0, 3), (0, 0, 2, 2)} <= set(c.f4_support)


def test_single_monomial_quadruple_conic():
    c = walls.wall_for_tag(0)
    assert c.alpha is None and c.t == Fraction(1, 6) and (0, 0, 0, 4) in c.f4_support


def test_one_third_wall_aggregates_the_triple():
    triple = [(1, 0, 0, 3), (0, 1, 1, 2), (0, 0, 3, 1)]
    for m1, m2 in combinations(triple, 2):
        (a0, a1), (b0, b1) = walls.weight_parts(m1), walls.weight_parts(m2)
        assert Fraction(b0 - a0, a1 - b1) == Fraction(1, 3)
    (c,) = [c for c in walls.find_walls() if c.t == Fraction(1, 3)]
    assert set(triple) <= set(c.f4_support) and c.weight == -2


def test_exclusions_are_reported():
    allc = walls.find_walls(Fraction(1, 10), include_excluded=True)
    reasons = {c.reason for c in allc if c.excluded}
    assert any("vertex" in r for r in reasons)
    assert all(c.reason for c in allc if c.excluded)


# --- certificates ---------------------------------------------------------

PENDENZE = {2: (6, -20, Fraction(3, 10)), 3: (2, -6, Fraction(1, 3)), 5: (10, -28, Fraction(5, 14)),
            6: (6, -16, Fraction(3, 8)), 7: (2, -5, Fraction(2, 5))}


@pytest.mark.parametrize("tag", sorted(PENDENZE))
def test_certificates_reproduce_slopes_table(tag):
    c = walls.destab_certificate(tag)
    assert (c.mu2, c.mu4, c.t_threshold) == PENDENZE[tag]
    assert c.lam.weights == OnePS(TABLE_LAMBDA[tag]).weights


@pytest.mark.parametrize("tag", range(8))
def test_sign_change_exactly_at_threshold(tag):
    c = walls.destab_certificate(tag)
    p = walls.critical_curve(tag)
    t = c.t_threshold
    assert walls.balance(p, c.lam, t) == 0
    assert mu_t(p, c.lam, min(t + Fraction(1, 1000), Fraction(1, 2))) < 0
    assert walls.balance(p, c.lam, t - Fraction(1, 1000)) > 0


@given(st.sampled_from(range(8)), st.fractions(0, 1))
def test_negative_beyond_threshold(tag, s):
    c = walls.destab_certificate(tag)
    t = c.t_threshold + (Fraction(1, 2) - c.t_threshold) * s
    if t > c.t_threshold:
        assert c.balance(t) < 0


def test_tag4_shares_tag3_certificate():
    assert walls.destab_certificate(4).lam == walls.destab_certificate(3).lam
    with pytest.raises(ValueError):
        walls.destab_certificate(8)


def test_e14_inequality():
    c = walls.destab_certificate(5)
    assert c.balance(Fraction(5, 14)) == 0 and c.balance(Fraction(5, 14) + Fraction(1, 10 ** 6)) < 0


# --- t = 1/2 ----------------------------------------------------------------

def test_half_families():
    fams = walls.wall_at_half()
    assert [f.lam.weights for f in fams] == [OnePS(w).weights for w in
                                             [(5, 1, -3, -3), (3, -1, -1, -1), (1, 1, 1, -3)]]
    for f in fams:
        assert walls.balance(f.generic, f.lam, Fraction(1, 2)) == 0
        assert walls.balance(f.generic, f.lam, Fraction(1, 2) + Fraction(1, 100)) < 0


def test_family_ii_is_fixed_by_its_torus():
    f = walls.wall_at_half()[1]
    for lam in [OnePS((3, -1, -1, -1)), OnePS((1, 1, 1, -3)), OnePS((2, 0, 0, -2))]:
        for g in (f.generic.f2, f.generic.f4):
            assert len({sum(r * e for r, e in zip(lam.weights, m)) for m in g.support}) == 1


# --- unstable predicates -----------------------------------------------------

def test_planar_rank_two():
    w = walls.planar_unstable(PencilPoint.parse("x2*x3", "x0^4 + x1^4 + x2^4 + x3^4 + x0*x1*x2*x3"))
    assert w is not None and sorted(w.lam.weights) == [-1, -1, 1, 1]
    assert mu_form(poly("x2*x3"), w.lam) == -2


def test_planar_smooth_quadric():
    assert walls.planar_unstable(PencilPoint.parse("x0*x3 + x1*x2", "x0^4 + x3^4 + x1^4")) is None


def test_planar_vertex_singular():
    p = PencilPoint.parse("x0*x2 + x1^2", "x0^2*x3^2 + x1*x2*x3^2 + x0^4 + x2^3*x3")
    w = walls.planar_unstable(p)
    assert w is not None and w.lam.weights == OnePS((-1, -1, -1, 3)).weights
    t = Fraction(1, 3)
    assert mu_form(p.f2, w.lam) + t * mu_form(p.f4, w.lam) <= -2 + 4 * t


def test_cone_tangent_test():
    P = lambda p4: PencilPoint.parse("x0*x2 + x1^2", "x0*x1^3" + p4)  # noqa: E731
    assert walls.cone_tangent_test(P(" + x3^4")) is False
    assert walls.cone_tangent_test(P(" + x2^4")) is True
    assert walls.cone_tangent_test(P("")) is True
    with pytest.raises(ValueError):
        walls.cone_tangent_test(PencilPoint.parse("x0*x2 + x1^2", "x0^2*x1^2"))


# --- (4, 4) screening ----------------------------------------------------------

def test_screen_family_2a_invariants():
    F = BidegreeForm.parse("u0*u1*(u0*v1^2 + u1*v0^2)*(u0*v1^2 + 2*u1*v0^2)")
    rep = walls.quartic_surface_stability_screen(F)
    assert rep.family == "2a" and rep.invariants == [5, 2]


def test_screen_family_2c():
    F = BidegreeForm.parse("u0^2*u1^2*v0*v1*(v0 - v1)*(v0 - 2*v1)")
    rep = walls.quartic_surface_stability_screen(F)
    assert rep.family == "2c"
    # v0 v1 (v0 - v1)(v0 - 2 v1) = v0^3 v1 - 3 v0^2 v1^2 + 2 v0 v1^3
    assert rep.invariants[:5] == [0, 1, -3, 2, 0]


def test_screen_multiplicity_five_is_unstable():
    # every monomial has u1-degree + v1-degree >= 5: multiplicity >= 5 at ([1:0],[1:0])
    F = BidegreeForm({((i, 4 - i), (j, 4 - j)): 1 for i in range(5) for j in range(5)
                      if (4 - i) + (4 - j) >= 5})
    rep = walls.quartic_surface_stability_screen(F, points=[((1, 0), (1, 0))])
    assert rep.unstable and rep.multiplicities[((1, 0), (1, 0))] >= 5


def test_screen_rejects_wrong_bidegree():
    with pytest.raises(ValueError):
        walls.quartic_surface_stability_screen(BidegreeForm.parse("u0^3*v0^4"))


def test_json_round_trip():
    for tag in range(8):
        c = walls.destab_certificate(tag)
        assert walls.DestabCertificate.from_json(c.to_json()) == c

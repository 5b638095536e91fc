"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line."""

import itertools
import random
import time
from contextlib import contextmanager
from fractions import Fraction as F

import pytest

from artifact import basin, divisors, hm, lattice, singularities as S, walls
from artifact.core import HomPolynomial, LambdaOrder, OnePS, compare, monomial_weight, monomials, poly

E14_POS = [4, 16, 24, 28, 36, 40, 48, 52, 60, 64, 72, 84, 96]
E14_NEG = [-40, -32, -24, -16, -8, -4]
WALLS = {F(1, 6), F(1, 4), F(3, 10), F(1, 3), F(5, 14), F(3, 8), F(2, 5)}
TABLE_LAMBDA = {2: (7, 3, -1, -9), 3: (3, 1, -1, -3), 4: (3, 1, -1, -3), 5: (17, 5, -7, -15),
                6: (11, 3, -5, -9), 7: (4, 1, -2, -3)}
PENDENZE = {2: (6, -20, F(3, 10)), 3: (2, -6, F(1, 3)), 5: (10, -28, F(5, 14)),
            6: (6, -16, F(3, 8)), 7: (2, -5, F(2, 5))}
TYPE2 = [1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 4, 3, 3, 5, 8, 9, 13]


@contextmanager
def criterion(capsys, n, title):
    ok = False
    try:
        yield
        ok = True
    finally:
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {n}: {title}")


def _proportional(lam, ref):
    ratios = {F(a) / b for a, b in zip(lam.weights, ref) if b} | \
        {None for a, b in zip(lam.weights, ref) if not b and a}
    return len(ratios) == 1 and next(iter(ratios)) is not None and next(iter(ratios)) > 0


def test_criterion_01_wall_set(capsys):
    with criterion(capsys, 1, "wall set and per-wall 1-PS for three deltas"):
        start = time.perf_counter()
        for delta in (F(1, 100), F(1, 10), F(1, 7)):
            assert walls.wall_set(delta) == WALLS
            for k in range(8):
                c = walls.wall_for_tag(k, delta)
                assert c.t == walls.CRITICAL_T[k]
                if k < 2:
                    assert c.lam is None and c.lambda_label == walls.SYMBOLIC_LAMBDA
                else:
                    assert _proportional(c.lam, TABLE_LAMBDA[k])
        assert time.perf_counter() - start < 5


def test_criterion_02_singularities(capsys):
    with criterion(capsys, 2, "critical-orbit singularities at p and at the vertex"):
        at_p = {2: "J4,inf", 5: "E14", 6: "E13", 7: "E12"}
        at_v = {2: "A2", 5: "A4", 6: "A5", 7: "A7"}
        for k in at_p:
            C = walls.critical_curve(k)
            assert S.classify_norm3(S.to_norm3(C)).label == at_p[k]
            assert S.vertex_Am(C).label == at_v[k]
        assert S.vertex_Am(walls.critical_curve(5)).flag("tangent_line")
        assert all(S.vertex_Am(walls.critical_curve(k)).flag("contains_line") for k in (6, 7))


def test_criterion_03_e14_slice(capsys):
    with criterion(capsys, 3, "E14 Luna slice weights and versal table"):
        rep = basin.slice_weights_for_tag(5)
        assert list(rep.normal_positive) == E14_POS
        assert list(rep.normal_negative) == E14_NEG
        assert rep.wp_plus == (1, 4, 6, 7, 9, 10, 12, 13, 15, 16, 18, 21, 24)
        assert rep.wp_minus == (1, 2, 4, 6, 8, 10)
        rows = basin.versal_monomial_table(5)
        assert len(rows) == 13 and [r.weight for r in rows] == E14_POS[::-1]
        assert {r.local for r in rows} == {(a, b) for a in range(2) for b in range(7)} - {(1, 6)}


def test_criterion_04_dimension_law(capsys):
    with criterion(capsys, 4, "dimension law for tags 2, 4, 5, 6, 7"):
        dims = S.w_dimensions()
        for tag in basin.DIMENSION_LAW_TAGS:
            rep = basin.slice_weights_for_tag(tag)
            neg = len(rep.normal_negative) + (rep.normal_zero if tag in basin.FAMILY_TAGS else 0)
            assert rep.feasible
            assert neg == dims[tag] + 1
            assert len(rep.normal_positive) == 19 - neg
            assert basin.dimension_law_check(rep, tag)


def test_criterion_05_hilbert_weights(capsys):
    with criterion(capsys, 5, "closed-form weight sums and P(d,a,m) < 0"):
        start = time.perf_counter()
        rep = hm.certify_propssci()
        assert len(rep.oracle) == 2 * 3 * 4
        assert all(closed == brute for *_, closed, brute in rep.oracle)
        grid = {(d, a, m) for d, a, m, _ in rep.grid}
        assert grid == {(d, a, m) for d in (3, 4, 5) for a in range(d) for m in range(d, d + 11)}
        assert all(p < 0 for *_, p in rep.grid)
        assert time.perf_counter() - start < 60


def test_criterion_06_certificates(capsys):
    with criterion(capsys, 6, "destabilization certificates and sign change at t_k"):
        for tag, (m2, m4, t) in PENDENZE.items():
            c = walls.destab_certificate(tag)
            p = walls.critical_curve(tag)
            assert (c.mu2, c.mu4, c.t_threshold) == (m2, m4, t)
            assert hm.mu_form(p.f2, c.lam) == m2
            assert hm.mu_coset_min(p, c.lam) == m4
            eps = F(1, 10 ** 6)
            assert c.balance(t) == 0 and c.balance(t - eps) > 0 and c.balance(t + eps) < 0


def test_criterion_07_divisors(capsys):
    with criterion(capsys, 7, "divisor identities, wall dictionary and t(m)"):
        ids = divisors.symbolic_identities()
        assert ids["n_t_is_eta_plus_t_xi"] and ids["morise"] and ids["hodge_pullback"]
        assert divisors.pullback(divisors.HODGE) == divisors.eta_xi(1, F(1, 2))
        rows = divisors.wall_dictionary()
        assert all(r.beta == (1 - 2 * r.t) / (4 * r.t) for r in rows)
        assert (rows[3].t, rows[3].beta) == (rows[4].t, rows[4].beta) == (F(1, 3), F(1, 4))
        ts = [t for _, t in divisors.hilbert_slopes(range(4, 41))]
        assert ts[:3] == [F(1, 10), F(1, 5), F(9, 34)]
        assert all(a < b < F(1, 2) for a, b in zip(ts, ts[1:]))


def test_criterion_08_census(capsys):
    with criterion(capsys, 8, "boundary census for N = 3..20"):
        start = time.perf_counter()
        for N, expect in zip(range(3, 21), TYPE2):
            c = lattice.boundary_census(N, verify=True)
            assert c.type2_count == expect
            assert c.type3_count == (2 if N in (10, 18) else 1)
            assert all(t.verified for t in c.type2)
        c = lattice.boundary_census(18, verify=False)
        both = [t.label for t in c.type2 if set(t.incident_type3) == {"III_a", "III_b"}]
        assert sorted(both) == sorted(["(E8)^2", "D16+"])
        assert time.perf_counter() - start < 60


def test_criterion_09_dynkin_chain(capsys):
    with criterion(capsys, 9, "Dynkin chain for k = 2..16"):
        for k in range(2, 17):
            r = lattice.dynkin_chain_check(k)
            assert r.ok and r.orthogonal
            assert set(r.squares) == {-4} and set(r.divisibilities) == {2}


def test_criterion_10_property_suites(capsys):
    with criterion(capsys, 10, "property suites"):
        rng = random.Random(2024)

        def rand_ps():
            w = [F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(3)]
            return OnePS(w + [-sum(w)])

        # order axioms, exhaustive in degree <= 2
        o = LambdaOrder(OnePS((1, 1, -1, -1)))
        ms = list(monomials(1)) + list(monomials(2))
        for a, b in itertools.product(ms, ms):
            assert compare(a, b, o) == -compare(b, a, o)
        for a, b, c in itertools.product(ms, ms, ms):
            if compare(a, b, o) <= 0 and compare(b, c, o) <= 0:
                assert compare(a, c, o) <= 0
        for _ in range(100):
            l1, l2, s = rand_ps(), rand_ps(), F(rng.randint(-5, 5), rng.randint(1, 3))
            m = rng.choice(monomials(4))
            # weight linearity and zero sum
            comb = OnePS([s * a + b for a, b in zip(l1.weights, l2.weights)])
            assert monomial_weight(m, comb) == s * monomial_weight(m, l1) + monomial_weight(m, l2)
            assert sum(monomial_weight(x, l1) for x in monomials(rng.randint(1, 5))) == 0
        # coset minimum never exceeds a representative
        f2 = poly("x0*x2 + x1^2")
        for _ in range(20):
            lam = rng.choice(list(walls.CERTIFICATE_LAMBDA.values()))
            f4 = HomPolynomial({m: rng.randint(-3, 3) or 1 for m in rng.sample(monomials(4), 5)}, 4)
            if hm._in_ideal(f4, f2):
                continue
            q = HomPolynomial({m: rng.randint(-2, 2) for m in monomials(2)}, 2)
            best = hm.mu_coset_min(hm.PencilPoint(f2, f4), lam)
            assert best <= hm.mu_form(f4, lam) and best <= hm.mu_form(f4 + q * f2, lam)
        # overlattice determinant law
        for n in (8, 12, 16):
            f = lattice.discriminant_form(lattice.D(n))
            iso = [x for x, q in f.q_table().items() if any(x) and q % 2 == 0]
            for x in iso:
                M = lattice.overlattice(lattice.D(n), [f.vector(x)])
                assert abs(M.det()) * 4 == abs(lattice.D(n).det())
        # delta independence
        for _ in range(30):
            d = F(rng.randint(1, 99), 600)
            t = d + (F(1, 2) - d) * F(rng.randint(0, 50), 50)
            assert divisors.n_t_class(t, d) == divisors.eta_xi(1, t)
        for d in (F(1, 50), F(1, 12), F(2, 13)):
            assert walls.wall_set(d) == WALLS

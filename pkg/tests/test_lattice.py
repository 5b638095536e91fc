"""Lattice toolkit: discriminant forms, gluing, genus tests, the D-chain and the census."""

import itertools
import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from artifact.lattice import (
    A, D, E, U, UNIMODULAR, TYPE2_TABLE, GramLattice, boundary_census, classifydn_list,
    direct_sum, discriminant_form, divisibility, dynkin_chain_check, forms_isomorphic,
    gamma0_index, genus_of_Dn_test, invariant_factors, is_even_unimodular, lattice_lambda,
    overlattice, realize, realize_unimodular,
)


def _mod2(x):
    return Fraction(x) % 2


# -- basic lattices -----------------------------------------------------------

@pytest.mark.parametrize("n,det", [(1, 2), (4, 5), (8, 9)])
def test_A_det(n, det):
    assert abs(A(n).det()) == det


@pytest.mark.parametrize("n", range(2, 12))
def test_D_invariants(n):
    L = D(n)
    assert L.rank == n and L.is_even() and L.is_negative_definite()
    assert abs(L.det()) == 4


def test_E8_and_U_unimodular():
    assert is_even_unimodular(E(8))
    assert abs(U().det()) == 1 and not U().is_negative_definite()


# -- discriminant forms ---------------------------------------------------------

@pytest.mark.parametrize("n", range(4, 17))
def test_Dn_discriminant(n):
    f = discriminant_form(D(n))
    assert f.size == 4
    if n % 2:
        assert f.invariant_factors() == (4,)
    else:
        assert f.invariant_factors() == (2, 2)
    qs = sorted(_mod2(q) for x, q in f.q_table().items() if any(x))
    # one vector class of norm -1, two spinor classes of norm -n/4
    assert qs == sorted([_mod2(-1)] + [_mod2(Fraction(-n, 4))] * 2)


def test_trivial_forms():
    assert discriminant_form(U()).size == 1
    assert discriminant_form(E(8)).size == 1


def test_orthogonal_sum_multiplies():
    f = discriminant_form(direct_sum([D(5), A(2)]))
    assert f.size == 12
    assert invariant_factors(f.orders) == (12,)


def test_bilinear_consistent_with_q():
    f = discriminant_form(D(6))
    els = list(f.elements())
    for x, y in itertools.product(els, els):
        assert (f.q(f.add(x, y)) - f.q(x) - f.q(y) - 2 * f.b(x, y)) % 2 == 0


def test_forms_isomorphic():
    assert forms_isomorphic(discriminant_form(D(12)), discriminant_form(D(4)))
    assert not forms_isomorphic(discriminant_form(D(6)), discriminant_form(D(4)))
    assert not forms_isomorphic(discriminant_form(D(5)), discriminant_form(D(4)))


@given(st.lists(st.integers(1, 12), min_size=1, max_size=4))
def test_invariant_factors_product(orders):
    fs = invariant_factors(orders)
    prod = 1
    for o in orders:
        prod *= o
    out = 1
    for x in fs:
        out *= x
    assert out == prod
    assert all(b % a == 0 for a, b in zip(fs, fs[1:]))


# -- overlattices ------------------------------------------------------------------

def _spinor(n):
    return discriminant_form(D(n)).vector(
        next(x for x, q in discriminant_form(D(n)).q_table().items()
             if any(x) and _mod2(q) == _mod2(Fraction(-n, 4))))


def test_D16_plus_unimodular():
    L = overlattice(D(16), [_spinor(16)])
    assert is_even_unimodular(L) and L.is_negative_definite()


def test_index_law():
    base = direct_sum([D(8), D(8)])
    s = _spinor(8)
    glue = [list(s) + [0] * 8, [0] * 8 + list(s)]
    M = overlattice(base, glue)
    assert abs(M.det()) == abs(base.det()) // 4 ** 2
    assert abs(M.det()) == 1


def test_empty_glue():
    L = D(6)
    assert overlattice(L, []).gram == L.gram


def test_fractional_norm_glue_rejected():
    # spinor of D6 has norm -3/2
    with pytest.raises(ValueError):
        overlattice(D(6), [_spinor(6)])


def test_vector_class_glue_rejected():
    f = discriminant_form(D(8))
    v = next(x for x, q in f.q_table().items() if any(x) and _mod2(q) == 1)
    with pytest.raises(ValueError):
        overlattice(D(8), [f.vector(v)])


def test_non_dual_glue_rejected():
    with pytest.raises(ValueError):
        overlattice(D(4), [[Fraction(1, 3), 0, 0, 0]])


# -- genus tests -------------------------------------------------------------------

@pytest.mark.parametrize("n", [4, 6, 9, 12])
def test_Dn_in_its_genus(n):
    assert genus_of_Dn_test(D(n), n)


def test_A15_realization_in_D16_genus():
    r = realize("A15", 16)
    assert r.verified and r.lattice.rank == 16
    assert genus_of_Dn_test(r.lattice, 16)
    assert r.roots == 240


def test_E8_not_in_D8_genus():
    assert not genus_of_Dn_test(E(8), 8)


def test_genus_rank_mismatch():
    with pytest.raises(ValueError):
        genus_of_Dn_test(D(5), 6)


def test_classifydn_small():
    assert classifydn_list(8) == ["D8"]
    assert UNIMODULAR[8] == ["E8"]
    assert sorted(UNIMODULAR[16]) == sorted(["(E8)^2", "D16+"])


@pytest.mark.parametrize("label", ["E8"])
def test_realize_unimodular(label):
    r = realize_unimodular(label)
    assert r.verified and is_even_unimodular(r.lattice)
    assert r.roots == 240


# -- divisibility ----------------------------------------------------------------------

def test_divisibility_examples():
    L = U()
    assert divisibility([1, 0], L) == 1
    assert divisibility([2, 4], L) == 2
    assert divisibility([1, 0, 0, 0], D(4)) in (1, 2)
    with pytest.raises(ValueError):
        divisibility([0, 0], L)


@given(st.integers(-20, 20), st.integers(-20, 20))
def test_divisibility_in_U_is_gcd(a, b):
    from math import gcd
    if a == b == 0:
        return
    assert divisibility([a, b], U()) == gcd(a, b)


# -- the D-chain -------------------------------------------------------------------------

@pytest.mark.parametrize("k", range(2, 17))
def test_chain_ok(k):
    r = dynkin_chain_check(k)
    assert r.ok and r.orthogonal
    assert set(r.squares) == {-4}
    assert set(r.divisibilities) == {2}
    assert len(r.classes) == k


def test_chain_k2_classes():
    r = dynkin_chain_check(2)
    assert {tuple(c) for c in r.classes} == {(0, 1, 1), (0, -1, 1)}


@pytest.mark.parametrize("k", [1, 17])
def test_chain_range(k):
    with pytest.raises(ValueError):
        dynkin_chain_check(k)


# -- census ---------------------------------------------------------------------------

def test_lattice_lambda_shape():
    L = lattice_lambda(18)
    assert L.rank == 20 and abs(L.det()) == 4


@pytest.mark.parametrize("N", range(3, 21))
def test_census_counts(N):
    c = boundary_census(N, verify=False)
    assert c.type2_count == TYPE2_TABLE[N]
    assert c.type3_count == (2 if N in (10, 18) else 1)


def test_census_n14_triples_D12():
    labels = [t.label for t in boundary_census(14, verify=False).type2]
    assert labels.count("D12") == 3


@pytest.mark.parametrize("N", [10, 17, 18])
def test_census_verified(N):
    c = boundary_census(N, verify=True)
    assert all(t.verified for t in c.type2)


def test_census_18_dot_incidence():
    c = boundary_census(18, verify=False)
    dot = c.to_dot()
    assert dot.count("III_") >= 2
    for t in c.type2:
        if t.label in ("(E8)^2", "D16+"):
            assert set(t.incident_type3) == {"III_a", "III_b"}


def test_census_json():
    c = boundary_census(20, verify=False)
    data = json.loads(json.dumps(c.to_json()))
    assert data["N"] == 20
    assert len(data["type2"]) == 13


# -- Γ0 index -----------------------------------------------------------------------------

def _sl2_index_bruteforce(m):
    if m == 1:
        return 1
    group = [(a, b, c, d) for a, b, c, d in itertools.product(range(m), repeat=4)
             if (a * d - b * c) % m == 1]
    borel = [g for g in group if g[2] == 0]
    return len(group) // len(borel)


@pytest.mark.parametrize("m,idx", [(1, 1), (2, 3), (6, 12)])
def test_gamma0_examples(m, idx):
    assert gamma0_index(m) == idx


@pytest.mark.parametrize("m", range(1, 13))
def test_gamma0_oracle(m):
    assert gamma0_index(m) == _sl2_index_bruteforce(m)


def test_gram_json_round_trip():
    L = direct_sum([A(2), E(6)], "A2+E6")
    assert GramLattice.from_json(json.loads(json.dumps(L.to_json()))).gram == L.gram

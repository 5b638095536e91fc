"""Divisor classes, the β dictionary and the wall table."""

import json
import random
from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, strategies as st

from artifact.divisors import (
    BOUNDARY, H_H, H_N, HODGE, DivisorClass, WallRow, beta_of_t, borcherds_chain, chow_class,
    eta_xi, hilbert_class, hilbert_slopes, hn_hh, morise_class, n_t_class, pullback,
    symbolic_identities, t_of_beta, t_of_m, verify_morise, wall_dictionary,
)


def test_pullback_examples():
    assert pullback(H_H) == eta_xi(4, 0)
    assert pullback(H_N) == eta_xi(72, 68)
    assert pullback(HODGE) == eta_xi(1, F(1, 2))
    assert pullback(hn_hh(0, 0)) == eta_xi(0, 0)


def test_pullback_wrong_basis():
    with pytest.raises(ValueError):
        pullback(eta_xi(1, 0))


def test_borcherds_chain():
    vals = set(borcherds_chain().values())
    assert vals == {eta_xi(136, 68)}


def test_boundary_is_half_Hh():
    assert BOUNDARY * 2 == H_H


def test_chow_class():
    assert chow_class() == eta_xi(4, 2)


@pytest.mark.parametrize("m,coords,t", [(4, (10, 1), F(1, 10)), (5, (20, 4), F(1, 5)),
                                        (6, (34, 9), F(9, 34))])
def test_hilbert_class(m, coords, t):
    assert hilbert_class(m) == eta_xi(*coords)
    assert t_of_m(m) == t


def test_hilbert_m_range():
    with pytest.raises(ValueError):
        hilbert_class(3)


def test_hilbert_slopes_increase_to_half():
    ts = [t for _, t in hilbert_slopes(range(4, 200))]
    assert all(a < b for a, b in zip(ts, ts[1:]))
    assert all(t < F(1, 2) for t in ts)
    assert F(1, 2) - ts[-1] < F(1, 100)
    m = sympy.Symbol("m")
    assert sympy.limit((m - 3) ** 2 / (2 * (m * m - 4 * m + 5)), m, sympy.oo) == sympy.Rational(1, 2)


def test_n_t_examples():
    assert n_t_class(F(3, 10), F(1, 12)) == eta_xi(1, F(3, 10))
    d = F(1, 7)
    assert n_t_class(d, d) == eta_xi(1, d)


def test_n_t_seeded_pairs():
    rng = random.Random(7)
    for _ in range(5):
        d = F(rng.randint(1, 99), 600)
        t = d + (F(1, 2) - d) * F(rng.randint(0, 100), 100)
        assert n_t_class(t, d) == eta_xi(1, t)


@given(st.fractions(F(1, 1000), F(1, 6) - F(1, 1000)), st.fractions(0, 1))
def test_n_t_delta_independent(d, s):
    t = d + (F(1, 2) - d) * s
    assert n_t_class(t, d) == eta_xi(1, t)


@pytest.mark.parametrize("t,d", [(F(1, 2), F(1, 6)), (F(1, 12), F(1, 10)), (F(3, 5), F(1, 10)),
                                 (F(1, 3), 0)])
def test_n_t_domain(t, d):
    with pytest.raises(ValueError):
        n_t_class(t, d)


@pytest.mark.parametrize("t", [F(3, 10), F(2, 5), F(1, 4), F(5, 14)])
def test_morise(t):
    assert verify_morise(t)
    assert morise_class(t) == eta_xi(1, t)


def test_morise_domain():
    with pytest.raises(ValueError):
        verify_morise(F(1, 6))


def test_symbolic_identities():
    assert all(symbolic_identities().values())


def test_beta_examples():
    assert beta_of_t(F(3, 10)) == F(1, 3)
    assert t_of_beta(1) == F(1, 6) and beta_of_t(F(1, 6)) == 1
    assert t_of_beta(0) == F(1, 2)
    with pytest.raises(ValueError):
        beta_of_t(0)
    with pytest.raises(ValueError):
        t_of_beta(-1)


@given(st.fractions(0, 50))
def test_beta_round_trip(b):
    assert beta_of_t(t_of_beta(b)) == b


@given(st.fractions(F(1, 10 ** 6), F(1, 2)))
def test_t_round_trip(t):
    assert t_of_beta(beta_of_t(t)) == t


def test_wall_dictionary():
    rows = wall_dictionary()
    assert len(rows) == 9
    assert (rows[5].t, rows[5].beta) == (F(5, 14), F(1, 5))
    assert (rows[8].t, rows[8].beta) == (F(1, 2), 0)
    assert rows[3] == WallRow(3, F(1, 3), F(1, 4)) and rows[4].t == rows[3].t
    for r in rows:
        assert r.beta == (1 - 2 * r.t) / (4 * r.t)


def test_json_round_trips():
    for d in (eta_xi(F(3, 7), -2), hn_hh(1, F(16, 136))):
        assert DivisorClass.from_json(json.loads(json.dumps(d.to_json()))) == d
    for r in wall_dictionary():
        assert WallRow.from_json(json.loads(json.dumps(r.to_json()))) == r


def test_mixed_basis_rejected():
    with pytest.raises(ValueError):
        eta_xi(1, 0) + hn_hh(1, 0)
    with pytest.raises(ValueError):
        DivisorClass("Other", (0, 0))

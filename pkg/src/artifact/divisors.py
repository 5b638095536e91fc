"""Divisor classes on the moduli space in the bases {η, ξ} and {H_n, H_h}.

The Borcherds relation ``136 λ = H_n + 16 H_h`` and the pullbacks
``H_h -> 4η``, ``H_n -> 72η + 68ξ`` are taken as axioms; everything else is
derived from them and checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy

from .core import Q, qstr

BASES = ("EtaXi", "HnHh")
PULLBACK = {"H_n": (Fraction(72), Fraction(68)), "H_h": (Fraction(4), Fraction(0))}
BORCHERDS = (Fraction(1, 136), Fraction(16, 136))  # λ in the (H_n, H_h) basis


@dataclass(frozen=True)
class DivisorClass:
    """A rational class ``c0 e0 + c1 e1`` in one of the two bases."""

    basis: str
    coords: tuple

    def __init__(self, basis: str, coords):
        if basis not in BASES:
            raise ValueError(f"basis must be one of {BASES}")
        a, b = coords
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "coords", (Q(a), Q(b)))

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if other.basis != self.basis:
            raise ValueError("mixed bases")
        return DivisorClass(self.basis, (self.coords[0] + other.coords[0],
                                         self.coords[1] + other.coords[1]))

    def __mul__(self, c) -> "DivisorClass":
        c = Q(c)
        return DivisorClass(self.basis, (c * self.coords[0], c * self.coords[1]))

    __rmul__ = __mul__

    @property
    def slope(self) -> Fraction:
        """``ξ``-coefficient over ``η``-coefficient (the t of ``η + tξ``)."""
        if self.basis != "EtaXi":
            raise ValueError("slope is defined in the η, ξ basis")
        return self.coords[1] / self.coords[0]

    def __str__(self) -> str:
        names = ("eta", "xi") if self.basis == "EtaXi" else ("H_n", "H_h")
        return " + ".join(f"{qstr(c)}*{n}" for c, n in zip(self.coords, names))

    def to_json(self) -> dict:
        return {"basis": self.basis, "coords": [qstr(c) for c in self.coords]}

    @classmethod
    def from_json(cls, data: dict) -> "DivisorClass":
        return cls(data["basis"], data["coords"])


def eta_xi(a, b) -> DivisorClass:
    return DivisorClass("EtaXi", (a, b))


def hn_hh(a, b) -> DivisorClass:
    return DivisorClass("HnHh", (a, b))


H_N = hn_hh(1, 0)
H_H = hn_hh(0, 1)
HODGE = hn_hh(*BORCHERDS)
BOUNDARY = H_H * Fraction(1, 2)  # Δ = H_h / 2


def pullback(d: DivisorClass) -> DivisorClass:
    """Linear extension of ``H_h -> 4η``, ``H_n -> 72η + 68ξ``."""
    if d.basis != "HnHh":
        raise ValueError("pullback takes a class in the H_n, H_h basis")
    a, b = d.coords
    n, h = PULLBACK["H_n"], PULLBACK["H_h"]
    return eta_xi(a * n[0] + b * h[0], a * n[1] + b * h[1])


def _check_t_delta(t: Fraction, delta: Fraction) -> None:
    if not (0 < delta < Fraction(1, 6)):
        raise ValueError("delta must lie in (0, 1/6)")
    if not (delta <= t <= Fraction(1, 2)):
        raise ValueError("t must lie in [delta, 1/2]")


def n_t_class(t, delta) -> DivisorClass:
    """Convex combination of ``η + δξ`` and the Chow class ``4η + 2ξ``."""
    t, delta = Q(t), Q(delta)
    _check_t_delta(t, delta)
    w1 = (1 - 2 * t) / (1 - 2 * delta)
    w2 = (t - delta) / (2 * (1 - 2 * delta))
    return eta_xi(1, delta) * w1 + chow_class() * w2


# intersection numbers of the test curves Γ and Ω with (η, ξ)
TEST_CURVES = {"Gamma": (0, 1), "Omega": (1, 0)}
CHOW_DEGREES = {"Gamma": 2, "Omega": 4}


def chow_class() -> DivisorClass:
    """Solve ``deg L|Γ = 2``, ``deg L|Ω = 4`` against the intersection table."""
    from .linalg import solve

    rows = [list(TEST_CURVES[c]) for c in ("Gamma", "Omega")]
    sol = solve(rows, [CHOW_DEGREES[c] for c in ("Gamma", "Omega")])
    return eta_xi(*sol)


def hilbert_class(m: int) -> DivisorClass:
    """``2(m^2 - 4m + 5) η + (m - 3)^2 ξ``."""
    if m < 4:
        raise ValueError("m must be at least 4")
    return eta_xi(2 * (m * m - 4 * m + 5), (m - 3) ** 2)


def t_of_m(m: int) -> Fraction:
    return hilbert_class(m).slope


def t_of_beta(beta) -> Fraction:
    beta = Q(beta)
    if beta < 0:
        raise ValueError("beta must be non-negative")
    return 1 / (4 * beta + 2)


def beta_of_t(t) -> Fraction:
    t = Q(t)
    if not (0 < t <= Fraction(1, 2)):
        raise ValueError("t must lie in (0, 1/2]")
    return (1 - 2 * t) / (4 * t)


def morise_class(t) -> DivisorClass:
    """``2t · pullback(λ + β(t) Δ)``."""
    t = Q(t)
    return pullback(HODGE + BOUNDARY * beta_of_t(t)) * (2 * t)


def verify_morise(t) -> bool:
    t = Q(t)
    if not (Fraction(1, 6) < t < Fraction(1, 2)):
        raise ValueError("t must lie in (1/6, 1/2)")
    return morise_class(t) == eta_xi(1, t)


def symbolic_identities() -> dict[str, bool]:
    """The divisor identities with t and δ left as indeterminates."""
    t, d = sympy.symbols("t delta", positive=True)
    R = lambda x: sympy.Rational(x.numerator, x.denominator)  # noqa: E731
    chow = [R(c) for c in chow_class().coords]
    nt = [sympy.simplify((1 - 2 * t) / (1 - 2 * d) * e + (t - d) / (2 * (1 - 2 * d)) * c)
          for e, c in zip((1, d), chow)]
    beta = (1 - 2 * t) / (4 * t)
    hn, hh = PULLBACK["H_n"], PULLBACK["H_h"]
    lam = [R(BORCHERDS[0] * hn[i] + BORCHERDS[1] * hh[i]) for i in range(2)]
    mor = [sympy.simplify(2 * t * (lam[i] + beta * R(hh[i]) / 2)) for i in range(2)]
    b = sympy.Symbol("beta", nonnegative=True)
    return {
        "n_t_is_eta_plus_t_xi": nt[0] == 1 and sympy.simplify(nt[1] - t) == 0,
        "morise": mor[0] == 1 and sympy.simplify(mor[1] - t) == 0,
        "hodge_pullback": lam == [1, sympy.Rational(1, 2)],
        "t_beta_inverse": sympy.simplify(1 / (4 * ((1 - 2 * t) / (4 * t)) + 2) - t) == 0
        and sympy.simplify((1 - 2 / (4 * b + 2)) / (4 / (4 * b + 2)) - b) == 0,
    }


def borcherds_chain() -> dict[str, DivisorClass]:
    """``pullback(136 λ) = pullback(H_n) + 16 pullback(H_h) = 136 (η + ξ/2)``."""
    return {"136*lambda": pullback(HODGE * 136),
            "H_n+16*H_h": pullback(H_N) + pullback(H_H) * 16,
            "136*(eta+xi/2)": eta_xi(1, Fraction(1, 2)) * 136}


WALL_T = (Fraction(1, 6), Fraction(1, 4), Fraction(3, 10), Fraction(1, 3), Fraction(1, 3),
          Fraction(5, 14), Fraction(3, 8), Fraction(2, 5), Fraction(1, 2))
WALL_BETA = (Fraction(1), Fraction(1, 2), Fraction(1, 3), Fraction(1, 4), Fraction(1, 4),
             Fraction(1, 5), Fraction(1, 6), Fraction(1, 8), Fraction(0))


@dataclass(frozen=True)
class WallRow:
    k: int
    t: Fraction
    beta: Fraction

    def to_json(self) -> dict:
        return {"k": self.k, "t": qstr(self.t), "beta": qstr(self.beta)}

    @classmethod
    def from_json(cls, data: dict) -> "WallRow":
        return cls(int(data["k"]), Q(data["t"]), Q(data["beta"]))


def wall_dictionary() -> list[WallRow]:
    """The nine critical values ``k -> (t_k, β_k)``; asserts ``β_k = β(t_k)``."""
    rows = [WallRow(k, t, b) for k, (t, b) in enumerate(zip(WALL_T, WALL_BETA))]
    for r in rows:
        if beta_of_t(r.t) != r.beta or t_of_beta(r.beta) != r.t:
            raise AssertionError(f"wall {r.k}: β(t) mismatch")
    return rows


def hilbert_slopes(ms) -> list[tuple[int, Fraction]]:
    return [(m, t_of_m(m)) for m in ms]

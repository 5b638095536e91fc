"""Exact algebra kernel: monomials, homogeneous and bidegree forms, diagonal
one-parameter subgroups, the weighted monomial order and truncated bivariate
power series.

Every number is a :class:`fractions.Fraction`; no floating point is used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

NVARS = 4
Monomial = tuple  # exponent tuple (A0, A1, A2, A3)


def Q(x) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


def qstr(x: Fraction) -> str:
    """Serialize a rational as "p/q" (or "p" when q = 1)."""
    return str(Q(x))


@lru_cache(maxsize=None)
def monomials(degree: int, nvars: int = NVARS) -> tuple[Monomial, ...]:
    """All exponent vectors of the given degree, lexicographically descending."""
    if nvars == 1:
        return ((degree,),)
    out = []
    for a in range(degree, -1, -1):
        out.extend((a,) + rest for rest in monomials(degree - a, nvars - 1))
    return tuple(out)


def mono_str(m: Monomial, names: Sequence[str] | None = None) -> str:
    names = names or [f"x{i}" for i in range(len(m))]
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(i + j for i, j in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(i <= j for i, j in zip(a, b))


# ---------------------------------------------------------------------------
# one-parameter subgroups and the weighted order
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OnePS:
    """Diagonal (possibly virtual, i.e. rational) 1-PS ``diag(r0, .., r3)``."""

    weights: tuple

    def __init__(self, weights: Iterable):
        w = tuple(Q(r) for r in weights)
        if sum(w) != 0:
            raise ValueError(f"1-PS weights must sum to 0, got {[qstr(r) for r in w]}")
        object.__setattr__(self, "weights", w)

    def __len__(self) -> int:
        return len(self.weights)

    def __add__(self, other: "OnePS") -> "OnePS":
        return OnePS(a + b for a, b in zip(self.weights, other.weights))

    def __neg__(self) -> "OnePS":
        return OnePS(-a for a in self.weights)

    def scaled(self, c) -> "OnePS":
        c = Q(c)
        return OnePS(c * a for a in self.weights)

    @property
    def is_integral(self) -> bool:
        return all(r.denominator == 1 for r in self.weights)

    def integral(self) -> "OnePS":
        """Smallest positive multiple with coprime integer weights."""
        if not any(self.weights):
            return self
        den = math.lcm(*(r.denominator for r in self.weights))
        ints = [int(r * den) for r in self.weights]
        g = math.gcd(*ints)
        return OnePS(i // g for i in ints)

    def proportional(self, other: "OnePS") -> bool:
        """True when ``other`` is a positive multiple of ``self``."""
        return self.integral().weights == other.integral().weights

    def to_json(self) -> list[str]:
        return [qstr(r) for r in self.weights]

    @classmethod
    def from_json(cls, data) -> "OnePS":
        return cls(Q(x) for x in data)

    def __repr__(self) -> str:
        return f"OnePS({', '.join(qstr(r) for r in self.weights)})"


def monomial_weight(m: Monomial, lam: OnePS) -> Fraction:
    """The lambda-weight sum(r_i * A_i) of x^A."""
    return sum((r * a for r, a in zip(lam.weights, m)), Fraction(0))


@dataclass(frozen=True)
class LambdaOrder:
    """Total order on monomials: degree, then lambda-weight, then lex.

    ``a`` precedes ``b`` when its key is smaller.  Lex ties are broken by
    plain comparison of exponent tuples.
    """

    lam: OnePS

    def key(self, m: Monomial) -> tuple:
        return (sum(m), monomial_weight(m, self.lam), tuple(m))

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


def compare(a: Monomial, b: Monomial, order: LambdaOrder) -> int:
    """-1 if ``a`` precedes ``b``, 0 if equal, 1 otherwise."""
    return order.compare(a, b)


# ---------------------------------------------------------------------------
# homogeneous polynomials
# ---------------------------------------------------------------------------


class HomPolynomial:
    """Homogeneous polynomial in four variables with rational coefficients.

    Immutable by convention.  The zero polynomial has an empty term map but
    still carries a degree.
    """

    __slots__ = ("degree", "terms", "_hash")

    def __init__(self, terms: Mapping | Iterable = (), degree: int | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Fraction] = {}
        for m, c in items:
            m = tuple(int(e) for e in m)
            if len(m) != NVARS or min(m) < 0:
                raise ValueError(f"bad exponent vector {m}")
            acc[m] = acc.get(m, Fraction(0)) + Q(c)
        acc = {m: c for m, c in acc.items() if c}
        degs = {sum(m) for m in acc}
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous polynomial, degrees {sorted(degs)}")
        if degree is None:
            if not degs:
                raise ValueError("zero polynomial needs an explicit degree")
            degree = degs.pop()
        elif degs and degs != {degree}:
            raise ValueError(f"terms have degree {degs.pop()}, expected {degree}")
        self.degree = degree
        self.terms = dict(sorted(acc.items(), reverse=True))
        self._hash = None

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, degree: int) -> "HomPolynomial":
        return cls({}, degree)

    @classmethod
    def monomial(cls, m: Monomial, c=1) -> "HomPolynomial":
        return cls({tuple(m): c})

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> "HomPolynomial":
        """Parse an expression in x0..x3, e.g. ``"x0*x2 + x1^2"``."""
        import sympy

        syms = sympy.symbols("x0:4")
        expr = sympy.sympify(text.replace("^", "**"), locals=dict(zip(map(str, syms), syms)))
        if expr == 0:
            if degree is None:
                raise ValueError("cannot infer the degree of 0")
            return cls.zero(degree)
        poly = sympy.Poly(expr, *syms)
        if poly.free_symbols - set(syms):
            raise ValueError(f"unknown symbols in {text!r}")
        terms = {}
        for m, c in poly.terms():
            c = sympy.Rational(c)
            terms[m] = Fraction(int(c.p), int(c.q))
        return cls(terms, degree)

    @classmethod
    def from_json(cls, data, degree: int | None = None) -> "HomPolynomial":
        return cls({tuple(t["exponents"]): Q(t["coefficient"]) for t in data}, degree)

    # queries ------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def support(self) -> tuple[Monomial, ...]:
        return tuple(self.terms)

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def restrict_zero(self, variables: Iterable[int]) -> "HomPolynomial":
        """Set the listed variables to zero."""
        vs = set(variables)
        return HomPolynomial({m: c for m, c in self.terms.items() if all(m[i] == 0 for i in vs)},
                             self.degree)

    def scale_variables(self, factors: Sequence) -> "HomPolynomial":
        """Substitute x_i -> factors[i] * x_i."""
        fs = [Q(f) for f in factors]
        out = {}
        for m, c in self.terms.items():
            for f, e in zip(fs, m):
                c *= f ** e
            out[m] = c
        return HomPolynomial(out, self.degree)

    # arithmetic ---------------------------------------------------------
    def __add__(self, other: "HomPolynomial") -> "HomPolynomial":
        if other.degree != self.degree and other.terms and self.terms:
            raise ValueError("degree mismatch")
        deg = self.degree if self.terms or not other.terms else other.degree
        return HomPolynomial(list(self.terms.items()) + list(other.terms.items()), deg)

    def __neg__(self) -> "HomPolynomial":
        return HomPolynomial({m: -c for m, c in self.terms.items()}, self.degree)

    def __sub__(self, other: "HomPolynomial") -> "HomPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "HomPolynomial":
        if isinstance(other, HomPolynomial):
            out: dict[Monomial, Fraction] = {}
            for a, ca in self.terms.items():
                for b, cb in other.terms.items():
                    m = mono_mul(a, b)
                    out[m] = out.get(m, Fraction(0)) + ca * cb
            return HomPolynomial(out, self.degree + other.degree)
        c = Q(other)
        return HomPolynomial({m: c * v for m, v in self.terms.items()}, self.degree)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "HomPolynomial":
        out = HomPolynomial({(0,) * NVARS: 1})
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, HomPolynomial) and self.degree == other.degree
                and self.terms == other.terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.degree, tuple(self.terms.items())))
        return self._hash

    # output -------------------------------------------------------------
    def to_json(self) -> list[dict]:
        return [{"exponents": list(m), "coefficient": qstr(c)} for m, c in self.terms.items()]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.terms.items():
            ms = mono_str(m)
            if ms == "1":
                body = qstr(abs(c))
            elif abs(c) == 1:
                body = ms
            else:
                body = f"{qstr(abs(c))}*{ms}"
            parts.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self) -> str:
        return f"HomPolynomial({str(self)!r})"


def poly(text: str, degree: int | None = None) -> HomPolynomial:
    """Shorthand for :meth:`HomPolynomial.parse`."""
    return HomPolynomial.parse(text, degree)


# ---------------------------------------------------------------------------
# bidegree forms on P1 x P1
# ---------------------------------------------------------------------------


class BidegreeForm:
    """Form of bidegree (a, b) in (u0, u1; v0, v1).

    Terms are keyed by ``((i0, i1), (j0, j1))`` with ``i0 + i1 = a`` and
    ``j0 + j1 = b``.
    """

    __slots__ = ("bidegree", "terms")

    def __init__(self, terms: Mapping, bidegree: tuple[int, int] | None = None):
        acc: dict = {}
        for (i, j), c in terms.items():
            key = (tuple(i), tuple(j))
            acc[key] = acc.get(key, Fraction(0)) + Q(c)
        acc = {k: c for k, c in acc.items() if c}
        bds = {(sum(i), sum(j)) for i, j in acc}
        if len(bds) > 1:
            raise ValueError(f"mixed bidegrees {sorted(bds)}")
        if bidegree is None:
            if not bds:
                raise ValueError("zero form needs an explicit bidegree")
            bidegree = bds.pop()
        elif bds and bds != {tuple(bidegree)}:
            raise ValueError(f"terms have bidegree {bds.pop()}, expected {bidegree}")
        self.bidegree = tuple(bidegree)
        self.terms = dict(sorted(acc.items(), reverse=True))

    @classmethod
    def parse(cls, text: str) -> "BidegreeForm":
        """Parse an expression in u0, u1, v0, v1."""
        import sympy

        syms = sympy.symbols("u0 u1 v0 v1")
        expr = sympy.sympify(text.replace("^", "**"), locals={str(s): s for s in syms})
        p = sympy.Poly(sympy.expand(expr), *syms)
        terms = {}
        for (a, b, c, d), coef in p.terms():
            coef = sympy.Rational(coef)
            terms[((a, b), (c, d))] = Fraction(int(coef.p), int(coef.q))
        return cls(terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __mul__(self, other: "BidegreeForm") -> "BidegreeForm":
        out: dict = {}
        for (i, j), c in self.terms.items():
            for (k, l), d in other.terms.items():
                key = (mono_mul(i, k), mono_mul(j, l))
                out[key] = out.get(key, Fraction(0)) + c * d
        return BidegreeForm(out, (self.bidegree[0] + other.bidegree[0],
                                  self.bidegree[1] + other.bidegree[1]))

    def swapped(self) -> "BidegreeForm":
        """Exchange the two P1 factors."""
        return BidegreeForm({(j, i): c for (i, j), c in self.terms.items()},
                            (self.bidegree[1], self.bidegree[0]))

    def __eq__(self, other) -> bool:
        return isinstance(other, BidegreeForm) and self.terms == other.terms \
            and self.bidegree == other.bidegree

    def to_json(self) -> list[dict]:
        return [{"u": list(i), "v": list(j), "coefficient": qstr(c)}
                for (i, j), c in self.terms.items()]

    def __repr__(self) -> str:
        body = " + ".join(f"{qstr(c)}*{mono_str(i, ['u0', 'u1'])}*{mono_str(j, ['v0', 'v1'])}"
                          for (i, j), c in self.terms.items())
        return f"BidegreeForm({body or '0'})"


# ---------------------------------------------------------------------------
# truncated bivariate power series
# ---------------------------------------------------------------------------


class Series:
    """Power series in two local variables ``(x, y)``, truncated at total degree.

    Terms of total degree greater than ``truncation`` are discarded; every
    coefficient of degree up to ``truncation`` is exact.
    """

    __slots__ = ("terms", "truncation")

    def __init__(self, terms: Mapping | None = None, truncation: int = 12):
        if truncation < 1:
            raise ValueError("truncation must be at least 1")
        self.truncation = truncation
        self.terms = {(int(i), int(j)): Q(c) for (i, j), c in (terms or {}).items()
                      if c and i + j <= truncation}

    @classmethod
    def const(cls, c, truncation: int = 12) -> "Series":
        return cls({(0, 0): c}, truncation)

    @classmethod
    def x(cls, truncation: int = 12) -> "Series":
        return cls({(1, 0): 1}, truncation)

    @classmethod
    def y(cls, truncation: int = 12) -> "Series":
        return cls({(0, 1): 1}, truncation)

    def _coerce(self, other) -> "Series":
        if isinstance(other, Series):
            return other
        return Series.const(other, self.truncation)

    def __add__(self, other) -> "Series":
        other = self._coerce(other)
        n = min(self.truncation, other.truncation)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return Series(out, n)

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series({k: -c for k, c in self.terms.items()}, self.truncation)

    def __sub__(self, other) -> "Series":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Series":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Series":
        if not isinstance(other, Series):
            c = Q(other)
            return Series({k: c * v for k, v in self.terms.items()}, self.truncation)
        n = min(self.truncation, other.truncation)
        out: dict = {}
        for (a, b), c in self.terms.items():
            for (p, q), d in other.terms.items():
                if a + b + p + q <= n:
                    key = (a + p, b + q)
                    out[key] = out.get(key, Fraction(0)) + c * d
        return Series(out, n)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Series":
        out = Series.const(1, self.truncation)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Series) and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def order(self) -> int | None:
        """Lowest total degree present, None for the zero series."""
        return min((i + j for i, j in self.terms), default=None)

    def coefficient(self, i: int, j: int) -> Fraction:
        return self.terms.get((i, j), Fraction(0))

    def jet(self, k: int) -> dict:
        """Homogeneous component of degree k."""
        return {m: c for m, c in self.terms.items() if sum(m) == k}

    def substitute(self, x: "Series", y: "Series") -> "Series":
        """Compose with (x, y) -> (x(s, t), y(s, t)); both must have no constant term."""
        n = min(self.truncation, x.truncation, y.truncation)
        xp, yp = _powers(x, n), _powers(y, n)
        out = Series({}, n)
        for (i, j), c in self.terms.items():
            out = out + xp[i] * yp[j] * c
        return out

    def diff(self, var: int) -> "Series":
        """Partial derivative in x (var 0) or y (var 1); exact to one degree less."""
        out = {}
        for (i, j), c in self.terms.items():
            e = (i, j)[var]
            if e:
                out[(i - 1, j) if var == 0 else (i, j - 1)] = c * e
        return Series(out, max(self.truncation - 1, 1))

    def max_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def with_truncation(self, n: int) -> "Series":
        return Series(self.terms, n)

    def __repr__(self) -> str:
        body = " + ".join(f"{qstr(c)}*{mono_str((i, j), ['x', 'y'])}"
                          for (i, j), c in sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0])))
        return f"Series({body or '0'}; O({self.truncation + 1}))"


def _powers(s: Series, n: int) -> list[Series]:
    out = [Series.const(1, n)]
    for _ in range(n):
        out.append(out[-1] * s)
    return out


def substitute_affine(f: HomPolynomial, chart: int, assignments: Mapping[int, Series],
                      truncation: int = 12) -> Series:
    """Dehomogenize ``f`` at ``x_chart = 1`` and substitute local series.

    Parameters
    ----------
    f : HomPolynomial
    chart : int
        Index of the variable set to 1.
    assignments : mapping
        A :class:`Series` (or constant) for every other variable.
    truncation : int
        Total local degree kept.
    """
    if truncation < 1:
        raise ValueError("truncation must be at least 1")
    others = [i for i in range(NVARS) if i != chart]
    missing = [i for i in others if i not in assignments]
    if missing:
        raise ValueError(f"no assignment for variables {missing}")
    subs = {i: (assignments[i] if isinstance(assignments[i], Series)
                else Series.const(assignments[i], truncation)).with_truncation(truncation)
            for i in others}
    cache: dict = {}

    def power(i: int, e: int) -> Series:
        if (i, e) not in cache:
            cache[(i, e)] = subs[i] ** e
        return cache[(i, e)]

    out = Series({}, truncation)
    for m, c in f.terms.items():
        term = Series.const(c, truncation)
        for i in others:
            if m[i]:
                term = term * power(i, m[i])
        out = out + term
    return out

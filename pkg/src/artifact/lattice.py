"""Integral lattices, discriminant forms, glue overlattices and the boundary census.

Sign convention: definite lattices are negative definite, so root lattices
carry minus their Cartan matrix and roots have square -2.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

import sympy
from sympy.matrices.normalforms import hermite_normal_form, smith_normal_decomp

from .linalg import inverse, solve

Vector = tuple


# ---------------------------------------------------------------------------
# lattices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GramLattice:
    """Lattice ``Z^n`` with an integral symmetric Gram matrix."""

    gram: tuple
    label: str = ""

    def __init__(self, gram, label: str = ""):
        g = tuple(tuple(int(x) for x in row) for row in gram)
        if any(len(r) != len(g) for r in g):
            raise ValueError("Gram matrix must be square")
        if any(g[i][j] != g[j][i] for i in range(len(g)) for j in range(len(g))):
            raise ValueError("Gram matrix must be symmetric")
        object.__setattr__(self, "gram", g)
        object.__setattr__(self, "label", label)

    @property
    def rank(self) -> int:
        return len(self.gram)

    def det(self) -> int:
        return int(sympy.Matrix(self.gram).det()) if self.rank else 1

    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def is_negative_definite(self) -> bool:
        m = -sympy.Matrix(self.gram)
        return all(m[:k, :k].det() > 0 for k in range(1, self.rank + 1))

    def pair(self, u: Sequence, v: Sequence):
        return sum(Fraction(u[i]) * self.gram[i][j] * Fraction(v[j])
                   for i in range(self.rank) for j in range(self.rank) if u[i] and v[j])

    def norm(self, v: Sequence):
        return self.pair(v, v)

    def row(self, v: Sequence) -> list:
        return [sum(Fraction(v[i]) * self.gram[i][j] for i in range(self.rank))
                for j in range(self.rank)]

    def __add__(self, other: "GramLattice") -> "GramLattice":
        n, m = self.rank, other.rank
        g = [list(r) + [0] * m for r in self.gram] + [[0] * n + list(r) for r in other.gram]
        label = "+".join(x for x in (self.label, other.label) if x)
        return GramLattice(g, label)

    def to_json(self) -> dict:
        return {"label": self.label, "gram": [list(r) for r in self.gram]}

    @classmethod
    def from_json(cls, data: dict) -> "GramLattice":
        return cls(data["gram"], data["label"])


def direct_sum(parts: Sequence[GramLattice], label: str = "") -> GramLattice:
    out = GramLattice([])
    for p in parts:
        out = out + p
    return GramLattice(out.gram, label or out.label)


def _cartan_neg(edges: Sequence[tuple[int, int]], n: int) -> list[list[int]]:
    g = [[-2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        g[i][j] = g[j][i] = 1
    return g


def A(n: int) -> GramLattice:
    return GramLattice(_cartan_neg([(i, i + 1) for i in range(n - 1)], n), f"A{n}")


def D(n: int) -> GramLattice:
    """``D_n`` on the basis ``e_i - e_(i+1)`` (i < n) and ``e_(n-1) + e_n``; ``D_1 = <-4>``."""
    if n == 1:
        return GramLattice([[-4]], "D1")
    b = _d_basis(n)
    return GramLattice([[-sum(x * y for x, y in zip(r, s)) for s in b] for r in b], f"D{n}")


def _d_basis(n: int) -> list[list[int]]:
    rows = []
    for i in range(n - 1):
        r = [0] * n
        r[i], r[i + 1] = 1, -1
        rows.append(r)
    r = [0] * n
    r[n - 2], r[n - 1] = 1, 1
    rows.append(r)
    return rows


def E(n: int) -> GramLattice:
    """``E_6, E_7, E_8``: a chain of n-1 nodes with a branch at the third."""
    if n not in (6, 7, 8):
        raise ValueError("E_n needs n in {6, 7, 8}")
    edges = [(i, i + 1) for i in range(n - 2)] + [(2, n - 1)]
    return GramLattice(_cartan_neg(edges, n), f"E{n}")


def U(scale: int = 1) -> GramLattice:
    return GramLattice([[0, scale], [scale, 0]], "U" if scale == 1 else f"U({scale})")


def lattice_lambda(N: int) -> GramLattice:
    """``U^2 + D_(N-2)``."""
    return direct_sum([U(), U(), D(N - 2)], f"U^2+D{N - 2}")


# ---------------------------------------------------------------------------
# discriminant forms
# ---------------------------------------------------------------------------


def _mod(x: Fraction, m: int) -> Fraction:
    return x - m * math.floor(x / m)


@dataclass(frozen=True)
class DiscriminantForm:
    """``L*/L`` with its quadratic form ``q`` valued in Q/2Z.

    Elements are coefficient tuples on ``generators`` (rational vectors in
    lattice coordinates) with the given cyclic ``orders``.
    """

    orders: tuple
    generators: tuple
    lattice: GramLattice = field(repr=False, compare=False)

    @property
    def size(self) -> int:
        return math.prod(self.orders)

    def elements(self):
        return itertools.product(*(range(d) for d in self.orders))

    def vector(self, x: Sequence[int]) -> list[Fraction]:
        v = [Fraction(0)] * self.lattice.rank
        for c, g in zip(x, self.generators):
            if c:
                v = [a + c * b for a, b in zip(v, g)]
        return v

    def q(self, x: Sequence[int]) -> Fraction:
        return _mod(self.lattice.norm(self.vector(x)), 2)

    def b(self, x: Sequence[int], y: Sequence[int]) -> Fraction:
        return _mod(self.lattice.pair(self.vector(x), self.vector(y)), 1)

    def add(self, x, y) -> tuple:
        return tuple((a + c) % d for a, c, d in zip(x, y, self.orders))

    def order_of(self, x) -> int:
        return math.lcm(*(d // math.gcd(d, c) for c, d in zip(x, self.orders))) if x else 1

    def q_table(self) -> dict:
        return {x: self.q(x) for x in self.elements()}

    def invariant_factors(self) -> tuple:
        return invariant_factors(self.orders)

    def to_json(self) -> dict:
        from .core import qstr

        return {"orders": list(self.orders),
                "q_generators": [qstr(self.q(tuple(int(i == j) for j in range(len(self.orders)))))
                                 for i in range(len(self.orders))]}


def invariant_factors(orders: Sequence[int]) -> tuple:
    """Invariant factors of a product of cyclic groups."""
    if not orders:
        return ()
    m = sympy.diag(*orders) if len(orders) > 1 else sympy.Matrix([[orders[0]]])
    d = smith_normal_decomp(m)[0]
    return tuple(int(abs(d[i, i])) for i in range(len(orders)) if abs(d[i, i]) != 1)


def discriminant_form(L: GramLattice) -> DiscriminantForm:
    """``L*/L`` from the Smith form ``D = U G V``: generators ``V e_i / d_i``."""
    if L.rank == 0:
        return DiscriminantForm((), (), L)
    G = sympy.Matrix(L.gram)
    if G.det() == 0:
        raise ValueError("degenerate Gram matrix")
    D_, _, V = smith_normal_decomp(G)
    orders, gens = [], []
    for i in range(L.rank):
        d = abs(int(D_[i, i]))
        if d > 1:
            orders.append(d)
            gens.append(tuple(Fraction(int(V[r, i]), d) for r in range(L.rank)))
    return DiscriminantForm(tuple(orders), tuple(gens), L)


def _span(form: DiscriminantForm, gens: Sequence[tuple]) -> set:
    seen = {tuple(0 for _ in form.orders)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = form.add(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def forms_isomorphic(f1: DiscriminantForm, f2: DiscriminantForm) -> bool:
    """Exhaustive search for a q-preserving isomorphism (small groups)."""
    if f1.invariant_factors() != f2.invariant_factors():
        return False
    n = len(f1.orders)
    if n == 0:
        return True
    units = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    q2 = f2.q_table()
    cand = [[y for y in q2 if f2.order_of(y) == f1.orders[i] and q2[y] == f1.q(units[i])]
            for i in range(n)]

    def extend(i: int, images: list) -> bool:
        if i == n:
            return len(_span(f2, images)) == f2.size
        for y in cand[i]:
            if all(f2.b(y, images[j]) == f1.b(units[i], units[j]) for j in range(i)):
                if extend(i + 1, images + [y]):
                    return True
        return False

    return extend(0, [])


# ---------------------------------------------------------------------------
# overlattices, genus, divisibility
# ---------------------------------------------------------------------------


def _hnf_rows(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Basis (as rows) of the Z-span of integer rows."""
    m = sympy.Matrix(rows).T
    h = hermite_normal_form(m)
    return [[int(h[r, c]) for r in range(h.rows)] for c in range(h.cols)]


def saturate(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Basis of ``(Q-span of rows) ∩ Z^n``."""
    m = sympy.Matrix(rows)
    D_, _, V = smith_normal_decomp(m)
    r = sum(1 for i in range(min(D_.shape)) if D_[i, i] != 0)
    Vi = V.inv()
    return [[int(Vi[i, j]) for j in range(Vi.cols)] for i in range(r)]


def overlattice(L: GramLattice, glue: Sequence[Sequence], label: str = "") -> GramLattice:
    """Lattice generated by ``L`` and glue vectors of ``L*`` (lattice coordinates).

    Raises
    ------
    ValueError
        If a glue vector is not in ``L*``, or the glue is not isotropic.
    """
    glue = [[Fraction(x) for x in v] for v in glue]
    if not glue:
        return GramLattice(L.gram, label or L.label)
    for v in glue:
        if any(x.denominator != 1 for x in L.row(v)):
            raise ValueError("glue vector is not in the dual lattice")
        if L.norm(v).denominator != 1 or L.norm(v) % 2:
            raise ValueError("glue vector is not isotropic (odd or fractional norm)")
    for u, v in itertools.combinations(glue, 2):
        if L.pair(u, v).denominator != 1:
            raise ValueError("glue vectors pair non-integrally")
    den = math.lcm(*(x.denominator for v in glue for x in v))
    rows = [[den * int(i == j) for j in range(L.rank)] for i in range(L.rank)]
    rows += [[int(x * den) for x in v] for v in glue]
    basis = _hnf_rows(rows)
    B = [[Fraction(x, den) for x in r] for r in basis]
    gram = [[L.pair(u, v) for v in B] for u in B]
    if any(x.denominator != 1 for r in gram for x in r):
        raise AssertionError("overlattice Gram is not integral")
    return GramLattice([[int(x) for x in r] for r in gram], label or L.label)


def genus_of_Dn_test(L: GramLattice, n: int) -> bool:
    """Even, negative definite, rank n, discriminant form isomorphic to ``D_n``'s."""
    if L.rank != n:
        raise ValueError(f"rank {L.rank} differs from {n}")
    if not (L.is_even() and L.is_negative_definite()):
        return False
    return forms_isomorphic(discriminant_form(L), discriminant_form(D(n)))


def is_even_unimodular(L: GramLattice) -> bool:
    return L.is_even() and abs(L.det()) == 1


def divisibility(v: Sequence[int], L: GramLattice) -> int:
    """Positive generator of ``(v, L)``."""
    if not any(v):
        raise ValueError("zero vector")
    row = L.row(v)
    if any(Fraction(x).denominator != 1 for x in row):
        raise ValueError("v is not in L")
    return math.gcd(*(int(x) for x in row))


# ---------------------------------------------------------------------------
# the Dynkin chain of D_(k+1)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChainReport:
    k: int
    classes: tuple
    orthogonal: bool
    squares: tuple
    divisibilities: tuple
    fork_pairings: tuple
    ok: bool

    def to_json(self) -> dict:
        return {"k": self.k, "classes": [list(c) for c in self.classes],
                "orthogonal": self.orthogonal, "squares": list(self.squares),
                "divisibilities": list(self.divisibilities),
                "fork_pairings": list(self.fork_pairings), "ok": self.ok}


def dynkin_chain_check(k: int) -> ChainReport:
    """Classes ``2 e_j`` (j = 2..k+1) in ``D_(k+1)`` on the chain Γ0..Γk.

    The chain is Γ0 - ... - Γ(k-2) with the fork Γ(k-1), Γ(k) at Γ(k-2), and
    the pullback of the line class is ``2Γ0 + ... + 2Γ(k-2) + Γ(k-1) + Γ(k) = 2 e_1``.
    Each class must have square -4, be orthogonal to the others and to the
    pullback, and have divisibility exactly 2 in the orthogonal complement.
    """
    if not 2 <= k <= 16:
        raise ValueError("k must lie in 2..16")
    n = k + 1
    L = D(n)
    basis = _d_basis(n)
    to_gamma = lambda v: tuple(solve([list(c) for c in zip(*basis)], v))  # noqa: E731
    pull = to_gamma([2] + [0] * k)
    classes = [to_gamma([2 if i == j else 0 for i in range(n)]) for j in range(1, n)]
    if any(x is None for c in classes for x in c):
        raise AssertionError("class not in D_(k+1)")
    ints = lambda v: [int(x) for x in v]  # noqa: E731
    comp = saturate(_kernel_rows(ints(L.row(pull))))
    comp_lat = GramLattice([[int(L.pair(u, v)) for v in comp] for u in comp])
    divs, squares = [], []
    for c in classes:
        squares.append(int(L.norm(c)))
        divs.append(math.gcd(*(int(L.pair(c, m)) for m in comp)))
    orth = (all(L.pair(a, b) == 0 for a, b in itertools.combinations(classes, 2))
            and all(L.pair(c, pull) == 0 for c in classes))
    gk = [int(i == k) for i in range(n)]
    gk1 = [int(i == k - 1) for i in range(n)]
    fork = (int(L.pair(gk, [a + b for a, b in zip(gk, gk1)])),
            int(L.pair(gk, [a - b for a, b in zip(gk, gk1)])))
    ok = (orth and all(s == -4 for s in squares) and all(d == 2 for d in divs)
          and fork == (-2, -2) and comp_lat.rank == k)
    return ChainReport(k, tuple(classes), orth, tuple(squares), tuple(divs), fork, ok)


def _kernel_rows(a: Sequence[int]) -> list[list[int]]:
    """Integer rows spanning the rational kernel of the row vector ``a``."""
    ns = sympy.Matrix([list(a)]).nullspace()
    out = []
    for v in ns:
        den = math.lcm(*(sympy.fraction(x)[1] for x in v))
        out.append([int(x * den) for x in v])
    return out


# ---------------------------------------------------------------------------
# root systems and glue search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Component:
    """An irreducible root lattice (or ``D_1``) with its glue classes.

    ``orders`` and ``generators`` describe the discriminant group; ``min_norm``
    gives the minimal (positive) norm of each coset, by the standard formulas.
    """

    kind: str
    n: int

    @property
    def lattice(self) -> GramLattice:
        return {"A": A, "D": D, "E": E}[self.kind](self.n)

    @property
    def label(self) -> str:
        return f"{self.kind}{self.n}"

    def glue_generators(self) -> tuple[tuple, tuple]:
        """(orders, generator vectors in the root basis)."""
        k, n = self.kind, self.n
        Li = self.lattice
        if k == "A":
            inv = inverse([[-x for x in r] for r in Li.gram])
            return (n + 1,), (tuple(r[0] for r in inv),)
        if k == "E":
            if n == 8:
                return (), ()
            inv = inverse([[-x for x in r] for r in Li.gram])
            col = 0 if n == 6 else n - 2  # end node of the long arm
            return ((3,) if n == 6 else (2,)), (tuple(r[col] for r in inv),)
        # D_n in coordinates: xi = e1, alpha = (1/2, ..., 1/2)
        if n == 1:
            return (4,), ((Fraction(1, 4),),)
        alpha = self.from_coords([Fraction(1, 2)] * n)
        if n % 2:
            return (4,), (alpha,)
        xi = self.from_coords([1] + [0] * (n - 1))
        return (2, 2), (xi, alpha)

    def from_coords(self, v) -> tuple:
        basis = _d_basis(self.n)
        return tuple(solve([list(c) for c in zip(*basis)], [Fraction(x) for x in v]))

    def min_norm(self, c: tuple) -> Fraction:
        """Minimal norm (positive convention) of the coset with coefficients ``c``."""
        k, n = self.kind, self.n
        if not any(c):
            return Fraction(0)
        if k == "A":
            i = c[0] % (n + 1)
            return Fraction(i * (n + 1 - i), n + 1)
        if k == "E":
            return Fraction(4, 3) if n == 6 else Fraction(3, 2)
        if n % 2 or n == 1:
            i = c[0] % 4
            return Fraction(1) if i == 2 else Fraction(n, 4)
        xi, al = c
        return Fraction(1) if (xi % 2, al % 2) == (1, 0) else Fraction(n, 4)


_COMP_RE = re.compile(r"\(?([ADE])(\d+)\)?(?:\^(\d+))?")


def parse_root_system(label: str) -> list[Component]:
    """``"D12+D4"``, ``"(E7)^2+D2"``, ``"A15"``; empty string for no roots."""
    comps = []
    for part in filter(None, label.replace(" ", "").split("+")):
        m = _COMP_RE.fullmatch(part)
        if not m:
            raise ValueError(f"cannot parse root system {part!r}")
        comps += [Component(m.group(1), int(m.group(2)))] * int(m.group(3) or 1)
    return comps


def root_count(comps: Sequence[Component]) -> int:
    per = {"A": lambda n: n * (n + 1), "D": lambda n: 2 * n * (n - 1) if n > 1 else 0,
           "E": lambda n: {6: 72, 7: 126, 8: 240}[n]}
    return sum(per[c.kind](c.n) for c in comps)


@dataclass(frozen=True)
class GlueSolution:
    components: tuple
    lattice: GramLattice
    glue: tuple  # element coefficient tuples of the glue group

    @property
    def base(self) -> GramLattice:
        return direct_sum([c.lattice for c in self.components])


def _product_group(comps: Sequence[Component]):
    orders, gens, owner = [], [], []
    offset = 0
    for idx, c in enumerate(comps):
        o, g = c.glue_generators()
        r = c.lattice.rank
        for d, v in zip(o, g):
            full = [Fraction(0)] * offset + list(v)
            orders.append(d)
            gens.append(full)
            owner.append(idx)
        offset += r
    total = offset
    gens = [v + [Fraction(0)] * (total - len(v)) for v in gens]
    return orders, gens, owner


def find_glue(comps: Sequence[Component], target: str = "D", label: str = "") -> Optional[GlueSolution]:
    """Search an isotropic glue group adding no roots.

    ``target`` is ``"D"`` (discriminant form of ``D_rank``) or ``"unimodular"``.
    """
    base = direct_sum([c.lattice for c in comps])
    n = base.rank
    orders, gens, owner = _product_group(comps)
    size = math.prod(orders)
    want = size // 4 if target == "D" else size
    h = math.isqrt(want)
    if h * h != want:
        return None

    def vec(x):
        v = [Fraction(0)] * n
        for c, g in zip(x, gens):
            if c:
                v = [a + c * b for a, b in zip(v, g)]
        return v

    def coset_min(x) -> Fraction:
        total = Fraction(0)
        for idx, comp in enumerate(comps):
            cs = tuple(c for c, o in zip(x, owner) if o == idx)
            total += comp.min_norm(cs)
        return total

    elements = list(itertools.product(*(range(d) for d in orders)))
    zero = tuple(0 for _ in orders)
    good = [x for x in elements if x != zero and base.norm(vec(x)) % 2 == 0
            and coset_min(x) > 2]
    add = lambda x, y: tuple((a + b) % d for a, b, d in zip(x, y, orders))  # noqa: E731

    def close(gs):
        seen = {zero}
        frontier = [zero]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gs:
                    y = add(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    target_form = discriminant_form(D(n)) if target == "D" else None
    seen_groups = set()
    stack = [((), frozenset([zero]))]
    good_set = set(good)
    while stack:
        gs, grp = stack.pop(0)
        if len(grp) == h:
            if grp in seen_groups:
                continue
            seen_groups.add(grp)
            glue = [vec(x) for x in gs]
            try:
                M = overlattice(base, glue, label)
            except ValueError:
                continue
            if target == "unimodular":
                if is_even_unimodular(M):
                    return GlueSolution(tuple(comps), M, tuple(gs))
            elif forms_isomorphic(discriminant_form(M), target_form):
                return GlueSolution(tuple(comps), M, tuple(gs))
            continue
        for x in good:
            if x in grp:
                continue
            new = frozenset(close(list(gs) + [x]))
            if len(new) > h or h % len(new) or not new - {zero} <= good_set:
                continue
            if any(base.pair(vec(a), vec(b)).denominator != 1 for a in gs + (x,) for b in gs + (x,)):
                continue
            if new in seen_groups:
                continue
            stack.append((gs + (x,), new))
    return None


# ---------------------------------------------------------------------------
# classification data and census
# ---------------------------------------------------------------------------


def classifydn_list(n: int) -> list[str]:
    """Root systems of the lattices in the genus of ``D_n`` (1 <= n <= 18)."""
    if not 1 <= n <= 18:
        raise ValueError("n must lie in 1..18")
    if n == 1:
        return [""]
    if n <= 8:
        return [f"D{n}"]
    if n == 9:
        return ["D9", "E8"]
    if n <= 12:
        return [f"D{n}", f"D{n - 8}+E8"]
    return {
        13: ["D13", "D5+E8", "D12"],
        14: ["D14", "D6+E8", "D12+D2"],
        15: ["D15", "D7+E8", "D12+D3", "A15", "(E7)^2"],
        16: ["D16", "D8+E8", "D12+D4", "D2+(E7)^2", "(D8)^2", "A15"],
        17: ["D17", "D9+E8", "D12+D5", "D3+(E7)^2", "A15+D2", "A11+E6", "(D8)^2", "D16",
             "(E8)^2"],
        18: ["D18", "D10+E8", "D12+D6", "D4+(E7)^2", "A15+D3", "(D8)^2+D2", "D16+D2",
             "D2+(E8)^2", "A11+E6", "(D6)^3", "(A9)^2", "D10+E7+A1", "A17+A1"],
    }[n]


UNIMODULAR = {8: ["E8"], 16: ["(E8)^2", "D16+"]}


@dataclass(frozen=True)
class Realization:
    label: str
    lattice: GramLattice
    kind: str  # "genus-D" or "unimodular"
    root_system: str
    roots: int
    verified: bool

    def to_json(self) -> dict:
        return {"label": self.label, "kind": self.kind, "root_system": self.root_system or "none",
                "rank": self.lattice.rank, "roots": self.roots, "verified": self.verified}


@lru_cache(maxsize=None)
def realize(label: str, n: int) -> Realization:
    """Explicit lattice in the genus of ``D_n`` with root system ``label``.

    Full-rank root systems are glued directly; a root system of rank n - 1
    is completed by ``D_1``.  The result is checked with :func:`genus_of_Dn_test`.
    """
    comps = parse_root_system(label)
    rank = sum(c.n for c in comps)
    if rank == n - 1:
        comps = comps + [Component("D", 1)]
    elif rank != n:
        raise ValueError(f"root system {label!r} has rank {rank}, expected {n} or {n - 1}")
    sol = find_glue(comps, "D", label or "D1")
    if sol is None:
        raise AssertionError(f"no glue realization for {label!r} in the genus of D{n}")
    ok = genus_of_Dn_test(sol.lattice, n)
    return Realization(label or "D1", sol.lattice, "genus-D", label,
                       root_count(parse_root_system(label)), ok)


@lru_cache(maxsize=None)
def realize_unimodular(label: str) -> Realization:
    comps = parse_root_system(label.rstrip("+"))
    sol = find_glue(comps, "unimodular", label)
    if sol is None:
        raise AssertionError(f"no unimodular realization for {label!r}")
    M = sol.lattice
    ok = is_even_unimodular(M) and M.is_negative_definite()
    return Realization(label, M, "unimodular", label.rstrip("+"), root_count(comps), ok)


@dataclass(frozen=True)
class TypeIIComponent:
    label: str
    kind: str
    incident_type3: tuple
    verified: bool

    def to_json(self) -> dict:
        return {"label": self.label, "kind": self.kind,
                "incident_type3": list(self.incident_type3), "verified": self.verified}


@dataclass(frozen=True)
class BoundaryCensus:
    N: int
    type3: tuple
    type2: tuple

    @property
    def type3_count(self) -> int:
        return len(self.type3)

    @property
    def type2_count(self) -> int:
        return len(self.type2)

    def to_json(self) -> dict:
        return {"N": self.N, "type3": list(self.type3), "type3_count": self.type3_count,
                "type2_count": self.type2_count, "type2": [c.to_json() for c in self.type2]}

    def to_dot(self) -> str:
        lines = [f"graph census_N{self.N} {{", "  rankdir=LR;"]
        for p in self.type3:
            lines.append(f'  "{p}" [shape=circle, style=filled, fillcolor=black, fontcolor=white];')
        for i, c in enumerate(self.type2):
            lines.append(f'  "II_{i}" [shape=circle, label="II({c.label})"];')
        for i, c in enumerate(self.type2):
            for p in c.incident_type3:
                lines.append(f'  "{p}" -- "II_{i}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


# Number of Type II components of F(N), N = 3..20
TYPE2_TABLE = dict(zip(range(3, 21), (1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 4, 3, 3, 5, 8, 9, 13)))


def boundary_census(N: int, verify: bool = True) -> BoundaryCensus:
    """Type II and III boundary components of ``F(N)`` for 3 <= N <= 20."""
    if not 3 <= N <= 20:
        raise ValueError("N must lie in 3..20")
    n = N - 2
    two = N % 8 == 2
    type3 = ("III_a", "III_b") if two else ("III_a",)
    comps = []
    for label in classifydn_list(n):
        ok = realize(label, n).verified if verify else True
        mult = 3 if (N == 14 and label == "D12") else 1
        comps += [TypeIIComponent(label or "D1", "genus-D", ("III_a",), ok)] * mult
    if two:
        for label in UNIMODULAR[n]:
            ok = realize_unimodular(label).verified if verify else True
            comps.append(TypeIIComponent(label, "unimodular", type3, ok))
    return BoundaryCensus(N, type3, tuple(comps))


def gamma0_index(m: int) -> int:
    """``[SL(2,Z) : Γ0(m)] = m ∏_(p|m) (1 + 1/p)``."""
    if m < 1:
        raise ValueError("m must be positive")
    out = Fraction(m)
    for p in sympy.primefactors(m):
        out *= 1 + Fraction(1, p)
    return int(out)

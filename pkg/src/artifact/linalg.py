"""Small exact linear algebra over Q and Z (dense lists of Fractions/ints)."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

Matrix = list  # list of rows


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (nonzero rows, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1]) if rows else 0


def solve(a: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """One solution of ``a x = b`` (free variables set to 0), or None."""
    if not a:
        return [] if not any(b) else None
    n = len(a[0])
    aug = [list(r) + [bi] for r, bi in zip(a, b)]
    red, piv = rref(aug)
    if n in piv:
        return None
    x = [Fraction(0)] * n
    for row, c in zip(red, piv):
        x[c] = row[n]
    return x


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right kernel."""
    n = ncols if ncols is not None else len(rows[0])
    red, piv = rref(rows) if rows else ([], [])
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, c in zip(red, piv):
            v[c] = -row[f]
        basis.append(v)
    return basis


def integer_row(row: Sequence[Fraction]) -> list[int]:
    """Primitive integer multiple of a rational row."""
    den = math.lcm(*(Fraction(x).denominator for x in row)) if row else 1
    ints = [int(Fraction(x) * den) for x in row]
    g = math.gcd(*ints)
    return [i // g for i in ints] if g else ints


def pivot_columns_fraction_free(rows: Sequence[Sequence]) -> list[int]:
    """Pivot columns of the row echelon form, by fraction-free elimination.

    Rows are scaled to primitive integer vectors; elimination uses
    ``r <- p*r - r[c]*pivot`` followed by division by the row gcd.
    """
    work = [integer_row(r) for r in rows if any(r)]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    for c in range(ncols):
        idx = next((i for i, r in enumerate(work) if r[c]), None)
        if idx is None:
            continue
        p = work.pop(idx)
        pivots.append(c)
        nxt = []
        for r in work:
            if r[c]:
                r = [p[c] * a - r[c] * b for a, b in zip(r, p)]
                g = math.gcd(*r)
                if not g:
                    continue
                r = [a // g for a in r]
            nxt.append(r)
        work = nxt
        if not work:
            break
    return pivots


def det(m: Sequence[Sequence]) -> Fraction:
    """Determinant over Q by elimination."""
    a = [[Fraction(x) for x in r] for r in m]
    n = len(a)
    d = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            d = -d
        d *= a[c][c]
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return d


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(r, col)) for col in bt] for r in a]


def transpose(a: Sequence[Sequence]) -> list[list]:
    return [list(c) for c in zip(*a)]


def inverse(m: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(m)
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in red]

"""Exact rational linear algebra on plain tuples.

Vectors are tuples of ints or Fractions, matrices are sequences of row
tuples.  Nothing in here (or anywhere else in the package) touches a
float.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, u):
    return tuple(c * a for a in u)


def vneg(u):
    return tuple(-a for a in u)


def is_zero(u):
    return all(a == 0 for a in u)


def as_fractions(u):
    return tuple(Fraction(a) for a in u)


def is_integral(u):
    return all(Fraction(a).denominator == 1 for a in u)


def as_integers(u):
    fracs = [Fraction(a) for a in u]
    if any(f.denominator != 1 for f in fracs):
        raise ValueError(f"vector {tuple(u)} is not integral")
    return tuple(int(f) for f in fracs)


def primitive(v):
    """Scale a nonzero rational vector to the primitive integer vector
    pointing the same way (gcd of coordinates 1)."""
    fracs = [Fraction(a) for a in v]
    if all(f == 0 for f in fracs):
        raise ValueError("zero vector has no primitive representative")
    scale = lcm(*(f.denominator for f in fracs))
    ints = [int(f * scale) for f in fracs]
    g = gcd(*ints)
    return tuple(a // g for a in ints)


def rref(rows):
    """Reduced row echelon form over Fraction; returns (rows, pivot columns)."""
    m = [[Fraction(a) for a in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c]
        m[r] = [a / inv for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m], pivots


def rank(rows):
    rows = [r for r in rows if not is_zero(r)]
    if not rows:
        return 0
    return len(rref(rows)[1])


def row_space_basis(rows):
    """Nonzero rows of the reduced echelon form: a canonical basis of the
    span of the input rows."""
    red, pivots = rref(rows)
    return [red[i] for i in range(len(pivots))]


def kernel_basis(rows, dim):
    """Basis of {x : <row, x> = 0 for all rows} as Fraction tuples."""
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * dim
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -red[i][f]
        basis.append(tuple(v))
    return basis


def solve(rows, rhs):
    """Solve rows . x = rhs exactly.

    Returns (x, kernel_dim) with free variables at zero, or None when the
    system is inconsistent.
    """
    dim = len(rows[0])
    aug = [tuple(r) + (b,) for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    if dim in pivots:
        return None
    x = [Fraction(0)] * dim
    for i, c in enumerate(pivots):
        x[c] = red[i][dim]
    return tuple(x), dim - len(pivots)


def nonneg_solve(rows, rhs):
    """Find x >= 0 with rows . x = rhs, or None when infeasible.

    Phase-one simplex with Bland's rule over exact rationals, so the
    iteration always terminates.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    tab = []
    for i in range(m):
        row = [Fraction(a) for a in rows[i]] + [Fraction(0)] * m + [Fraction(rhs[i])]
        if row[-1] < 0:
            row = [-a for a in row]
        row[n + i] = Fraction(1)
        tab.append(row)
    basis = [n + i for i in range(m)]
    cost = [Fraction(0)] * n + [Fraction(1)] * m + [Fraction(0)]
    for row in tab:
        cost = [c - a for c, a in zip(cost, row)]
    while True:
        enter = next((j for j in range(n + m) if cost[j] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][-1] / tab[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:
            return None
        piv = tab[leave][enter]
        tab[leave] = [a / piv for a in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [a - f * b for a, b in zip(tab[i], tab[leave])]
        f = cost[enter]
        if f != 0:
            cost = [a - f * b for a, b in zip(cost, tab[leave])]
        basis[leave] = enter
    if cost[-1] != 0:
        return None
    x = [Fraction(0)] * n
    for i, bj in enumerate(basis):
        if bj < n:
            x[bj] = tab[i][-1]
    return tuple(x)

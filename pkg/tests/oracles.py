"""Independent oracles used by the tests.

Nothing here imports the package's rewriting or linear-algebra code: the
bar complex is built from closed-form monomial multiplication and ranks come
from sympy.
"""

from fractions import Fraction
from itertools import product
from math import comb

import sympy


def _rank(rows, columns):
    if not rows or not columns:
        return 0
    index = {c: k for k, c in enumerate(columns)}
    m = sympy.zeros(len(rows), len(columns))
    for r, row in enumerate(rows):
        for c, v in row.items():
            m[r, index[c]] = sympy.Rational(v.numerator, v.denominator)
    return m.rank()


def _compositions(j, i):
    if i == 1:
        yield (j,)
        return
    for first in range(1, j - i + 2):
        for rest in _compositions(j - first, i - 1):
            yield (first,) + rest


def qplane_ext(q, max_i, max_j):
    """Tor of the bar complex of K<x,y>/(yx - q xy); q = 1 gives K[x,y].

    Monomials are exponent pairs (a, b) for x^a y^b, and
    x^a y^b * x^c y^d = q^(b c) x^(a+c) y^(b+d).
    """
    q = Fraction(q)
    mono = {d: [(a, d - a) for a in range(d + 1)] for d in range(max_j + 1)}

    def mul(u, v):
        return (u[0] + v[0], u[1] + v[1]), q ** (u[1] * v[0])

    def basis(i, j):
        if i < 1 or j < i:
            return []
        return [t for s in _compositions(j, i) for t in product(*(mono[d] for d in s))]

    def d_rank(i, j):
        if i < 2:
            return 0
        rows = []
        for t in basis(i, j):
            img = {}
            for k in range(i - 1):
                w, c = mul(t[k], t[k + 1])
                key = t[:k] + (w,) + t[k + 2:]
                img[key] = img.get(key, 0) + (-1) ** k * c
            rows.append({k: v for k, v in img.items() if v})
        return _rank(rows, basis(i - 1, j))

    dims = [[0] * (max_j + 1) for _ in range(max_i + 1)]
    dims[0][0] = 1
    for j in range(1, max_j + 1):
        for i in range(1, min(j, max_i) + 1):
            dims[i][j] = len(basis(i, j)) - d_rank(i, j) - d_rank(i + 1, j)
    return dims


def polynomial_dims(n, N):
    return tuple(comb(d + n - 1, n - 1) for d in range(N + 1))


def intersection_with_F2_dim(P, n):
    """dim of (P + VP + PV + VPV) & F_2 for P given as dicts word -> Fraction."""
    rows = []
    letters = [(a,) for a in range(1, n + 1)]
    for p in P:
        rows.append(dict(p))
        for a in letters:
            rows.append({a + w: c for w, c in p.items()})
            rows.append({w + a: c for w, c in p.items()})
            for b in letters:
                rows.append({a + w + b: c for w, c in p.items()})
    cols = sorted({w for r in rows for w in r}, key=lambda w: (len(w), w))
    high = [w for w in cols if len(w) > 2]
    total = _rank(rows, cols)
    proj = _rank([{w: c for w, c in r.items() if len(w) > 2} for r in rows], high)
    return total - proj


def quadratic_algebra_ext(n, relators, max_i, max_j):
    """Ext table of K<x_1..x_n>/(relators) for homogeneous quadratic relators.

    Each A_d is built as T_d / I_d with I_d spanned by u r v; coordinates come
    from sympy's rref, so no rewriting is involved.
    """
    rels = [dict(r) for r in relators]
    coords = {}  # d -> (quotient basis words, reducer: word -> {basis word: coeff})
    for d in range(max_j + 1):
        T = [tuple(w) for w in product(range(1, n + 1), repeat=d)]
        gens = []
        for r in rels:
            for k in range(d - 1):
                for u in product(range(1, n + 1), repeat=k):
                    for v in product(range(1, n + 1), repeat=d - 2 - k):
                        gens.append({tuple(u) + w + tuple(v): c for w, c in r.items()})
        # columns in reverse order so pivots land on the largest words
        cols = T[::-1]
        if gens:
            m = sympy.Matrix([[sympy.Rational(g.get(w, 0).numerator, g.get(w, 0).denominator)
                               if isinstance(g.get(w, 0), Fraction) else g.get(w, 0) for w in cols] for g in gens])
            rr, piv = m.rref()
            rows = [rr.row(i) for i in range(len(piv))]
        else:
            piv, rows = (), []
        pivset = {cols[p] for p in piv}
        basis = [w for w in T if w not in pivset]
        red = {}
        for w in T:
            if w in pivset:
                row = rows[[cols[p] for p in piv].index(w)]
                red[w] = {cols[k]: -Fraction(int(row[k].p), int(row[k].q))
                          for k in range(len(cols)) if row[k] != 0 and cols[k] != w}
            else:
                red[w] = {w: Fraction(1)}
        coords[d] = (basis, red)

    def mul(u, v):
        return coords[len(u) + len(v)][1][u + v]

    def basis(i, j):
        if i < 1 or j < i:
            return []
        return [t for s in _compositions(j, i) for t in product(*(coords[d][0] for d in s))]

    def d_rank(i, j):
        if i < 2:
            return 0
        rows = []
        for t in basis(i, j):
            img = {}
            for k in range(i - 1):
                for w, c in mul(t[k], t[k + 1]).items():
                    key = t[:k] + (w,) + t[k + 2:]
                    img[key] = img.get(key, 0) + (-1) ** k * c
            rows.append({k: v for k, v in img.items() if v})
        return _rank(rows, basis(i - 1, j))

    dims = [[0] * (max_j + 1) for _ in range(max_i + 1)]
    dims[0][0] = 1
    for j in range(1, max_j + 1):
        for i in range(1, min(j, max_i) + 1):
            dims[i][j] = len(basis(i, j)) - d_rank(i, j) - d_rank(i + 1, j)
    return dims

"""Exact linear algebra over the rationals and the integers.

Matrices are lists of rows.  Rational routines work on ``Fraction`` entries
and never round.  The Smith normal form with unimodular transforms, which the
coboundary solver needs, comes from sympy.
"""

from fractions import Fraction
from math import gcd

from sympy import ZZ, Matrix
from sympy.matrices.normalforms import smith_normal_decomp


def to_fractions(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows):
    """Reduced row echelon form.  Returns ``(matrix, pivot_columns)``."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / Fraction(m[r][c])
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows):
    return len(rref(rows)[1])


def kernel(rows, ncols=None):
    """Basis of the right kernel ``{v : rows . v = 0}`` as a list of vectors."""
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(rows, rhs):
    """One solution of ``rows . x = rhs`` or ``None`` if inconsistent."""
    ncols = len(rows[0])
    aug = [list(r) + [Fraction(b)] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[-1]
    return x


def det(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    d = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            d = -d
        d *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return d


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def transpose(a):
    return [list(r) for r in zip(*a)]


def identity(n, one=1):
    return [[one if i == j else 0 * one for j in range(n)] for i in range(n)]


# -- integers ---------------------------------------------------------------


def smith_normal_form(a):
    """Smith normal form ``D = P A Q`` of an integer matrix.

    Returns ``(D, P, Q)`` with ``P`` and ``Q`` unimodular and ``D`` diagonal
    with non-negative entries, each dividing the next.
    """
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    if not nrows or not ncols:
        return [list(r) for r in a], identity(nrows), identity(ncols)
    d, p, q = smith_normal_decomp(Matrix(a), domain=ZZ)
    d, p, q = ([[int(x) for x in m.row(i)] for i in range(m.rows)] for m in (d, p, q))
    # sympy may leave signs on the diagonal
    for t in range(min(nrows, ncols)):
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            p[t] = [-x for x in p[t]]
    return d, p, q


def diagonal(d):
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def lcm(a, b):
    return a // gcd(a, b) * b if a and b else 0

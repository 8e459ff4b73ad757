"""Independent reference computations used to derive and cross-check expected values.

Nothing here calls into blockcalc's number theory: groups are built from
permutations, Hilbert symbols come from brute-force solubility searches, and
cyclotomic elements are evaluated as complex numbers.
"""

import cmath
from functools import lru_cache
from itertools import product
from math import isqrt

import numpy as np

# -- small finite groups -------------------------------------------------------


def _compose(p, q):
    # apply q first, then p
    return tuple(p[i] for i in q)


def table_from_generators(gens):
    """Multiplication table (identity at index 0) of the permutation group generated by ``gens``."""
    ident = tuple(range(len(gens[0])))
    elems = [ident]
    seen = {ident}
    i = 0
    while i < len(elems):
        for g in gens:
            h = _compose(elems[i], g)
            if h not in seen:
                seen.add(h)
                elems.append(h)
        i += 1
    index = {e: k for k, e in enumerate(elems)}
    return [[index[_compose(a, b)] for b in elems] for a in elems]


def _cycle(n, shift=0, size=None):
    size = size or n
    perm = list(range(size))
    for i in range(n):
        perm[shift + i] = shift + (i + 1) % n
    return tuple(perm)


def cyclic_table(n):
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def product_table(t1, t2):
    n2 = len(t2)
    size = len(t1) * n2
    return [[t1[x // n2][y // n2] * n2 + t2[x % n2][y % n2] for y in range(size)]
            for x in range(size)]


def dihedral_table(n):
    rot = _cycle(n)
    refl = tuple((-i) % n for i in range(n))
    return table_from_generators([rot, refl])


def quaternion_group_table():
    # regular representation of Q8 on {±1, ±i, ±j, ±k}, encoded 0..7 as (unit, sign)
    units = ["1", "i", "j", "k"]
    mult = {("1", u): (u, 1) for u in units}
    mult.update({(u, "1"): (u, 1) for u in units})
    mult.update({("i", "i"): ("1", -1), ("j", "j"): ("1", -1), ("k", "k"): ("1", -1),
                 ("i", "j"): ("k", 1), ("j", "k"): ("i", 1), ("k", "i"): ("j", 1),
                 ("j", "i"): ("k", -1), ("k", "j"): ("i", -1), ("i", "k"): ("j", -1)})
    elems = [(u, s) for s in (1, -1) for u in units]

    def left(e):
        perm = []
        for x in elems:
            u, s = mult[(e[0], x[0])]
            perm.append(elems.index((u, s * e[1] * x[1])))
        return tuple(perm)

    return table_from_generators([left(("i", 1)), left(("j", 1))])


def groups_up_to_8():
    """Every group of order at most 8, up to isomorphism."""
    c2 = cyclic_table(2)
    out = {f"C{n}": cyclic_table(n) for n in range(1, 9)}
    out["C2xC2"] = product_table(c2, c2)
    out["C2xC4"] = product_table(c2, cyclic_table(4))
    out["C2xC2xC2"] = product_table(out["C2xC2"], c2)
    out["S3"] = dihedral_table(3)
    out["D4"] = dihedral_table(4)
    out["Q8"] = quaternion_group_table()
    return out


def check_group_axioms(table):
    n = len(table)
    assert all(table[0][x] == x and table[x][0] == x for x in range(n))
    assert all(sorted(row) == list(range(n)) for row in table)
    for a, b, c in product(range(n), repeat=3):
        assert table[table[a][b]][c] == table[a][table[b][c]]


# -- complex evaluation --------------------------------------------------------


def complex_value(elem):
    """Numerical value of a blockcalc CyclotomicElement under zeta_N = exp(2 pi i / N)."""
    n = elem.conductor
    z = cmath.exp(2j * cmath.pi / n)
    return sum(float(c) * z ** k for k, c in enumerate(elem.coeffs))


def close(x, y, tol=1e-9):
    return abs(x - y) <= tol * max(1.0, abs(x), abs(y))


# -- Hilbert symbols by brute force -----------------------------------------------


def squarefree_part(n):
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    d = 2
    while d * d <= n:
        while n % (d * d) == 0:
            n //= d * d
        if n % d == 0:
            out *= d
            n //= d
        d += 1
    return sign * out * n


def _primitive_solutions_mod(a, b, p):
    r = np.arange(p, dtype=np.int64)
    x, y, z = np.meshgrid(r, r, r, indexing="ij")
    ok = (a * x * x + b * y * y - z * z) % p == 0
    ok &= (x % p != 0) | (y % p != 0) | (z % p != 0)
    return list(zip(x[ok].tolist(), y[ok].tolist(), z[ok].tolist()))


def _solvable_mod_2_power(a, b, depth):
    m = 2 ** depth
    r = np.arange(m, dtype=np.int64)
    x, y, z = np.meshgrid(r, r, r, indexing="ij")
    ok = (a * x * x + b * y * y - z * z) % m == 0
    ok &= (x % 2 == 1) | (y % 2 == 1) | (z % 2 == 1)
    return bool(ok.any())


def _solvable_mod_odd_power(a, b, p, depth):
    # depth-first search over p-adic digits.  Lifting (x, y, z) mod p^k to
    # (x + p^k u, ...) changes f by p^k * 2(a x u + b y v - z w) modulo p^(k+1)
    r = np.arange(p, dtype=np.int64)
    u, v, w = np.meshgrid(r, r, r, indexing="ij")
    u, v, w = u.ravel(), v.ravel(), w.ravel()

    def f(x, y, z):
        return a * x * x + b * y * y - z * z

    def search(x, y, z, k):
        if k == depth:
            return True
        pk = p ** k
        c = (f(x, y, z) // pk) % p
        ok = (c + 2 * ((a * x % p) * u + (b * y % p) * v - (z % p) * w)) % p == 0
        for i in np.flatnonzero(ok):
            if search(x + pk * int(u[i]), y + pk * int(v[i]), z + pk * int(w[i]), k + 1):
                return True
        return False

    for x, y, z in _primitive_solutions_mod(a, b, p):
        if search(x, y, z, 1):
            return True
    return False


@lru_cache(maxsize=None)
def _brute_symbol(a, b, p, depth):
    if p == "inf":
        # a x^2 + b y^2 = z^2 has a nonzero real solution unless both are negative
        return -1 if a < 0 and b < 0 else 1
    if p == 2:
        return 1 if _solvable_mod_2_power(a, b, depth) else -1
    return 1 if _solvable_mod_odd_power(a, b, p, depth) else -1


def brute_hilbert(a, b, p, depth=6):
    """(a, b)_p from primitive solutions of a x^2 + b y^2 = z^2 modulo p^depth."""
    a, b = squarefree_part(a), squarefree_part(b)
    if (a, b) > (b, a):
        a, b = b, a
    return _brute_symbol(a, b, p, depth)


def primes_up_to(n):
    return [p for p in range(2, n + 1) if all(p % q for q in range(2, isqrt(p) + 1))]

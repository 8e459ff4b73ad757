"""Matrix algebras M_n(B) over Q or over a quaternion algebra B = (a, b).

Everything is reduced to linear algebra over Q on the flattened
coordinates: entry ``(r, c)``, quaternion coordinate ``q`` sits at index
``(r * n + c) * e + q`` where ``e`` is 1 for B = Q and 4 otherwise.
"""

from fractions import Fraction
from itertools import combinations, product

import sympy

from . import linalg
from .cyclo import CyclotomicElement, generated_subfield
from .errors import DegreeMismatch, EmbeddingIncomplete, InputError, NoConjugatorFound

ZERO = Fraction(0)


class QuaternionElement:
    """``w + x i + y j + z ij`` in ``(a, b)``; with ``a = b = None`` it is a rational."""

    __slots__ = ("w", "x", "y", "z", "a", "b")

    def __init__(self, w=0, x=0, y=0, z=0, a=None, b=None):
        self.w, self.x, self.y, self.z = Fraction(w), Fraction(x), Fraction(y), Fraction(z)
        self.a = None if a is None else Fraction(a)
        self.b = None if b is None else Fraction(b)
        if self.a is None and (self.x or self.y or self.z):
            raise ValueError("a rational entry has no i, j, ij part")

    @property
    def coords(self):
        return (self.w, self.x, self.y, self.z)

    def __mul__(self, o):
        if not isinstance(o, QuaternionElement):
            o = Fraction(o)
            return QuaternionElement(self.w * o, self.x * o, self.y * o, self.z * o, self.a, self.b)
        a = self.a if self.a is not None else o.a
        b = self.b if self.b is not None else o.b
        if a is None:
            return QuaternionElement(self.w * o.w)
        w1, x1, y1, z1 = self.coords
        w2, x2, y2, z2 = o.coords
        return QuaternionElement(
            w1 * w2 + a * x1 * x2 + b * y1 * y2 - a * b * z1 * z2,
            w1 * x2 + x1 * w2 - b * y1 * z2 + b * z1 * y2,
            w1 * y2 + y1 * w2 + a * x1 * z2 - a * z1 * x2,
            w1 * z2 + z1 * w2 + x1 * y2 - y1 * x2,
            a, b)

    __rmul__ = __mul__

    def __add__(self, o):
        a = self.a if self.a is not None else o.a
        b = self.b if self.b is not None else o.b
        return QuaternionElement(*(p + q for p, q in zip(self.coords, o.coords)), a=a, b=b)

    def __neg__(self):
        return QuaternionElement(-self.w, -self.x, -self.y, -self.z, self.a, self.b)

    def __sub__(self, o):
        return self + (-o)

    def conjugate(self):
        return QuaternionElement(self.w, -self.x, -self.y, -self.z, self.a, self.b)

    def norm(self):
        """Reduced norm ``w^2 - a x^2 - b y^2 + ab z^2``."""
        if self.a is None:
            return self.w
        a, b = self.a, self.b
        return self.w ** 2 - a * self.x ** 2 - b * self.y ** 2 + a * b * self.z ** 2

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("quaternion with zero reduced norm")
        if self.a is None:
            return QuaternionElement(1 / self.w)
        return self.conjugate() * (1 / n)

    def is_zero(self):
        return not (self.w or self.x or self.y or self.z)

    def __eq__(self, o):
        if not isinstance(o, QuaternionElement):
            return self.coords == (Fraction(o), ZERO, ZERO, ZERO)
        return self.coords == o.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"Q({self.w}, {self.x}, {self.y}, {self.z})"


class Ambient:
    """``M_n(B)`` with B = Q (``algebra=None``) or B = (a, b)."""

    def __init__(self, n, algebra=None):
        self.n = n
        self.algebra = algebra
        self.e = 1 if algebra is None else 4
        self.dim = n * n * self.e
        self._ab = (None, None) if algebra is None else (algebra.a, algebra.b)

    def __eq__(self, other):
        return isinstance(other, Ambient) and (self.n, self._ab) == (other.n, other._ab)

    def __hash__(self):
        return hash((self.n, self._ab))

    @property
    def degree(self):
        """Reduced degree: square root of the Q-dimension."""
        return self.n * (1 if self.algebra is None else 2)

    def quaternion(self, w=0, x=0, y=0, z=0):
        return QuaternionElement(w, x, y, z, *self._ab)

    def basis_unit(self, q):
        coords = [0, 0, 0, 0]
        coords[q] = 1
        return self.quaternion(*coords)

    def zero(self):
        z = self.quaternion()
        return MatrixOverB(self, [[z] * self.n for _ in range(self.n)])

    def identity(self):
        return self.scalar(1)

    def scalar(self, q):
        z, s = self.quaternion(), self.quaternion(q)
        return MatrixOverB(self, [[s if r == c else z for c in range(self.n)] for r in range(self.n)])

    def from_rational(self, rows):
        return MatrixOverB(self, [[self.quaternion(x) for x in row] for row in rows])

    def from_flat(self, vec):
        e, n = self.e, self.n
        rows = []
        for r in range(n):
            row = []
            for c in range(n):
                base = (r * n + c) * e
                row.append(self.quaternion(*vec[base:base + e]))
            rows.append(row)
        return MatrixOverB(self, rows)

    def basis(self):
        for i in range(self.dim):
            v = [ZERO] * self.dim
            v[i] = Fraction(1)
            yield self.from_flat(v)

    def commutator_map(self, g):
        """Matrix (dim x dim) of ``X -> X g - g X`` on flattened coordinates."""
        n, e = self.n, self.e
        cols = []
        units = [self.basis_unit(q) for q in range(e)]
        for r in range(n):
            for k in range(n):
                for q in range(e):
                    u = units[q]
                    col = [ZERO] * self.dim
                    # (E_rk u) g: row r, column c gets u * g[k][c]
                    for c in range(n):
                        prod = u * g.rows[k][c]
                        base = (r * n + c) * e
                        for t in range(e):
                            col[base + t] += prod.coords[t]
                    # g (E_rk u): row s, column k gets g[s][r] * u
                    for s in range(n):
                        prod = g.rows[s][r] * u
                        base = (s * n + k) * e
                        for t in range(e):
                            col[base + t] -= prod.coords[t]
                    cols.append(col)
        return linalg.transpose(cols)

    def left_multiplication(self, x):
        return linalg.transpose([(x * b).flatten() for b in self.basis()])


class MatrixOverB:
    """An ``n x n`` matrix of quaternion (or rational) entries."""

    __slots__ = ("ambient", "rows")

    def __init__(self, ambient, rows):
        self.ambient = ambient
        self.rows = tuple(tuple(r) for r in rows)
        if len(self.rows) != ambient.n or any(len(r) != ambient.n for r in self.rows):
            raise ValueError(f"expected a {ambient.n}x{ambient.n} matrix")

    @property
    def n(self):
        return self.ambient.n

    def __mul__(self, other):
        if not isinstance(other, MatrixOverB):
            q = Fraction(other)
            return MatrixOverB(self.ambient, [[x * q for x in row] for row in self.rows])
        n = self.n
        out = []
        for r in range(n):
            row = []
            for c in range(n):
                acc = self.ambient.quaternion()
                for k in range(n):
                    x, y = self.rows[r][k], other.rows[k][c]
                    if not x.is_zero() and not y.is_zero():
                        acc = acc + x * y
                row.append(acc)
            out.append(row)
        return MatrixOverB(self.ambient, out)

    def __rmul__(self, q):
        return self * q

    def __add__(self, other):
        return MatrixOverB(self.ambient, [[x + y for x, y in zip(r, s)]
                                          for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return MatrixOverB(self.ambient, [[x - y for x, y in zip(r, s)]
                                          for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return self * -1

    def __eq__(self, other):
        return isinstance(other, MatrixOverB) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __pow__(self, k):
        result = self.ambient.identity()
        for _ in range(k):
            result = result * self
        return result

    def flatten(self):
        e = self.ambient.e
        return [x.coords[t] for row in self.rows for x in row for t in range(e)]

    def is_zero(self):
        return all(x.is_zero() for row in self.rows for x in row)

    def determinant_of_multiplication(self):
        return linalg.det(self.ambient.left_multiplication(self))

    def is_invertible(self):
        return self.determinant_of_multiplication() != 0

    def inverse(self):
        amb = self.ambient
        sol = linalg.solve(amb.left_multiplication(self), amb.identity().flatten())
        if sol is None:
            raise ZeroDivisionError("matrix is not invertible")
        return amb.from_flat(sol)

    def to_json(self):
        e = self.ambient.e
        return [[[str(c) for c in x.coords[:e]] if e > 1 else str(x.w) for x in row]
                for row in self.rows]

    def __repr__(self):
        if self.ambient.e == 1:
            return "M" + repr([[str(x.w) for x in r] for r in self.rows])
        return "M" + repr([list(r) for r in self.rows])


# -- subalgebras --------------------------------------------------------------


class SubalgebraSpec:
    """The unital Q-subalgebra generated by ``generators``, with an explicit basis."""

    def __init__(self, ambient, generators, basis=None):
        self.ambient = ambient
        self.generators = tuple(generators)
        self.basis = tuple(basis) if basis is not None else self._close()

    def _close(self):
        amb = self.ambient
        echelon = _Span(amb.dim)
        members = []
        for x in [amb.identity(), *self.generators]:
            if echelon.add(x.flatten()):
                members.append(x)
        i = 0
        while i < len(members):
            for j in range(len(members)):
                for prod in (members[i] * members[j], members[j] * members[i]):
                    if echelon.add(prod.flatten()):
                        members.append(prod)
            i += 1
        return tuple(members)

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, x):
        return linalg.rank([b.flatten() for b in self.basis] + [x.flatten()]) == self.dim

    def same_span(self, other):
        rows = [b.flatten() for b in self.basis] + [b.flatten() for b in other.basis]
        return self.dim == other.dim == linalg.rank(rows)

    def is_commutative(self):
        return all(x * y == y * x for x, y in combinations(self.basis, 2))

    def element(self, coeffs):
        acc = self.ambient.zero()
        for c, b in zip(coeffs, self.basis):
            if c:
                acc = acc + b * c
        return acc


class _Span:
    """Incrementally maintained row-echelon basis over Q."""

    def __init__(self, dim):
        self.dim = dim
        self.rows = []  # (pivot, vector) with vector[pivot] == 1

    def reduce(self, v):
        v = [Fraction(x) for x in v]
        for p, row in self.rows:
            if v[p]:
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def add(self, v):
        v = self.reduce(v)
        pivot = next((i for i, x in enumerate(v) if x), None)
        if pivot is None:
            return False
        inv = 1 / v[pivot]
        v = [x * inv for x in v]
        self.rows = [(p, [x - r[pivot] * y for x, y in zip(r, v)]) for p, r in self.rows]
        self.rows.append((pivot, v))
        return True


def companion_embedding(minpoly, n, ambient=None):
    """Companion matrix of a monic polynomial (coefficients low degree first)."""
    coeffs = [Fraction(c) for c in minpoly]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    deg = len(coeffs) - 1
    if deg != n:
        raise DegreeMismatch(f"polynomial of degree {deg} cannot embed into {n}x{n} matrices")
    lead = coeffs[-1]
    coeffs = [c / lead for c in coeffs]
    if deg <= 3 and deg > 1 and _rational_roots(coeffs):
        raise InputError("polynomial has a rational root, so it is reducible")
    ambient = ambient or Ambient(n)
    if ambient.n != n:
        raise DegreeMismatch(f"ambient has size {ambient.n}, polynomial degree {n}")
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = Fraction(1)
    for i in range(n):
        rows[i][n - 1] = -coeffs[i]
    return ambient.from_rational(rows)


def _rational_roots(coeffs):
    # monic rational polynomial; clear denominators and test p/q candidates
    den = 1
    for c in coeffs:
        den = den * c.denominator // _gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    if ints[0] == 0:
        return [Fraction(0)]
    roots = []
    for p in _divisors(abs(ints[0])):
        for q in _divisors(abs(ints[-1])):
            for r in (Fraction(p, q), Fraction(-p, q)):
                if sum(c * r ** i for i, c in enumerate(ints)) == 0:
                    roots.append(r)
    return roots


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def centralizer(sub):
    """``{x : x g = g x for every generator g}`` with an explicit basis."""
    amb = sub.ambient
    gens = sub.generators or sub.basis
    space = None  # basis vectors of the current solution space
    for g in gens:
        m = amb.commutator_map(g)
        if space is None:
            space = linalg.kernel(m, amb.dim)
        else:
            if not space:
                break
            images = [linalg.matvec(m, v) for v in space]
            coeffs = linalg.kernel(linalg.transpose(images), len(space))
            space = [[sum(c * v[i] for c, v in zip(k, space)) for i in range(amb.dim)]
                     for k in coeffs]
        if space is not None and len(space) == 0:
            break
    if space is None:
        space = [list(b.flatten()) for b in amb.basis()]
    basis = [amb.from_flat(v) for v in space]
    return SubalgebraSpec(amb, basis, basis=basis)


def verify_double_centralizer(sub):
    """``dim C(S) * dim S == dim A`` and ``C(C(S)) == S``."""
    amb = sub.ambient
    c = centralizer(sub)
    if c.dim * sub.dim != amb.dim:
        return False
    cc = centralizer(c)
    return cc.same_span(sub)


def _minimal_polynomial_in(sub, x):
    """Minimal polynomial over Q of ``x`` in ``sub`` (monic, low degree first)."""
    amb = sub.ambient
    powers = [amb.identity().flatten()]
    power = amb.identity()
    while True:
        power = power * x
        vec = power.flatten()
        sol = linalg.solve(linalg.transpose(powers), vec)
        if sol is not None:
            return [-c for c in sol] + [Fraction(1)]
        powers.append(vec)


def is_maximal_subfield(sub, limit=2000):
    """Commutative, of dimension equal to the reduced degree, and a field.

    A commutative algebra is a field iff it is ``Q[theta]`` for an element
    whose minimal polynomial is irreducible of degree ``dim``.
    """
    if sub.dim != sub.ambient.degree or not sub.is_commutative():
        return False
    for count, coeffs in enumerate(_candidates(sub.dim)):
        if count >= limit:
            break
        poly = _minimal_polynomial_in(sub, sub.element(coeffs))
        if len(poly) - 1 == sub.dim:
            return sympy.Poly(list(reversed(poly)), sympy.Symbol("x"), domain="QQ").is_irreducible
    # fields of characteristic zero always have small primitive elements
    return False


def _candidates(dim, heights=(1, 2)):
    values = []
    for h in heights:
        values += [h, -h]
    for support in range(1, dim + 1):
        for idx in combinations(range(dim), support):
            for vals in product(values, repeat=support):
                coeffs = [0] * dim
                for i, v in zip(idx, vals):
                    coeffs[i] = v
                yield coeffs


def skolem_noether_conjugator(phi, psi, limit=20000):
    """An invertible ``b`` with ``phi = b psi b^-1`` (on the given generator images).

    ``phi`` and ``psi`` may be single matrices or equal-length sequences of
    generator images.
    """
    if isinstance(phi, MatrixOverB):
        phi, psi = [phi], [psi]
    amb = phi[0].ambient
    # b psi - phi b = 0 is linear in b
    rows = []
    basis = list(amb.basis())
    for f, s in zip(phi, psi):
        cols = [(e * s - f * e).flatten() for e in basis]
        rows.extend(linalg.transpose(cols))
    space = linalg.kernel(rows, amb.dim)
    if not space:
        raise NoConjugatorFound("phi and psi are not conjugate (empty solution space)")
    for count, coeffs in enumerate(_candidates(len(space))):
        if count >= limit:
            break
        vec = [sum(c * v[i] for c, v in zip(coeffs, space)) for i in range(amb.dim)]
        b = amb.from_flat(vec)
        if not b.is_invertible():
            continue
        b_inv = b.inverse()
        if all(f == b * s * b_inv for f, s in zip(phi, psi)):
            return b
    raise NoConjugatorFound(f"no invertible element among the first {limit} candidates")


# -- embeddings of cyclotomic subfields ---------------------------------------


def minimal_polynomial(theta):
    """Monic minimal polynomial over Q of a cyclotomic element, low degree first."""
    n = theta.conductor
    span = []
    power = CyclotomicElement.rational(1, n)
    powers = []
    while True:
        vec = list(power.coeffs)
        if span:
            sol = linalg.solve(linalg.transpose(span), vec)
            if sol is not None:
                return [-c for c in sol] + [Fraction(1)]
        span.append(vec)
        powers.append(power)
        power = power * theta


class FieldEmbedding:
    """``phi: Q(theta) -> M_d(Q) <= M_d(B)`` via the companion matrix of theta."""

    def __init__(self, theta, ambient=None):
        self.theta = theta
        self.minpoly = minimal_polynomial(theta)
        self.degree = len(self.minpoly) - 1
        self.ambient = ambient or Ambient(self.degree)
        self.generator_image = companion_embedding(self.minpoly, self.degree, self.ambient)
        c = [[x.w for x in row] for row in self.generator_image.rows]
        self._powers = [linalg.identity(self.degree, Fraction(1))]
        for _ in range(1, self.degree):
            self._powers.append(linalg.matmul(self._powers[-1], c))
        n = theta.conductor
        self._conductor = n
        basis = [CyclotomicElement.rational(1, n)]
        for _ in range(1, self.degree):
            basis.append(basis[-1] * theta)
        self._basis_t = linalg.transpose([list(b.embed(n).coeffs) for b in basis])

    @classmethod
    def for_values(cls, values, ambient_algebra=None):
        """Embed the field generated by ``values`` using a small primitive element."""
        values = list(values)
        n = 1
        for v in values:
            n = n * v.conductor // _gcd(n, v.conductor)
        values = [v.embed(n) for v in values]
        degree, _ = generated_subfield(values, n)
        gens = []
        current = 1
        for v in values:
            d, _ = generated_subfield(gens + [v], n)
            if d > current:
                gens.append(v)
                current = d
        if not gens:
            theta = CyclotomicElement.rational(0, n)
        else:
            theta = None
            for coeffs in _candidates(len(gens), heights=(1, 2, 3)):
                cand = sum((g * c for g, c in zip(gens, coeffs) if c),
                           CyclotomicElement.rational(0, n))
                if len(minimal_polynomial(cand)) - 1 == degree:
                    theta = cand
                    break
            if theta is None:
                raise EmbeddingIncomplete("no primitive element found")
        amb = Ambient(degree, ambient_algebra)
        return cls(theta, amb)

    def coordinates(self, x):
        """Coefficients of ``x`` in the basis ``1, theta, ..., theta^(d-1)``."""
        try:
            x = x.embed(self._conductor)
        except ValueError:
            raise EmbeddingIncomplete(f"{x!r} lies outside Q(theta)") from None
        sol = linalg.solve(self._basis_t, list(x.coeffs))
        if sol is None:
            raise EmbeddingIncomplete(f"{x!r} lies outside Q(theta)")
        return sol

    def rational_image(self, x):
        coords = self.coordinates(x)
        d = self.degree
        out = [[ZERO] * d for _ in range(d)]
        for c, p in zip(coords, self._powers):
            if c:
                for r in range(d):
                    for s in range(d):
                        out[r][s] += c * p[r][s]
        return out

    def image(self, x):
        return self.ambient.from_rational(self.rational_image(x))

    def image_subalgebra(self):
        return SubalgebraSpec(self.ambient, [self.generator_image])


def descent_cocycle_check(cocycle, beta, embedding):
    """``phi(beta(s)) phi(beta(t)) == phi(c(s, t)) phi(beta(st))`` for every pair."""
    images = {}

    def img(x):
        key = (x.conductor, x.coeffs)
        if key not in images:
            images[key] = embedding.rational_image(x)
        return images[key]

    group = beta.group
    for s in group.elements:
        bs = img(beta.values[s])
        for t in group.elements:
            lhs = linalg.matmul(bs, img(beta.values[t]))
            cval = cocycle.cyclotomic_value(beta.projection[s], beta.projection[t])
            rhs = linalg.matmul(img(cval), img(beta.values[group.mul(s, t)]))
            if lhs != rhs:
                return False
    return True

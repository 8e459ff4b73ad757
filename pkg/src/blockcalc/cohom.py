"""2-cocycles of finite groups with trivial action on multiplicative coefficients.

Coefficients live in ``mu_W x <b_1, ..., b_k>``: a root of unity times a
product of powers of declared primes.  Every coboundary equation
``f(s) f(t) / f(st) = c(s, t)`` is then integer linear algebra: exact over Z
on the exponent of each prime, modulo W on the root-of-unity part.  Both are
solved through one Smith normal form of the coboundary matrix of the group.
"""

from collections import namedtuple
from fractions import Fraction
from functools import cached_property
from math import gcd

from . import linalg
from .cyclo import (
    CyclotomicElement,
    RootOfUnity,
    as_root_of_unity,
    generated_subfield,
    lcm,
    sqrt_as_cyclotomic,
)
from .errors import (
    CocycleInvalid,
    CoefficientBasisTooSmall,
    InsufficientCoefficients,
    NotACharacter,
    NotARootOfUnity,
    SchemaError,
    UnsupportedClassOrder,
)


class FiniteGroup:
    """A finite group given by its multiplication table; element 0 is the identity."""

    def __init__(self, table, validate=True):
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.order = len(self.table)
        if validate:
            self._validate()
        self._inverses = tuple(row.index(0) for row in self.table)

    def _validate(self):
        g = self.order
        if g == 0 or any(len(row) != g for row in self.table):
            raise SchemaError("group.table", "table must be a non-empty square array")
        if any(not 0 <= x < g for row in self.table for x in row):
            raise SchemaError("group.table", "entries must be element indices 0..g-1")
        t = self.table
        for a in range(g):
            if t[0][a] != a or t[a][0] != a:
                raise SchemaError("group.table", "element 0 must be the identity")
            if 0 not in t[a]:
                raise SchemaError("group.table", f"element {a} has no inverse")
        for a in range(g):
            for b in range(g):
                ab = t[a][b]
                for c in range(g):
                    if t[ab][c] != t[a][t[b][c]]:
                        raise SchemaError("group.table", f"not associative at ({a}, {b}, {c})")

    def mul(self, a, b):
        return self.table[a][b]

    def inverse(self, a):
        return self._inverses[a]

    @property
    def elements(self):
        return range(self.order)

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"

    @classmethod
    def cyclic(cls, n):
        return cls([[(i + j) % n for j in range(n)] for i in range(n)], validate=False)

    def direct_product(self, other):
        """``self x other`` with element ``(g, h)`` stored at ``g * |other| + h``."""
        k = other.order
        table = [[self.mul(a // k, b // k) * k + other.mul(a % k, b % k)
                  for b in range(self.order * k)] for a in range(self.order * k)]
        return FiniteGroup(table, validate=False)

    def to_json(self):
        return {"order": self.order, "table": [list(r) for r in self.table]}

    @classmethod
    def from_json(cls, obj):
        try:
            table = obj["table"]
        except (KeyError, TypeError):
            raise SchemaError("group", "missing 'table'") from None
        if "order" in obj and obj["order"] != len(table):
            raise SchemaError("group.order", "order does not match table size")
        return cls(table)


# -- coefficients -------------------------------------------------------------


class MultiplicativeValue:
    """``torsion * prod(b_i ** exponents[i])`` over a declared prime basis."""

    __slots__ = ("torsion", "exponents")

    def __init__(self, torsion=None, exponents=()):
        object.__setattr__(self, "torsion", torsion if torsion is not None else RootOfUnity(1))
        object.__setattr__(self, "exponents", tuple(int(e) for e in exponents))

    def __setattr__(self, name, value):
        raise AttributeError("MultiplicativeValue is immutable")

    def _pad(self, other):
        k = max(len(self.exponents), len(other.exponents))
        a = self.exponents + (0,) * (k - len(self.exponents))
        b = other.exponents + (0,) * (k - len(other.exponents))
        return a, b

    def __mul__(self, other):
        a, b = self._pad(other)
        return MultiplicativeValue(self.torsion * other.torsion, [x + y for x, y in zip(a, b)])

    def inverse(self):
        return MultiplicativeValue(self.torsion.inverse(), [-e for e in self.exponents])

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, k):
        return MultiplicativeValue(self.torsion ** k, [e * k for e in self.exponents])

    def is_one(self):
        return self.torsion.conductor == 1 and not any(self.exponents)

    def __eq__(self, other):
        if not isinstance(other, MultiplicativeValue):
            return NotImplemented
        a, b = self._pad(other)
        return self.torsion == other.torsion and a == b

    def __hash__(self):
        e = list(self.exponents)
        while e and e[-1] == 0:
            e.pop()
        return hash((self.torsion, tuple(e)))

    def __repr__(self):
        return f"MultiplicativeValue({self.torsion!r}, {self.exponents})"

    def to_cyclotomic(self, basis):
        q = Fraction(1)
        for p, e in zip(basis.primes, self.exponents):
            q *= Fraction(p) ** e
        return self.torsion.to_cyclotomic() * q

    def to_json(self):
        return {"torsion": self.torsion.to_json(), "exponents": list(self.exponents)}


ONE = MultiplicativeValue()


class CoefficientBasis:
    """Declared primes b_1..b_k generating the free part of the coefficients.

    ``"-1"`` may appear in the declared list; it names the torsion generator
    and does not get an exponent slot.
    """

    def __init__(self, primes):
        self.primes = tuple(int(p) for p in primes)
        for p in self.primes:
            if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
                raise SchemaError("basis", f"{p} is not a prime")
        if len(set(self.primes)) != len(self.primes):
            raise SchemaError("basis", "repeated basis element")

    @classmethod
    def from_strings(cls, items):
        primes = []
        for s in items:
            v = Fraction(str(s))
            if v == -1:
                continue
            if v.denominator != 1:
                raise SchemaError("basis", f"{s} is not an integer")
            primes.append(int(v))
        return cls(primes)

    def to_strings(self):
        return ["-1"] + [str(p) for p in self.primes]

    def __len__(self):
        return len(self.primes)

    def __eq__(self, other):
        return isinstance(other, CoefficientBasis) and self.primes == other.primes

    def factor(self, q):
        """Express a nonzero rational as a MultiplicativeValue over this basis."""
        q = Fraction(q)
        if q == 0:
            raise ValueError("zero has no multiplicative expression")
        sign = RootOfUnity(2, 1 if q < 0 else 0)
        num, den = abs(q.numerator), q.denominator
        exps = []
        for p in self.primes:
            e = 0
            while num % p == 0:
                num //= p
                e += 1
            while den % p == 0:
                den //= p
                e -= 1
            exps.append(e)
        if num != 1 or den != 1:
            raise CoefficientBasisTooSmall(f"{q} is not supported on primes {self.primes}")
        return MultiplicativeValue(sign, exps)

    def parse_value(self, obj, path="value"):
        if isinstance(obj, (int, str)):
            try:
                return self.factor(Fraction(str(obj)))
            except (ValueError, ZeroDivisionError):
                raise SchemaError(path, f"bad rational {obj!r}") from None
        if isinstance(obj, dict):
            tors = obj.get("torsion", {"conductor": 1, "exponent": 0})
            if isinstance(tors, dict):
                torsion = RootOfUnity(int(tors.get("conductor", 1)), int(tors.get("exponent", 0)))
            else:
                torsion = RootOfUnity(int(tors[1]), int(tors[0]))
            exps = list(obj.get("exponents", []))
            if len(exps) > len(self.primes):
                raise CoefficientBasisTooSmall(f"{path}: {len(exps)} exponents for "
                                               f"{len(self.primes)} declared primes")
            return MultiplicativeValue(torsion, exps + [0] * (len(self.primes) - len(exps)))
        raise SchemaError(path, f"cannot read coefficient {obj!r}")


def _check_basis(values, basis):
    for v in values:
        if len(v.exponents) > len(basis.primes) and any(v.exponents[len(basis.primes):]):
            raise CoefficientBasisTooSmall(
                f"value {v!r} uses more than the {len(basis.primes)} declared basis elements")


# -- cocycles -----------------------------------------------------------------


def is_cocycle(table, group):
    """``(True, None)`` or ``(False, failing_triple)``.

    A normalization failure is reported as the triple ``(s, t, None)``.
    """
    g = group.order
    if len(table) != g or any(len(row) != g for row in table):
        raise SchemaError("cocycle", f"table must be {g}x{g}")
    for s in range(g):
        if not _is_one(table[0][s]):
            return False, (0, s, None)
        if not _is_one(table[s][0]):
            return False, (s, 0, None)
    m = group.mul
    for s in range(g):
        for t in range(g):
            st = m(s, t)
            left_st = table[s][t]
            for r in range(g):
                if left_st * table[st][r] != table[s][m(t, r)] * table[t][r]:
                    return False, (s, t, r)
    return True, None


def _is_one(v):
    if isinstance(v, CyclotomicElement):
        return v == 1
    return v.is_one()


class Cocycle2:
    def __init__(self, group, table, basis, validate=True):
        self.group = group
        self.table = tuple(tuple(row) for row in table)
        self.basis = basis
        _check_basis((v for row in self.table for v in row), basis)
        if validate:
            ok, triple = is_cocycle(self.table, group)
            if not ok:
                what = "normalization fails" if triple[2] is None else "cocycle identity fails"
                raise CocycleInvalid(triple, what)

    def __call__(self, s, t):
        return self.table[s][t]

    def power(self, k):
        return Cocycle2(self.group, [[v ** k for v in row] for row in self.table],
                        self.basis, validate=False)

    def torsion_conductor(self):
        w = 1
        for row in self.table:
            for v in row:
                w = lcm(w, v.torsion.conductor)
        return w

    def cyclotomic_value(self, s, t):
        return self.table[s][t].to_cyclotomic(self.basis)

    def __eq__(self, other):
        return (isinstance(other, Cocycle2) and self.group == other.group
                and self.table == other.table)

    def to_json(self):
        return {
            "group": self.group.to_json(),
            "basis": self.basis.to_strings(),
            "cocycle": [[v.to_json() for v in row] for row in self.table],
        }

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict):
            raise SchemaError("$", "expected an object")
        for key in ("group", "basis", "cocycle"):
            if key not in obj:
                raise SchemaError(key, "missing")
        group = FiniteGroup.from_json(obj["group"])
        basis = CoefficientBasis.from_strings(obj["basis"])
        rows = obj["cocycle"]
        if len(rows) != group.order or any(len(r) != group.order for r in rows):
            raise SchemaError("cocycle", f"table must be {group.order}x{group.order}")
        table = [[basis.parse_value(v, f"cocycle[{i}][{j}]") for j, v in enumerate(row)]
                 for i, row in enumerate(rows)]
        return cls(group, table, basis)


def coboundary_of(f, group, basis):
    """The cocycle ``(s, t) -> f(s) f(t) / f(st)`` of a normalized 1-cochain."""
    if not f[0].is_one():
        raise ValueError("cochain must satisfy f(1) = 1")
    table = [[f[s] * f[t] / f[group.mul(s, t)] for t in group.elements] for s in group.elements]
    return Cocycle2(group, table, basis, validate=False)


class _CoboundarySolver:
    """Solves ``A x = b`` where A is the coboundary matrix of a group.

    Rows are indexed by pairs (s, t), columns by the non-identity elements.
    """

    _cache = {}

    def __new__(cls, group):
        hit = cls._cache.get(group.table)
        if hit is not None:
            return hit
        self = super().__new__(cls)
        g = group.order
        self.group = group
        self.ncols = g - 1
        rows = []
        for s in range(g):
            for t in range(g):
                row = [0] * g
                row[s] += 1
                row[t] += 1
                row[group.mul(s, t)] -= 1
                rows.append(row[1:])
        if self.ncols == 0:
            self.d, self.p, self.q, self.diag = [], [], [], []
        else:
            self.d, self.p, self.q = linalg.smith_normal_form(rows)
            self.diag = [x for x in linalg.diagonal(self.d) if x != 0]
        self.nrows = len(rows)
        cls._cache[group.table] = self
        return self

    def _transform(self, b):
        if self.ncols == 0:
            return list(b)
        return linalg.matvec(self.p, b)

    def integer_order(self, b):
        """Least m >= 1 with ``m b`` in the integer image of A."""
        bp = self._transform(b)
        r = len(self.diag)
        if any(bp[r:]):
            raise ValueError("vector is not a cocycle")
        m = 1
        for dii, x in zip(self.diag, bp):
            m = lcm(m, dii // gcd(dii, x))
        return m

    def solve_integer(self, b):
        bp = self._transform(b)
        r = len(self.diag)
        if any(bp[r:]):
            return None
        y = []
        for dii, x in zip(self.diag, bp):
            if x % dii:
                return None
            y.append(x // dii)
        y += [0] * (self.ncols - r)
        return linalg.matvec(self.q, y) if self.ncols else []

    def modular_order(self, b, w):
        """Least m >= 1 with ``m b`` in the image of A modulo w."""
        bp = self._transform(b)
        r = len(self.diag)
        m = 1
        for i, x in enumerate(bp):
            modulus = gcd(self.diag[i], w) if i < r else w
            m = lcm(m, modulus // gcd(modulus, x))
        return m

    def solve_modular(self, b, w):
        """Lexicographically least solution of ``A x = b (mod w)`` in [0, w), or None."""
        if self.ncols == 0:
            return [] if all(x % w == 0 for x in b) else None
        bp = self._transform(b)
        r = len(self.diag)
        if any(x % w for x in bp[r:]):
            return None
        y = []
        kernel_gens = []
        for i in range(self.ncols):
            if i >= r:
                y.append(0)
                kernel_gens.append(1)
                continue
            dii = self.diag[i]
            g = gcd(dii, w)
            if bp[i] % g:
                return None
            mod = w // g
            y.append((bp[i] // g) * pow(dii // g, -1, mod) % mod if mod > 1 else 0)
            kernel_gens.append(mod)
        x0 = tuple(v % w for v in linalg.matvec(self.q, y))
        gens = []
        for i, step in enumerate(kernel_gens):
            col = tuple((self.q[row][i] * step) % w for row in range(self.ncols))
            if any(col):
                gens.append(col)
        return list(min(_coset(x0, gens, w)))


def _coset(x0, gens, w):
    # closure of x0 under the subgroup generated by gens in (Z/w)^k
    seen = {x0}
    frontier = [x0]
    while frontier:
        nxt = []
        for v in frontier:
            for gvec in gens:
                u = tuple((a + b) % w for a, b in zip(v, gvec))
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return seen


def _components(c):
    """Split a cocycle table into per-prime exponent vectors and a torsion vector."""
    g = c.group.order
    k = len(c.basis)
    w = c.torsion_conductor()
    free = [[] for _ in range(k)]
    tors = []
    for s in range(g):
        for t in range(g):
            v = c.table[s][t]
            for j in range(k):
                free[j].append(v.exponents[j] if j < len(v.exponents) else 0)
            tors.append(v.torsion.exponent_at(w))
    return free, tors, w


ClassOrder = namedtuple("ClassOrder", "m d")


def class_order(c):
    """Order ``m`` of the class of ``c`` and a witness ``d`` with ``c^m = coboundary(d)``.

    The witness is canonical: the free exponents are unique (a finite group
    has no nonzero homomorphism to Z) and the torsion exponents are the
    lexicographically least solution modulo W.
    """
    _check_basis((v for row in c.table for v in row), c.basis)
    solver = _CoboundarySolver(c.group)
    free, tors, w = _components(c)
    m = 1
    for b in free:
        m = lcm(m, solver.integer_order(b))
    m = lcm(m, solver.modular_order(tors, w))

    g = c.group.order
    free_sol = [solver.solve_integer([m * x for x in b]) for b in free]
    tors_sol = solver.solve_modular([m * x for x in tors], w)
    assert all(s is not None for s in free_sol) and tors_sol is not None
    d = [MultiplicativeValue(RootOfUnity(1), [0] * len(free))]
    for i in range(1, g):
        d.append(MultiplicativeValue(RootOfUnity(w, tors_sol[i - 1]),
                                     [sol[i - 1] for sol in free_sol]))
    assert coboundary_of(d, c.group, c.basis) == c.power(m)
    return ClassOrder(m, d)


# -- splitting maps -----------------------------------------------------------


class SplittingMap:
    """Values ``beta(x)`` on a group projecting onto the cocycle's group.

    ``projection[x]`` is the image of ``x`` in ``cocycle.group``; the defining
    identity is ``beta(x) beta(y) / beta(xy) = c(proj x, proj y)``.
    """

    def __init__(self, group, values, cocycle, projection=None, validate=True):
        self.group = group
        self.values = tuple(values)
        self.cocycle = cocycle
        self.projection = tuple(projection) if projection is not None else tuple(group.elements)
        if len(self.values) != group.order:
            raise ValueError("one value per group element is required")
        if validate:
            bad = self.defect()
            if bad is not None:
                raise ValueError(f"coboundary of beta differs from the cocycle at {bad}")

    def __call__(self, x):
        return self.values[x]

    def inflated(self, x, y):
        return self.cocycle.cyclotomic_value(self.projection[x], self.projection[y])

    def defect(self):
        """First pair where the splitting identity fails, or None."""
        if self.values[0] != 1:
            return (0, 0)
        inv = [v.inverse() for v in self.values]
        cache = {}
        for x in self.group.elements:
            for y in self.group.elements:
                key = (self.projection[x], self.projection[y])
                if key not in cache:
                    cache[key] = self.inflated(x, y)
                lhs = self.values[x] * self.values[y] * inv[self.group.mul(x, y)]
                if lhs != cache[key]:
                    return (x, y)
        return None

    @cached_property
    def conductor(self):
        n = 1
        for v in self.values:
            n = lcm(n, v.conductor)
        return n

    def to_json(self):
        return {
            "group": self.group.to_json(),
            "projection": list(self.projection),
            "values": [v.to_json() for v in self.values],
        }


class CharacterMap:
    def __init__(self, group, values, validate=True):
        self.group = group
        self.values = tuple(values)
        if validate:
            if self.values[0] != RootOfUnity(1):
                raise NotACharacter("character must send 1 to 1")
            for x in group.elements:
                for y in group.elements:
                    if self.values[x] * self.values[y] != self.values[group.mul(x, y)]:
                        raise NotACharacter(f"homomorphism law fails at ({x}, {y})")

    def __call__(self, x):
        return self.values[x]

    @property
    def order(self):
        n = 1
        for v in self.values:
            n = lcm(n, v.order)
        return n

    def to_json(self):
        return [v.to_json() for v in self.values]


def _fits(conductor, w):
    # conductors here are minimal, hence never 2 mod 4
    return w % conductor == 0


def split_cocycle(c, w=None):
    """A splitting map ``beta`` with ``coboundary(beta) = c`` and cyclotomic values.

    With ``w`` given, all values are written at conductor ``w`` and
    InsufficientCoefficients is raised when Q(zeta_w) cannot hold them.  If
    the root-of-unity part of ``c`` cannot be split on ``c.group`` itself
    (a Schur multiplier obstruction), the map is defined on the central
    extension of ``c.group`` by the cyclic group of order W that ``c``
    determines; ``projection`` records the quotient map.
    """
    m, _ = class_order(c)
    if m > 2:
        raise UnsupportedClassOrder(f"class order {m} > 2 has no square-root splitting")
    solver = _CoboundarySolver(c.group)
    group = c.group
    g = group.order
    free, tors, w0 = _components(c)

    free_part = [CyclotomicElement.rational(1) for _ in range(g)]
    for j, b in enumerate(free):
        doubled = solver.solve_integer([2 * x for x in b])
        p = c.basis.primes[j]
        if all(e % 2 == 0 for e in doubled):
            factors = [CyclotomicElement.rational(Fraction(p) ** (e // 2)) for e in doubled]
        else:
            _, root = sqrt_as_cyclotomic(p)
            factors = [root ** e for e in doubled]
        for i in range(1, g):
            free_part[i] = free_part[i] * factors[i - 1]

    torsion_part = None
    for w1 in (w0, 2 * w0):
        sol = solver.solve_modular([(w1 // w0) * x for x in tors], w1)
        if sol is not None:
            torsion_part = [RootOfUnity(1)] + [RootOfUnity(w1, e) for e in sol]
            break

    if torsion_part is not None:
        values = [t.to_cyclotomic() * f for t, f in zip(torsion_part, free_part)]
        ext, projection = group, None
    else:
        ext, projection, values = _central_split(c, tors, w0, free_part)

    values = [v.minimal_conductor() for v in values]
    if w is not None:
        for v in values:
            if not _fits(v.conductor, w):
                raise InsufficientCoefficients(
                    f"value {v!r} needs conductor {v.conductor}, not contained in Q(zeta_{w})")
        values = [v.embed(w) for v in values]
    else:
        n = 1
        for v in values:
            n = lcm(n, v.conductor)
        values = [v.embed(n) for v in values]
    return SplittingMap(ext, values, c, projection)


def _central_split(c, tors, w0, free_part):
    # extension E = C_w0 x G with (a, s)(b, t) = (a + b + c_tors(s, t), st);
    # element (a, s) is stored at s * w0 + a
    group = c.group
    g = group.order
    table = []
    for x in range(g * w0):
        s, a = divmod(x, w0)
        row = []
        for y in range(g * w0):
            t, b = divmod(y, w0)
            row.append(group.mul(s, t) * w0 + (a + b + tors[s * g + t]) % w0)
        table.append(row)
    ext = FiniteGroup(table, validate=False)
    projection = [x // w0 for x in range(g * w0)]
    values = [CyclotomicElement.zeta(w0, -(x % w0)) * free_part[x // w0] for x in range(g * w0)]
    return ext, projection, values


def epsilon_character(beta, m, d):
    """The character ``x -> beta(x)^m / d(proj x)``."""
    basis = beta.cocycle.basis
    values = []
    for x in beta.group.elements:
        e = beta.values[x] ** m / d[beta.projection[x]].to_cyclotomic(basis)
        try:
            values.append(as_root_of_unity(e))
        except NotARootOfUnity:
            raise NotACharacter(f"value at {x} is not a root of unity") from None
    return CharacterMap(beta.group, values)


SplittingField = namedtuple("SplittingField", "degree conductor fixing")


def splitting_field_of(beta):
    """Degree and fixing group of the field generated by the values of ``beta``."""
    n = beta.conductor
    degree, fixing = generated_subfield(beta.values, n)
    return SplittingField(degree, n, fixing)


def contains_zeta(field, n):
    """Whether the abelian field ``(conductor, fixing group)`` contains zeta_n."""
    big = lcm(field.conductor, n)
    fixing = set(field.fixing)
    for a in range(big):
        if gcd(a, big) == 1 and a % field.conductor in fixing and a % n != 1 % n:
            return False
    return True


Adjustment = namedtuple("Adjustment", "beta chi epsilon r e chi_order")


def adjust_splitting_map_details(beta0, n, m, d):
    """Twist ``beta0`` by a character so that zeta_n lies in the splitting field.

    The character comes from an explicit cyclic factor C_k, k = m n / e,
    adjoined to the group; ``chi`` is the projection character onto it.
    """
    if n < 1:
        raise ValueError("n must be positive")
    eps0 = epsilon_character(beta0, m, d)
    r = eps0.order
    e = gcd(n, r)
    if n == 1:
        return Adjustment(beta0, CharacterMap(beta0.group, [RootOfUnity(1)] * beta0.group.order,
                                              validate=False), eps0, r, e, 1)
    k = m * n // e
    ext = beta0.group.direct_product(FiniteGroup.cyclic(k))
    chi = CharacterMap(ext, [RootOfUnity(k, x % k) for x in ext.elements])
    values = [chi(x).to_cyclotomic() * beta0.values[x // k] for x in ext.elements]
    conductor = lcm(beta0.conductor, k)
    values = [v.embed(conductor) for v in values]
    projection = [beta0.projection[x // k] for x in ext.elements]
    # the coboundary of chi * beta0 is that of beta0 because chi is a character
    beta = SplittingMap(ext, values, beta0.cocycle, projection, validate=False)

    eps = epsilon_character(beta, m, d)
    for x in ext.elements:
        if eps(x) != chi(x) ** m * eps0(x // k):
            raise AssertionError("twisted epsilon differs from chi^m * epsilon")
    if not contains_zeta(splitting_field_of(beta), n):
        raise AssertionError(f"zeta_{n} missing from the splitting field")
    return Adjustment(beta, chi, eps, r, e, k)


def adjust_splitting_map(beta0, n, m, d):
    return adjust_splitting_map_details(beta0, n, m, d).beta

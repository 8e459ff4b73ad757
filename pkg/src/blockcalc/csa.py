"""Quaternion algebras over Q and their abelian splitting fields.

Abelian fields are fixed fields of subgroups ``H`` of ``(Z/M)*`` inside
Q(zeta_M).  The local degree at a place ``v`` is the index of ``H`` in
``D_v H``, where ``D_v`` is the decomposition group of ``v`` in
``Gal(Q(zeta_M)/Q) = (Z/M)*``.  A quaternion algebra is split by such a
field iff every local degree at a ramified place is even.
"""

import os
from collections import namedtuple
from fractions import Fraction
from functools import cached_property
from itertools import product
from math import gcd

from .cyclo import euler_phi, factorize, units
from .errors import InternalReciprocityViolation, SearchBoundExceeded

INF = "inf"

DEFAULT_MODULUS_CAP = 400


def search_cap(cap=None):
    """Explicit cap, else ``$BLOCKCALC_SEARCH_CAP``, else the default."""
    if cap:
        return cap
    return int(os.environ.get("BLOCKCALC_SEARCH_CAP", DEFAULT_MODULUS_CAP))


class PlaceQ(namedtuple("PlaceQ", "p")):
    """A prime ``p`` or the real place (``p == "inf"``)."""

    __slots__ = ()

    def __new__(cls, p):
        if isinstance(p, PlaceQ):
            return p
        if isinstance(p, str):
            s = p.strip().lower()
            if s in ("inf", "infinity", "oo", "∞", "r", "real"):
                return super().__new__(cls, INF)
            p = int(s)
        p = int(p)
        if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not a prime")
        return super().__new__(cls, p)

    @property
    def is_real(self):
        return self.p == INF

    def sort_key(self):
        return (1, 0) if self.is_real else (0, self.p)

    def __str__(self):
        return str(self.p)


REAL = PlaceQ(INF)


def _valuation(n, p):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def _integral(q):
    # same square class, integer representative
    q = Fraction(q)
    return q.numerator * q.denominator


def _legendre(u, p):
    return 1 if pow(u % p, (p - 1) // 2, p) == 1 else -1


def hilbert_symbol(a, b, v):
    """The Hilbert symbol ``(a, b)_v`` of two nonzero rationals."""
    a, b = _integral(a), _integral(b)
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol needs nonzero arguments")
    v = PlaceQ(v)
    if v.is_real:
        return -1 if a < 0 and b < 0 else 1
    p = v.p
    alpha, u = _valuation(a, p)
    beta, w = _valuation(b, p)
    if p == 2:
        eps_u = ((u - 1) // 2) % 2
        eps_w = ((w - 1) // 2) % 2
        om_u = ((u * u - 1) // 8) % 2
        om_w = ((w * w - 1) // 8) % 2
        e = eps_u * eps_w + alpha * om_w + beta * om_u
        return -1 if e % 2 else 1
    s = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    if beta % 2:
        s *= _legendre(u, p)
    if alpha % 2:
        s *= _legendre(w, p)
    return s


def candidate_places(a, b):
    primes = {2}
    for x in (Fraction(a), Fraction(b)):
        primes |= set(factorize(abs(x.numerator))) | set(factorize(x.denominator))
    primes.discard(1)
    return [PlaceQ(p) for p in sorted(primes)] + [REAL]


class QuaternionAlgebraQ:
    """The algebra ``(a, b)`` over Q: ``i^2 = a``, ``j^2 = b``, ``ij = -ji``."""

    def __init__(self, a, b):
        self.a = Fraction(a)
        self.b = Fraction(b)
        if self.a == 0 or self.b == 0:
            raise ValueError("structure constants must be nonzero")

    @cached_property
    def ramification(self):
        ram = frozenset(v for v in candidate_places(self.a, self.b)
                        if hilbert_symbol(self.a, self.b, v) == -1)
        if len(ram) % 2:
            raise InternalReciprocityViolation(
                f"odd ramification set {sorted(map(str, ram))} for ({self.a}, {self.b})")
        return ram

    @property
    def schur_index(self):
        return 2 if self.ramification else 1

    def ramified_places(self):
        return sorted(self.ramification, key=PlaceQ.sort_key)

    def __repr__(self):
        return f"QuaternionAlgebraQ({self.a}, {self.b})"

    def __eq__(self, other):
        return isinstance(other, QuaternionAlgebraQ) and (self.a, self.b) == (other.a, other.b)

    def __hash__(self):
        return hash((self.a, self.b))


def ramification_data(algebra):
    """``(sorted ramified places, Schur index)``."""
    return algebra.ramified_places(), algebra.schur_index


def algebra_with_ramification(places, bound=60):
    """Small structure constants ``(a, b)`` realizing an even set of places."""
    target = frozenset(PlaceQ(v) for v in places)
    if len(target) % 2:
        raise ValueError("a ramification set must have even cardinality")
    if not target:
        return QuaternionAlgebraQ(1, 1)
    values = sorted((x for x in range(-bound, bound + 1) if x), key=lambda x: (abs(x), -x))
    for a in values:
        for b in values:
            if abs(b) < abs(a):
                continue
            alg = QuaternionAlgebraQ(a, b)
            if alg.ramification == target:
                return alg
    raise SearchBoundExceeded(f"no (a, b) with |a|, |b| <= {bound} ramified exactly at {places}")


# -- abelian fields -----------------------------------------------------------


def _closure(gens, m):
    group = {1 % m}
    frontier = list(group)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g % m
                if y not in group:
                    group.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(group)


def _crt(r1, m1, r2, m2):
    # m1, m2 coprime
    if m1 == 1:
        return r2 % m2
    if m2 == 1:
        return r1 % m1
    return (r1 * m2 * pow(m2, -1, m1) + r2 * m1 * pow(m1, -1, m2)) % (m1 * m2)


class AbelianFieldSpec:
    """The fixed field of ``H <= (Z/M)*`` inside Q(zeta_M)."""

    def __init__(self, modulus, generators=()):
        if modulus < 1:
            raise ValueError("modulus must be positive")
        self.modulus = modulus
        gens = [g % modulus for g in generators]
        if any(gcd(g, modulus) != 1 for g in gens) and modulus > 1:
            raise ValueError("subgroup generators must be units")
        self.subgroup = _closure(gens, modulus)
        self.generators = tuple(sorted(set(gens)))

    @classmethod
    def cyclotomic(cls, m):
        return cls(m)

    @classmethod
    def from_fixing(cls, modulus, fixing):
        return cls(modulus, sorted(fixing))

    @property
    def degree(self):
        return euler_phi(self.modulus) // len(self.subgroup)

    def is_cyclic(self):
        m = self.modulus
        deg = self.degree
        for a in units(m):
            if self._quotient_order(a) == deg:
                return True
        return False

    def _quotient_order(self, a):
        m = self.modulus
        k, x = 1, a % m
        while x not in self.subgroup:
            x = x * a % m
            k += 1
        return k

    def decomposition_group(self, place):
        m = self.modulus
        if m == 1:
            return frozenset({0})
        place = PlaceQ(place)
        if place.is_real:
            return _closure([m - 1], m)
        p = place.p
        k, m_prime = _valuation(m, p)
        pk = p ** k
        gens = []
        # inertia: units congruent to 1 modulo the prime-to-p part
        for a in units(pk):
            gens.append(_crt(a, pk, 1, m_prime))
        # Frobenius on the prime-to-p part
        gens.append(_crt(1, pk, p, m_prime))
        return _closure([g for g in gens if gcd(g, m) == 1], m)

    def local_degree(self, place):
        m = self.modulus
        if m == 1:
            return 1
        d = self.decomposition_group(place)
        joined = _closure(list(d) + list(self.subgroup), m)
        return len(joined) // len(self.subgroup)

    def is_imaginary(self):
        return self.local_degree(REAL) == 2

    def contains(self, other):
        """Whether ``other`` is a subfield of this field."""
        big = self.modulus * other.modulus // gcd(self.modulus, other.modulus)
        for a in units(big):
            if a % self.modulus in self.subgroup and a % other.modulus not in other.subgroup:
                return False
        return True

    def to_json(self):
        return {"modulus": self.modulus, "subgroup": sorted(self.subgroup),
                "degree": self.degree}

    def __repr__(self):
        return f"AbelianFieldSpec(M={self.modulus}, H={sorted(self.subgroup)})"


def local_degree_in_abelian(place, field):
    return field.local_degree(place)


def splits(algebra, field):
    """Whether ``algebra (x) field`` is a matrix algebra."""
    return all(field.local_degree(v) % 2 == 0 for v in algebra.ramification)


def min_cyclotomic_splitting(algebra, cap=None):
    """Least ``m`` such that Q(zeta_m) splits ``algebra``."""
    cap = search_cap(cap)
    for m in range(1, cap + 1):
        if splits(algebra, AbelianFieldSpec.cyclotomic(m)):
            return m
    raise SearchBoundExceeded(f"no cyclotomic splitting field with m <= {cap}")


LocalDegreeConstraint = namedtuple("LocalDegreeConstraint", "place divisor")


def make_constraint(place, divisor):
    place = PlaceQ(place)
    if divisor < 1:
        raise ValueError("required divisor must be positive")
    if place.is_real and divisor > 2:
        raise ValueError("a real place admits local degree at most 2")
    return LocalDegreeConstraint(place, divisor)


def _unit_group_generators(m):
    gens = []
    current = _closure([], m)
    for a in units(m):
        if a not in current:
            gens.append(a)
            current = _closure(gens, m)
    return gens


def cyclic_quotients(m, n):
    """Subgroups ``H`` of ``(Z/M)*`` with cyclic quotient of order ``n``.

    Each one is the kernel of a surjection onto Z/n; kernels are yielded once,
    in a deterministic order.
    """
    if m == 1:
        if n == 1:
            yield frozenset({0})
        return
    gens = _unit_group_generators(m)
    us = units(m)
    seen = set()
    for images in product(range(n), repeat=len(gens)):
        g = n
        for x in images:
            g = gcd(g, x)
        if g != 1:
            continue
        chi = _extend_character(gens, images, m, n)
        if chi is None:
            continue
        kernel = frozenset(a for a in us if chi[a] == 0)
        if kernel not in seen:
            seen.add(kernel)
            yield kernel


def _extend_character(gens, images, m, n):
    chi = {1 % m: 0}
    frontier = [1 % m]
    while frontier:
        nxt = []
        for x in frontier:
            for g, img in zip(gens, images):
                y = x * g % m
                val = (chi[x] + img) % n
                if y in chi:
                    if chi[y] != val:
                        return None
                else:
                    chi[y] = val
                    nxt.append(y)
        frontier = nxt
    return chi


def grunwald_wang_search(constraints, n, cap=None):
    """First cyclic abelian field of degree ``n`` meeting every local constraint.

    Moduli are scanned upward; the result is re-verified place by place.
    """
    cap = search_cap(cap)
    constraints = [make_constraint(*c) for c in constraints]
    need = 1
    for c in constraints:
        need = need * c.divisor // gcd(need, c.divisor)
    if n % need:
        raise ValueError(f"degree {n} is not divisible by lcm of required divisors {need}")
    for m in range(1, cap + 1):
        if euler_phi(m) % n:
            continue
        for h in cyclic_quotients(m, n):
            field = AbelianFieldSpec(m, sorted(h))
            if all(field.local_degree(c.place) % c.divisor == 0 for c in constraints):
                assert field.degree == n and field.is_cyclic()
                return field
    raise SearchBoundExceeded(f"no cyclic field of degree {n} found with modulus <= {cap}")

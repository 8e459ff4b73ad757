"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element of Q(zeta_N) is stored as its coefficient vector in the power
basis ``1, zeta_N, ..., zeta_N^(phi(N)-1)``, i.e. as the canonical remainder
modulo the cyclotomic polynomial Phi_N.  Elements of different conductors
are combined by embedding both into the field of the lcm conductor.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import linalg
from .errors import DivisionByZero, InvalidAutomorphism, NotARootOfUnity


def lcm(a, b):
    return a // gcd(a, b) * b


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def factorize(n):
    """Prime factorization of a positive integer as ``{p: e}``."""
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(n):
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def units(n):
    return [a for a in range(n) if gcd(a, n) == 1] if n > 1 else [0]


def _poly_divmod(num, den):
    # integer polynomials, low degree first; den monic
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        q[i] = c
        if c:
            for j, dc in enumerate(den):
                num[i + j] -= c * dc
    return q, num[:len(den) - 1]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficients of Phi_n, lowest degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
        assert not any(rem)
    return tuple(poly)


def _reduce(raw, n):
    """Reduce a rational polynomial in zeta_n (any length) modulo Phi_n."""
    folded = [Fraction(0)] * n
    for i, c in enumerate(raw):
        if c:
            folded[i % n] += c
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    for i in range(n - 1, deg - 1, -1):
        c = folded[i]
        if c:
            for j in range(deg + 1):
                folded[i - deg + j] -= c * phi[j]
    return tuple(folded[:deg])


class CyclotomicElement:
    """Immutable element of Q(zeta_N)."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor, coeffs=()):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", _reduce([Fraction(c) for c in coeffs], conductor))

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicElement is immutable")

    @classmethod
    def _raw(cls, conductor, coeffs):
        obj = object.__new__(cls)
        object.__setattr__(obj, "conductor", conductor)
        object.__setattr__(obj, "coeffs", tuple(coeffs))
        return obj

    @classmethod
    def rational(cls, q, conductor=1):
        return cls(conductor, [Fraction(q)])

    @classmethod
    def zeta(cls, n, k=1):
        """The root of unity zeta_n^k."""
        raw = [0] * n
        raw[k % n] = 1
        return cls(n, raw)

    # -- conductor handling --------------------------------------------------

    def embed(self, n):
        """The same element written at conductor ``n`` (a multiple of ours)."""
        if n % self.conductor:
            raise ValueError(f"cannot embed conductor {self.conductor} into {n}")
        if n == self.conductor:
            return self
        step = n // self.conductor
        raw = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            raw[i * step] = c
        return CyclotomicElement(n, raw)

    def _common(self, other):
        if not isinstance(other, CyclotomicElement):
            other = CyclotomicElement.rational(other)
        n = lcm(self.conductor, other.conductor)
        return self.embed(n), other.embed(n), n

    def minimal_conductor(self):
        """Rewrite at the least conductor whose field contains this element."""
        n = self.conductor
        for m in divisors(n):
            if m == n:
                return self
            # x lies in Q(zeta_m) iff fixed by every a = 1 mod m
            fixers = [a for a in units(n) if a % m == 1 % m]
            if all(galois_act(a, self) == self for a in fixers):
                return _descend(self, m)
        return self

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        a, b, n = self._common(other)
        return CyclotomicElement._raw(n, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement._raw(self.conductor, [-x for x in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, CyclotomicElement) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, CyclotomicElement):
            q = Fraction(other)
            return CyclotomicElement._raw(self.conductor, [x * q for x in self.coeffs])
        a, b, n = self._common(other)
        raw = [Fraction(0)] * max(2 * len(a.coeffs) - 1, 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        raw[i + j] += x * y
        return CyclotomicElement._raw(n, _reduce(raw, n))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero in a cyclotomic field")
        n = self.conductor
        dim = len(self.coeffs)
        # columns: self * zeta^j
        cols = [(self * CyclotomicElement.zeta(n, j)).coeffs for j in range(dim)]
        rows = linalg.transpose(cols)
        one = [Fraction(1)] + [Fraction(0)] * (dim - 1)
        x = linalg.solve(rows, one)
        return CyclotomicElement._raw(n, x)

    def __truediv__(self, other):
        if not isinstance(other, CyclotomicElement):
            q = Fraction(other)
            if q == 0:
                raise DivisionByZero("division by zero")
            return self * (1 / q)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = CyclotomicElement.rational(1, self.conductor)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison ----------------------------------------------------------

    def is_zero(self):
        return not any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def to_rational(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __eq__(self, other):
        if not isinstance(other, CyclotomicElement):
            try:
                other = CyclotomicElement.rational(Fraction(other))
            except (TypeError, ValueError):
                return NotImplemented
        a, b, _ = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        m = self.minimal_conductor()
        return hash((m.conductor, m.coeffs))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"({c})*z{self.conductor}^{i}")
        return " + ".join(terms) or "0"

    # -- serialization -------------------------------------------------------

    def to_json(self):
        return {"conductor": self.conductor, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj):
        n = int(obj["conductor"])
        coeffs = [Fraction(c) for c in obj["coeffs"]]
        if len(coeffs) != euler_phi(n):
            raise ValueError(f"expected {euler_phi(n)} coefficients for conductor {n}")
        return cls(n, coeffs)


def _descend(x, m):
    """Write ``x`` (known to lie in Q(zeta_m)) at conductor ``m``."""
    dim = euler_phi(m)
    cols = [CyclotomicElement.zeta(m, j).embed(x.conductor).coeffs for j in range(dim)]
    sol = linalg.solve(linalg.transpose(cols), x.coeffs)
    return CyclotomicElement._raw(m, sol)


def reduce_mod_cyclotomic(raw, n):
    """Canonical element of Q(zeta_n) for the polynomial ``sum raw[i] zeta_n^i``."""
    if n < 1:
        raise ValueError("conductor must be positive")
    return CyclotomicElement(n, raw)


def galois_act(a, x):
    """Apply the automorphism zeta_N -> zeta_N^a."""
    n = x.conductor
    if gcd(a, n) != 1:
        raise InvalidAutomorphism(f"{a} is not a unit modulo {n}")
    raw = [Fraction(0)] * n
    for i, c in enumerate(x.coeffs):
        if c:
            raw[(a * i) % n] += c
    return CyclotomicElement._raw(n, _reduce(raw, n))


def generated_subfield(values, n=None):
    """Degree over Q and fixing group of the field generated by ``values``.

    The fixing group is returned as a sorted tuple of residues modulo ``n``.
    """
    values = list(values)
    if n is None:
        n = 1
        for v in values:
            n = lcm(n, v.conductor)
    values = [v.embed(n) for v in values]
    fixing = tuple(a for a in units(n) if all(galois_act(a, v) == v for v in values))
    return euler_phi(n) // len(fixing), fixing


class RootOfUnity:
    """zeta_W^exponent, kept at its minimal conductor."""

    __slots__ = ("conductor", "exponent")

    def __init__(self, conductor, exponent=0):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        e = exponent % conductor
        g = gcd(e, conductor)
        object.__setattr__(self, "conductor", conductor // g)
        object.__setattr__(self, "exponent", e // g)

    def __setattr__(self, name, value):
        raise AttributeError("RootOfUnity is immutable")

    @property
    def order(self):
        return self.conductor

    def __mul__(self, other):
        n = lcm(self.conductor, other.conductor)
        return RootOfUnity(n, self.exponent * (n // self.conductor)
                           + other.exponent * (n // other.conductor))

    def __pow__(self, k):
        return RootOfUnity(self.conductor, self.exponent * k)

    def inverse(self):
        return RootOfUnity(self.conductor, -self.exponent)

    def __truediv__(self, other):
        return self * other.inverse()

    def __eq__(self, other):
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        return (self.conductor, self.exponent) == (other.conductor, other.exponent)

    def __hash__(self):
        return hash((self.conductor, self.exponent))

    def __repr__(self):
        return f"RootOfUnity({self.conductor}, {self.exponent})"

    def exponent_at(self, w):
        """Exponent ``e`` with ``self == zeta_w^e``; ``w`` must be a multiple of the order."""
        if w % self.conductor:
            raise ValueError(f"zeta_{self.conductor} is not a power of zeta_{w}")
        return self.exponent * (w // self.conductor)

    def to_cyclotomic(self):
        return CyclotomicElement.zeta(self.conductor, self.exponent)

    def to_json(self):
        return {"conductor": self.conductor, "exponent": self.exponent}


def as_root_of_unity(x):
    """The RootOfUnity equal to ``x``; raises NotARootOfUnity otherwise."""
    if x.is_zero():
        raise NotARootOfUnity("zero is not a root of unity")
    n = x.conductor
    # roots of unity in Q(zeta_n) are +-zeta_n^k
    w = lcm(2, n)
    for k in range(w):
        if x == CyclotomicElement.zeta(w, k):
            return RootOfUnity(w, k)
    raise NotARootOfUnity(f"{x!r} is not a root of unity")


def root_of_unity_order(x):
    return as_root_of_unity(x).order


# sqrt(p*) with p* = (-1)^((p-1)/2) p, as a quadratic Gauss sum in Q(zeta_p)
@lru_cache(maxsize=None)
def _gauss_sum(p):
    raw = [0] * p
    for a in range(1, p):
        raw[a] = 1 if pow(a, (p - 1) // 2, p) == 1 else -1
    return CyclotomicElement(p, raw)


def _split_square(n):
    """Write a positive integer as ``s^2 * core`` with ``core`` squarefree."""
    s, core = 1, 1
    for p, e in factorize(n).items():
        s *= p ** (e // 2)
        if e % 2:
            core *= p
    return s, core


def sqrt_as_cyclotomic(d):
    """A square root of the nonzero rational ``d`` inside a cyclotomic field.

    Returns ``(conductor, element)``; the conductor is the conductor of
    Q(sqrt(d)).
    """
    d = Fraction(d)
    if d == 0:
        raise ValueError("sqrt_as_cyclotomic needs a nonzero rational")
    # d = sign * num/den = sign * num*den / den^2
    sn, core_n = _split_square(abs(d.numerator))
    sd, core_d = _split_square(d.denominator)
    g = gcd(core_n, core_d)
    core = (core_n // g) * (core_d // g)
    rational_part = Fraction(sn * g, sd * core_d)
    # sqrt(|num| * den) / den  =  sqrt(core) * sn*g / (sd*core_d) after regrouping
    result = CyclotomicElement.rational(1)
    sign_needed = 1 if d > 0 else -1
    odd = [p for p in factorize(core) if p != 2]
    for p in odd:
        result = result * _gauss_sum(p)
        if p % 4 == 3:
            sign_needed = -sign_needed
    two = core % 2 == 0
    if two:
        # zeta_8 + zeta_8^-1 = sqrt(2), zeta_8 + zeta_8^3 = sqrt(-2)
        tail = (CyclotomicElement.zeta(8, 1) + CyclotomicElement.zeta(8, 7) if sign_needed > 0
                else CyclotomicElement.zeta(8, 1) + CyclotomicElement.zeta(8, 3))
        result = result * tail
    elif sign_needed < 0:
        result = result * CyclotomicElement.zeta(4, 1)
    result = result * rational_part
    assert result * result == d
    return result.conductor, result

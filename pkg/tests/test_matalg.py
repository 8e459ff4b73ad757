import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from blockcalc.cohom import ONE, Cocycle2, CoefficientBasis, FiniteGroup, split_cocycle
from blockcalc.csa import QuaternionAlgebraQ
from blockcalc.errors import DegreeMismatch, InputError, NoConjugatorFound
from blockcalc.matalg import (
    Ambient,
    FieldEmbedding,
    MatrixOverB,
    QuaternionElement,
    SubalgebraSpec,
    centralizer,
    companion_embedding,
    descent_cocycle_check,
    is_maximal_subfield,
    minimal_polynomial,
    skolem_noether_conjugator,
    verify_double_centralizer,
)

HAMILTON = QuaternionAlgebraQ(-1, -1)


def rational(m):
    return [[q.w for q in row] for row in m.rows]


def test_quaternion_relations():
    for a, b in ((-1, -1), (2, 5), (-3, 7)):
        i = QuaternionElement(0, 1, 0, 0, a, b)
        j = QuaternionElement(0, 0, 1, 0, a, b)
        k = QuaternionElement(0, 0, 0, 1, a, b)
        one = QuaternionElement(1, 0, 0, 0, a, b)
        assert i * i == one * a and j * j == one * b
        assert i * j == k and j * i == QuaternionElement(0, 0, 0, -1, a, b)
        assert k * k == one * (-a * b)
        x = QuaternionElement(1, 2, -1, 3, a, b)
        assert x * x.conjugate() == one * x.norm()
        assert x * x.inverse() == one


def test_companion_examples():
    assert rational(companion_embedding([1, 0, 1], 2)) == [[0, -1], [1, 0]]
    assert rational(companion_embedding([-2, 0, 1], 2)) == [[0, 2], [1, 0]]
    assert rational(companion_embedding([-1, 1], 1)) == [[1]]
    with pytest.raises(DegreeMismatch):
        companion_embedding([1, 0, 1], 3)
    with pytest.raises(InputError):
        companion_embedding([-1, 0, 1], 2)


def test_companion_satisfies_its_polynomial():
    for poly in ([1, 0, 1], [-2, 0, 0, 1], [1, -1, 1, -1, 1], [3, 1, 0, 0, 1]):
        n = len(poly) - 1
        x = sympy.Matrix(rational(companion_embedding(poly, n)))
        acc = sympy.zeros(n, n)
        for k, c in enumerate(poly):
            acc += c * x ** k
        assert acc == sympy.zeros(n, n)


def test_centralizer_examples():
    amb = Ambient(2)
    scalars = SubalgebraSpec(amb, [])
    assert scalars.dim == 1 and centralizer(scalars).dim == 4
    q_i = SubalgebraSpec(amb, [companion_embedding([1, 0, 1], 2)])
    assert q_i.dim == 2 and centralizer(q_i).dim == 2
    ham = Ambient(1, HAMILTON)
    i = ham.from_flat([0, 1, 0, 0])
    sub = SubalgebraSpec(ham, [i])
    cent = centralizer(sub)
    assert cent.dim == 2 and cent.same_span(sub)


def test_double_centralizer_and_maximality_examples():
    amb = Ambient(2)
    q_i = SubalgebraSpec(amb, [companion_embedding([1, 0, 1], 2)])
    scalars = SubalgebraSpec(amb, [])
    assert verify_double_centralizer(q_i) and verify_double_centralizer(scalars)
    assert is_maximal_subfield(q_i)
    assert not is_maximal_subfield(scalars)
    ham_i = SubalgebraSpec(Ambient(1, HAMILTON), [Ambient(1, HAMILTON).from_flat([0, 1, 0, 0])])
    assert verify_double_centralizer(ham_i) and is_maximal_subfield(ham_i)


def test_non_field_is_not_a_maximal_subfield():
    amb = Ambient(2)
    diag = SubalgebraSpec(amb, [amb.from_rational([[1, 0], [0, 2]])])
    assert diag.dim == 2 and diag.is_commutative()
    assert not is_maximal_subfield(diag)


def test_skolem_noether_examples():
    amb = Ambient(2)
    phi = amb.from_rational([[0, -1], [1, 0]])
    psi = amb.from_rational([[0, 1], [-1, 0]])
    b = skolem_noether_conjugator(phi, psi)
    assert b * psi * b.inverse() == phi
    diag = amb.from_rational([[1, 0], [0, -1]])
    assert diag * psi * diag.inverse() == phi
    assert skolem_noether_conjugator(phi, phi) * phi == phi * skolem_noether_conjugator(phi, phi)

    ham = Ambient(1, HAMILTON)
    i = ham.from_flat([0, 1, 0, 0])
    minus_i = ham.from_flat([0, -1, 0, 0])
    b = skolem_noether_conjugator(i, minus_i)
    assert b * minus_i * b.inverse() == i
    j = ham.from_flat([0, 0, 1, 0])
    assert j * i * j.inverse() == minus_i


def test_skolem_noether_rejects_non_conjugate():
    amb = Ambient(2)
    with pytest.raises(NoConjugatorFound):
        skolem_noether_conjugator(amb.from_rational([[0, -1], [1, 0]]),
                                  amb.from_rational([[0, 2], [1, 0]]))


def test_minimal_polynomial_and_embedding():
    from blockcalc.cyclo import CyclotomicElement as CE
    sqrt2 = CE.zeta(8) + CE.zeta(8, -1)
    assert minimal_polynomial(sqrt2) == [-2, 0, 1]
    assert minimal_polynomial(CE.zeta(5)) == [1, 1, 1, 1, 1]
    emb = FieldEmbedding(sqrt2)
    assert rational(emb.image(sqrt2)) == [[0, 2], [1, 0]]
    assert emb.image(sqrt2) ** 2 == emb.ambient.scalar(2)


def test_descent_examples():
    c2 = FiniteGroup.cyclic(2)
    basis = CoefficientBasis([2, 3])
    c = Cocycle2(c2, [[ONE, ONE], [ONE, basis.factor(2)]], basis)
    beta = split_cocycle(c)
    emb = FieldEmbedding.for_values(beta.values)
    assert rational(emb.image(beta.values[1])) == [[0, 2], [1, 0]]
    assert descent_cocycle_check(c, beta, emb)
    altered = Cocycle2(c2, [[ONE, ONE], [ONE, basis.factor(3)]], basis)
    assert not descent_cocycle_check(altered, beta, emb)
    trivial = Cocycle2(c2, [[ONE, ONE], [ONE, ONE]], basis)
    beta = split_cocycle(trivial)
    assert descent_cocycle_check(trivial, beta, FieldEmbedding.for_values(beta.values))


def test_matrix_inverse_over_quaternions():
    amb = Ambient(2, HAMILTON)
    x = amb.from_flat([Fraction(v) for v in [1, 2, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 3, 0, 0, 0]])
    assert x.is_invertible()
    assert x * x.inverse() == amb.identity()
    assert not amb.zero().is_invertible()


# -- properties ------------------------------------------------------------------


def _as_sympy(m):
    if m.ambient.algebra is None:
        return sympy.Matrix(rational(m))
    n = m.n
    out = sympy.zeros(2 * n, 2 * n)
    for r in range(n):
        for c in range(n):
            q = m.rows[r][c]
            out[2 * r, 2 * c] = q.w + q.x * sympy.I
            out[2 * r, 2 * c + 1] = q.y + q.z * sympy.I
            out[2 * r + 1, 2 * c] = -q.y + q.z * sympy.I
            out[2 * r + 1, 2 * c + 1] = q.w - q.x * sympy.I
    return out


@st.composite
def matrices(draw, amb):
    vals = draw(st.lists(st.integers(-3, 3), min_size=amb.dim, max_size=amb.dim))
    return amb.from_flat([Fraction(v) for v in vals])


@settings(max_examples=40, deadline=None)
@given(st.data(), st.sampled_from([None, HAMILTON]))
def test_multiplication_matches_complex_model(data, algebra):
    amb = Ambient(2, algebra)
    x, y = data.draw(matrices(amb)), data.draw(matrices(amb))
    assert _as_sympy(x * y) == (_as_sympy(x) * _as_sympy(y)).expand()
    assert x.is_invertible() == (_as_sympy(x).det() != 0)


@settings(max_examples=20, deadline=None)
@given(st.data(), st.sampled_from([None, HAMILTON]), st.integers(0, 10 ** 6))
def test_conjugator_property(data, algebra, seed):
    amb = Ambient(2, algebra)
    rng = random.Random(seed)
    psi = data.draw(matrices(amb))
    while True:
        g = amb.from_flat([Fraction(rng.randint(-2, 2)) for _ in range(amb.dim)])
        if g.is_invertible():
            break
    phi = g * psi * g.inverse()
    b = skolem_noether_conjugator(phi, psi)
    assert b * psi * b.inverse() == phi


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=2, max_size=4))
def test_double_centralizer_on_generic_elements(coeffs):
    # monic polynomial; when irreducible its companion matrix generates a field
    poly = coeffs + [1]
    n = len(poly) - 1
    if sympy.Poly(list(reversed(poly)), sympy.Symbol("x")).is_irreducible:
        sub = SubalgebraSpec(Ambient(n), [companion_embedding(poly, n)])
        assert sub.dim == n
        assert centralizer(sub).dim == n
        assert verify_double_centralizer(sub)
        assert is_maximal_subfield(sub)


def test_matrix_json_shape():
    amb = Ambient(1, HAMILTON)
    m = amb.from_flat([1, 2, 3, 4])
    assert isinstance(m, MatrixOverB)
    assert m.to_json()

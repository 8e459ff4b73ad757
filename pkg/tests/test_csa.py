from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blockcalc import csa
from blockcalc.csa import (
    REAL,
    AbelianFieldSpec,
    PlaceQ,
    QuaternionAlgebraQ,
    algebra_with_ramification,
    cyclic_quotients,
    grunwald_wang_search,
    hilbert_symbol,
    local_degree_in_abelian,
    make_constraint,
    min_cyclotomic_splitting,
    ramification_data,
    splits,
)
from blockcalc.cyclo import generated_subfield, sqrt_as_cyclotomic
from blockcalc.errors import SearchBoundExceeded
from oracles import brute_hilbert, primes_up_to


def test_place_parsing():
    assert PlaceQ("inf") == PlaceQ("oo") == PlaceQ("∞") == REAL
    assert PlaceQ("7").p == 7
    with pytest.raises(ValueError):
        PlaceQ(9)


def test_hilbert_examples():
    for v in ["inf", 2, 3, 5, 7]:
        assert hilbert_symbol(1, -7, v) == 1
    assert hilbert_symbol(-1, -1, "inf") == -1
    # brute-force oracle values, frozen
    assert brute_hilbert(-1, -1, 2) == -1 and hilbert_symbol(-1, -1, 2) == -1
    assert brute_hilbert(-1, -1, 3) == 1 and hilbert_symbol(-1, -1, 3) == 1


def test_hilbert_accepts_rationals():
    assert hilbert_symbol(Fraction(-1, 4), Fraction(-9, 2), 2) == hilbert_symbol(-1, -2, 2)
    with pytest.raises(ValueError):
        hilbert_symbol(0, 3, 3)


def test_ramification_examples():
    assert ramification_data(QuaternionAlgebraQ(1, 1)) == ([], 1)
    ram, t = ramification_data(QuaternionAlgebraQ(-1, -1))
    assert [str(v) for v in ram] == ["2", "inf"] and t == 2
    # oracle: symbols of (-1, 3) at 2, 3, inf are -1, -1, +1
    assert [brute_hilbert(-1, 3, v) for v in (2, 3, "inf")] == [-1, -1, 1]
    ram, t = ramification_data(QuaternionAlgebraQ(-1, 3))
    assert [str(v) for v in ram] == ["2", "3"] and t == 2
    ram, _ = ramification_data(QuaternionAlgebraQ(-1, -3))
    assert [str(v) for v in ram] == ["3", "inf"]


def test_algebra_with_ramification():
    for places in ([], ["2", "inf"], ["2", "3"], ["3", "inf"], ["5", "7"], ["2", "3", "5", "inf"]):
        alg = algebra_with_ramification(places)
        assert {str(v) for v in alg.ramification} == set(places)
    with pytest.raises(ValueError):
        algebra_with_ramification(["2"])


def test_local_degree_examples():
    assert local_degree_in_abelian(PlaceQ(3), AbelianFieldSpec.cyclotomic(5)) == 4
    assert local_degree_in_abelian(REAL, AbelianFieldSpec.cyclotomic(3)) == 2
    assert local_degree_in_abelian(PlaceQ(2), AbelianFieldSpec.cyclotomic(4)) == 2
    # Q(sqrt 2) = fixed field of {±1} mod 8: 2 ramifies, 7 splits, 3 is inert, real
    k = AbelianFieldSpec(8, [7])
    assert k.degree == 2
    assert [k.local_degree(v) for v in (2, 7, 3, "inf")] == [2, 1, 2, 1]


def test_local_degree_matches_frobenius_order():
    # unramified primes: the local degree is the order of p in (Z/M)*/H
    for m in (5, 7, 8, 12, 15, 21):
        for gens in ([], [m - 1]):
            k = AbelianFieldSpec(m, gens)
            for p in primes_up_to(40):
                if m % p == 0:
                    continue
                order, x = 1, p % m
                while x not in k.subgroup:
                    x = x * p % m
                    order += 1
                assert k.local_degree(p) == order


def test_splits_examples():
    ham = QuaternionAlgebraQ(-1, -1)
    assert splits(ham, AbelianFieldSpec.cyclotomic(3))
    assert not splits(ham, AbelianFieldSpec.cyclotomic(1))
    assert not splits(ham, AbelianFieldSpec.cyclotomic(2))
    for m in (1, 3, 5, 8):
        assert splits(QuaternionAlgebraQ(1, 1), AbelianFieldSpec.cyclotomic(m))


def _locally_nonsquare(d, v):
    # d is a square in Q_v iff (d, x)_v = 1 for every x; small x generate enough classes
    return any(brute_hilbert(d, x, v) == -1 for x in range(-30, 31) if x)


def test_quadratic_splitting_matches_local_squares():
    for d in (-1, 2, -2, 3, -3, 5, -7, 6, -5):
        conductor, root = sqrt_as_cyclotomic(d)
        _, fixing = generated_subfield([root], conductor)
        field = AbelianFieldSpec.from_fixing(conductor, fixing)
        assert field.degree == 2
        for a, b in ((-1, -1), (-1, 3), (-1, -3), (2, 5), (-2, 7), (3, -5)):
            alg = QuaternionAlgebraQ(a, b)
            ram = alg.ramified_places()
            expected = all(_locally_nonsquare(d, v.p) for v in ram)
            assert splits(alg, field) == expected, (d, a, b)


def test_min_cyclotomic_splitting_examples():
    assert min_cyclotomic_splitting(QuaternionAlgebraQ(1, 1)) == 1
    assert min_cyclotomic_splitting(QuaternionAlgebraQ(-1, -1)) == 3
    # enumeration oracle: Q(zeta_3) is imaginary and 3 is ramified in it
    assert min_cyclotomic_splitting(QuaternionAlgebraQ(-1, -3)) == 3


def test_search_cap(monkeypatch):
    monkeypatch.setenv("BLOCKCALC_SEARCH_CAP", "2")
    with pytest.raises(SearchBoundExceeded):
        min_cyclotomic_splitting(QuaternionAlgebraQ(-1, -1))
    assert min_cyclotomic_splitting(QuaternionAlgebraQ(-1, -1), cap=10) == 3


def test_cyclic_quotients():
    # (Z/8)* = C2 x C2 has three quotients of order 2 and none of order 4 that are cyclic
    assert len(list(cyclic_quotients(8, 2))) == 3
    assert list(cyclic_quotients(8, 4)) == []
    assert len(list(cyclic_quotients(5, 4))) == 1
    assert list(cyclic_quotients(1, 1)) == [frozenset({0})]


def test_grunwald_wang_examples():
    k = grunwald_wang_search([("2", 2), ("inf", 2)], 2)
    # the scan finds Q(sqrt -3) at M = 3 before Q(i) at M = 4
    assert (k.modulus, sorted(k.subgroup)) == (3, [1])
    assert k.local_degree(2) == 2 and k.local_degree(REAL) == 2
    q_i = AbelianFieldSpec(4)
    assert q_i.local_degree(2) == 2 and q_i.local_degree(REAL) == 2
    k = grunwald_wang_search([("3", 4)], 4)
    assert (k.modulus, sorted(k.subgroup)) == (5, [1])
    assert grunwald_wang_search([], 1).modulus == 1


def test_grunwald_wang_input_checks():
    with pytest.raises(ValueError):
        make_constraint("inf", 4)
    with pytest.raises(ValueError):
        grunwald_wang_search([("3", 4)], 2)
    with pytest.raises(SearchBoundExceeded):
        grunwald_wang_search([("3", 4)], 4, cap=4)


# -- properties ------------------------------------------------------------------

nonzero = st.integers(-300, 300).filter(bool)


@settings(max_examples=200, deadline=None)
@given(nonzero, nonzero)
def test_reciprocity(a, b):
    alg = QuaternionAlgebraQ(a, b)
    assert len(alg.ramification) % 2 == 0
    assert alg.schur_index == (2 if alg.ramification else 1)


@settings(max_examples=200, deadline=None)
@given(nonzero, nonzero, nonzero, st.sampled_from(["inf"] + primes_up_to(30)))
def test_bilinear_and_symmetric(a, b, c, v):
    assert hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v)
    assert hilbert_symbol(a, b * c, v) == hilbert_symbol(a, b, v) * hilbert_symbol(a, c, v)
    assert hilbert_symbol(a, -a, v) == 1
    if a != 1:
        assert hilbert_symbol(a, 1 - a, v) == 1


@settings(max_examples=30, deadline=None)
@given(nonzero, nonzero)
def test_min_splitting_field_splits(a, b):
    alg = QuaternionAlgebraQ(a, b)
    m = min_cyclotomic_splitting(alg, cap=2000)
    assert splits(alg, AbelianFieldSpec.cyclotomic(m))
    for smaller in range(1, m):
        assert not splits(alg, AbelianFieldSpec.cyclotomic(smaller))


def test_module_exports_search_cap():
    assert csa.search_cap(7) == 7

"""Tests for minimal primes, radicals and the point oracle."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from fsplit.decompose import minimal_primes, radical, variety_points
from fsplit.errors import BudgetError
from fsplit.groebner import Ideal
from fsplit.poly import one, parse_polynomial
from fsplit.ring import Ring


R2 = Ring(3, ("x", "y"))
RC = Ring(3, ("x", "y", "z", "w"))
RD = Ring(2, ("x1", "x2", "x3", "x4", "x5"))
RM = Ring(2, ("x11", "x12", "x13", "x14", "x21", "x22", "x23", "x24"))
RS = Ring(2, ("x21", "x31", "x41", "x32", "x42", "x43"))


def polys(ring, *texts):
    return [parse_polynomial(ring, t) for t in texts]


def ideal(ring, *texts):
    return Ideal(ring, polys(ring, *texts))


def gb_strings(I):
    return [str(g) for g in I.groebner()]


def component_keys(comps):
    return sorted(c.ideal.canonical_key() for c in comps)


def test_radical_frozen():
    assert gb_strings(radical(ideal(R2, "x^2*y", "x*y^2"))) == ["x*y"]


def test_radical_trivial_cases():
    assert radical(Ideal(R2, ())).is_zero()
    assert radical(ideal(R2, "1")).is_unit()
    assert radical(ideal(R2, "2")).is_unit()


def test_radical_of_prime_is_identity():
    P = ideal(RC, "w", "x^2-y*z")
    assert radical(P) == P


def test_minimal_primes_of_monomial_ideal():
    comps = minimal_primes(ideal(R2, "x^2*y", "x*y^2"))
    assert component_keys(comps) == [ideal(R2, "x").canonical_key(),
                                     ideal(R2, "y").canonical_key()]
    assert all(c.certified for c in comps)


def test_minimal_primes_zero_and_unit():
    zero_comps = minimal_primes(Ideal(R2, ()))
    assert len(zero_comps) == 1
    assert zero_comps[0].ideal.is_zero()
    assert zero_comps[0].certified
    assert minimal_primes(ideal(R2, "1")) == ()


def test_prime_input_is_its_own_decomposition():
    P = ideal(RC, "w", "x^2-y*z")
    comps = minimal_primes(P)
    assert len(comps) == 1
    assert comps[0].ideal == P
    assert comps[0].certified


def test_fat_point_radicalized():
    comps = minimal_primes(ideal(R2, "x^2", "y^2"))
    assert len(comps) == 1
    assert comps[0].ideal == ideal(R2, "x", "y")
    assert comps[0].certified


def test_conjugate_points_split_by_frobenius_kernel():
    r = Ring(2, ("x", "y"))
    comps = minimal_primes(Ideal(r, polys(r, "x^2+x+1", "y^2+y+1")))
    got = sorted(gb_strings(c.ideal) for c in comps)
    assert got == [["y^2+y+1", "x+y"], ["y^2+y+1", "x+y+1"]]
    assert all(c.certified for c in comps)


DETERMINANTAL = ("x1*x4+x2*x4", "x1*x3+x2*x4", "x1^2+x4*x5",
                 "x2*x3+x2*x4", "x1*x2+x4*x5", "x1*x2+x3*x5")


def test_determinantal_ideal_has_three_components():
    I = ideal(RD, *DETERMINANTAL)
    comps = minimal_primes(I)
    expected = [ideal(RD, "x1", "x2", "x5"),
                ideal(RD, "x1", "x3", "x4"),
                ideal(RD, "x1+x2", "x3+x4", "x2^2+x4*x5")]
    assert component_keys(comps) == sorted(P.canonical_key() for P in expected)
    assert all(c.certified for c in comps)
    for c in comps:
        assert c.ideal.contains_ideal(I)


def test_determinantal_components_cover_the_points():
    I = ideal(RD, *DETERMINANTAL)
    comps = minimal_primes(I)
    for ext in (1, 2):
        covered = set()
        for c in comps:
            covered |= set(variety_points(c.ideal, ext))
        assert covered == set(variety_points(I, ext))


def minor(i, j):
    return "x1%d*x2%d+x2%d*x1%d" % (i, j, i, j)


def test_minor_product_splits_into_minor_primes():
    u = "(%s)*(%s)*(%s)" % (minor(1, 2), minor(1, 3), minor(1, 4))
    comps = minimal_primes(ideal(RM, u))
    expected = [ideal(RM, minor(1, 2)), ideal(RM, minor(1, 3)),
                ideal(RM, minor(1, 4))]
    assert component_keys(comps) == sorted(P.canonical_key() for P in expected)
    assert all(c.certified for c in comps)


@pytest.mark.parametrize("texts", [
    (minor(1, 2),),
    (minor(1, 2), minor(1, 4), minor(2, 4)),
    tuple(minor(i, j) for i in range(1, 5) for j in range(i + 1, 5)),
])
def test_generic_matrix_minor_ideals_are_certified_prime(texts):
    I = ideal(RM, *texts)
    comps = minimal_primes(I)
    assert len(comps) == 1
    assert comps[0].ideal == I
    assert comps[0].certified


@pytest.mark.parametrize("texts", [
    ("x31*x42+x41*x32",),
    ("x31*x42+x41*x32", "x31*x43+x41", "x32*x43+x42"),
    ("x31*x42+x41*x32", "x21*x32+x31", "x21*x42+x41"),
    ("x31*x42+x41*x32", "x21*x32+x31", "x31*x43+x41",
     "x32*x43+x42", "x21*x42+x41"),
    ("x21*x32*x43+x21*x42+x31*x43+x41",),
    ("x21*x32*x43+x21*x42+x31*x43+x41", "x41"),
])
def test_staircase_minor_ideals_are_certified_prime(texts):
    I = ideal(RS, *texts)
    comps = minimal_primes(I)
    assert len(comps) == 1
    assert comps[0].ideal == Ideal(RS, I.groebner())
    assert comps[0].certified


def test_cone_slice_has_nine_rational_points():
    pts = variety_points(ideal(RC, "x^2-y*z", "w"))
    assert len(pts) == 9
    iw = RC.index["w"]
    assert all(pt[iw] == 0 for pt in pts)


def test_variety_of_zero_and_unit():
    assert len(variety_points(Ideal(R2, ()))) == 9
    assert variety_points(ideal(R2, "1")) == []


def test_variety_extension_picks_up_conjugate_roots():
    r = Ring(2, ("x",))
    I = Ideal(r, polys(r, "x^2+x+1"))
    assert variety_points(I, 1) == []
    assert variety_points(I, 2) == [(2,), (3,)]


def test_variety_extension_square_roots_of_minus_one():
    r = Ring(3, ("x",))
    I = Ideal(r, polys(r, "x^2+1"))
    assert variety_points(I, 1) == []
    assert variety_points(I, 2) == [(3,), (6,)]


def test_variety_budget_guard():
    r = Ring(5, tuple("abcdefghijkl"))
    with pytest.raises(BudgetError):
        variety_points(Ideal(r, ()))


def small_ideals(ring):
    texts = ["x", "y", "x+1", "y+2", "x*y", "x^2-y", "x^2*y", "x*y^2",
             "x^2+y^2", "x*y+1", "x^2+x", "y^2-y", "x^3-y^2", "x*y*(x+y)",
             "(x+y)^2", "x^2*y+x*y+y"]
    return st.lists(st.sampled_from(texts), min_size=1, max_size=3).map(
        lambda ts: Ideal(ring, polys(ring, *ts)))


@settings(max_examples=30, deadline=None)
@given(small_ideals(R2))
def test_components_cover_the_variety(I):
    comps = minimal_primes(I)
    for ext in (1, 2):
        covered = set()
        for c in comps:
            assert c.ideal.contains_ideal(I)
            covered |= set(variety_points(c.ideal, ext))
        assert covered == set(variety_points(I, ext))


@settings(max_examples=30, deadline=None)
@given(small_ideals(R2))
def test_components_are_pairwise_incomparable(I):
    comps = minimal_primes(I)
    for a, b in itertools.combinations(comps, 2):
        assert not a.ideal.contains_ideal(b.ideal)
        assert not b.ideal.contains_ideal(a.ideal)


@settings(max_examples=25, deadline=None)
@given(small_ideals(R2))
def test_radical_membership_certified_by_saturation(I):
    rad = radical(I)
    if rad.is_unit():
        assert not variety_points(I)
        return
    for g in rad.groebner():
        assert I.saturate(Ideal(R2, (g,))).is_unit()
    assert radical(rad) == rad

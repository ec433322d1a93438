"""Tests for bracket powers, Frobenius roots and premultiplier maps."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from fsplit.frobenius import (
    PhiMap, application_bound, bracket_power, fedder_compatible,
    fedder_witness, frobenius_root, frobenius_root_slow, image_ideal,
    is_splitting, is_surjective_mod, phi_apply, phi_element, stabilize_chain,
)
from fsplit.groebner import Ideal
from fsplit.poly import make, monomial, one, parse_polynomial
from fsplit.ring import Grevlex, Ring


R1 = Ring(3, ("x",), Grevlex())
R2 = Ring(3, ("x", "y"), Grevlex())
RC = Ring(3, ("x", "y", "z", "w"), Grevlex())

CONE_U = ("x^6*w^2+x^5*w^2+x^4*y*z*w^2+x^3*y*z*w^2"
          "+x^2*y^2*z^2*w^2+x*y^2*z^2*w^2")


def ideal(ring, *texts):
    return Ideal(ring, [parse_polynomial(ring, t) for t in texts])


def cone_phi():
    return PhiMap(parse_polynomial(RC, CONE_U), 1)


def test_bracket_power():
    I = ideal(R2, "x+y")
    assert bracket_power(I, 1) == ideal(R2, "x^3+y^3")
    assert bracket_power(I, 2) == ideal(R2, "x^9+y^9")
    assert bracket_power(Ideal(R2, ()), 1).is_zero()


@pytest.mark.parametrize("gen,expected", [
    ("x^3", ["x"]),
    ("x^4", ["x"]),
    ("x^2", ["1"]),
    ("x^3+1", ["x+1"]),
])
def test_frobenius_root_univariate(gen, expected):
    got = frobenius_root(ideal(R1, gen), 1)
    assert [str(g) for g in got.groebner()] == expected


def test_frobenius_root_buckets_split():
    got = frobenius_root(ideal(R2, "x^2*y^5+x^4"), 1)
    assert got == ideal(R2, "x", "y")
    joined = frobenius_root(ideal(R2, "x^3*y^3+1"), 1)
    assert joined == ideal(R2, "x*y+1")


def test_frobenius_root_of_minor_product():
    ring = Ring(2, ("x11", "x12", "x13", "x14", "x21", "x22", "x23", "x24"),
                Grevlex())
    u = parse_polynomial(
        ring, "(x11*x22-x21*x12)*(x11*x23-x21*x13)*(x11*x24-x21*x14)")
    got = frobenius_root(Ideal(ring, (u,)), 1)
    assert got == ideal(ring, "x11", "x21")


def test_slow_route_matches_fast():
    for texts in [("x^3",), ("x^2*y^5+x^4",), ("x^3*y^3+1", "x*y"),
                  ("x^7+2*x^3*y^3+y^2",)]:
        I = ideal(R2, *texts)
        assert frobenius_root_slow(I, 1) == frobenius_root(I, 1)
        assert frobenius_root_slow(I, 2) == frobenius_root(I, 2)


small_polys = st.builds(
    lambda raw: make(R2, {m: c for m, c in raw}),
    st.lists(st.tuples(
        st.tuples(st.integers(0, 7), st.integers(0, 7)),
        st.integers(0, 8)), max_size=5),
)


@settings(max_examples=40, deadline=None)
@given(st.lists(small_polys, min_size=1, max_size=3), st.integers(1, 2))
def test_root_routes_agree(gens, e):
    I = Ideal(R2, gens)
    assert frobenius_root(I, e) == frobenius_root_slow(I, e)


@settings(max_examples=40, deadline=None)
@given(st.lists(small_polys, min_size=1, max_size=3), st.integers(1, 2))
def test_root_inverts_bracket(gens, e):
    I = Ideal(R2, gens)
    assert frobenius_root(bracket_power(I, e), e) == I
    root = frobenius_root(I, e)
    assert bracket_power(root, e).contains_ideal(I)


def test_phi_element_matches_ideal_image():
    u = parse_polynomial(R2, "x^2*y^2+x*y^4+2*x^5")
    phi = PhiMap(u, 1)
    f = parse_polynomial(R2, "x+2*y^2")
    image = phi_apply(phi, Ideal(R2, (f,)))
    pieces = []
    for beta in itertools.product(range(3), repeat=2):
        pieces.append(phi_element(phi, monomial(R2, beta) * f))
    assert Ideal(R2, pieces) == image


@pytest.mark.parametrize("text,expected", [
    ("x^2", True),
    ("x", False),
    ("1", False),
    ("x^2+x", True),
])
def test_is_splitting_univariate(text, expected):
    phi = PhiMap(parse_polynomial(R1, text), 1)
    assert is_splitting(phi) == expected


def test_is_splitting_cone():
    assert is_splitting(cone_phi())


def test_image_ideal_and_surjectivity():
    assert image_ideal(cone_phi()).is_unit()
    assert is_surjective_mod(cone_phi(), ideal(RC, "x^2-y*z"))
    shrunk = PhiMap(parse_polynomial(R1, "x^3"), 1)
    assert image_ideal(shrunk) == ideal(R1, "x")
    assert not is_surjective_mod(shrunk, Ideal(R1, ()))
    assert is_surjective_mod(shrunk, ideal(R1, "x-1"))


def test_fedder_compatibility():
    phi = cone_phi()
    assert fedder_compatible(phi, ideal(RC, "x^2-y*z"))
    assert fedder_compatible(phi, ideal(RC, "w", "x^2-y*z"))
    assert fedder_compatible(phi, Ideal(RC, ()))
    assert fedder_compatible(phi, ideal(RC, "1"))
    bad = ideal(RC, "y")
    assert not fedder_compatible(phi, bad)
    gen, nf = fedder_witness(phi, bad)
    assert str(gen) == "y"
    assert not nf.is_zero()


def test_application_bound_frozen():
    assert application_bound(cone_phi(), 4) == 37
    assert application_bound(cone_phi(), 1) == 35


def test_stabilize_chain_small():
    phi = PhiMap(parse_polynomial(R1, "x^2"), 1)
    stable, steps = stabilize_chain(phi, ideal(R1, "x"), additive=False)
    assert stable == ideal(R1, "x") and steps == 0
    stable, steps = stabilize_chain(phi, ideal(R1, "x^2"), additive=False)
    assert stable == ideal(R1, "x") and steps == 1
    stable, steps = stabilize_chain(phi, ideal(R1, "x^2"), additive=True)
    assert stable == ideal(R1, "x") and steps == 1
    stable, steps = stabilize_chain(phi, Ideal(R1, ()), additive=False)
    assert stable.is_zero() and steps == 0


def test_stabilize_chain_cone_locus():
    phi = cone_phi()
    C = ideal(RC, "w", "x^2-y*z")
    stable, steps = stabilize_chain(phi, C, additive=False)
    assert stable == C and steps == 0

"""Tests for the compatible-prime enumeration and its building blocks."""

import random

import pytest

from fsplit.algorithm import (
    CompatProblem, _round, cokernel_ideal, compatible_primes, covering_edges,
    image_radical, singular_locus_ideal,
)
from fsplit.errors import EngineError, PreconditionError, RingMismatchError
from fsplit.frobenius import PhiMap, phi_apply, stabilize_chain
from fsplit.groebner import Ideal
from fsplit.poly import one, parse_polynomial
from fsplit.ring import Grevlex, Ring


RC = Ring(3, ("x", "y", "z", "w"), Grevlex())
RB = Ring(2, ("x", "y"), Grevlex())
RX = Ring(2, ("x",), Grevlex())


def ideal(ring, *texts):
    return Ideal(ring, [parse_polynomial(ring, t) for t in texts])


def gb_strings(I):
    return [str(g) for g in I.groebner()]


def cone_phi():
    u = parse_polynomial(RC, "(x^2-y*z)^2*w^2*x*(x+1)")
    return PhiMap(u, 1)


def cone_problem(**kwargs):
    return CompatProblem(RC, cone_phi(), ideal(RC, "x^2-y*z"), **kwargs)


def test_singular_locus_of_zero_ideal_is_unit():
    assert singular_locus_ideal(Ideal(RC, ())).is_unit()


def test_singular_locus_of_smooth_plane_is_unit():
    assert singular_locus_ideal(ideal(RC, "x", "y")).is_unit()


def test_singular_locus_of_quadric_cone():
    J = singular_locus_ideal(ideal(RC, "x^2-y*z"))
    assert gb_strings(J) == ["x", "y", "z"]


def test_singular_locus_needs_a_nonzero_minor():
    with pytest.raises(EngineError, match="Jacobian criterion failed"):
        singular_locus_ideal(ideal(RX, "x^2"))


def test_cokernel_at_zero_prime_is_the_premultiplier():
    phi = cone_phi()
    B = cokernel_ideal(phi, Ideal(RC, ()))
    assert B == Ideal(RC, (phi.u,))


def test_cokernel_at_the_cone_vertex_curve():
    B = cokernel_ideal(cone_phi(), ideal(RC, "x^2-y*z"))
    assert B == ideal(RC, "x^2-y*z", "x^2*w^2+x*w^2")
    assert gb_strings(B) == ["y*z*w^2+x*w^2", "x^2-y*z"]


def test_cokernel_for_a_principal_prime():
    phi = PhiMap(parse_polynomial(RB, "x*y"), 1)
    B = cokernel_ideal(phi, ideal(RB, "x"))
    assert B == ideal(RB, "x", "y")


def test_image_radical_of_split_cone_map_is_unit():
    assert image_radical(cone_phi()).is_unit()


def test_image_radical_of_a_small_map():
    phi = PhiMap(parse_polynomial(RB, "x^2*y^2"), 1)
    assert gb_strings(image_radical(phi)) == ["x*y"]


@pytest.mark.parametrize("texts,expected", [
    ((("x",), ("x", "y"), ("x", "y", "z")), ((0, 1), (1, 2))),
    ((("x",), ("y",)), ()),
    ((("x",), ("x", "y"), ("x", "z"), ("x", "y", "z")),
     ((0, 1), (0, 2), (1, 3), (2, 3))),
])
def test_covering_edges_reduce_transitively(texts, expected):
    ideals = [ideal(RC, *t) for t in texts]
    assert covering_edges(ideals) == expected


def test_cone_enumeration_end_to_end():
    res = compatible_primes(cone_problem())
    assert res.mode == "surjective"
    assert res.surjective is True
    assert res.image_radical.is_unit()
    assert [gb_strings(c.ideal) for c in res.primes] == [
        ["x^2-y*z"], ["x^2-y*z", "w"]]
    assert all(c.certified for c in res.primes)
    assert res.edges == ((0, 1),)


def test_cone_trace_rounds_are_reproducible():
    res = compatible_primes(cone_problem())
    assert len(res.trace) == 2
    first, second = res.trace
    assert gb_strings(first.prime) == ["x^2-y*z"]
    assert gb_strings(first.locus) == ["x", "y", "z"]
    assert first.cokernel == ideal(RC, "x^2-y*z", "x^2*w^2+x*w^2")
    assert gb_strings(first.chain) == ["x^2-y*z", "w"]
    assert first.steps == 2
    assert [gb_strings(c.ideal) for c in first.components] == [
        ["x^2-y*z", "w"]]
    assert second.chain.is_unit()
    assert second.components == ()


def test_cone_chain_passes_through_a_larger_step():
    phi = cone_phi()
    Q = ideal(RC, "x^2-y*z")
    A0 = singular_locus_ideal(Q).mul(cokernel_ideal(phi, Q)).add(Q)
    A1 = phi_apply(phi, A0)
    assert gb_strings(A1) == ["x^2-y*z", "x*w", "y*w", "z*w"]
    A2 = phi_apply(phi, A1)
    assert gb_strings(A2) == ["x^2-y*z", "w"]
    assert phi_apply(phi, A2) == A2


def test_cone_general_mode_matches_surjective_mode():
    fast = compatible_primes(cone_problem())
    slow = compatible_primes(cone_problem(mode="general"))
    assert slow.mode == "general"
    assert [c.ideal for c in slow.primes] == [c.ideal for c in fast.primes]
    assert slow.edges == fast.edges


def test_cone_additive_variant_agrees_on_every_round():
    phi = cone_phi()
    for round_ in compatible_primes(cone_problem()).trace:
        Q = round_.prime
        A0 = singular_locus_ideal(Q).mul(cokernel_ideal(phi, Q)).add(Q)
        additive, _ = stabilize_chain(phi, A0, True)
        assert additive == round_.chain


def test_thread_fanout_is_schedule_independent():
    serial = compatible_primes(cone_problem())
    fanned = compatible_primes(cone_problem(), threads=2)
    assert [c.ideal for c in fanned.primes] == [c.ideal for c in serial.primes]
    assert fanned.edges == serial.edges
    assert len(fanned.trace) == len(serial.trace)


def test_locus_override_can_reproduce_the_computed_locus():
    given = compatible_primes(cone_problem(locus_override=ideal(RC, "x", "y", "z")))
    computed = compatible_primes(cone_problem())
    assert [c.ideal for c in given.primes] == [c.ideal for c in computed.primes]


def test_locus_override_inside_the_prime_is_rejected():
    problem = cone_problem(locus_override=ideal(RC, "x^2-y*z"))
    with pytest.raises(PreconditionError,
                       match="locus ideal is contained in the prime"):
        compatible_primes(problem)


def test_incompatible_seed_reports_the_witness():
    problem = CompatProblem(RC, PhiMap(one(RC), 1), ideal(RC, "x^2-y*z"))
    with pytest.raises(PreconditionError,
                       match=r"not I-compatible: u\*\(x\^2-y\*z\) has normal "
                             r"form x\^2-y\*z"):
        compatible_primes(problem)


def test_forcing_surjective_mode_on_a_nonsurjective_map():
    phi = PhiMap(parse_polynomial(RB, "x^2*y^2"), 1)
    problem = CompatProblem(RB, phi, Ideal(RB, ()), mode="surjective")
    with pytest.raises(PreconditionError, match="surjective mode requested"):
        compatible_primes(problem)


def test_mismatched_rings_are_rejected():
    phi = PhiMap(parse_polynomial(RB, "x*y"), 1)
    with pytest.raises(RingMismatchError):
        CompatProblem(RC, phi, ideal(RC, "x^2-y*z"))


def test_zero_restriction_closes_the_branch():
    phi = PhiMap(parse_polynomial(RX, "x^2"), 1)
    res = compatible_primes(CompatProblem(RX, phi, ideal(RX, "x")))
    assert res.mode == "general"
    assert [gb_strings(c.ideal) for c in res.primes] == [["x"]]
    assert res.trace[0].chain is None
    assert "branch closed" in res.trace[0].note


def test_collapsed_cokernel_stops_a_replacing_round():
    phi = PhiMap(parse_polynomial(RX, "x^3"), 1)
    with pytest.raises(EngineError, match="cokernel ideal collapsed"):
        _round(phi, ideal(RX, "x"), None, False, None)


def test_errors_name_the_round_prime():
    problem = cone_problem(locus_override=ideal(RC, "x^2-y*z"))
    with pytest.raises(PreconditionError,
                       match=r"in the round at prime <x\^2-y\*z>"):
        compatible_primes(problem)


def test_output_primes_multiply_without_collapsing():
    res = compatible_primes(cone_problem())
    rng = random.Random(99)

    def sample(Q):
        while True:
            terms = rng.randint(1, 3)
            parts = []
            for _ in range(terms):
                exps = tuple(rng.randint(0, 2) for _ in range(RC.nvars))
                parts.append("%d*%s" % (rng.randint(1, 2), "*".join(
                    "%s^%d" % (n, e) for n, e in zip(RC.variables, exps))))
            f = parse_polynomial(RC, "+".join(parts))
            if Q.reduce(f):
                return f

    for comp in res.primes:
        Q = comp.ideal
        for _ in range(50):
            f = sample(Q)
            g = sample(Q)
            assert Q.reduce(f * g), "product of units collapsed mod a prime"

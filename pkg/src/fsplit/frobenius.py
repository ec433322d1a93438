"""Frobenius powers, Frobenius roots and premultiplier maps.

A p^e-linear map phi on F_p[x1..xn] is described by a premultiplier u:
phi sends a class represented by f to the projection of u*f onto the
basis monomial with every exponent p^e - 1.  Images of ideals are
computed through Frobenius roots, which come in two routes: a fast one
that buckets exponents by residue mod p^e, and a slow reference that
rewrites generators in an extended ring.
"""

import math

from .errors import EngineError
from .groebner import Ideal, buchberger, normal_form
from .poly import Polynomial, monomial, one, rename
from .ring import Block, Grevlex, Ring


class PhiMap:
    """A p^e-linear map given by its premultiplier."""

    __slots__ = ("u", "e", "ring", "q")

    def __init__(self, u, e):
        assert isinstance(e, int) and e >= 1, "need a positive power of p"
        self.u = u
        self.e = e
        self.ring = u.ring
        self.q = u.ring.p ** e

    def __repr__(self):
        return "PhiMap(e=%d, u=%s)" % (self.e, self.u)


def bracket_power(I, e):
    """Return the ideal generated by the p^e-th powers of the generators."""
    return Ideal(I.ring, [g.frobenius(e) for g in I.gens])


def _root_buckets(f, q):
    """Split f into its Frobenius root pieces, keyed by exponent residue."""
    buckets = {}
    for m, c in f.terms.items():
        alpha = tuple(x % q for x in m)
        base = tuple(x // q for x in m)
        buckets.setdefault(alpha, {})[base] = c
    return buckets


def frobenius_root(I, e):
    """Return the smallest ideal whose e-th bracket power contains I."""
    q = I.ring.p ** e
    gens = []
    for g in I.gens:
        buckets = _root_buckets(g, q)
        for alpha in sorted(buckets):
            gens.append(Polynomial(I.ring, buckets[alpha]))
    return Ideal(I.ring, gens)


def frobenius_root_slow(I, e):
    """Reference route for Frobenius roots, through an extended ring.

    Each generator is rewritten modulo the relations x_i^q = y_i in a
    ring with shadow variables, which regroups it as a sum of reduced
    monomials in x with coefficients in y.  Those coefficients, read
    back in x, generate the root.
    """
    ring = I.ring
    n = ring.nvars
    q = ring.p ** e
    shadows = tuple("_y%d" % i for i in range(n))
    assert not set(shadows) & set(ring.variables), "shadow name collision"
    wide = Ring(ring.p, ring.variables + shadows,
                Block((n, Grevlex()), (n, Grevlex())))
    up = tuple(range(n))
    relations = []
    for i in range(n):
        xq = monomial(wide, {i: q})
        yi = monomial(wide, {n + i: 1})
        relations.append(xq - yi)
    gens = []
    for g in I.gens:
        r = normal_form(rename(g, wide, up), relations, wide.order)
        pieces = {}
        for m, c in r.terms.items():
            alpha = m[:n]
            assert all(x < q for x in alpha), "reduction left a high exponent"
            pieces.setdefault(alpha, {})[m[n:]] = c
        for alpha in sorted(pieces):
            gens.append(Polynomial(ring, pieces[alpha]))
    return Ideal(ring, gens)


def phi_apply(phi, J):
    """Return the ideal generated by the image of an ideal under the map."""
    scaled = Ideal(phi.ring, [phi.u * g for g in J.gens])
    return frobenius_root(scaled, phi.e)


def phi_element(phi, f):
    """Apply the map to a single ring element."""
    q = phi.q
    w = phi.u * f
    terms = {}
    for m, c in w.terms.items():
        if all(x % q == q - 1 for x in m):
            terms[tuple(x // q for x in m)] = c
    return Polynomial(phi.ring, terms)


def is_splitting(phi):
    """Return True when the map sends 1 to exactly 1."""
    return phi_element(phi, one(phi.ring)) == one(phi.ring)


def image_ideal(phi):
    """Return the image of the whole ring under the map."""
    return phi_apply(phi, Ideal(phi.ring, (one(phi.ring),)))


def fedder_witness(phi, I):
    """Return None when the map preserves I, else a failing pair.

    The map preserves I exactly when u times each generator lies in
    the bracket power of I.  On failure the pair is a generator and
    the nonzero normal form of its scaled image.
    """
    bracket = bracket_power(I, phi.e)
    for g in I.gens:
        r = bracket.reduce(phi.u * g)
        if r:
            return g, r
    return None


def fedder_compatible(phi, I):
    """Return True when the map carries I into itself."""
    return fedder_witness(phi, I) is None


def is_surjective_mod(phi, I):
    """Return True when the induced map modulo I is surjective."""
    return I.add(image_ideal(phi)).is_unit()


def application_bound(phi, d):
    """Bound the applications needed to stabilize a chain of degree d.

    The bound is the number of squeezes that shrink degree d below the
    fixed scale, plus a count of monomials under the residual degree of
    the premultiplier.
    """
    assert d >= 1
    q = phi.q
    n = phi.ring.nvars
    steps = 0
    reach = 1
    while reach < d:
        reach *= q
        steps += 1
    return steps + math.comb(phi.u.degree() // q + 1 + n, n)


def stabilize_chain(phi, start, additive):
    """Iterate the ideal map from start until it stops moving.

    When additive is False the chain replaces each ideal by its image;
    this ascends whenever the map is surjective.  When additive is True
    each step adds the image to what is already there.  Returns the
    stable ideal and the number of applications taken.  Raises
    EngineError when the stabilization bound is exceeded.
    """
    if start.is_zero():
        return start, 0
    d = max(g.degree() for g in start.gens)
    bound = application_bound(phi, max(d, 1))
    current = start
    steps = 0
    while True:
        image = phi_apply(phi, current)
        if all(current.contains(g) for g in image.gens):
            return current, steps
        steps += 1
        if steps > bound:
            raise EngineError(
                "chain did not stabilize within %d applications" % bound)
        if additive:
            current = current.add(image)
        else:
            current = image

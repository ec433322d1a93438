"""Enumeration of the compatible primes of a premultiplier map.

The recursion starts from the seed ideal's minimal primes (or from the
zero ideal), and for each live prime Q computes a singular locus ideal
J, the colon ideal B that transports the map to the quotient, and the
stabilized chain C of the product.  The minimal primes of C are the
new compatible primes; the walk repeats on each of them.  When the map
is not surjective modulo the seed, components containing the radical K
of the image are dropped, since every prime over K is compatible and
the finite enumeration stops at K instead.
"""

import itertools
from concurrent.futures import ThreadPoolExecutor

from .decompose import PrimeComponent, minimal_primes, radical
from .errors import EngineError, PreconditionError, RingMismatchError
from .frobenius import (bracket_power, fedder_witness, frobenius_root,
                        is_surjective_mod, stabilize_chain)
from .groebner import Ideal
from .poly import one

MODES = ("auto", "surjective", "general")


class CompatProblem:
    """A ring, a premultiplier map, a seed ideal and a mode choice."""

    __slots__ = ("ring", "phi", "seed", "mode", "locus_override")

    def __init__(self, ring, phi, seed, mode="auto", locus_override=None):
        assert mode in MODES, "unknown mode %r" % (mode,)
        if phi.ring != ring or seed.ring != ring:
            raise RingMismatchError("problem parts live in different rings")
        if locus_override is not None and locus_override.ring != ring:
            raise RingMismatchError("locus override lives in another ring")
        self.ring = ring
        self.phi = phi
        self.seed = seed
        self.mode = mode
        self.locus_override = locus_override


class TraceRound:
    """One recursion round: the prime Q and everything derived from it."""

    __slots__ = ("prime", "locus", "cokernel", "chain", "steps",
                 "components", "dropped", "note")

    def __init__(self, prime, locus, cokernel, chain, steps, components,
                 dropped, note):
        self.prime = prime
        self.locus = locus
        self.cokernel = cokernel
        self.chain = chain
        self.steps = steps
        self.components = components
        self.dropped = dropped
        self.note = note


class CompatResult:
    """The enumerated primes with their poset and provenance."""

    __slots__ = ("primes", "edges", "image_radical", "surjective", "mode",
                 "trace")

    def __init__(self, primes, edges, image_radical, surjective, mode, trace):
        self.primes = primes
        self.edges = edges
        self.image_radical = image_radical
        self.surjective = surjective
        self.mode = mode
        self.trace = trace


def _det(mat):
    assert mat, "minor of empty shape"
    if len(mat) == 1:
        return mat[0][0]
    total = None
    for j, entry in enumerate(mat[0]):
        if not entry:
            continue
        sub = [row[:j] + row[j + 1:] for row in mat[1:]]
        minor = _det(sub)
        if minor is None:
            continue
        term = entry * minor
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def singular_locus_ideal(Q):
    """Return Q plus the critical minors of the Jacobian of its basis.

    The minor size is the codimension, so the result cuts out the
    singular points of the zero set of Q.  The zero ideal has a smooth
    zero set and maps to the unit ideal.
    """
    ring = Q.ring
    if Q.is_zero():
        return Ideal(ring, (one(ring),))
    gens = Q.groebner()
    c = ring.nvars - Q.dimension()
    assert c >= 1
    jac = [[g.derivative(j) for j in range(ring.nvars)] for g in gens]
    minors = set()
    if c <= len(gens):
        for rows in itertools.combinations(range(len(gens)), c):
            for cols in itertools.combinations(range(ring.nvars), c):
                d = _det([[jac[i][j] for j in cols] for i in rows])
                if d is not None:
                    nf = Q.reduce(d)
                    if nf:
                        minors.add(nf)
    if not minors:
        raise EngineError("Jacobian criterion failed for <%s>"
                          % ", ".join(str(g) for g in gens))
    return Q.add(Ideal(ring, tuple(sorted(minors, key=str))))


def cokernel_ideal(phi, Q):
    """The colon ideal carrying the map to the quotient by Q."""
    ring = Q.ring
    if Q.is_zero():
        return Ideal(ring, (phi.u,))
    bracket = bracket_power(Q, phi.e)
    return bracket.add(Ideal(ring, (phi.u,))).colon(bracket.colon(Q))


def image_radical(phi):
    """Radical of the image ideal of the map."""
    return radical(frobenius_root(Ideal(phi.ring, (phi.u,)), phi.e))


def _round(phi, Q, locus_override, additive, K):
    """Run one recursion round at the prime Q."""
    if locus_override is not None:
        if Q.contains_ideal(locus_override):
            raise PreconditionError(
                "supplied locus ideal is contained in the prime <%s>"
                % ", ".join(str(g) for g in Q.groebner()))
        J = locus_override.add(Q)
    else:
        J = singular_locus_ideal(Q)
    B = cokernel_ideal(phi, Q)
    if Q.contains_ideal(B):
        if not additive:
            raise EngineError(
                "cokernel ideal collapsed into the prime in surjective mode")
        note = "restricted map is zero; branch closed, primes over it " \
               "are all compatible"
        return TraceRound(Q, J, B, None, 0, (), (), note)
    C, steps = stabilize_chain(phi, J.mul(B).add(Q), additive)
    if not C.contains_ideal(Q) or C == Q:
        raise EngineError("stabilized chain does not properly contain "
                          "its prime")
    if C.is_unit():
        return TraceRound(Q, J, B, C, steps, (), (), None)
    components = minimal_primes(C)
    kept = []
    dropped = []
    for comp in components:
        if K is not None and comp.ideal.contains_ideal(K):
            dropped.append(comp)
        else:
            kept.append(comp)
    note = None
    if dropped:
        note = "%d component(s) contain the image radical and are not " \
               "listed" % len(dropped)
    return TraceRound(Q, J, B, C, steps, tuple(kept), tuple(dropped), note)


def compatible_primes(problem, threads=1):
    """Enumerate the compatible primes reachable from the seed.

    Runs breadth first over newly found primes; each level's rounds
    are independent, so a thread count above one fans them out.  The
    output is canonically ordered and schedule independent.
    """
    phi = problem.phi
    seed = problem.seed
    witness = fedder_witness(phi, seed)
    if witness is not None:
        gen, nf = witness
        raise PreconditionError(
            "phi is not I-compatible: u*(%s) has normal form %s modulo "
            "the bracket power of I" % (gen, nf))
    surjective = is_surjective_mod(phi, seed)
    mode = problem.mode
    if mode == "auto":
        mode = "surjective" if surjective else "general"
    elif mode == "surjective" and not surjective:
        raise PreconditionError(
            "surjective mode requested but the map is not surjective "
            "modulo the seed")
    K = image_radical(phi)
    k_filter = K if mode == "general" else None
    additive = mode == "general"
    found = {}
    visited = set()
    if seed.is_zero():
        level = [PrimeComponent(seed, True)]
    else:
        level = list(minimal_primes(seed))
    for comp in level:
        visited.add(comp.ideal.canonical_key())
        if not comp.ideal.is_zero():
            _collect(found, comp)
    trace = []
    while level:
        level.sort(key=lambda comp: comp.ideal.canonical_key())
        primes = [comp.ideal for comp in level]
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                rounds = list(pool.map(
                    lambda Q: _run_round(phi, Q, problem.locus_override,
                                         additive, k_filter), primes))
        else:
            rounds = [_run_round(phi, Q, problem.locus_override, additive,
                                 k_filter) for Q in primes]
        next_level = []
        for round_ in rounds:
            trace.append(round_)
            for comp in round_.components:
                _collect(found, comp)
                key = comp.ideal.canonical_key()
                if key not in visited:
                    visited.add(key)
                    next_level.append(comp)
        level = next_level
    ordered = tuple(sorted(found.values(),
                           key=lambda comp: comp.ideal.canonical_key()))
    edges = covering_edges([comp.ideal for comp in ordered])
    return CompatResult(ordered, edges, K, surjective, mode, tuple(trace))


def _run_round(phi, Q, locus_override, additive, K):
    try:
        return _round(phi, Q, locus_override, additive, K)
    except (PreconditionError, EngineError) as err:
        raise err.__class__(
            "in the round at prime <%s>: %s"
            % (", ".join(str(g) for g in Q.groebner()), err)) from err


def _collect(found, comp):
    key = comp.ideal.canonical_key()
    old = found.get(key)
    if old is None or (comp.certified and not old.certified):
        found[key] = comp


def covering_edges(ideals):
    """Covering pairs (i, j) of the inclusion order, i strictly inside j."""
    n = len(ideals)
    below = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and ideals[j].contains_ideal(ideals[i]) \
                    and ideals[i] != ideals[j]:
                below[i][j] = True
    edges = []
    for i in range(n):
        for j in range(n):
            if below[i][j] and not any(below[i][k] and below[k][j]
                                       for k in range(n)):
                edges.append((i, j))
    return tuple(edges)

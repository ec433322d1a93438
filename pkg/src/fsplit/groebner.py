"""Groebner bases, normal forms and ideal arithmetic.

Reduction keeps the working polynomial in a dict plus a lazy max-heap
of its monomials, so each step touches only the terms it rewrites.
Buchberger's algorithm uses the normal selection strategy with
Gebauer-Moller pair elimination.  Reduced bases are cached on the
ideal, one per monomial order.
"""

import heapq

from .errors import RingMismatchError
from .poly import (
    Polynomial, monomial_div, monomial_divides, monomial_lcm, monomial_mul,
    one, rename, zero,
)
from .ring import Block, Grevlex, Lex, Ring


def _reduce(f, pre, order):
    """Reduce f against preprocessed (lt, inverse, terms) triples."""
    p = f.ring.p
    work = dict(f.terms)
    heap = [(order.nkey(m), m) for m in work]
    heapq.heapify(heap)
    remainder = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, 0) % p
        if not c:
            continue
        for ltm, inv, terms in pre:
            shift = monomial_div(m, ltm)
            if shift is None:
                continue
            factor = c * inv % p
            for mt, ct in terms.items():
                if mt == ltm:
                    continue
                t = monomial_mul(mt, shift)
                if t in work:
                    work[t] -= factor * ct
                else:
                    work[t] = -factor * ct
                    heapq.heappush(heap, (order.nkey(t), t))
            break
        else:
            remainder[m] = c
    return Polynomial(f.ring, remainder)


def _preprocess(basis, order, p):
    pre = []
    for g in basis:
        m, c = g.lt(order)
        pre.append((m, pow(c, p - 2, p), g.terms))
    return pre


def normal_form(f, basis, order=None):
    """Fully reduce f modulo a list of polynomials."""
    if order is None:
        order = f.ring.order
    basis = [g for g in basis if g]
    if not basis or f.is_zero():
        return f
    return _reduce(f, _preprocess(basis, order, f.ring.p), order)


def divexact(f, g):
    """Return f divided by g when the division is exact, else None."""
    assert not g.is_zero(), "division by zero polynomial"
    if f.is_zero():
        return f
    ring = f.ring
    order = ring.order
    p = ring.p
    mg, cg = g.lt(order)
    inv = pow(cg, p - 2, p)
    work = dict(f.terms)
    quot = {}
    while work:
        m = max(work, key=order.key)
        c = work.pop(m)
        d = monomial_div(m, mg)
        if d is None:
            return None
        q = c * inv % p
        quot[d] = q
        for mt, ct in g.terms.items():
            if mt == mg:
                continue
            t = monomial_mul(mt, d)
            v = (work.get(t, 0) - q * ct) % p
            if v:
                work[t] = v
            elif t in work:
                del work[t]
    return Polynomial(ring, quot)


def spoly(f, g, order):
    """Return the S-polynomial of f and g."""
    p = f.ring.p
    mf, cf = f.lt(order)
    mg, cg = g.lt(order)
    gam = monomial_lcm(mf, mg)
    tf = monomial_div(gam, mf)
    tg = monomial_div(gam, mg)
    raw = {}
    scale = pow(cf, p - 2, p)
    for m, c in f.terms.items():
        t = monomial_mul(m, tf)
        raw[t] = raw.get(t, 0) + c * scale
    scale = pow(cg, p - 2, p)
    for m, c in g.terms.items():
        t = monomial_mul(m, tg)
        raw[t] = raw.get(t, 0) - c * scale
    terms = {}
    for m, c in raw.items():
        c %= p
        if c:
            terms[m] = c
    return Polynomial(f.ring, terms)


def _update(G, lmG, P, f, order):
    """Add f to the basis, pruning pairs with the Gebauer-Moller criteria."""
    lmf = f.lt(order)[0]
    j = len(G)

    kept = []
    for (a, b) in P:
        gam = monomial_lcm(lmG[a], lmG[b])
        if (monomial_divides(lmf, gam) and monomial_lcm(lmG[a], lmf) != gam
                and monomial_lcm(lmG[b], lmf) != gam):
            continue
        kept.append((a, b))

    groups = {}
    for i in range(j):
        groups.setdefault(monomial_lcm(lmG[i], lmf), []).append(i)
    minimal = []
    for gam in sorted(groups, key=lambda m: (sum(m), m)):
        if any(monomial_divides(m, gam) for m in minimal):
            continue
        minimal.append(gam)
        if any(monomial_mul(lmG[i], lmf) == gam for i in groups[gam]):
            continue
        kept.append((groups[gam][0], j))

    G.append(f)
    lmG.append(lmf)
    return kept


def buchberger(gens, order):
    """Compute the reduced Groebner basis of the given generators.

    Pairs are chosen smallest lcm first, and the Gebauer-Moller
    criteria discard pairs whose S-polynomials are known to reduce to
    zero.  The result is monic, interreduced and sorted by decreasing
    leading monomial.
    """
    gens = [g for g in gens if g]
    if not gens:
        return []
    ring = gens[0].ring
    p = ring.p
    gens = sorted(gens, key=lambda g: (order.key(g.lt(order)[0]),
                                       sorted(g.terms.items())))
    G, lmG, P = [], [], []
    pre = []
    for f in gens:
        r = _reduce(f, pre, order) if pre else f
        if r:
            r = r.monic(order)
            P = _update(G, lmG, P, r, order)
            pre.append((lmG[-1], 1, r.terms))
    while P:
        best = min(P, key=lambda ab: order.key(monomial_lcm(lmG[ab[0]], lmG[ab[1]])))
        P.remove(best)
        s = spoly(G[best[0]], G[best[1]], order)
        r = _reduce(s, pre, order)
        if r:
            r = r.monic(order)
            P = _update(G, lmG, P, r, order)
            pre.append((lmG[-1], 1, r.terms))
    return _autoreduce(G, order)


def _autoreduce(G, order):
    """Minimalize and tail-reduce a Groebner basis."""
    G = sorted(G, key=lambda g: order.key(g.lt(order)[0]))
    minimal = []
    for g in G:
        m = g.lt(order)[0]
        if not any(monomial_divides(h.lt(order)[0], m) for h in minimal):
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = normal_form(g, others, order)
        out.append(r.monic(order))
    return sorted(out, key=lambda g: order.key(g.lt(order)[0]), reverse=True)


def _fresh_name(ring, base):
    name = base
    k = 0
    while name in ring.index:
        k += 1
        name = "%s%d" % (base, k)
    return name


class Ideal:
    """Ideal of a polynomial ring, with per-order Groebner basis caching."""

    __slots__ = ("ring", "gens", "_gb", "_key")

    def __init__(self, ring, gens):
        gens = tuple(gens)
        for g in gens:
            if g.ring != ring:
                raise RingMismatchError("generator outside the ring")
        self.ring = ring
        self.gens = tuple(g for g in gens if g)
        self._gb = {}
        self._key = None

    def groebner(self, order=None):
        """Return the reduced Groebner basis under the order as a tuple."""
        if order is None:
            order = self.ring.order
        try:
            return self._gb[order]
        except KeyError:
            gb = tuple(buchberger(list(self.gens), order))
            self._gb[order] = gb
            return gb

    def canonical_key(self):
        """Return a string naming the ideal independently of presentation."""
        if self._key is None:
            shadow = self.ring.with_order(Lex())
            parts = [str(Polynomial(shadow, g.terms)) for g in self.groebner(Lex())]
            self._key = ",".join(parts)
        return self._key

    def is_zero(self):
        """Return True for the zero ideal."""
        return not self.gens

    def is_unit(self):
        """Return True when the ideal is the whole ring."""
        gb = self.groebner()
        return len(gb) == 1 and gb[0].degree() == 0

    def reduce(self, f, order=None):
        """Return the normal form of f modulo the ideal."""
        if order is None:
            order = self.ring.order
        return normal_form(f, list(self.groebner(order)), order)

    def contains(self, f):
        """Membership test for a single polynomial."""
        return self.reduce(f).is_zero()

    def contains_ideal(self, other):
        """Return True when every generator of the other ideal lies here."""
        assert self.ring == other.ring
        return all(self.contains(g) for g in other.gens)

    def add(self, other):
        """Return the ideal sum."""
        assert self.ring == other.ring
        return Ideal(self.ring, self.gens + other.gens)

    def mul(self, other):
        """Return the ideal product."""
        assert self.ring == other.ring
        gens = [f * g for f in self.gens for g in other.gens]
        return Ideal(self.ring, gens)

    def intersect(self, other):
        """Return the ideal intersection, by eliminating a tag variable."""
        assert self.ring == other.ring
        if self.is_zero() or other.is_zero():
            return Ideal(self.ring, ())
        ring = self.ring
        tag = _fresh_name(ring, "_t")
        wide = ring.extend_front((tag,), Block((1, Grevlex()), (ring.nvars, Grevlex())))
        shift = tuple(range(1, ring.nvars + 1))
        t = Polynomial(wide, {(1,) + (0,) * ring.nvars: 1})
        gens = [t * rename(g, wide, shift) for g in self.gens]
        gens += [(one(wide) - t) * rename(g, wide, shift) for g in other.gens]
        back = tuple(range(ring.nvars))
        out = []
        for g in buchberger(gens, wide.order):
            if g.degree_in(0) <= 0:
                out.append(rename(_drop_front(g, 1), ring, back))
        return Ideal(ring, out)

    def colon(self, other):
        """Return the ideal quotient (self : other)."""
        assert self.ring == other.ring
        gens = [g for g in other.gens if g]
        if not gens:
            return Ideal(self.ring, (one(self.ring),))
        result = None
        for g in gens:
            piece = []
            for w in self.intersect(Ideal(self.ring, (g,))).groebner():
                q = divexact(w, g)
                assert q is not None, "intersection element not divisible"
                piece.append(q)
            part = Ideal(self.ring, piece)
            result = part if result is None else result.intersect(part)
        return result

    def saturate(self, other):
        """Return the saturation of self by other, iterating quotients."""
        current = self
        while True:
            step = current.colon(other)
            if step.groebner() == current.groebner():
                return current
            current = step

    def eliminate(self, names):
        """Return the elimination ideal in the ring without the named variables.

        The result lives in a fresh ring on the remaining variables, in
        their original relative order, under grevlex.
        """
        names = set(names)
        assert names <= set(self.ring.variables), "unknown variable to eliminate"
        ring = self.ring
        front = [v for v in ring.variables if v in names]
        back = [v for v in ring.variables if v not in names]
        assert back, "cannot eliminate every variable"
        k = len(front)
        perm = Ring(ring.p, tuple(front + back),
                    Block((k, Grevlex()), (len(back), Grevlex())) if k else Grevlex())
        positions = tuple(perm.index[v] for v in ring.variables)
        gens = [rename(g, perm, positions) for g in self.gens]
        sub = Ring(ring.p, tuple(back), Grevlex())
        out = []
        for g in buchberger(gens, perm.order):
            if all(m[i] == 0 for m in g.terms for i in range(k)):
                out.append(rename(_drop_front(g, k), sub, tuple(range(len(back)))))
        return Ideal(sub, out)

    def independent_set(self):
        """Return a maximal subset of variables independent modulo the ideal.

        Returns variable indices, or None for the unit ideal.  The set
        realizes the dimension of the quotient ring.  A graded basis is
        required for the leading term criterion, so grevlex is forced.
        """
        n = self.ring.nvars
        assert n <= 16, "dimension search too large"
        grevlex = Grevlex()
        masks = []
        for g in self.groebner(grevlex):
            m = g.lt(grevlex)[0]
            masks.append(sum(1 << i for i in range(n) if m[i]))
        best = None
        best_size = -1
        for s in range(1 << n):
            size = s.bit_count()
            if size <= best_size:
                continue
            if all(mask & ~s for mask in masks):
                best = s
                best_size = size
        if best is None:
            return None
        return tuple(i for i in range(n) if best & (1 << i))

    def dimension(self):
        """Return the Krull dimension of the quotient, -1 for the unit ideal."""
        got = self.independent_set()
        return -1 if got is None else len(got)

    def __eq__(self, other):
        return (isinstance(other, Ideal) and self.ring == other.ring
                and self.groebner() == other.groebner())

    def __hash__(self):
        return hash((self.ring, self.groebner()))

    def __repr__(self):
        return "Ideal(%s)" % (", ".join(str(g) for g in self.gens) or "0")


def _drop_front(g, k):
    """Forget the first k variables of a polynomial that does not use them."""
    terms = {m[k:]: c for m, c in g.terms.items()}
    narrow = Ring(g.ring.p, g.ring.variables[k:], Grevlex())
    return Polynomial(narrow, terms)


def move_ideal(I, ring, positions):
    """Transplant an ideal into another ring along a variable embedding."""
    return Ideal(ring, [rename(g, ring, positions) for g in I.gens])

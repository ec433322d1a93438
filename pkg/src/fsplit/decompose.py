"""Minimal primes, radicals and point enumeration.

The decomposition runs a worklist of candidate ideals.  Each candidate
is split by factoring its reduced basis generators, then, failing
that, handled by dimension: dimension zero passes through a univariate
radical step and splits along the fixed space of the Frobenius map on
the finite quotient; positive dimension picks a maximal independent
set of variables, splits along eliminants of the dependent variables,
saturates by the product of leading coefficients, and certifies the
survivors by comparing field degrees over the rational function field
of the independent block.  Every produced component carries a
certified flag; an uncertified component still contains the input
ideal and covers its share of the vanishing set, but might decompose
further.
"""

import itertools

from .errors import BudgetError, EngineError
from .factor import (_content_split, _from_univariate, _u_mul, _u_squarefree,
                     factor, factor_univariate, polynomial_gcd)  # noqa: F401
from .groebner import Ideal, buchberger
from .poly import Polynomial, monomial, one, rename, substitute, variable
from .ring import Block, ExtField, Grevlex, Ring

POINT_BUDGET = 10 ** 7
TASK_BUDGET = 10000
COMBO_BUDGET = 64


class PrimeComponent:
    """A component of a decomposition, with its primality certificate."""

    __slots__ = ("ideal", "certified")

    def __init__(self, ideal, certified):
        self.ideal = ideal
        self.certified = certified

    def __repr__(self):
        tag = "certified" if self.certified else "uncertified"
        return "PrimeComponent(%r, %s)" % (self.ideal, tag)


def minimal_primes(I):
    """Return the minimal primes over an ideal as certified components.

    The unit ideal has no primes over it and gives an empty tuple; the
    zero ideal is its own minimal prime.  Components come back sorted
    by their canonical keys.
    """
    if I.is_zero():
        return (PrimeComponent(I, True),)
    stack = [I]
    visited = set()
    found = {}
    while stack:
        if len(visited) > TASK_BUDGET:
            raise EngineError("decomposition exceeded its task budget")
        J = stack.pop()
        key = J.canonical_key()
        if key in visited:
            continue
        visited.add(key)
        _process(J, stack, found)
    comps = list(found.values())
    keep = []
    for c in comps:
        dominated = False
        for d in comps:
            if c is not d and c.ideal.contains_ideal(d.ideal) and c.ideal != d.ideal:
                dominated = True
                break
        if not dominated:
            keep.append(c)
    keep.sort(key=lambda c: c.ideal.canonical_key())
    return tuple(keep)


def radical(I):
    """Return the radical as the intersection of the minimal primes."""
    comps = minimal_primes(I)
    if not comps:
        return Ideal(I.ring, (one(I.ring),))
    out = comps[0].ideal
    for c in comps[1:]:
        out = out.intersect(c.ideal)
    return out


def _emit(found, J, certified):
    key = J.canonical_key()
    old = found.get(key)
    if old is None or (certified and not old.certified):
        trimmed = Ideal(J.ring, J.groebner())
        trimmed._gb.update(J._gb)
        trimmed._key = J._key
        found[key] = PrimeComponent(trimmed, certified)


def _process(J, stack, found):
    gb = J.groebner()
    if J.is_unit():
        return
    assert gb, "worklist ideals are nonzero"
    for g in gb:
        _, factors, _ = factor(g)
        if len(factors) > 1 or factors[0][1] > 1:
            for q, _ in factors:
                stack.append(J.add(Ideal(J.ring, (q,))))
            return
    if all(g.degree() == 1 for g in gb):
        _emit(found, J, True)
        return
    if J.dimension() == 0:
        _zero_dimensional(J, stack, found)
    else:
        _positive_dimensional(J, stack, found)


def _standard_monomials(J):
    """Enumerate the monomials outside the leading term ideal."""
    ring = J.ring
    order = Grevlex()
    lts = [g.lt(order)[0] for g in J.groebner(order)]
    n = ring.nvars
    bounds = []
    for i in range(n):
        pure = [m[i] for m in lts if all(m[j] == 0 for j in range(n) if j != i)]
        assert pure, "leading terms do not witness dimension zero"
        bounds.append(min(pure))
    total = 1
    for b in bounds:
        total *= max(b, 1)
    assert total <= 100000, "quotient basis too large"
    out = []
    for m in itertools.product(*[range(b) for b in bounds]):
        if not any(all(x >= y for x, y in zip(m, lt)) for lt in lts):
            out.append(m)
    out.sort()
    return out


def _nf_vector(J, f, position):
    vec = [0] * len(position)
    for m, c in J.reduce(f).terms.items():
        vec[position[m]] = c
    return vec


def _variable_minimal_poly(J, i, basis, position):
    """Minimal polynomial coefficients of a variable modulo the ideal."""
    p = J.ring.p
    rows = []
    current = one(J.ring)
    x = variable(J.ring, J.ring.variables[i])
    power = 0
    while True:
        vec = _nf_vector(J, current, position)
        combo = [0] * (power + 1)
        combo[power] = 1
        for pivot, row, cmb in rows:
            c = vec[pivot]
            if c:
                vec = [(a - c * b) % p for a, b in zip(vec, row)]
                combo = [(a - c * (cmb[k] if k < len(cmb) else 0)) % p
                         for k, a in enumerate(combo)]
        lead = next((k for k, a in enumerate(vec) if a), None)
        if lead is None:
            return tuple(combo)
        inv = pow(vec[lead], p - 2, p)
        vec = [a * inv % p for a in vec]
        combo = [a * inv % p for a in combo]
        rows.append((lead, vec, combo))
        assert power <= len(basis), "minimal polynomial search overran the basis"
        power += 1
        current = J.reduce(current * x)


def _kernel_basis(M, p):
    """Return a basis of the right kernel of a square matrix over F_p."""
    n = len(M)
    rows = [list(r) for r in M]
    pivots = {}
    r = 0
    for col in range(n):
        src = next((k for k in range(r, n) if rows[k][col] % p), None)
        if src is None:
            continue
        rows[r], rows[src] = rows[src], rows[r]
        inv = pow(rows[r][col] % p, p - 2, p)
        rows[r] = [a * inv % p for a in rows[r]]
        for k in range(n):
            if k != r and rows[k][col] % p:
                c = rows[k][col] % p
                rows[k] = [(a - c * b) % p for a, b in zip(rows[k], rows[r])]
        pivots[col] = r
        r += 1
    out = []
    for col in range(n):
        if col in pivots:
            continue
        vec = [0] * n
        vec[col] = 1
        for pc, pr in pivots.items():
            vec[pc] = (-rows[pr][col]) % p
        out.append(vec)
    return out


def _zero_dimensional(J, stack, found):
    """Split a dimension zero ideal into maximal ideals."""
    ring = J.ring
    p = ring.p
    basis = _standard_monomials(J)
    position = {m: k for k, m in enumerate(basis)}
    sharpened = []
    for i in range(ring.nvars):
        mu = _variable_minimal_poly(J, i, basis, position)
        parts = _u_squarefree(mu, p)
        sqf = (1,)
        for q in sorted(parts):
            sqf = _u_mul(sqf, q, p)
        if len(sqf) < len(mu):
            sharpened.append(_from_univariate(ring, i, sqf))
    if sharpened:
        stack.append(J.add(Ideal(ring, sharpened)))
        return
    frob = []
    for m in basis:
        lifted = monomial(ring, tuple(x * p for x in m))
        frob.append(_nf_vector(J, lifted, position))
    n = len(basis)
    M = [[(frob[j][i] - (1 if i == j else 0)) % p for j in range(n)]
         for i in range(n)]
    kernel = _kernel_basis(M, p)
    assert kernel, "Frobenius fixed space lost the constants"
    if len(kernel) == 1:
        _emit(found, J, True)
        return
    unit_pos = position[(0,) * ring.nvars]
    witness = next(v for v in kernel
                   if any(c and k != unit_pos for k, c in enumerate(v)))
    g = Polynomial(ring, {basis[k]: c for k, c in enumerate(witness) if c})
    for a in range(p):
        stack.append(J.add(Ideal(ring, (g - a,))))


def _block_info(J, U):
    """Leading data of J over the function field of the independent block."""
    ring = J.ring
    deps = [i for i in range(ring.nvars) if i not in U]
    k = len(deps)
    names = tuple([ring.variables[i] for i in deps]
                  + [ring.variables[i] for i in U])
    perm = Ring(ring.p, names, Block((k, Grevlex()), (len(U), Grevlex())))
    positions = tuple(perm.index[v] for v in ring.variables)
    moved = [rename(g, perm, positions) for g in J.gens]
    gb = buchberger(moved, perm.order)
    back = tuple(ring.index[v] for v in perm.variables)
    dep_lts = []
    lead_coeffs = []
    for g in gb:
        m = g.lt(perm.order)[0]
        dpart = m[:k]
        coeff = Polynomial(perm, {(0,) * k + mm[k:]: c
                                  for mm, c in g.terms.items()
                                  if mm[:k] == dpart})
        dep_lts.append(dpart)
        lead_coeffs.append(rename(coeff, ring, back))
    return deps, dep_lts, lead_coeffs


def _dependent_standard_count(dep_lts):
    k = len(dep_lts[0]) if dep_lts else 0
    if k == 0:
        return 1
    bounds = []
    for i in range(k):
        pure = [m[i] for m in dep_lts
                if m[i] and all(m[j] == 0 for j in range(k) if j != i)]
        assert pure, "dependent block is not finite over the base"
        bounds.append(min(pure))
    total = 1
    for b in bounds:
        total *= max(b, 1)
    assert total <= 10000, "dependent staircase too large"
    count = 0
    for m in itertools.product(*[range(b) for b in bounds]):
        if not any(all(x >= y for x, y in zip(m, lt)) for lt in dep_lts):
            count += 1
    return count


def _try_branch(J, stack, gens):
    """Push the cover J + (g) for each g, unless some branch is vacuous."""
    if not gens:
        return False
    if any(J.contains(g) for g in gens):
        return False
    for g in gens:
        stack.append(J.add(Ideal(J.ring, (g,))))
    return True


def _eliminant_data(J, keep_names, target_name):
    """Smallest relation for one variable over the independent block.

    Eliminates everything outside keep_names from J, then splits the
    relation of least degree in the target variable into content and
    primitive part.  Returns (content, primitive, factors, certified,
    degree, positions) with polynomial data living in the small ring.
    """
    drop = [v for v in J.ring.variables if v not in keep_names]
    E = J.eliminate(drop)
    assert E.gens, "target variable is not algebraic over the block"
    sub = E.ring
    vi = sub.index[target_name]
    f = min(E.groebner(), key=lambda g: (g.degree_in(vi), str(g)))
    cont, pp = _content_split(f, vi)
    _, factors, certified = factor(pp)
    positions = tuple(J.ring.index[v] for v in sub.variables)
    return cont, pp, factors, certified, pp.degree_in(vi), positions


def _positive_dimensional(J, stack, found):
    """Split or certify an ideal of positive dimension."""
    ring = J.ring
    p = ring.p
    U = J.independent_set()
    u_names = [ring.variables[i] for i in U]
    deps, dep_lts, lead_coeffs = _block_info(J, U)
    elim_degrees = []
    elim_certified = True
    for v in deps:
        vname = ring.variables[v]
        cont, pp, factors, certified, deg, positions = _eliminant_data(
            J, set(u_names) | {vname}, vname)
        gens = []
        if cont.degree() > 0:
            gens.append(rename(cont, ring, positions))
        if len(factors) > 1 or factors[0][1] > 1 or gens:
            gens.extend(rename(q, ring, positions) for q, _ in factors)
            if _try_branch(J, stack, gens):
                return
        elim_degrees.append(deg)
        elim_certified = elim_certified and certified
    h = one(ring)
    seen = set()
    for c in lead_coeffs:
        c = c.monic()
        if c.degree() > 0 and c not in seen:
            seen.add(c)
            h = h * c
    if h.degree() > 0:
        sat = J.saturate(Ideal(ring, (h,)))
        if sat != J:
            stack.append(sat)
            stack.append(J.add(Ideal(ring, (h,))))
            return
    D = _dependent_standard_count(dep_lts)
    certified = elim_certified and (D == 1 or any(d == D for d in elim_degrees))
    if not certified:
        certified = _combination_stage(J, stack, deps, u_names, D)
        if certified is None:
            return
    _emit(found, J, certified)


def _combination_stage(J, stack, deps, u_names, D):
    """Probe F_p-combinations of the dependent variables.

    A combination whose minimal polynomial over the block factors
    splits the ideal (returning None after pushing the branches); one
    with an irreducible minimal polynomial of degree D certifies
    primality.  Returns the certification verdict otherwise.
    """
    ring = J.ring
    p = ring.p
    tag = "_s"
    while tag in ring.index:
        tag += "0"
    wide = ring.extend_front((tag,), Grevlex())
    lift = tuple(range(1, ring.nvars + 1))
    tried = 0
    for coeffs in itertools.product(range(p), repeat=len(deps)):
        if not any(coeffs) or next(c for c in coeffs if c) != 1:
            continue
        if tried >= COMBO_BUDGET:
            break
        tried += 1
        w = sum((coeffs[k] * variable(ring, ring.variables[v])
                 for k, v in enumerate(deps)), Polynomial(ring, {}))
        s = variable(wide, tag)
        lifted = [rename(g, wide, lift) for g in J.gens]
        lifted.append(s - rename(w, wide, lift))
        K = Ideal(wide, lifted)
        cont, pp, factors, certified, deg, positions = _eliminant_data(
            K, set(u_names) | {tag}, tag)
        images = []
        for name in pp.ring.variables:
            images.append(w if name == tag else variable(ring, name))
        gens = []
        if cont.degree() > 0:
            gens.append(substitute(cont, ring, images))
        if len(factors) > 1 or factors[0][1] > 1 or gens:
            gens.extend(substitute(q, ring, images) for q, _ in factors)
            if _try_branch(J, stack, gens):
                return None
        if certified and deg == D:
            return True
    return False


def variety_points(I, extension=1):
    """List the common zeros over F_{p^extension}, coded coordinatewise.

    Points are tuples of integer codes as used by ExtField.  Raises
    BudgetError when the search space would be larger than the budget.
    """
    ring = I.ring
    field = ExtField(ring.p, extension)
    total = field.size ** ring.nvars
    if total > POINT_BUDGET:
        raise BudgetError(
            "point enumeration of size %d exceeds the budget" % total)
    compiled = [sorted(g.terms.items()) for g in I.gens]
    maxdeg = 0
    for terms in compiled:
        for m, _ in terms:
            maxdeg = max(maxdeg, max(m))
    powers = {x: [1] * (maxdeg + 1) for x in field.elements()}
    for x, row in powers.items():
        for e in range(1, maxdeg + 1):
            row[e] = field.mul(row[e - 1], x)
    points = []
    for point in itertools.product(field.elements(), repeat=ring.nvars):
        good = True
        for terms in compiled:
            acc = 0
            for m, c in terms:
                v = c % ring.p
                for i, e in enumerate(m):
                    if e:
                        v = field.mul(v, powers[point[i]][e])
                acc = field.add(acc, v)
            if acc:
                good = False
                break
        if good:
            points.append(point)
    return points

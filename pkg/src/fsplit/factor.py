"""Polynomial gcds and factorization over F_p.

Univariate factorization is the classical chain: squarefree split in
characteristic p, distinct degree split, then equal degree split with
randomized gcds from a fixed seed.  Multivariate polynomials are
reduced toward the univariate case by monomial content, p-th roots,
content versus a chosen variable, and derivative gcds; what remains is
attacked by trial division with linear candidates in the most shallow
variable.  Results carry a certified flag that is True only when every
step was complete, so an uncertified factor may still be reducible.

Gcds of genuinely multivariate pairs go through the least common
multiple, read off as the single generator of the intersection of the
two principal ideals.
"""

import random

from .groebner import Ideal, divexact
from .poly import Polynomial, monomial, one


def _u_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def _u_monic(a, p):
    if not a or a[-1] == 1:
        return tuple(a)
    inv = pow(a[-1], p - 2, p)
    return tuple(c * inv % p for c in a)


def _u_add(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _u_trim(out)


def _u_sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _u_trim(out)


def _u_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                out[i + j] += c * d
    return _u_trim([c % p for c in out])


def _u_divmod(a, b, p):
    assert b, "univariate division by zero"
    inv = pow(b[-1], p - 2, p)
    rem = list(a)
    quo = [0] * max(len(a) - len(b) + 1, 0)
    for i in range(len(a) - len(b), -1, -1):
        c = rem[i + len(b) - 1] % p
        if c:
            q = c * inv % p
            quo[i] = q
            for j, d in enumerate(b):
                rem[i + j] = (rem[i + j] - q * d) % p
    return _u_trim(quo), _u_trim(rem)


def _u_div(a, b, p):
    q, r = _u_divmod(a, b, p)
    assert not r, "univariate division was not exact"
    return q


def _u_mod(a, b, p):
    return _u_divmod(a, b, p)[1]


def _u_gcd(a, b, p):
    a, b = _u_trim(a), _u_trim(b)
    while b:
        a, b = b, _u_mod(a, b, p)
    return _u_monic(a, p)


def _u_powmod(a, n, mod, p):
    out = (1,)
    a = _u_mod(a, mod, p)
    while n:
        if n & 1:
            out = _u_mod(_u_mul(out, a, p), mod, p)
        n >>= 1
        if n:
            a = _u_mod(_u_mul(a, a, p), mod, p)
    return out


def _u_deriv(a, p):
    return _u_trim([i * c % p for i, c in enumerate(a)][1:])


def _u_pth_root(a, p):
    assert all(c == 0 for i, c in enumerate(a) if i % p), "not a p-th power"
    return tuple(a[i] for i in range(0, len(a), p))


def _u_squarefree(a, p):
    """Split a monic polynomial into squarefree parts with multiplicities."""
    out = {}

    def walk(f, scale):
        if len(f) <= 1:
            return
        df = _u_deriv(f, p)
        if not df:
            walk(_u_pth_root(f, p), scale * p)
            return
        c = _u_gcd(f, df, p)
        w = _u_div(f, c, p)
        i = 1
        while len(w) > 1:
            y = _u_gcd(w, c, p)
            fac = _u_div(w, y, p)
            if len(fac) > 1:
                out[fac] = out.get(fac, 0) + scale * i
            w = y
            c = _u_div(c, y, p)
            i += 1
        if len(c) > 1:
            walk(c, scale)

    walk(_u_monic(a, p), 1)
    return out


def _u_distinct_degree(g, p):
    """Split a squarefree monic polynomial by factor degree."""
    out = []
    h = (0, 1)
    k = 0
    while len(g) - 1 >= 2 * (k + 1):
        k += 1
        h = _u_powmod(h, p, g, p)
        d = _u_gcd(_u_sub(h, (0, 1), p), g, p)
        if len(d) > 1:
            out.append((d, k))
            g = _u_div(g, d, p)
            h = _u_mod(h, g, p)
    if len(g) > 1:
        out.append((g, len(g) - 1))
    return out


def _u_equal_degree(g, k, p, rng):
    """Split a product of degree k irreducibles into its factors."""
    if len(g) - 1 == k:
        return [g]
    while True:
        a = _u_trim([rng.randrange(p) for _ in range(len(g) - 1)])
        if len(a) <= 1:
            continue
        if p == 2:
            t = a
            acc = a
            for _ in range(k - 1):
                acc = _u_mod(_u_mul(acc, acc, p), g, p)
                t = _u_add(t, acc, p)
            d = _u_gcd(t, g, p)
        else:
            d = _u_gcd(a, g, p)
            if len(d) <= 1:
                b = _u_powmod(a, (p ** k - 1) // 2, g, p)
                d = _u_gcd(_u_sub(b, (1,), p), g, p)
        if 1 < len(d) < len(g):
            return (_u_equal_degree(d, k, p, rng)
                    + _u_equal_degree(_u_div(g, d, p), k, p, rng))


def _u_factor(a, p):
    """Factor univariate coefficients into monic irreducibles."""
    a = _u_trim(a)
    assert a, "cannot factor the zero polynomial"
    unit = a[-1]
    a = _u_monic(a, p)
    rng = random.Random(0x5eed)
    out = {}
    for sqf, mult in sorted(_u_squarefree(a, p).items()):
        for prod, k in _u_distinct_degree(sqf, p):
            for q in _u_equal_degree(prod, k, p, rng):
                out[q] = out.get(q, 0) + mult
    return unit, out


def _as_univariate(f):
    """Return (index, coeffs) when f uses at most one variable, else None."""
    used = [i for i in range(f.ring.nvars) if f.degree_in(i) > 0]
    if len(used) > 1:
        return None
    i = used[0] if used else 0
    coeffs = [0] * (f.degree() + 1)
    for m, c in f.terms.items():
        coeffs[m[i]] = c
    return i, tuple(coeffs)


def _from_univariate(ring, i, coeffs):
    terms = {}
    for j, c in enumerate(coeffs):
        if c:
            m = [0] * ring.nvars
            m[i] = j
            terms[tuple(m)] = c
    return Polynomial(ring, terms)


def factor_univariate(f):
    """Factor a polynomial in a single variable.

    Returns (unit, factors, True) where factors is a tuple of monic
    (irreducible, multiplicity) pairs.  The univariate chain is always
    complete, hence the fixed certificate.
    """
    uni = _as_univariate(f)
    assert uni is not None, "polynomial uses more than one variable"
    i, coeffs = uni
    unit, raw = _u_factor(coeffs, f.ring.p)
    factors = [(_from_univariate(f.ring, i, q), m) for q, m in raw.items()]
    factors.sort(key=lambda fm: (fm[0].degree(), str(fm[0])))
    return unit, tuple(factors), True


def polynomial_gcd(f, g):
    """Return the monic gcd of two polynomials."""
    if f.is_zero():
        return g.monic() if g else g
    if g.is_zero():
        return f.monic()
    if f.degree() == 0 or g.degree() == 0:
        return one(f.ring)
    fu, gu = _as_univariate(f), _as_univariate(g)
    if fu is not None and gu is not None and fu[0] == gu[0]:
        p = f.ring.p
        return _from_univariate(f.ring, fu[0], _u_gcd(fu[1], gu[1], p))
    meet = Ideal(f.ring, (f,)).intersect(Ideal(g.ring, (g,)))
    basis = meet.groebner()
    assert len(basis) == 1, "intersection of principal ideals not principal"
    q = divexact(f * g, basis[0])
    assert q is not None, "product not divisible by the least common multiple"
    return q.monic()


def _used_vars(f):
    return [i for i in range(f.ring.nvars) if f.degree_in(i) > 0]


def _coefficients_in(f, i):
    """Return the coefficients of f as a polynomial in variable i."""
    out = {}
    for m, c in f.terms.items():
        j = m[i]
        mm = m[:i] + (0,) + m[i + 1:]
        out.setdefault(j, {})[mm] = c
    ring = f.ring
    return {j: Polynomial(ring, terms) for j, terms in out.items()}


def _content_split(f, i):
    """Split f as content times primitive part with respect to variable i."""
    coeffs = _coefficients_in(f, i)
    cont = None
    for j in sorted(coeffs):
        cont = coeffs[j] if cont is None else polynomial_gcd(cont, coeffs[j])
        if cont.degree() == 0:
            break
    if cont.degree() == 0:
        return one(f.ring), f
    pp = divexact(f, cont)
    assert pp is not None, "content does not divide"
    return cont, pp


def _pth_root(f):
    p = f.ring.p
    terms = {}
    for m, c in f.terms.items():
        assert all(x % p == 0 for x in m), "not a p-th power"
        terms[tuple(x // p for x in m)] = c
    return Polynomial(f.ring, terms)


def _divisors(f):
    """Enumerate monic divisors of f, with a completeness flag."""
    if f.degree() == 0:
        return [one(f.ring)], True
    _, factors, certified = factor(f)
    divs = [one(f.ring)]
    for q, mult in factors:
        grown = []
        for d in divs:
            power = d
            for _ in range(mult):
                power = power * q
                grown.append(power)
        divs.extend(grown)
    return divs, certified


def _linear_trial(pp, i):
    """Look for a factor linear in variable i by trial division.

    Candidate leads divide the top coefficient and candidate tails
    divide the bottom one.  Returns (factor, quotient, certified) with
    factor None on failure; certified tells whether the failed search
    was exhaustive for linear factors.
    """
    coeffs = _coefficients_in(pp, i)
    top = coeffs[max(coeffs)]
    bottom = coeffs.get(0)
    assert bottom is not None and not bottom.is_zero()
    tops, top_ok = _divisors(top)
    bottoms, bottom_ok = _divisors(bottom)
    v = monomial(pp.ring, {i: 1})
    p = pp.ring.p
    for a in tops:
        av = a * v
        for b in bottoms:
            for scale in range(1, p):
                candidate = av + b * scale
                q = divexact(pp, candidate)
                if q is not None:
                    return candidate, q, True
    return None, None, top_ok and bottom_ok


def factor(f):
    """Factor into monic irreducibles with a completeness certificate.

    Returns (unit, factors, certified): factors is a sorted tuple of
    (polynomial, multiplicity) pairs whose product times the unit gives
    back f.  When certified is False, some factor of large degree in
    every variable resisted the search and may still split.
    """
    assert not f.is_zero(), "cannot factor the zero polynomial"
    p = f.ring.p
    unit = [1]
    found = {}
    certified = [True]

    def record(q, mult):
        c = q.lt()[1]
        if c != 1:
            unit[0] = unit[0] * pow(c, mult, p) % p
            q = q.monic()
        found[q] = found.get(q, 0) + mult

    def walk(g, mult):
        if g.degree() == 0:
            unit[0] = unit[0] * pow(g.coefficient((0,) * g.ring.nvars), mult, p) % p
            return
        shifts = {i: min(m[i] for m in g.terms) for i in _used_vars(g)}
        if any(shifts.values()):
            lowered = {tuple(x - shifts[i] if i in shifts else x
                             for i, x in enumerate(m)): c
                       for m, c in g.terms.items()}
            for i, s in shifts.items():
                if s:
                    record(monomial(g.ring, {i: 1}), mult * s)
            walk(Polynomial(g.ring, lowered), mult)
            return
        used = _used_vars(g)
        if len(used) == 1:
            u, factors, _ = factor_univariate(g)
            unit[0] = unit[0] * pow(u, mult, p) % p
            for q, m in factors:
                record(q, mult * m)
            return
        partials = [i for i in used if g.derivative(i)]
        if not partials:
            walk(_pth_root(g), mult * p)
            return
        i = min(partials, key=lambda j: (g.degree_in(j), j))
        cont, pp = _content_split(g, i)
        if cont.degree() > 0:
            walk(cont, mult)
        repeated = polynomial_gcd(pp, pp.derivative(i))
        if repeated.degree() > 0:
            walk(repeated, mult)
            walk(divexact(pp, repeated), mult)
            return
        d = pp.degree_in(i)
        if d == 1:
            record(pp, mult)
            return
        linear, quotient, exhaustive = _linear_trial(pp, i)
        if linear is not None:
            record(linear, mult)
            walk(quotient, mult)
            return
        if d > 3 or not exhaustive:
            certified[0] = False
        record(pp, mult)

    walk(f, 1)
    factors = sorted(found.items(), key=lambda fm: (fm[0].degree(), str(fm[0])))
    return unit[0], tuple(factors), certified[0]

"""Sparse multivariate polynomials over F_p.

A polynomial stores a dict from exponent tuples to coefficients in
[1, p).  Arithmetic accumulates plain integer coefficients and reduces
once at the end, keeping modular divisions out of the inner loops.
Instances are immutable by convention and hashable.
"""

from .errors import ParseError, RingMismatchError
from .ring import Ring  # noqa: F401  (re-exported for convenience)


def monomial_mul(a, b):
    """Multiply two exponent tuples."""
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a, b):
    """Return a/b as an exponent tuple, or None when b does not divide a."""
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def monomial_lcm(a, b):
    """Return the least common multiple of two exponent tuples."""
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_divides(a, b):
    """Return True when monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


class Polynomial:
    """Immutable sparse polynomial attached to a ring."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._hash = None

    def is_zero(self):
        """Return True for the zero polynomial."""
        return not self.terms

    def degree(self):
        """Return the total degree, or -1 for zero."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def degree_in(self, i):
        """Return the degree in variable i, or -1 for zero."""
        if not self.terms:
            return -1
        return max(m[i] for m in self.terms)

    def lt(self, order=None):
        """Return the leading (monomial, coefficient) pair under the order."""
        assert self.terms, "zero polynomial has no leading term"
        if order is None:
            order = self.ring.order
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def monic(self, order=None):
        """Scale so the leading coefficient becomes 1."""
        _, c = self.lt(order)
        if c == 1:
            return self
        return self * pow(c, self.ring.p - 2, self.ring.p)

    def coefficient(self, m):
        """Return the coefficient of an exponent tuple, zero when absent."""
        return self.terms.get(m, 0)

    def frobenius(self, e):
        """Return the p^e-th power, computed termwise."""
        assert e >= 0
        if e == 0:
            return self
        q = self.ring.p ** e
        terms = {tuple(a * q for a in m): c for m, c in self.terms.items()}
        return Polynomial(self.ring, terms)

    def derivative(self, i):
        """Return the partial derivative with respect to variable i."""
        p = self.ring.p
        raw = {}
        for m, c in self.terms.items():
            if m[i]:
                d = c * m[i] % p
                if d:
                    mm = m[:i] + (m[i] - 1,) + m[i + 1:]
                    raw[mm] = d
        return Polynomial(self.ring, raw)

    def evaluate(self, point, field=None):
        """Evaluate at a point, coordinatewise in F_p unless a field is given."""
        p = self.ring.p
        assert len(point) == self.ring.nvars
        if field is None:
            total = 0
            for m, c in self.terms.items():
                v = c
                for x, e in zip(point, m):
                    if e:
                        v = v * pow(x, e, p) % p
                total += v
            return total % p
        total = 0
        for m, c in self.terms.items():
            v = c % p
            for x, e in zip(point, m):
                if e:
                    v = field.mul(v, field.pow(x, e))
            total = field.add(total, v)
        return total

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {m: p - c for m, c in self.terms.items()})

    def __add__(self, other):
        other = _coerce(self.ring, other)
        _check_rings(self.ring, other.ring)
        raw = dict(self.terms)
        for m, c in other.terms.items():
            raw[m] = raw.get(m, 0) + c
        return make(self.ring, raw)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(self.ring, other)
        _check_rings(self.ring, other.ring)
        raw = dict(self.terms)
        for m, c in other.terms.items():
            raw[m] = raw.get(m, 0) - c
        return make(self.ring, raw)

    def __rsub__(self, other):
        return _coerce(self.ring, other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return make(self.ring, {m: c * other for m, c in self.terms.items()})
        _check_rings(self.ring, other.ring)
        raw = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                raw[m] = raw.get(m, 0) + c1 * c2
        return make(self.ring, raw)

    __rmul__ = __mul__

    def __pow__(self, n):
        assert isinstance(n, int) and n >= 0
        out = one(self.ring)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        p = self.ring.p
        order = self.ring.order
        pieces = []
        for m in sorted(self.terms, key=order.key, reverse=True):
            signed = self.terms[m] if self.terms[m] <= p // 2 else self.terms[m] - p
            body = _monomial_str(m, self.ring)
            mag = abs(signed)
            if body == "1":
                piece = str(mag)
            elif mag == 1:
                piece = body
            else:
                piece = "%d*%s" % (mag, body)
            if not pieces:
                pieces.append(piece if signed > 0 else "-" + piece)
            else:
                pieces.append(("+" if signed > 0 else "-") + piece)
        return "".join(pieces)

    __repr__ = __str__


def _monomial_str(m, ring):
    parts = []
    for name, e in zip(ring.variables, m):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append("%s^%d" % (name, e))
    return "*".join(parts) if parts else "1"


def _check_rings(a, b):
    if a != b:
        raise RingMismatchError("operands live in different rings: %r vs %r" % (a, b))


def _coerce(ring, value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, int):
        return constant(ring, value)
    raise TypeError("cannot treat %r as a polynomial" % (value,))


def make(ring, raw):
    """Build a polynomial from a dict of plain integer coefficients."""
    p = ring.p
    terms = {}
    for m, c in raw.items():
        c %= p
        if c:
            terms[m] = c
    return Polynomial(ring, terms)


def zero(ring):
    """Return the zero polynomial."""
    return Polynomial(ring, {})


def one(ring):
    """Return the constant polynomial 1."""
    return constant(ring, 1)


def constant(ring, c):
    """Return a constant polynomial."""
    c %= ring.p
    if not c:
        return Polynomial(ring, {})
    return Polynomial(ring, {(0,) * ring.nvars: c})


def variable(ring, name):
    """Return the variable with the given name as a polynomial."""
    assert name in ring.index, "unknown variable %r" % (name,)
    return monomial(ring, {ring.index[name]: 1})


def monomial(ring, exps, c=1):
    """Build c times a monomial from a dict or tuple of exponents."""
    if isinstance(exps, dict):
        m = [0] * ring.nvars
        for i, e in exps.items():
            m[i] = e
        exps = tuple(m)
    assert len(exps) == ring.nvars and all(e >= 0 for e in exps)
    return make(ring, {tuple(exps): c})


def rename(f, ring, positions):
    """Move f into another ring, sending variable i to ring variable positions[i]."""
    assert f.ring.p == ring.p
    assert len(positions) == f.ring.nvars
    terms = {}
    for m, c in f.terms.items():
        out = [0] * ring.nvars
        for i, e in enumerate(m):
            if e:
                out[positions[i]] = e
        terms[tuple(out)] = c
    return Polynomial(ring, terms)


def substitute(f, ring, images):
    """Evaluate f at polynomial images of its variables."""
    assert len(images) == f.ring.nvars
    total = zero(ring)
    for m, c in f.terms.items():
        v = constant(ring, c)
        for i, e in enumerate(m):
            if e:
                v = v * images[i] ** e
        total = total + v
    return total


def parse_polynomial(ring, text, line=1):
    """Parse a polynomial expression in the ring's variables.

    The grammar has +, -, * and ^ with the usual precedences, along
    with parentheses, integer coefficients and unary minus.  Raises
    ParseError carrying the offending position on bad input.
    """
    state = _ParseState(ring, _tokenize(text, line))
    f = _parse_expr(state)
    kind, value, ln, col = state.peek()
    if kind != "end":
        raise ParseError("unexpected %r" % (value,), ln, col)
    return f


class _ParseState:
    """Token stream with one-token lookahead."""

    def __init__(self, ring, tokens):
        self.ring = ring
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok


def _tokenize(text, line):
    tokens = []
    col = 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
        elif ch in " \t\r":
            col += 1
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), line, col))
            col += j - i
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], line, col))
            col += j - i
            i = j
        elif ch in "+-*^()":
            tokens.append(("op", ch, line, col))
            col += 1
            i += 1
        else:
            raise ParseError("unexpected character %r" % (ch,), line, col)
    tokens.append(("end", "", line, col))
    return tokens


def _parse_expr(state):
    f = _parse_term(state)
    while True:
        kind, value, _, _ = state.peek()
        if kind == "op" and value in "+-":
            state.take()
            g = _parse_term(state)
            f = f + g if value == "+" else f - g
        else:
            return f


def _parse_term(state):
    f = _parse_unary(state)
    while True:
        kind, value, _, _ = state.peek()
        if kind == "op" and value == "*":
            state.take()
            f = f * _parse_unary(state)
        else:
            return f


def _parse_unary(state):
    kind, value, _, _ = state.peek()
    if kind == "op" and value == "-":
        state.take()
        return -_parse_unary(state)
    if kind == "op" and value == "+":
        state.take()
        return _parse_unary(state)
    return _parse_power(state)


def _parse_power(state):
    f = _parse_atom(state)
    kind, value, _, _ = state.peek()
    if kind == "op" and value == "^":
        state.take()
        kind, value, ln, col = state.take()
        if kind != "int":
            raise ParseError("exponent must be an integer", ln, col)
        return f ** value
    return f


def _parse_atom(state):
    kind, value, ln, col = state.take()
    if kind == "int":
        return constant(state.ring, value)
    if kind == "name":
        if value not in state.ring.index:
            raise ParseError("unknown variable %r" % (value,), ln, col)
        return variable(state.ring, value)
    if kind == "op" and value == "(":
        f = _parse_expr(state)
        kind, value, ln, col = state.take()
        if not (kind == "op" and value == ")"):
            raise ParseError("expected closing parenthesis", ln, col)
        return f
    raise ParseError("expected a term", ln, col)

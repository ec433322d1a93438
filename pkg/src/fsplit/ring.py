"""Ground rings for sparse polynomials over prime fields.

A monomial is a tuple of exponents, one entry per variable.  An order
turns a monomial into a flat integer tuple whose lexicographic
comparison realizes the monomial comparison, so heaps and sorts can
work with plain tuples.  Keys are memoized per order instance because
the same monomials get compared many times during reductions.
"""

from .errors import FsplitError


def is_prime(n):
    """Return True when n is a prime number."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Order:
    """Base class for monomial orders on exponent tuples."""

    def __init__(self):
        self._keys = {}
        self._nkeys = {}

    def key(self, m):
        """Return a tuple that compares like the monomial under this order."""
        try:
            return self._keys[m]
        except KeyError:
            k = self._key(m)
            self._keys[m] = k
            return k

    def nkey(self, m):
        """Return the negated key, for min-heaps that should pop maxima."""
        try:
            return self._nkeys[m]
        except KeyError:
            k = tuple(-v for v in self.key(m))
            self._nkeys[m] = k
            return k

    def _key(self, m):
        raise NotImplementedError

    def _sig(self):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Order) and self._sig() == other._sig()

    def __hash__(self):
        return hash(self._sig())

    def __repr__(self):
        return self.__class__.__name__


class Lex(Order):
    """Pure lexicographic order with the first variable dominant."""

    def _key(self, m):
        return m

    def _sig(self):
        return ("lex",)


class Grevlex(Order):
    """Graded reverse lexicographic order."""

    def _key(self, m):
        return (sum(m),) + tuple(-e for e in reversed(m))

    def _sig(self):
        return ("grevlex",)


class Block(Order):
    """Block order comparing fixed-length segments under their own orders.

    Each part is a pair (size, order).  Earlier blocks dominate, which
    is what elimination of a front group of variables needs.
    """

    def __init__(self, *parts):
        super().__init__()
        assert parts, "block order needs at least one part"
        for size, sub in parts:
            assert size > 0 and isinstance(sub, Order)
        self.parts = tuple(parts)

    def _key(self, m):
        out = []
        start = 0
        for size, sub in self.parts:
            out.extend(sub.key(m[start:start + size]))
            start += size
        assert start == len(m), "monomial length does not match block sizes"
        return tuple(out)

    def _sig(self):
        return ("block",) + tuple((size, sub._sig()) for size, sub in self.parts)


def order_from_name(name):
    """Build an order from its text name, either lex or grevlex."""
    if name == "lex":
        return Lex()
    if name == "grevlex":
        return Grevlex()
    raise FsplitError("unknown order %r" % (name,))


class Ring:
    """Polynomial ring F_p[variables] carrying a fixed monomial order."""

    __slots__ = ("p", "variables", "nvars", "order", "index")

    def __init__(self, p, variables, order=None):
        assert is_prime(p), "characteristic must be prime"
        variables = tuple(variables)
        assert variables, "ring needs at least one variable"
        assert len(set(variables)) == len(variables), "duplicate variable name"
        for name in variables:
            assert name.isidentifier(), "bad variable name %r" % (name,)
        self.p = p
        self.variables = variables
        self.nvars = len(variables)
        self.order = order if order is not None else Grevlex()
        self.index = {name: i for i, name in enumerate(variables)}

    def with_order(self, order):
        """Return the same ring under a different monomial order."""
        if order == self.order:
            return self
        return Ring(self.p, self.variables, order)

    def extend_front(self, names, order):
        """Return a ring with extra variables prepended, under the given order."""
        assert all(name not in self.index for name in names)
        return Ring(self.p, tuple(names) + self.variables, order)

    def __eq__(self, other):
        return (isinstance(other, Ring) and self.p == other.p
                and self.variables == other.variables and self.order == other.order)

    def __hash__(self):
        return hash((self.p, self.variables, self.order))

    def __repr__(self):
        return "Ring(%d, %s, %r)" % (self.p, list(self.variables), self.order)


def _irreducible_quadratic(p):
    """Find (c1, c0) with x^2 + c1*x + c0 irreducible over F_p."""
    for c1 in range(p):
        for c0 in range(p):
            if all((x * x + c1 * x + c0) % p for x in range(p)):
                return c1, c0
    raise AssertionError("no irreducible quadratic found")


class ExtField:
    """Finite field F_{p^k} for k in {1, 2}, with integer-coded elements.

    The element a0 + a1*t is coded as the integer a0 + a1*p, where t is
    a root of the first monic irreducible quadratic x^2 + c1*x + c0
    found scanning c1 then c0 upward.  Over F_2 this gives t^2 = t + 1.
    """

    __slots__ = ("p", "k", "size", "c1", "c0", "r1", "r0")

    def __init__(self, p, k=1):
        assert is_prime(p), "characteristic must be prime"
        assert k in (1, 2), "only degree 1 and 2 extensions are supported"
        self.p = p
        self.k = k
        self.size = p ** k
        if k == 2:
            self.c1, self.c0 = _irreducible_quadratic(p)
            self.r1 = (-self.c1) % p
            self.r0 = (-self.c0) % p
        else:
            self.c1 = self.c0 = self.r1 = self.r0 = 0

    def elements(self):
        """Return all field elements in code order."""
        return range(self.size)

    def add(self, a, b):
        """Add two coded elements."""
        p = self.p
        if self.k == 1:
            return (a + b) % p
        return (a + b) % p + ((a // p + b // p) % p) * p

    def mul(self, a, b):
        """Multiply two coded elements."""
        p = self.p
        if self.k == 1:
            return a * b % p
        a0, a1 = a % p, a // p
        b0, b1 = b % p, b // p
        cross = a1 * b1
        low = (a0 * b0 + cross * self.r0) % p
        high = (a0 * b1 + a1 * b0 + cross * self.r1) % p
        return low + high * p

    def pow(self, a, n):
        """Raise a coded element to a nonnegative integer power."""
        assert n >= 0
        out = 1
        while n:
            if n & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            n >>= 1
        return out

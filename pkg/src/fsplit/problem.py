"""Parsing of line-oriented problem files into compatibility problems."""

from .algorithm import CompatProblem
from .errors import FsplitError, ParseError, PreconditionError
from .frobenius import PhiMap, fedder_witness
from .groebner import Ideal
from .poly import parse_polynomial
from .ring import Ring, order_from_name


SCALAR_KEYS = ("p", "vars", "order", "e", "u", "mode")
LIST_KEYS = ("I", "J")
MODES = ("auto", "surjective", "general")


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _split_line(raw, lineno):
    text = raw.split("#", 1)[0]
    if not text.strip():
        return None
    if "=" not in text:
        raise ParseError("expected key = value", lineno, 1)
    key, value = text.split("=", 1)
    if not key.strip():
        raise ParseError("expected key = value", lineno, 1)
    col = len(key) + 2 + (len(value) - len(value.lstrip()))
    return key.strip(), value.strip(), col


def _parse_expression(ring, value, lineno, col):
    try:
        return parse_polynomial(ring, value)
    except ParseError as err:
        message = str(err)
        if err.line is not None:
            message = message.split(": ", 1)[1]
            col = col + err.col - 1
        raise ParseError(message, lineno, col) from err


def parse_problem(text, fedder_check=True):
    """Build a compatibility problem from key = value lines.

    Lines hold `p`, `vars`, `e`, `u`, repeatable `I`, and the optional
    `order`, `J`, and `mode` keys; `#` starts a comment.  The premultiplier
    is checked against the seed unless fedder_check is off, so a returned
    problem is ready to enumerate.
    """
    scalars = {}
    lists = {"I": [], "J": []}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parsed = _split_line(raw, lineno)
        if parsed is None:
            continue
        key, value, col = parsed
        if key in LIST_KEYS:
            lists[key].append((value, lineno, col))
        elif key in SCALAR_KEYS:
            if key in scalars:
                raise ParseError("duplicate key '%s'" % key, lineno, 1)
            scalars[key] = (value, lineno, col)
        else:
            raise ParseError("unknown key '%s'" % key, lineno, 1)
    for key in ("p", "vars", "e", "u"):
        if key not in scalars:
            raise ParseError("missing required key '%s'" % key)

    value, lineno, col = scalars["p"]
    try:
        p = int(value)
    except ValueError:
        raise ParseError("p must be an integer", lineno, col)
    if not _is_prime(p):
        raise ParseError("p must be a prime number", lineno, col)

    value, lineno, col = scalars["vars"]
    names = tuple(name.strip() for name in value.split(","))
    if not all(names) or len(set(names)) != len(names):
        raise ParseError("vars must be distinct nonempty names", lineno, col)

    order = None
    if "order" in scalars:
        value, lineno, col = scalars["order"]
        try:
            order = order_from_name(value)
        except FsplitError as err:
            raise ParseError(str(err), lineno, col)
    ring = Ring(p, names, order)

    value, lineno, col = scalars["e"]
    try:
        e = int(value)
    except ValueError:
        raise ParseError("e must be an integer", lineno, col)
    if e < 1:
        raise ParseError("e must be at least 1", lineno, col)

    value, lineno, col = scalars["u"]
    u = _parse_expression(ring, value, lineno, col)
    if not u:
        raise ParseError("u must be nonzero", lineno, col)

    mode = "auto"
    if "mode" in scalars:
        value, lineno, col = scalars["mode"]
        if value not in MODES:
            raise ParseError("mode must be one of %s" % ", ".join(MODES),
                             lineno, col)
        mode = value

    seed = Ideal(ring, [_parse_expression(ring, value, lineno, col)
                        for value, lineno, col in lists["I"]])
    locus = None
    if lists["J"]:
        locus = Ideal(ring, [_parse_expression(ring, value, lineno, col)
                             for value, lineno, col in lists["J"]])

    phi = PhiMap(u, e)
    if fedder_check:
        witness = fedder_witness(phi, seed)
        if witness is not None:
            gen, nf = witness
            raise PreconditionError(
                "phi is not I-compatible: u*(%s) has normal form %s modulo "
                "the bracket power of I" % (gen, nf))
    return CompatProblem(ring, phi, seed, mode=mode, locus_override=locus)

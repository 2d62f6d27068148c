"""A small expression language for eta and pochhammer products.

Grammar, loosest to tightest binding:

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' '-'? INT)?
    atom   := 'eta' '(' INT ')' | 'poch' '(' INT ',' INT ')'
            | 'q' | INT | '(' expr ')'

Exponents must be integer literals and a power cannot itself be raised
without parentheses, so "a^2^3" is rejected while "(a^2)^3" is fine.
"""

from collections import namedtuple
from dataclasses import dataclass

from . import series
from .eta import FractionalSeries
from .series import PrecisionError, make_series


class ParseError(ValueError):
    """Syntax error carrying the character offset where it occurred."""

    def __init__(self, message, position):
        super().__init__("%s at position %d" % (message, position))
        self.position = position


@dataclass(frozen=True)
class Eta:
    k: int


@dataclass(frozen=True)
class Poch:
    a: int
    b: int


@dataclass(frozen=True)
class IntLit:
    value: int


@dataclass(frozen=True)
class Q:
    pass


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Div:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


_Token = namedtuple("_Token", "kind value pos")

_KEYWORDS = ("eta", "poch", "q")
_PUNCT = "+-*/^(),"


def _lex(text):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", int(text[i:j]), i))
            i = j
        elif ch.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            word = text[i:j]
            if word not in _KEYWORDS:
                raise ParseError("unknown name %r" % word, i)
            tokens.append(_Token(word, word, i))
            i = j
        elif ch in _PUNCT:
            tokens.append(_Token(ch, ch, i))
            i += 1
        else:
            raise ParseError("unexpected character %r" % ch, i)
    tokens.append(_Token("end", None, n))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        token = self.tokens[self.i]
        self.i += 1
        return token

    def expect(self, kind, what):
        token = self.advance()
        if token.kind != kind:
            raise ParseError("expected %s" % what, token.pos)
        return token


def parse(text):
    """Parse text into an expression tree, raising ParseError on bad input."""
    parser = _Parser(_lex(text))
    expr = _expr(parser)
    tail = parser.peek()
    if tail.kind != "end":
        raise ParseError("unexpected %r" % str(tail.value), tail.pos)
    return expr


def _expr(p):
    e = _term(p)
    while p.peek().kind in ("+", "-"):
        op = p.advance()
        rhs = _term(p)
        e = Add(e, rhs) if op.kind == "+" else Sub(e, rhs)
    return e


def _term(p):
    e = _unary(p)
    while p.peek().kind in ("*", "/"):
        op = p.advance()
        rhs = _unary(p)
        e = Mul(e, rhs) if op.kind == "*" else Div(e, rhs)
    return e


def _unary(p):
    if p.peek().kind == "-":
        p.advance()
        return Neg(_unary(p))
    return _power(p)


def _power(p):
    base = _atom(p)
    if p.peek().kind == "^":
        p.advance()
        sign = 1
        if p.peek().kind == "-":
            p.advance()
            sign = -1
        exponent = p.expect("int", "an integer exponent")
        base = Pow(base, sign * exponent.value)
        tail = p.peek()
        if tail.kind == "^":
            raise ParseError("chained '^' needs parentheses", tail.pos)
    return base


def _atom(p):
    token = p.advance()
    if token.kind == "int":
        return IntLit(token.value)
    if token.kind == "q":
        return Q()
    if token.kind == "eta":
        p.expect("(", "'('")
        arg = p.expect("int", "an integer")
        p.expect(")", "')'")
        return Eta(arg.value)
    if token.kind == "poch":
        p.expect("(", "'('")
        a = p.expect("int", "an integer")
        p.expect(",", "','")
        b = p.expect("int", "an integer")
        p.expect(")", "')'")
        return Poch(a.value, b.value)
    if token.kind == "(":
        inner = _expr(p)
        p.expect(")", "')'")
        return inner
    what = "end of input" if token.kind == "end" else repr(str(token.value))
    raise ParseError("unexpected %s" % what, token.pos)


# Binding levels used to decide where parentheses are required: a child
# is wrapped whenever its own level is below the level its slot demands.
_PAREN = "(%s)"


def format(expr):
    """Render an expression tree with the fewest parentheses that re-parse."""
    return _fmt(expr, 0)


def _fmt(e, floor):
    if isinstance(e, Eta):
        out, level = "eta(%d)" % e.k, 5
    elif isinstance(e, Poch):
        out, level = "poch(%d,%d)" % (e.a, e.b), 5
    elif isinstance(e, IntLit):
        out, level = str(e.value), 5
    elif isinstance(e, Q):
        out, level = "q", 5
    elif isinstance(e, Neg):
        out, level = "-" + _fmt(e.arg, 3), 3
    elif isinstance(e, Add):
        out, level = _fmt(e.left, 1) + "+" + _fmt(e.right, 2), 1
    elif isinstance(e, Sub):
        out, level = _fmt(e.left, 1) + "-" + _fmt(e.right, 2), 1
    elif isinstance(e, Mul):
        out, level = _fmt(e.left, 2) + "*" + _fmt(e.right, 3), 2
    elif isinstance(e, Div):
        out, level = _fmt(e.left, 2) + "/" + _fmt(e.right, 3), 2
    elif isinstance(e, Pow):
        out, level = _fmt(e.base, 5) + "^" + str(e.exponent), 4
    else:
        raise TypeError("not an expression node: %r" % (e,))
    if level < floor:
        out = _PAREN % out
    return out


def _eval(e, prec, mod):
    if isinstance(e, IntLit):
        c = e.value % mod if mod is not None else e.value
        return FractionalSeries(0, make_series(0, [c] + [0] * (prec - 1), prec))
    if isinstance(e, Q):
        return FractionalSeries(24, make_series(0, [1] + [0] * (prec - 1), prec))
    if isinstance(e, Eta):
        if e.k < 1:
            raise ValueError("eta index must be positive, got %d" % e.k)
        body = series.euler_series(e.k, prec)
        if mod is not None:
            body = series.reduce_mod(body, mod)
        return FractionalSeries(e.k, body)
    if isinstance(e, Poch):
        return FractionalSeries(0, series.pochhammer(e.a, e.b, prec, mod))
    if isinstance(e, Neg):
        inner = _eval(e.arg, prec, mod)
        body = series.scale(inner.body, -1)
        if mod is not None:
            body = series.reduce_mod(body, mod)
        return FractionalSeries(inner.offset24, body)
    if isinstance(e, (Add, Sub)):
        a = _eval(e.left, prec, mod)
        b = _eval(e.right, prec, mod)
        out = a.add(b) if isinstance(e, Add) else a.sub(b)
        if mod is not None:
            out = FractionalSeries(out.offset24, series.reduce_mod(out.body, mod))
        return out
    if isinstance(e, Mul):
        return _eval(e.left, prec, mod).mul(_eval(e.right, prec, mod), mod)
    if isinstance(e, Div):
        return _eval(e.left, prec, mod).mul(_eval(e.right, prec, mod).invert(mod), mod)
    if isinstance(e, Pow):
        return _eval(e.base, prec, mod).pow(e.exponent, mod)
    raise TypeError("not an expression node: %r" % (e,))


def evaluate(expr, prec, mod=None):
    """Expand an expression so its body carries precision exactly prec.

    Every operation in the language shifts precision by a constant amount,
    so a cheap probe evaluation measures the offset between requested and
    delivered precision and the real run asks for the difference, with a
    trim at the end to land exactly on prec.
    """
    if prec < 1:
        raise ValueError("precision must be positive, got %d" % prec)
    probe = 32
    while True:
        try:
            trial = _eval(expr, probe, mod)
            break
        except (PrecisionError, ValueError):
            if probe >= 2048:
                raise
            probe *= 4
    delta = trial.body.precision - probe
    need = max(1, prec - delta + 8)
    for _ in range(8):
        out = _eval(expr, need, mod)
        got = out.body.precision
        if got >= prec:
            return FractionalSeries(out.offset24, series.truncate(out.body, prec))
        need += prec - got + 8
    raise PrecisionError("expression never reached precision %d" % prec)


# Closed forms for the catalog series, usable anywhere the language is.
CATALOG_EXPRESSIONS = {
    "j2": "eta(1)^24/eta(2)^24+24",
    "j2s": "eta(1)^24/eta(2)^24+24+4096*eta(2)^24/eta(1)^24",
    "j6": "(eta(2)*eta(3)^3/(eta(1)*eta(6)^3))^3-3",
    "j6s": "(eta(1)*eta(3)/(eta(2)*eta(6)))^6+6+64*(eta(2)*eta(6)/(eta(1)*eta(3)))^6",
    "j10": "eta(2)*eta(5)^5/(eta(1)*eta(10)^5)-1",
    "j10s": "(eta(1)*eta(5)/(eta(2)*eta(10)))^4+4+16*(eta(2)*eta(10)/(eta(1)*eta(5)))^4",
    "F6": "(poch(2,2)*poch(3,3)^3/(poch(1,1)*poch(6,6)^3))^3",
    "F6s": "(poch(1,1)*poch(3,3)/(poch(2,2)*poch(6,6)))^6",
    "F10": "poch(2,2)*poch(5,5)^5/(poch(1,1)*poch(10,10)^5)",
    "F10s": "(poch(1,1)*poch(5,5)/(poch(2,2)*poch(10,10)))^4",
}

"""Text syntax for ordinals, order terms and class descriptors.

Terms::

    expr     := item ('+' item)*
    item     := NUMBER | power | 'rev' '(' expr ')' | 'Q' [ '(' expr (',' expr)* ')' ] | '(' expr ')'
    power    := 'w' [ '^' exponent ] [ '*' NUMBER ]
    exponent := NUMBER | 'w' | '(' expr ')'

Descriptors: ``0``, ``LO``, ``W``, ``W*``, ``S``, ``genQ``, ``genwQ``,
``genQ1``, ``P(expr)`` for the class generated by a power of ``w``, the
involutions ``perp(d)``, ``dual(d)``, ``inv(d)`` and ``plus(d,d)``,
``times(d,d)``.
"""
import re

from .errors import ParseError, ShapeError
from .ordinal import ONE, OMEGA, Ordinal, is_additively_indecomposable
from .orderterm import Ord, OrderTerm, RevOrd, Shuffle, as_ordinal, normalize
from .sgc import ALL, GEN_OMEGA_Q, GEN_Q, GEN_Q_PLUS_1, SCATTERED, W, WSTAR, ZERO_CLASS, Descriptor, Plus, Times, involution, principal

MAX_NATURAL = 2 ** 63 - 1

_TOKEN = re.compile(r"\s*(?:(\d+)|(W\*|[A-Za-z][A-Za-z0-9]*)|(\S))")


def _tokenize(text: str) -> list:
    tokens, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break  # trailing whitespace
        number, word, sym = m.groups()
        start = m.start(m.lastindex)
        if number is not None:
            if int(number) > MAX_NATURAL:
                raise ParseError(f"overflow: {number} exceeds {MAX_NATURAL}", text, start)
            tokens.append(("num", int(number), start))
        elif word is not None:
            tokens.append(("word", word, start))
        else:
            tokens.append(("sym", sym, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


_KIND_NAMES = {"num": "a number", "word": "a name", "sym": "a symbol", "end": "end of input"}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return ParseError(message, self.text, tok[2])

    def accept(self, kind, value=None):
        tok = self.peek()
        if tok[0] == kind and (value is None or tok[1] == value):
            self.i += 1
            return tok
        return None

    def expect(self, kind, value=None):
        tok = self.accept(kind, value)
        if tok is None:
            want = repr(value) if value is not None else _KIND_NAMES[kind]
            got = self.peek()
            shown = "end of input" if got[0] == "end" else repr(got[1])
            raise self.error(f"expected {want}, found {shown}")
        return tok

    def finish(self):
        self.expect("end")

    # terms

    def expr(self) -> OrderTerm:
        parts = [self.item()]
        while self.accept("sym", "+"):
            parts.append(self.item())
        return normalize(parts)

    def item(self) -> OrderTerm:
        tok = self.peek()
        if self.accept("num"):
            return normalize([Ord(Ordinal.of(tok[1]))])
        if self.accept("word", "w"):
            return normalize([Ord(self.power())])
        if self.accept("word", "rev"):
            self.expect("sym", "(")
            inner = self.ordinal_expr(tok)
            self.expect("sym", ")")
            return normalize([RevOrd(inner)])
        if self.accept("word", "Q"):
            members = [OrderTerm((Ord(ONE),))]
            if self.accept("sym", "("):
                members = [self.expr()]
                while self.accept("sym", ","):
                    members.append(self.expr())
                self.expect("sym", ")")
            try:
                return normalize([Shuffle(tuple(members))])
            except ShapeError as e:
                raise self.error(str(e), tok)
        if self.accept("sym", "("):
            inner = self.expr()
            self.expect("sym", ")")
            return inner
        raise self.error("expected a number, 'w', 'rev', 'Q' or '('")

    def power(self) -> Ordinal:
        exponent = ONE
        if self.accept("sym", "^"):
            tok = self.peek()
            if self.accept("num"):
                exponent = Ordinal.of(tok[1])
            elif self.accept("word", "w"):
                exponent = OMEGA
            elif self.accept("sym", "("):
                exponent = self.ordinal_expr(tok)
                self.expect("sym", ")")
            else:
                raise self.error("expected an exponent")
        coefficient = 1
        if self.accept("sym", "*"):
            coefficient = self.expect("num")[1]
        return Ordinal.omega_power(exponent, coefficient)

    def ordinal_expr(self, tok) -> Ordinal:
        value = as_ordinal(self.expr())
        if value is None:
            raise self.error("expected an ordinal", tok)
        return value

    # descriptors

    def descriptor(self) -> Descriptor:
        tok = self.peek()
        if self.accept("num", 0):
            return ZERO_CLASS
        if self.accept("sym", "("):
            d = self.descriptor()
            self.expect("sym", ")")
            return d
        word = self.expect("word")[1] if tok[0] == "word" else None
        if word in _DESCRIPTOR_CONSTANTS:
            return _DESCRIPTOR_CONSTANTS[word]
        if word == "P":
            self.expect("sym", "(")
            gen = self.ordinal_expr(tok)
            self.expect("sym", ")")
            if not gen or not is_additively_indecomposable(gen):
                raise self.error(f"P needs a power of w, got {gen}", tok)
            return principal(gen.terms[0][0])
        if word in _INVOLUTIONS:
            self.expect("sym", "(")
            d = self.descriptor()
            self.expect("sym", ")")
            return involution(_INVOLUTIONS[word], d)
        if word in ("plus", "times"):
            self.expect("sym", "(")
            left = self.descriptor()
            self.expect("sym", ",")
            right = self.descriptor()
            self.expect("sym", ")")
            try:
                return (Plus if word == "plus" else Times)(left, right)
            except ShapeError as e:
                raise self.error(str(e), tok)
        raise self.error("expected a class descriptor", tok)


_DESCRIPTOR_CONSTANTS = {
    "LO": ALL, "W": W, "W*": WSTAR, "S": SCATTERED,
    "genQ": GEN_Q, "genwQ": GEN_OMEGA_Q, "genQ1": GEN_Q_PLUS_1,
}
_INVOLUTIONS = {"perp": "perp", "dual": "dual", "inv": "inverse"}


def parse_expr(text: str) -> OrderTerm:
    """Parse and normalize an order term."""
    p = _Parser(text)
    t = p.expr()
    p.finish()
    return t


def parse_ordinal(text: str) -> Ordinal:
    p = _Parser(text)
    tok = p.peek()
    value = p.ordinal_expr(tok)
    p.finish()
    return value


def parse_descriptor(text: str) -> Descriptor:
    p = _Parser(text)
    d = p.descriptor()
    p.finish()
    return d

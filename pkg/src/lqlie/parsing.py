"""Text syntax for polynomials.

Grammar::

    poly   := term (('+' | '-') term)*
    term   := [rational '*'] word | rational
    word   := factor+
    factor := atom ['^' n] | 'ad0' ['^' n] '(' poly ')'
    atom   := 'b'n | 'x0' | 'x1' | 'y'n | 'D(' k ',' m ')'

``ad0^n(p)`` is ``ad(b0)^n`` applied to ``p`` (``ad(x0)^n`` over X; over
Dbi it raises the ``m`` indices).  Every letter in one expression must come
from the same alphabet; an expression without letters is read over B.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import ParseError
from .hopfmaps import _ad_b0_word, _ad_dbi_word
from .ncpoly import Alphabet, NcPoly, Terms, add_into, normalize

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<ad>ad0)"
    r"|(?P<dbi>D\(\s*(?P<k>\d+)\s*,\s*(?P<m>\d+)\s*\))"
    r"|(?P<letter>[bxy])(?P<idx>\d+)"
    r"|(?P<num>\d+(?:/\d+)?)"
    r"|(?P<op>[-+*^()])"
    r")"
)


@dataclass(frozen=True)
class Expr:
    """A parsed polynomial together with the alphabet its letters came from."""

    poly: NcPoly
    alphabet: Alphabet


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        pos = 0
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos >= len(text):
                break
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            kind = next(n for n in ("ad", "dbi", "letter", "num", "op") if m.group(n) is not None)
            if kind == "op":
                kind = m.group("op")
            start = m.end() - len(m.group(0).lstrip())
            self.tokens.append((kind, m, start))
            pos = m.end()
        self.i = 0
        self.alphabet: Optional[Alphabet] = None

    # -- token helpers ------------------------------------------------------

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def kind(self) -> Optional[str]:
        return self.peek()[0]

    def position(self) -> int:
        return self.peek()[2]

    def advance(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, op: str) -> None:
        if self.kind() != op:
            raise ParseError(f"expected {op!r}", self.position())
        self.advance()

    def set_alphabet(self, alphabet: Alphabet, pos: int) -> None:
        if self.alphabet is None:
            self.alphabet = alphabet
        elif self.alphabet is not alphabet:
            raise ParseError(
                f"mixed alphabets: {alphabet} letter in a {self.alphabet} expression", pos
            )

    def natural(self) -> int:
        if self.kind() != "num" or "/" in self.peek()[1].group("num"):
            raise ParseError("expected a natural number", self.position())
        return int(self.advance()[1].group("num"))

    # -- grammar ------------------------------------------------------------

    def poly(self) -> Terms:
        acc: Terms = {}
        sign = 1
        if self.kind() in ("+", "-"):
            sign = -1 if self.advance()[0] == "-" else 1
        while True:
            for w, c in self.term().items():
                add_into(acc, w, sign * c)
            if self.kind() in ("+", "-"):
                sign = -1 if self.advance()[0] == "-" else 1
            else:
                return acc

    def term(self) -> Terms:
        coeff = 1
        if self.kind() == "num":
            coeff = Fraction(self.advance()[1].group("num"))
            if self.kind() == "*":
                self.advance()
            elif self.kind() not in ("ad", "dbi", "letter"):
                return {(): normalize(coeff)}
        word = self.word()
        return {w: normalize(c * coeff) for w, c in word.items() if c}

    def word(self) -> Terms:
        if self.kind() not in ("ad", "dbi", "letter"):
            raise ParseError("expected a letter or ad0", self.position())
        acc: Terms = {(): 1}
        while self.kind() in ("ad", "dbi", "letter"):
            factor = self.factor()
            nxt: Terms = {}
            for u, a in acc.items():
                for v, b in factor.items():
                    add_into(nxt, u + v, a * b)
            acc = nxt
        return acc

    def exponent(self) -> int:
        if self.kind() != "^":
            return 1
        self.advance()
        pos = self.position()
        n = self.natural()
        if n < 1:
            raise ParseError("exponent must be positive", pos)
        return n

    def factor(self) -> Terms:
        kind, m, pos = self.advance()
        if kind == "ad":
            n = 1
            if self.kind() == "^":
                self.advance()
                n = self.natural()
            self.expect("(")
            inner = self.poly()
            self.expect(")")
            return self.ad0(n, inner, pos)
        if kind == "dbi":
            k, mm = int(m.group("k")), int(m.group("m"))
            if k < 1:
                raise ParseError("D(k,m) needs k >= 1", pos)
            self.set_alphabet(Alphabet.DBI, pos)
            letter = (k, mm)
        else:
            name, idx = m.group("letter"), int(m.group("idx"))
            if name == "b":
                self.set_alphabet(Alphabet.B, pos)
            elif name == "x":
                if idx > 1:
                    raise ParseError("X letters are x0 and x1", pos)
                self.set_alphabet(Alphabet.X, pos)
            else:
                if idx < 1:
                    raise ParseError("Y letters are y1, y2, ...", pos)
                self.set_alphabet(Alphabet.Y, pos)
            letter = idx
        return {(letter,) * self.exponent(): 1}

    def ad0(self, n: int, inner: Terms, pos: int) -> Terms:
        out: Terms = {}
        if self.alphabet is Alphabet.Y:
            raise ParseError("ad0 is not defined over the Y alphabet", pos)
        expand = _ad_dbi_word if self.alphabet is Alphabet.DBI else _ad_b0_word
        for w, c in inner.items():
            for u, a in expand(n, w).items():
                add_into(out, u, a * c)
        return out


def parse_expr(text: str) -> Expr:
    """Parse ``text`` into an :class:`Expr`; raises :class:`ParseError`."""
    parser = _Parser(text)
    if not parser.tokens:
        raise ParseError("empty expression", 0)
    terms = parser.poly()
    if parser.i != len(parser.tokens):
        raise ParseError("unexpected token", parser.position())
    alphabet = parser.alphabet or Alphabet.B
    return Expr(NcPoly._wrap(alphabet, terms), alphabet)


def parse(text: str) -> NcPoly:
    return parse_expr(text).poly

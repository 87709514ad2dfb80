"""Parser for algebra expressions such as ``(2/3+1/2 i) v[2] v*[3] - e[6]``.

Grammar (LL(1), whitespace-insensitive):

    expr    := ['-'] term (('+' | '-') term)*
    term    := factor (['*'] factor)*
    factor  := number ['/' number] | 'i' | '1'
             | 'v' '[' elem ']' | 'v*' '[' elem ']' | 'e' '[' elem ']'
             | '(' expr ')'

``elem`` is any text with balanced brackets, handed to the family's element
parser.  Juxtaposition is multiplication, so ``1/2 i`` is the coefficient i/2.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import AlgebraElement, StarAlgebra
from .coeffs import Gaussian
from .core import FamilyMismatch


class ExpressionError(ValueError):
    """Syntax or element error, with the 0-based character position."""

    def __init__(self, message, pos, text=""):
        self.pos = pos
        self.text = text
        pointer = f"\n  {text}\n  {' ' * pos}^" if text else ""
        super().__init__(f"at position {pos}: {message}{pointer}")


_OPEN = {"[": "]", "(": ")"}


class _Parser:
    def __init__(self, alg: StarAlgebra, text: str):
        self.alg = alg
        self.text = text
        self.pos = 0

    # -- lexing helpers ---------------------------------------------------
    def error(self, message, pos=None):
        raise ExpressionError(message, self.pos if pos is None else pos, self.text)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}, found {self.peek() or 'end of input'!r}")
        self.pos += 1

    def number(self):
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return int(self.text[start:self.pos])

    def bracketed(self):
        """Text between '[' and its matching ']', nesting respected."""
        self.expect("[")
        start = self.pos
        stack = ["]"]
        while self.pos < len(self.text):
            c = self.text[self.pos]
            if c in _OPEN:
                stack.append(_OPEN[c])
            elif c in ")]":
                if c != stack[-1]:
                    self.error(f"unbalanced {c!r}")
                stack.pop()
                if not stack:
                    self.pos += 1
                    return self.text[start:self.pos - 1], start
            self.pos += 1
        self.error("unterminated '['", start - 1)

    # -- grammar ----------------------------------------------------------
    def parse(self) -> AlgebraElement:
        if not self.peek():
            self.error("empty expression")
        out = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return out

    def expr(self):
        neg = False
        if self.peek() == "-":
            self.pos += 1
            neg = True
        out = self.term()
        if neg:
            out = -out
        while self.peek() in ("+", "-") and self.peek():
            op = self.text[self.pos]
            self.pos += 1
            t = self.term()
            out = out + t if op == "+" else out - t
        return out

    def _starts_factor(self, c):
        return c.isdigit() or c in ("(", "v", "e", "i")

    def term(self):
        out = self.factor()
        while True:
            c = self.peek()
            if c == "*":
                self.pos += 1
                out = out * self.factor()
            elif c and self._starts_factor(c):
                out = out * self.factor()
            else:
                return out

    def factor(self):
        c = self.peek()
        alg = self.alg
        if c.isdigit():
            n = self.number()
            if self.peek() == "/":
                self.pos += 1
                if not self.peek().isdigit():
                    self.error("expected a denominator")
                d = self.number()
                if d == 0:
                    self.error("zero denominator")
                return alg.scalar(Fraction(n, d))
            return alg.scalar(n)
        if c == "(":
            self.pos += 1
            out = self.expr()
            self.expect(")")
            return out
        if c == "i":
            self.pos += 1
            return alg.scalar(Gaussian(0, 1))
        if c in ("v", "e"):
            start = self.pos
            self.pos += 1
            star = False
            if c == "v" and self.peek() == "*":
                save = self.pos
                self.pos += 1
                if self.peek() == "[":
                    star = True
                else:
                    self.pos = save
            if self.peek() != "[":
                self.error(f"expected '[' after {c!r}", start)
            body, at = self.bracketed()
            x = self.element(body, at)
            if c == "e":
                return alg.e(x)
            return alg.vstar(x) if star else alg.v(x)
        self.error(f"unexpected {c!r}" if c else "unexpected end of input")

    def element(self, body, at):
        try:
            return self.alg.S.parse_element(body.strip())
        except (FamilyMismatch, ValueError, TypeError, KeyError) as exc:
            raise ExpressionError(f"bad element {body.strip()!r}: {exc}", at, self.text) from None


def parse_expression(alg: StarAlgebra, text: str) -> AlgebraElement:
    """Parse ``text`` into a reduced element of ``alg``."""
    return _Parser(alg, text).parse()

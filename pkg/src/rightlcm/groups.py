"""Groups used as the G of a semidirect product G ⋊θ P.

Each group exposes ``identity``, ``mul``, ``inv``, ``contains``,
``generators`` and a text format.  Elements are hashable and canonical, so
Python equality is group equality.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .coeffs import format_fraction


class Integers:
    """(Z, +) with int elements."""

    name = "Z"
    identity = 0
    generators = (1,)
    abelian = True

    def contains(self, g):
        return isinstance(g, int) and not isinstance(g, bool)

    def mul(self, g, h):
        return g + h

    def inv(self, g):
        return -g

    def coords(self, g):
        return (g,)

    def from_coords(self, c):
        return c[0] if c else 0

    def format(self, g):
        return str(g)

    def parse(self, text):
        return int(text.strip())


class IntegerVectors:
    """Z^rank, or the restricted sum ⊕_N Z when ``rank`` is None.

    Elements are int tuples with trailing zeros stripped.
    """

    abelian = True
    identity = ()

    def __init__(self, rank=None):
        self.rank = rank
        self.name = "(+)Z" if rank is None else f"Z^{rank}"
        n = 3 if rank is None else rank
        self.generators = tuple(self.unit_vector(i) for i in range(n))

    @staticmethod
    def _trim(c):
        c = list(c)
        while c and c[-1] == 0:
            c.pop()
        return tuple(c)

    def unit_vector(self, i):
        return (0,) * i + (1,)

    def contains(self, g):
        return (isinstance(g, tuple) and all(isinstance(a, int) for a in g)
                and (not g or g[-1] != 0)
                and (self.rank is None or len(g) <= self.rank))

    def mul(self, g, h):
        n = max(len(g), len(h))
        return self._trim((g[i] if i < len(g) else 0) + (h[i] if i < len(h) else 0) for i in range(n))

    def inv(self, g):
        return tuple(-a for a in g)

    def coords(self, g):
        return g

    def from_coords(self, c):
        return self._trim(c)

    def format(self, g):
        return "[" + ",".join(map(str, g)) + "]"

    def parse(self, text):
        g = self._trim(int(t) for t in re.findall(r"-?\d+", text))
        if not self.contains(g):
            raise ValueError(f"{text!r} is not an element of {self.name}")
        return g


class ShiftGroup:
    """⊕_{N^k} G_0 with G_0 = Z/m (m > 0) or Z (m = 0).

    Elements are sorted tuples of ``(position, value)`` with non-zero values.
    """

    abelian = True
    identity = ()

    def __init__(self, k=2, modulus=0):
        if modulus == 1 or modulus < 0:
            raise ValueError("G_0 needs at least two elements")
        self.k = k
        self.modulus = modulus
        g0 = "Z" if modulus == 0 else f"Z/{modulus}"
        self.name = f"(+)_{{N^{k}}} {g0}"
        self.generators = (self.delta((0,) * k),)

    def _norm(self, v):
        return v % self.modulus if self.modulus else v

    def delta(self, pos, value=1):
        v = self._norm(value)
        return ((tuple(pos), v),) if v else ()

    def from_dict(self, d):
        return tuple(sorted((pos, self._norm(v)) for pos, v in d.items() if self._norm(v)))

    def contains(self, g):
        if not isinstance(g, tuple):
            return False
        prev = None
        for item in g:
            if not (isinstance(item, tuple) and len(item) == 2):
                return False
            pos, v = item
            if (not isinstance(pos, tuple) or len(pos) != self.k or min(pos, default=0) < 0
                    or not isinstance(v, int) or v == 0 or self._norm(v) != v):
                return False
            if prev is not None and pos <= prev:
                return False
            prev = pos
        return True

    def mul(self, g, h):
        d = dict(g)
        for pos, v in h:
            d[pos] = d.get(pos, 0) + v
        return self.from_dict(d)

    def inv(self, g):
        return self.from_dict({pos: -v for pos, v in g})

    def format(self, g):
        if not g:
            return "0"
        return "+".join(f"{v}@({','.join(map(str, pos))})" for pos, v in g)

    def parse(self, text):
        text = text.strip()
        if text == "0":
            return ()
        d = {}
        for part in text.split("+"):
            m = re.fullmatch(r"\s*(-?\d+)\s*@\s*\(([\d,\s]+)\)\s*", part)
            if not m:
                raise ValueError(f"bad shift-group term {part!r}")
            pos = tuple(int(t) for t in m.group(2).split(","))
            d[pos] = d.get(pos, 0) + int(m.group(1))
        g = self.from_dict(d)
        if not self.contains(g):
            raise ValueError(f"{text!r} is not an element of {self.name}")
        return g


class FreeGroup:
    """Free group on ``n`` letters; elements are reduced syllable tuples
    ``((letter_index, exponent), ...)`` with non-zero exponents and no two
    adjacent syllables on the same letter."""

    abelian = False
    identity = ()

    def __init__(self, n=2, names=None):
        if n < 1:
            raise ValueError("need at least one generator")
        self.n = n
        self.names = names or ("ab" if n == 2 else [f"a{i + 1}" for i in range(n)])
        self.name = f"F_{n}"
        self.generators = tuple(((i, 1),) for i in range(n))

    def contains(self, g):
        if not isinstance(g, tuple):
            return False
        prev = None
        for item in g:
            if not (isinstance(item, tuple) and len(item) == 2):
                return False
            i, e = item
            if not (isinstance(i, int) and 0 <= i < self.n and isinstance(e, int) and e != 0):
                return False
            if i == prev:
                return False
            prev = i
        return True

    def mul(self, g, h):
        if not g or not h:
            return g or h
        if g[-1][0] != h[0][0]:
            return g + h
        out = list(g)
        for i, e in h:
            if out and out[-1][0] == i:
                e2 = out[-1][1] + e
                out.pop()
                if e2:
                    out.append((i, e2))
            else:
                out.append((i, e))
        return tuple(out)

    def inv(self, g):
        return tuple((i, -e) for i, e in reversed(g))

    def length(self, g):
        return sum(abs(e) for _, e in g)

    def format(self, g):
        if not g:
            return "1"
        return " ".join(self.names[i] + ("" if e == 1 else f"^{e}") for i, e in g)

    def parse(self, text):
        text = text.strip()
        if text in ("1", ""):
            return ()
        out = ()
        for tok in text.split():
            m = re.fullmatch(r"([A-Za-z]\w*)(?:\^(-?\d+))?", tok)
            if not m or m.group(1) not in self.names:
                raise ValueError(f"bad free-group token {tok!r}")
            e = int(m.group(2)) if m.group(2) else 1
            if e:
                out = self.mul(out, ((list(self.names).index(m.group(1)), e),))
        return out


def _rat(a):
    a = Fraction(a)
    return a.numerator if a.denominator == 1 else a


class RationalPolynomials:
    """(Q[T], +); elements are coefficient tuples, lowest degree first,
    trailing zeros stripped.  Integral coefficients are stored as ints
    (cheaper to hash), the rest as Fractions."""

    abelian = True
    identity = ()
    name = "Q[T]"

    def __init__(self):
        self.generators = ((1,), (0, 1))

    @staticmethod
    def trim(c):
        c = [_rat(a) for a in c]
        while c and c[-1] == 0:
            c.pop()
        return tuple(c)

    def contains(self, g):
        return (isinstance(g, tuple) and all(type(a) is int or (isinstance(a, Fraction) and a.denominator != 1)
                                             for a in g) and (not g or g[-1] != 0))

    def mul(self, g, h):
        n = max(len(g), len(h))
        return self.trim((g[i] if i < len(g) else 0) + (h[i] if i < len(h) else 0) for i in range(n))

    def inv(self, g):
        return tuple(-a for a in g)

    def format(self, g):
        if not g:
            return "0"
        terms = []
        for d in range(len(g) - 1, -1, -1):
            c = g[d]
            if c == 0:
                continue
            mono = "" if d == 0 else ("T" if d == 1 else f"T^{d}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = format_fraction(abs(c)) + ("*" + mono if mono else "")
            terms.append(("-" if c < 0 else "+") + body)
        s = "".join(terms)
        return s[1:] if s.startswith("+") else s

    def parse(self, text):
        from sympy import Poly, QQ, Symbol, sympify

        T = Symbol("T")
        expr = sympify(text.replace("^", "**"), locals={"T": T})
        coeffs = Poly(expr, T, domain=QQ).all_coeffs()[::-1]
        return self.trim(Fraction(int(c.numerator), int(c.denominator)) for c in coeffs)

"""Semidirect products G ⋊θ P for order-respecting actions by injective
endomorphisms, together with the concrete actions used by the catalog.

Every action supplies exact solvers; an action without one cannot be
registered, so LCMs are never guessed.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product as cartesian

from sympy import Poly, QQ, Symbol
from sympy.core.intfunc import igcdex as _igcdex

from .core import FamilyMismatch, Semigroup
from .groups import FreeGroup, IntegerVectors, Integers, RationalPolynomials, ShiftGroup

_T = Symbol("T")


def igcdex(a, b):
    """(x, y, g) with a·x + b·y = g = gcd(a, b), as plain ints."""
    return tuple(int(v) for v in _igcdex(a, b))


class Action:
    """θ: P → End(G).  Subclasses implement the exact primitives below."""

    G = None
    P = None

    def apply(self, p, g):
        raise NotImplementedError

    def image_member(self, p, g) -> bool:
        return self.preimage(p, g) is not None

    def preimage(self, p, g):
        """h with θ_p(h) = g, or None."""
        raise NotImplementedError

    def index(self, p):
        """[G : θ_p(G)] as an int, or math.inf."""
        raise NotImplementedError

    def coset_rep(self, p, g):
        """Return ``(rep, k)`` with rep = g·θ_p(k) canonical for g·θ_p(G)."""
        raise NotImplementedError

    def coset_reps(self, p):
        """A complete set of representatives of G/θ_p(G) (finite index only)."""
        raise NotImplementedError

    def product_image_solve(self, p1, p2, d):
        """(h1, h2) with θ_{p1}(h1)·θ_{p2}(h2)⁻¹ = d, or None."""
        raise NotImplementedError

    def core_witness(self):
        """A non-trivial element of ⋂_{g,p} g·θ_p(G)·g⁻¹, or None if that
        intersection is trivial."""
        raise NotImplementedError

    describe_core = "intersection of the conjugated images g θ_p(G) g^-1 is trivial"


class DiagonalScaling(Action):
    """θ_p multiplies coordinate i of an integer vector by c_i(p).

    ``multipliers(p)`` returns ``(head, tail)``: c_i = head[i] for the listed
    coordinates and c_i = tail beyond them.  The multipliers must be
    multiplicative in p and turn LCMs in P into LCMs of integers, which makes
    the action order-respecting.
    """

    def __init__(self, G, P, multipliers, label=""):
        if not isinstance(G, (Integers, IntegerVectors)):
            raise TypeError("diagonal scaling acts on Z or Z^k")
        self.G, self.P = G, P
        self._mult = multipliers
        self.label = label

    @property
    def rank(self):
        return 1 if isinstance(self.G, Integers) else self.G.rank

    def coeff(self, p, i):
        head, tail = self._mult(p)
        return head[i] if i < len(head) else tail

    def _coords(self, g):
        return (g,) if isinstance(self.G, Integers) else g

    def _make(self, c):
        return self.G.from_coords(tuple(c))

    def apply(self, p, g):
        return self._make(a * self.coeff(p, i) for i, a in enumerate(self._coords(g)))

    def preimage(self, p, g):
        out = []
        for i, a in enumerate(self._coords(g)):
            c = self.coeff(p, i)
            if a % c:
                return None
            out.append(a // c)
        return self._make(out)

    def index(self, p):
        head, tail = self._mult(p)
        if self.rank is None:
            return math.inf if tail > 1 else math.prod(head)
        return math.prod(self.coeff(p, i) for i in range(self.rank))

    def coset_rep(self, p, g):
        rep, k = [], []
        for i, a in enumerate(self._coords(g)):
            c = self.coeff(p, i)
            r = a % c
            rep.append(r)
            k.append((r - a) // c)
        return self._make(rep), self._make(k)

    def coset_reps(self, p):
        n = self.index(p)
        if n == math.inf:
            raise ValueError("infinite index has no finite transversal")
        width = self.rank if self.rank is not None else len(self._mult(p)[0])
        ranges = [range(self.coeff(p, i)) for i in range(width)]
        return [self._make(c) for c in cartesian(*ranges)]

    def product_image_solve(self, p1, p2, d):
        h1, h2 = [], []
        for i, a in enumerate(self._coords(d)):
            c1, c2 = self.coeff(p1, i), self.coeff(p2, i)
            x, y, g = igcdex(c1, c2)
            if a % g:
                return None
            h1.append(x * (a // g))
            h2.append(-y * (a // g))
        return self._make(h1), self._make(h2)

    def core_witness(self):
        gens = [p for p in self.P.generators if p != self.P.identity]
        n = self.rank
        if n is None:
            # one coordinate past every listed head covers the tail
            n = max((len(self._mult(p)[0]) for p in gens), default=0) + 1
        for i in range(n):
            if all(self.coeff(p, i) == 1 for p in gens):
                e = [0] * (i + 1)
                e[i] = 1
                return self._make(e)
        return None

    describe_core = "intersection of the images θ_p(G) is trivial (abelian G)"


class ShiftAction(Action):
    """Shift of ⊕_{N^k} G_0 by N^k: (θ_p g)_r = g_{r-p} when r ≥ p, else 0."""

    def __init__(self, G: ShiftGroup, P):
        self.G, self.P = G, P

    def apply(self, p, g):
        return tuple((tuple(a + b for a, b in zip(pos, p)), v) for pos, v in g)

    def _above(self, pos, p):
        return all(a >= b for a, b in zip(pos, p))

    def preimage(self, p, g):
        if not all(self._above(pos, p) for pos, _ in g):
            return None
        return tuple((tuple(a - b for a, b in zip(pos, p)), v) for pos, v in g)

    def index(self, p):
        if all(a == 0 for a in p):
            return 1
        if self.G.k == 1 and self.G.modulus:
            return self.G.modulus ** p[0]
        return math.inf

    def coset_rep(self, p, g):
        low = tuple(item for item in g if not self._above(item[0], p))
        high = tuple(item for item in g if self._above(item[0], p))
        return low, self.preimage(p, self.G.inv(high))

    def coset_reps(self, p):
        n = self.index(p)
        if n == math.inf:
            raise ValueError("infinite index has no finite transversal")
        m = self.G.modulus
        positions = [(i,) for i in range(p[0])]
        return [self.G.from_dict(dict(zip(positions, vals)))
                for vals in cartesian(range(m), repeat=len(positions))]

    def product_image_solve(self, p1, p2, d):
        h1, h2 = {}, {}
        for pos, v in d:
            if self._above(pos, p1):
                h1[tuple(a - b for a, b in zip(pos, p1))] = v
            elif self._above(pos, p2):
                h2[tuple(a - b for a, b in zip(pos, p2))] = -v
            else:
                return None
        return self.G.from_dict(h1), self.G.from_dict(h2)

    def core_witness(self):
        return None

    describe_core = "shifted supports leave every finite set, so the images intersect trivially"


class PowerEndomorphisms(Action):
    """θ_i(a_k) = a_k^{m[i][k]} on the free group F_n, P = N^d.

    Requires: every row has an entry > 1, and m[i][k], m[j][k] are relatively
    prime for i ≠ j (this makes the action order-respecting).
    """

    def __init__(self, G: FreeGroup, m):
        m = tuple(tuple(int(v) for v in row) for row in m)
        if not m or any(len(row) != G.n for row in m):
            raise ValueError(f"need d rows of {G.n} exponents")
        for i, row in enumerate(m):
            if min(row) < 1:
                raise ValueError("exponents must be positive")
            if max(row) < 2:
                raise ValueError(f"endomorphism {i + 1} is the identity (needs an exponent > 1)")
        for i in range(len(m)):
            for j in range(i + 1, len(m)):
                for k in range(G.n):
                    if math.gcd(m[i][k], m[j][k]) != 1:
                        raise ValueError(
                            f"exponents of endomorphisms {i + 1} and {j + 1} on generator "
                            f"{G.names[k]} are not relatively prime")
        from .monoids import FreeAbelianMonoid

        self.G = G
        self.m = m
        self.P = FreeAbelianMonoid(len(m))
        self._powers = {}

    def powers(self, p):
        hit = self._powers.get(p)
        if hit is None:
            hit = self._powers[p] = tuple(
                math.prod(self.m[i][k] ** p[i] for i in range(len(self.m))) for k in range(self.G.n))
        return hit

    def apply(self, p, g):
        M = self.powers(p)
        return tuple((k, e * M[k]) for k, e in g)

    def preimage(self, p, g):
        M = self.powers(p)
        if any(e % M[k] for k, e in g):
            return None
        return tuple((k, e // M[k]) for k, e in g)

    def index(self, p):
        M = self.powers(p)
        if all(v == 1 for v in M):
            return 1
        return M[0] if self.G.n == 1 else math.inf

    def coset_rep(self, p, g):
        M = self.powers(p)
        out = list(g)
        while out:
            k, e = out[-1]
            r = e % M[k]
            if r:
                out[-1] = (k, r)
                break
            out.pop()
        rep = tuple(out)
        tail = self.G.mul(self.G.inv(rep), g)
        return rep, self.preimage(p, self.G.inv(tail))

    def coset_reps(self, p):
        if self.index(p) == math.inf:
            raise ValueError("infinite index has no finite transversal")
        A = self.powers(p)[0]
        return [((0, e),) if e else () for e in range(A)]

    def product_image_solve(self, p1, p2, d):
        A, B = self.powers(p1), self.powers(p2)
        s = list(d)
        n = len(s)
        pre = [True] * (n + 1)
        for j, (k, e) in enumerate(s):
            pre[j + 1] = pre[j] and e % A[k] == 0
        suf = [True] * (n + 1)
        for j in range(n - 1, -1, -1):
            k, e = s[j]
            suf[j] = suf[j + 1] and e % B[k] == 0
        G = self.G
        for j in range(n + 1):
            if pre[j] and suf[j]:
                u, w = tuple(s[:j]), tuple(s[j:])
                return self.preimage(p1, u), self.preimage(p2, G.inv(w))
            if j < n and pre[j] and suf[j + 1]:
                k, e = s[j]
                x, _, g = igcdex(A[k], B[k])
                if e % g == 0:
                    xe = x * A[k] * (e // g)
                    u = G.mul(tuple(s[:j]), ((k, xe),) if xe else ())
                    w = G.mul(((k, e - xe),) if e != xe else (), tuple(s[j + 1:]))
                    return self.preimage(p1, u), self.preimage(p2, G.inv(w))
        return None

    def fixed_letters(self):
        return [k for k in range(self.G.n) if all(row[k] == 1 for row in self.m)]

    def core_witness(self):
        fixed = self.fixed_letters()
        if not fixed:
            return None
        if len(fixed) < self.G.n:
            # a proper free factor has trivial normal core: conjugating by a
            # letter outside it leaves the factor
            return None
        return ((fixed[0], 1),)

    describe_core = ("normal core of the intersection of the images θ_p(G) "
                     "(a free factor on the never-raised letters) is trivial")


def _poly(c):
    return Poly(list(reversed([QQ(x.numerator, x.denominator) for x in c])) or [0], _T, domain=QQ)


def _unpoly(f):
    return RationalPolynomials.trim(Fraction(int(c.numerator), int(c.denominator))
                                    for c in reversed(f.all_coeffs()))


class PolynomialMultiplication(Action):
    """θ_p(f) = p·f on (Q[T], +), P = |p_1,...,p_d⟩ ≅ N^d on exponent vectors.

    The generating polynomials must be non-constant and pairwise coprime,
    which is what makes the action order-respecting.
    """

    def __init__(self, polys):
        from .monoids import FreeAbelianMonoid

        self.G = RationalPolynomials()
        self.polys = tuple(RationalPolynomials.trim(c) for c in polys)
        for c in self.polys:
            if len(c) < 2:
                raise ValueError("generating polynomials must be non-constant")
        for i in range(len(self.polys)):
            for j in range(i + 1, len(self.polys)):
                if _poly(self.polys[i]).gcd(_poly(self.polys[j])).degree() > 0:
                    raise ValueError(f"polynomials {i + 1} and {j + 1} are not relatively prime")
        self.P = FreeAbelianMonoid(len(self.polys))
        self._cache = {}
        self._apply_memo, self._pre_memo, self._rep_memo, self._solve_memo = {}, {}, {}, {}

    def multiplier(self, p):
        f = self._cache.get(p)
        if f is None:
            f = Poly(1, _T, domain=QQ)
            for c, e in zip(self.polys, p):
                f = f * _poly(c) ** e
            self._cache[p] = f
        return f

    def apply(self, p, g):
        if not g or not any(p):
            return g
        key = (p, g)
        hit = self._apply_memo.get(key)
        if hit is None:
            hit = self._apply_memo[key] = _unpoly(self.multiplier(p) * _poly(g))
        return hit

    def preimage(self, p, g):
        if not g or not any(p):
            return g
        key = (p, g)
        if key not in self._pre_memo:
            q, r = _poly(g).div(self.multiplier(p))
            self._pre_memo[key] = _unpoly(q) if r.is_zero else None
        return self._pre_memo[key]

    def index(self, p):
        return 1 if self.multiplier(p).degree() == 0 else math.inf

    def coset_rep(self, p, g):
        key = (p, g)
        if key not in self._rep_memo:
            q, r = _poly(g).div(self.multiplier(p))
            self._rep_memo[key] = _unpoly(r), _unpoly(-q)
        return self._rep_memo[key]

    def coset_reps(self, p):
        if self.index(p) != 1:
            raise ValueError("infinite index has no finite transversal")
        return [()]

    def product_image_solve(self, p1, p2, d):
        key = (p1, p2, d)
        if key not in self._solve_memo:
            A, B = self.multiplier(p1), self.multiplier(p2)
            s, t, g = A.gcdex(B)
            q, r = _poly(d).div(g)
            self._solve_memo[key] = None if not r.is_zero else (_unpoly(s * q), _unpoly(-(t * q)))
        return self._solve_memo[key]

    def core_witness(self):
        return None

    describe_core = "non-constant multipliers raise degrees, so the images intersect trivially"


def split_top_level(text, sep=","):
    """Split at separators not nested inside brackets."""
    depth, out, cur = 0, [], []
    for ch in text:
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return out


class SemidirectProduct(Semigroup):
    """G ⋊θ P with (s,p)(t,q) = (s·θ_p(t), pq).  P must have trivial units,
    so the units are G × {1}."""

    trivial_units = False
    gxp = True

    def __init__(self, action: Action, name=None):
        self.action = action
        self.G, self.P = action.G, action.P
        if self.P.identity is None or not self.P.trivial_units:
            raise ValueError("the acting monoid must have an identity and trivial units")
        self.name = name or f"{self.G.name} x| {self.P.name}"
        self.identity = (self.G.identity, self.P.identity)
        self._pid = self.P.identity
        self.unit_generators = tuple((g, self.P.identity) for g in self.G.generators)
        inverses = tuple((self.G.inv(g), self.P.identity) for g in self.G.generators)
        self.generators = (self.unit_generators + inverses
                           + tuple((self.G.identity, p) for p in self.P.generators))

    def contains(self, x):
        return (isinstance(x, tuple) and len(x) == 2
                and self.G.contains(x[0]) and self.P.contains(x[1]))

    def _mul(self, a, b):
        (g, p), (h, q) = a, b
        if p == self._pid:
            return (self.G.mul(g, h), q)
        return (self.G.mul(g, self.action.apply(p, h)), self.P._mul(p, q))

    def _left_divide(self, a, b):
        (g1, p1), (g2, p2) = a, b
        s = self.P._left_divide(p1, p2)
        if s is None:
            return None
        h = self.action.preimage(p1, self.G.mul(self.G.inv(g1), g2))
        return None if h is None else (h, s)

    def _right_lcm(self, a, b):
        (g1, p1), (g2, p2) = a, b
        q = self.P._right_lcm(p1, p2)
        if q is None:
            return None
        sol = self.action.product_image_solve(p1, p2, self.G.mul(self.G.inv(g1), g2))
        if sol is None:
            return None
        return (self.G.mul(g1, self.action.apply(p1, sol[0])), q)

    def is_unit(self, x):
        return x[1] == self.P.identity

    def _unit_inverse(self, x):
        return (self.G.inv(x[0]), x[1])

    def canonical_with_unit(self, x):
        g, p = x
        rep, k = self.action.coset_rep(p, g)
        return (rep, p), (k, self.P.identity)

    def left_unit_quotient(self, a, b):
        if a[1] != b[1]:
            return None
        return (self.G.mul(a[0], self.G.inv(b[0])), self.P.identity)

    def right_unit_quotient(self, a, b):
        if a[1] != b[1]:
            return None
        h = self.action.preimage(a[1], self.G.mul(self.G.inv(a[0]), b[0]))
        return None if h is None else (h, self.P.identity)

    def format_element(self, x):
        return f"({self.G.format(x[0])},{self.P.format_element(x[1])})"

    def parse_element(self, text):
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")")):
            raise FamilyMismatch(f"expected (g,p), got {text!r}")
        parts = split_top_level(text[1:-1])
        if len(parts) < 2:
            raise FamilyMismatch(f"expected (g,p), got {text!r}")
        # P-elements may themselves contain commas, e.g. (1,0) in N^2
        for cut in range(1, len(parts)):
            gtxt, ptxt = ",".join(parts[:cut]), ",".join(parts[cut:])
            try:
                g, p = self.G.parse(gtxt), self.P.parse_element(ptxt)
            except (ValueError, FamilyMismatch):
                continue
            x = (g, p)
            if self.contains(x):
                return x
        raise FamilyMismatch(f"cannot read {text!r} as an element of {self.name}")

    def sort_key(self, x):
        return (self.P.sort_key(x[1]), len(self.format_element(x)), self.format_element(x))

"""Elementary right LCM families: free monoids, free abelian monoids, N^x,
its finitely generated submonoids, and N^x without 1.

These also serve as the acting semigroup P of a semidirect product.
"""

from __future__ import annotations

import math
import re
from itertools import combinations

from .core import FamilyMismatch, Semigroup


class FreeMonoid(Semigroup):
    """Words over a finite alphabet under concatenation; elements are ``str``."""

    def __init__(self, alphabet="ab"):
        if not alphabet or len(set(alphabet)) != len(alphabet):
            raise ValueError("alphabet must be a non-empty string of distinct letters")
        self.alphabet = alphabet
        self.name = f"free monoid on {alphabet}"
        self.identity = ""
        self.generators = tuple(alphabet)

    def contains(self, x):
        return isinstance(x, str) and all(c in self.alphabet for c in x)

    def _mul(self, p, q):
        return p + q

    def _left_divide(self, p, r):
        return r[len(p):] if r.startswith(p) else None

    def _right_lcm(self, p, q):
        if q.startswith(p):
            return q
        if p.startswith(q):
            return p
        return None

    def format_element(self, x):
        return x if x else "1"

    def parse_element(self, text):
        text = text.strip()
        x = "" if text in ("1", "") else text
        self.check(x)
        return x

    def sort_key(self, x):
        return (len(x), x)


class FreeAbelianMonoid(Semigroup):
    """N^k with componentwise addition; elements are k-tuples of ints."""

    free_abelian = True

    def __init__(self, k=2):
        if k < 1:
            raise ValueError("rank must be positive")
        self.k = k
        self.name = f"N^{k}"
        self.identity = (0,) * k
        self.generators = tuple(tuple(int(i == j) for j in range(k)) for i in range(k))

    def contains(self, x):
        return (isinstance(x, tuple) and len(x) == self.k
                and all(isinstance(a, int) and a >= 0 for a in x))

    def _mul(self, p, q):
        return tuple(a + b for a, b in zip(p, q))

    def _left_divide(self, p, r):
        d = tuple(b - a for a, b in zip(p, r))
        return d if min(d) >= 0 else None

    def _right_lcm(self, p, q):
        return tuple(max(a, b) for a, b in zip(p, q))

    def format_element(self, x):
        return "(" + ",".join(map(str, x)) + ")" if self.k > 1 else str(x[0])

    def parse_element(self, text):
        nums = [int(t) for t in re.findall(r"-?\d+", text)]
        x = tuple(nums)
        self.check(x)
        return x

    def sort_key(self, x):
        return (sum(x), x)


class Naturals(Semigroup):
    """The multiplicative monoid N^x of positive integers.

    ``ball_primes`` are the generators used for ball enumeration; the monoid
    itself is free abelian on all primes.
    """

    free_abelian = True

    def __init__(self, ball_primes=(2, 3, 5)):
        self.name = "N^x"
        self.identity = 1
        self.generators = tuple(ball_primes)

    def contains(self, x):
        return isinstance(x, int) and not isinstance(x, bool) and x >= 1

    def _mul(self, p, q):
        return p * q

    def _left_divide(self, p, r):
        return r // p if r % p == 0 else None

    def _right_lcm(self, p, q):
        return p * q // math.gcd(p, q)

    def parse_element(self, text):
        x = int(text.strip())
        self.check(x)
        return x

    def sort_key(self, x):
        return (x,)


class NaturalsNoOne(Semigroup):
    """N^x \\ {1}: no identity, hence no units.

    Right LCMs are answered for ⟨p⟩ = {p} ∪ pS, i.e. in the unitisation.
    """

    def __init__(self, ball_primes=(2, 3, 5)):
        self.name = "N^x minus 1"
        self.identity = None
        self.generators = tuple(ball_primes)

    def contains(self, x):
        return isinstance(x, int) and not isinstance(x, bool) and x >= 2

    def _mul(self, p, q):
        return p * q

    def _left_divide(self, p, r):
        if r % p == 0 and r // p >= 2:
            return r // p
        return None

    def _right_lcm(self, p, q):
        return p * q // math.gcd(p, q)

    def parse_element(self, text):
        x = int(text.strip())
        self.check(x)
        return x

    def sort_key(self, x):
        return (x,)


class GeneratedSubmonoid(Semigroup):
    """The unital submonoid |g_1,...,g_d⟩ of N^x for pairwise coprime g_i > 1.

    Coprimality makes exponent vectors unique, so the monoid is ≅ N^d and
    LCMs are componentwise maxima of exponents.
    """

    free_abelian = True

    def __init__(self, gens=(2, 3)):
        gens = tuple(int(g) for g in gens)
        if any(g < 2 for g in gens):
            raise ValueError("generators must exceed 1")
        for a, b in combinations(gens, 2):
            if math.gcd(a, b) != 1:
                raise ValueError(f"generators {a} and {b} are not relatively prime")
        self.gens = gens
        self.name = "|" + ",".join(map(str, gens)) + ">"
        self.identity = 1
        self.generators = gens

    def exponents(self, x):
        """Exponent vector of x over the generators, or None if x is outside."""
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            return None
        out = []
        for g in self.gens:
            e = 0
            while x % g == 0:
                x //= g
                e += 1
            out.append(e)
        return tuple(out) if x == 1 else None

    def from_exponents(self, exps):
        out = 1
        for g, e in zip(self.gens, exps):
            out *= g ** e
        return out

    def contains(self, x):
        return self.exponents(x) is not None

    def _mul(self, p, q):
        return p * q

    def _left_divide(self, p, r):
        if r % p:
            return None
        s = r // p
        return s if self.contains(s) else None

    def _right_lcm(self, p, q):
        return p * q // math.gcd(p, q)

    def parse_element(self, text):
        x = int(text.strip())
        if not self.contains(x):
            raise FamilyMismatch(f"{x} is not in {self.name}")
        return x

    def sort_key(self, x):
        return (x,)


__all__ = ["FreeMonoid", "FreeAbelianMonoid", "Naturals", "NaturalsNoOne",
           "GeneratedSubmonoid"]

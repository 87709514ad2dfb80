"""Named semigroup configurations shipped with the toolkit.

Each entry records the verdicts the theory predicts (``expect``); the CLI
uses them to decide its exit code and the acceptance suite to reproduce the
claims table.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict

from .automata import SelfSimilarGroup, ZappaSzep, fixed_letter_automaton, lamplighter, odometer
from .groups import FreeGroup, IntegerVectors, Integers, ShiftGroup
from .monoids import (FreeAbelianMonoid, FreeMonoid, GeneratedSubmonoid, Naturals,
                      NaturalsNoOne)
from .semidirect import (DiagonalScaling, PolynomialMultiplication, PowerEndomorphisms,
                         ShiftAction, SemidirectProduct)


@dataclass
class Entry:
    name: str
    summary: str
    build: Callable
    expect: Dict[str, str] = field(default_factory=dict)


def _zxn():
    P = Naturals(ball_primes=(2, 3))
    return SemidirectProduct(DiagonalScaling(Integers(), P, lambda p: ((p,), 1), "multiplication"),
                             name="Z x| N^x")


def _sum_z_23():
    P = GeneratedSubmonoid((2, 3))

    def mult(p):
        a = P.exponents(p)[0]
        return (p,), 2 ** a

    return SemidirectProduct(DiagonalScaling(IntegerVectors(None), P, mult, "theta_2 = 2, theta_3 on coordinate 0"),
                             name="(+)Z x| |2,3>")


def _z2_partial():
    P = FreeAbelianMonoid(1)
    return SemidirectProduct(DiagonalScaling(IntegerVectors(2), P, lambda p: ((2 ** p[0], 1), 1),
                                             "doubling the first coordinate"),
                             name="Z^2 x| N (first coordinate doubled)")


def _shift(k=2, modulus=0):
    return SemidirectProduct(ShiftAction(ShiftGroup(k, modulus), FreeAbelianMonoid(k)),
                             name=f"shift on (+)_{{N^{k}}} {'Z' if not modulus else f'Z/{modulus}'}")


def _f2():
    return SemidirectProduct(PowerEndomorphisms(FreeGroup(2), [(2, 1), (1, 2)]),
                             name="F_2 x| N^2 (a->a^2, b->b^2)")


def _f3():
    return SemidirectProduct(PowerEndomorphisms(FreeGroup(3), [(2, 1, 3), (1, 5, 1)]),
                             name="F_3 x| N^2")


def _poly():
    return SemidirectProduct(PolynomialMultiplication([(0, 1), (1, 1)]), name="Q[T] x| |T,T+1>")


CATALOG: Dict[str, Entry] = {}


def _register(name, summary, build, **expect):
    CATALOG[name] = Entry(name, summary, build, {k.replace("_", "-"): v for k, v in expect.items()})


_register("naturals", "multiplicative monoid of positive integers", lambda: Naturals((2, 3, 5)),
          C1="holds", C2="holds", D1="holds", strong_effectiveness="holds")
_register("naturals-no-one", "positive integers without 1 (no identity, no units)",
          lambda: NaturalsNoOne((2, 3, 5)))
_register("n23", "submonoid of N^x generated by 2 and 3", lambda: GeneratedSubmonoid((2, 3)))
_register("free-monoid-ab", "free monoid on a, b", lambda: FreeMonoid("ab"))
_register("free-abelian-2", "free abelian monoid N^2", lambda: FreeAbelianMonoid(2))
_register("zxn", "Z x| N^x with theta_p(g) = pg", _zxn,
          C1="holds", D1="holds", strong_effectiveness="holds", effectiveness="holds", D3="fails")
_register("sum-z-23", "(+)_N Z x| |2,3>, theta_2 doubles, theta_3 triples coordinate 0", _sum_z_23,
          C1="holds", D1="holds", strong_effectiveness="holds", effectiveness="holds", D3="fails")
_register("shift-n2", "shift action of N^2 on (+)_{N^2} Z", _shift,
          C1="holds", D1="holds", strong_effectiveness="holds", effectiveness="holds", D3="holds")
_register("shift-n-z2", "shift action of N on (+)_N Z/2 (finite index)", lambda: _shift(1, 2),
          C1="holds", D1="holds", strong_effectiveness="holds", D3="fails")
_register("f2", "F_2 x| N^2 with theta_1(a)=a^2, theta_2(b)=b^2", _f2,
          C1="holds", D1="holds", strong_effectiveness="holds", effectiveness="holds", D3="holds")
_register("f3", "F_3 x| N^2 with exponent rows (2,1,3) and (1,5,1)", _f3,
          C1="holds", D1="holds", strong_effectiveness="holds", D3="holds")
_register("poly-q", "Q[T] x| |T, T+1> acting by multiplication", _poly,
          C1="holds", D1="holds", strong_effectiveness="holds", effectiveness="holds", D3="holds")
_register("z2-partial", "Z^2 x| N doubling only the first coordinate (not effective)", _z2_partial,
          C1="holds", D1="holds", strong_effectiveness="fails", effectiveness="fails")
_register("odometer", "X* |><| G for the binary adding machine", lambda: ZappaSzep(odometer()),
          C1="holds", D1="holds", recurrent="holds")
_register("lamplighter", "X* |><| G for the lamplighter automaton", lambda: ZappaSzep(lamplighter()),
          D1="holds")
_register("fixed-letter", "X* |><| G where g fixes 0 with trivial restriction",
          lambda: ZappaSzep(fixed_letter_automaton()),
          D1="holds", strong_effectiveness="fails", right_cancellative="fails")


@lru_cache(maxsize=None)
def get(name: str):
    """Build (once) the semigroup registered under ``name``."""
    try:
        entry = CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}; known: {', '.join(CATALOG)}") from None
    return entry.build()


def automaton_of(name: str) -> SelfSimilarGroup:
    S = get(name)
    if not isinstance(S, ZappaSzep):
        raise TypeError(f"{name} is not defined by an automaton")
    return S.group

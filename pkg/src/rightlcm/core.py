"""Semigroup interface shared by every family, plus the derived operations
(ideal classes, shortlex balls, residual non-emptiness) used by the upper layers.

Elements are plain hashable Python values owned by their family (ints, tuples,
strings, ...).  A right LCM outcome is either an element ``r`` with
``pS ∩ qS = rS`` or ``None`` for disjoint ideals.
"""

from __future__ import annotations

import enum
import os
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Iterable, Optional, Sequence


class FamilyMismatch(TypeError):
    """An element does not belong to the semigroup it was handed to."""


class NotAUnit(ValueError):
    pass


class UnsupportedFamily(NotImplementedError):
    """Raised instead of guessing when a family lacks an exact solver."""


class BudgetExhausted(RuntimeError):
    pass


class Status(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNKNOWN = "unknown"


@dataclass
class Verdict:
    """Outcome of a budgeted check.

    ``witness`` carries whatever makes the verdict checkable: the witness for
    HOLDS, the counterexample for FAILS, or search statistics for UNKNOWN.
    ``basis`` names the argument that produced the verdict (a structural
    criterion or a bounded search).
    """

    status: Status
    condition: str = ""
    witness: Any = None
    basis: str = ""
    budget: Optional["SearchBudget"] = None

    @classmethod
    def holds(cls, witness=None, **kw):
        return cls(Status.HOLDS, witness=witness, **kw)

    @classmethod
    def fails(cls, witness=None, **kw):
        return cls(Status.FAILS, witness=witness, **kw)

    @classmethod
    def unknown(cls, witness=None, **kw):
        return cls(Status.UNKNOWN, witness=witness, **kw)

    @property
    def holds_(self) -> bool:
        return self.status is Status.HOLDS

    @property
    def fails_(self) -> bool:
        return self.status is Status.FAILS


@dataclass(frozen=True)
class SearchBudget:
    """Limits for enumeration-based checks.

    Enumeration is shortlex over the family's registered generators, so every
    counterexample is reproducible from the budget alone.
    """

    radius: int = 4
    max_candidates: int = 20000
    depth: int = 4
    group_radius: int = 4
    seed: int = 0

    @classmethod
    def from_env(cls, **overrides) -> "SearchBudget":
        """Default budget, with ``RIGHTLCM_BUDGET`` overriding max_candidates."""
        kw = {}
        env = os.environ.get("RIGHTLCM_BUDGET")
        if env:
            kw["max_candidates"] = int(env)
        kw.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**kw)

    def describe(self) -> str:
        return (f"radius={self.radius} candidates={self.max_candidates} "
                f"depth={self.depth} group_radius={self.group_radius}")


class Semigroup(ABC):
    """A left cancellative semigroup with decidable right LCMs.

    Subclasses implement the underscore methods; the public methods validate
    membership first.  ``identity`` is ``None`` for families without one.
    """

    name = "semigroup"
    identity: Any = None
    #: True when the only unit is the identity (or there is no identity)
    trivial_units = True
    generators: tuple = ()
    unit_generators: tuple = ()

    # -- membership -------------------------------------------------------
    @abstractmethod
    def contains(self, x) -> bool:
        ...

    def check(self, *xs):
        for x in xs:
            if not self.contains(x):
                raise FamilyMismatch(f"{x!r} is not an element of {self.name}")

    @property
    def has_identity(self) -> bool:
        return self.identity is not None

    # -- operations -------------------------------------------------------
    @abstractmethod
    def _mul(self, p, q):
        ...

    @abstractmethod
    def _left_divide(self, p, r):
        """Return s with ps = r, or None."""

    @abstractmethod
    def _right_lcm(self, p, q):
        """Return some r with pS ∩ qS = rS, or None when disjoint."""

    def multiply(self, p, q):
        self.check(p, q)
        return self._mul(p, q)

    def product(self, *xs):
        if not xs:
            if self.identity is None:
                raise ValueError("empty product in a semigroup without identity")
            return self.identity
        out = xs[0]
        for x in xs[1:]:
            out = self._mul(out, x)
        return out

    def left_divide(self, p, r):
        self.check(p, r)
        return self._left_divide(p, r)

    def right_lcm(self, p, q):
        self.check(p, q)
        r = self._right_lcm(p, q)
        return None if r is None else self.canonical(r)

    def is_unit(self, p) -> bool:
        return self.identity is not None and p == self.identity

    def unit_inverse(self, x):
        if not self.is_unit(x):
            raise NotAUnit(f"{self.format_element(x)} is not a unit of {self.name}")
        return self._unit_inverse(x)

    def _unit_inverse(self, x):
        return x

    # -- ideal classes ----------------------------------------------------
    def canonical_with_unit(self, p):
        """Return ``(c, u)`` with ``c = p·u``, ``u`` a unit, ``c`` canonical for pS."""
        return p, self.identity

    def canonical(self, p):
        return self.canonical_with_unit(p)[0]

    def left_unit_quotient(self, p, q):
        """A unit x with p = x·q, or None."""
        return self.identity if p == q else None

    def right_unit_quotient(self, p, q):
        """A unit x with q = p·x, or None (so pS = qS iff this is not None)."""
        s = self._left_divide(p, q)
        if s is not None and self.is_unit(s):
            return s
        return None

    # -- presentation -----------------------------------------------------
    def format_element(self, x) -> str:
        return str(x)

    def parse_element(self, text: str):
        raise UnsupportedFamily(f"{self.name} has no element parser")

    def sort_key(self, x):
        s = self.format_element(x)
        return (len(s), s)

    def random_element(self, rng: random.Random, size: int = 3):
        gens = list(self.generators) + list(self.unit_generators)
        if not gens:
            raise ValueError(f"{self.name} has no generators")
        n = rng.randint(0 if self.identity is not None else 1, size)
        if n == 0:
            return self.identity
        return self.product(*(rng.choice(gens) for _ in range(n)))

    def random_unit(self, rng: random.Random, size: int = 3):
        if not self.unit_generators:
            return self.identity
        out = self.identity
        for _ in range(rng.randint(0, size)):
            u = rng.choice(self.unit_generators)
            if rng.random() < 0.5:
                u = self._unit_inverse(u)
            out = self._mul(out, u)
        return out

    def residual_shortcut(self, sigma, obstacles) -> Optional[Verdict]:
        """Family-specific exact answer for residual queries, if any."""
        return None

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


# ---------------------------------------------------------------------------
# derived operations

def ideal_class(S: Semigroup, p):
    """Canonical representative of pS."""
    S.check(p)
    return S.canonical(p)


def ideal_equal(S: Semigroup, p, q) -> bool:
    S.check(p, q)
    return S.right_unit_quotient(p, q) is not None


def in_ideal(S: Semigroup, p, x) -> bool:
    """Whether x ∈ pS."""
    return S._left_divide(p, x) is not None


def shortlex_ball(S: Semigroup, radius: int, generators: Optional[Sequence] = None) -> list:
    """Elements reachable by generator words of length ≤ radius, in shortlex order.

    Families without identity start from words of length one.
    """
    gens = list(S.generators if generators is None else generators)
    if not gens and S.identity is None:
        raise ValueError(f"{S.name} has an empty generator set")
    seen = {}
    if S.identity is not None:
        frontier = [S.identity]
        start = 0
    else:
        frontier = []
        for g in gens:
            if g not in seen:
                seen[g] = None
                frontier.append(g)
        start = 1
    for x in frontier:
        seen.setdefault(x, None)
    for _ in range(start, radius):
        nxt = []
        for x in frontier:
            for g in gens:
                y = S._mul(x, g)
                if y not in seen:
                    seen[y] = None
                    nxt.append(y)
        frontier = nxt
    if radius == 0 and S.identity is None:
        return []
    return list(seen)


def unit_ball(S: Semigroup, radius: int) -> list:
    """Units reachable by words of length ≤ radius in the unit generators and inverses."""
    if S.identity is None:
        return []
    gens = []
    for u in S.unit_generators:
        for v in (u, S._unit_inverse(u)):
            if v not in gens:
                gens.append(v)
    if not gens:
        return [S.identity]
    return shortlex_ball(S, radius, gens)


def residual_nonempty(S: Semigroup, sigma, obstacles: Iterable, budget: Optional[SearchBudget] = None) -> Verdict:
    """Decide whether σS ∩ (S \\ ∪ q_i S) is non-empty.

    Strategy: containment pruning, then the family shortcut (for monoids the
    answer is exact: σ itself is a witness unless σ ∈ q_i S for some i), then
    a budgeted shortlex search over σ·t.
    """
    budget = budget or SearchBudget()
    obstacles = list(obstacles)
    S.check(sigma, *obstacles)
    cond = "residual"
    for q in obstacles:
        s = S._left_divide(q, sigma)
        if s is not None:
            return Verdict.fails((q, s), condition=cond, basis="sigma lies in an obstacle ideal", budget=budget)
    if S.identity is not None:
        return Verdict.holds(sigma, condition=cond, basis="sigma itself avoids every obstacle", budget=budget)
    shortcut = S.residual_shortcut(sigma, obstacles)
    if shortcut is not None:
        return shortcut
    count = 0
    for t in shortlex_ball(S, budget.radius):
        w = S._mul(sigma, t)
        count += 1
        if not any(S._left_divide(q, w) is not None for q in obstacles):
            return Verdict.holds(w, condition=cond, basis="shortlex search", budget=budget)
        if count >= budget.max_candidates:
            break
    return Verdict.unknown({"candidates": count}, condition=cond, basis="shortlex search", budget=budget)


# ---------------------------------------------------------------------------
# unitisation

class _One:
    """The adjoined identity of a unitisation."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ONE"

    def __reduce__(self):
        return (_One, ())


ONE = _One()


class Unitisation(Semigroup):
    """S̃ = S ∪ {1} for a family without identity.

    The base family's ``_right_lcm`` must answer for the ideals ⟨p⟩ = pS̃, which
    is what makes LCMs in S and S̃ coincide.
    """

    trivial_units = True

    def __init__(self, base: Semigroup):
        if base.identity is not None:
            raise ValueError(f"{base.name} already has an identity")
        self.base = base
        self.name = f"unitisation({base.name})"
        self.identity = ONE
        self.generators = tuple(base.generators)

    def contains(self, x):
        return x is ONE or self.base.contains(x)

    def _mul(self, p, q):
        if p is ONE:
            return q
        if q is ONE:
            return p
        return self.base._mul(p, q)

    def _left_divide(self, p, r):
        if p is ONE:
            return r
        if r is ONE:
            return None
        if p == r:
            return ONE
        return self.base._left_divide(p, r)

    def _right_lcm(self, p, q):
        if p is ONE:
            return q
        if q is ONE:
            return p
        return self.base._right_lcm(p, q)

    def format_element(self, x):
        return "1" if x is ONE else self.base.format_element(x)

    def parse_element(self, text):
        if text.strip() == "1":
            try:
                x = self.base.parse_element(text)
            except (ValueError, FamilyMismatch):
                return ONE
            if self.base.contains(x):
                return x
            return ONE
        return self.base.parse_element(text)

    def sort_key(self, x):
        return (0, "") if x is ONE else self.base.sort_key(x)


def monoid_of(S: Semigroup) -> Semigroup:
    """S itself when it has an identity, otherwise its unitisation."""
    return S if S.identity is not None else Unitisation(S)

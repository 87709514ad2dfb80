"""Budgeted checkers for the structural conditions on a right LCM semigroup,
the congruence quotient by left unit multiplication, and the rebuilding of S
as a semidirect product of its units by that quotient.

Verdict discipline: structural criteria give unconditional HOLDS/FAILS;
searches over infinite data give FAILS only with a counterexample that has
been replayed, and UNKNOWN otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import islice
from typing import Callable, Dict, List, Optional

from .automata import SelfSimilarGroup, ZappaSzep
from .core import (SearchBudget, Semigroup, Status, UnsupportedFamily, Verdict,
                   residual_nonempty, shortlex_ball, unit_ball)
from .monoids import Naturals
from .semidirect import DiagonalScaling, SemidirectProduct


class ReplayError(AssertionError):
    """A counterexample failed to replay: the checker itself is wrong."""


def _budget(budget):
    return budget or SearchBudget.from_env()


def _sample(S, budget, radius=None):
    return list(islice(shortlex_ball(S, budget.radius if radius is None else radius),
                       budget.max_candidates))


def _units(S, budget, limit=None):
    if isinstance(S, ZappaSzep):
        us = [("", g) for g in S.group.ball(budget.group_radius)]
    else:
        us = unit_ball(S, budget.group_radius)
    return us if limit is None else us[:limit]


def _nontrivial_units(S, budget, limit=None):
    return [u for u in _units(S, budget, limit) if u != S.identity]


def _is_gxp(S):
    return isinstance(S, SemidirectProduct)


def _p_has_C2(S):
    # commutative acting monoids with trivial units satisfy (C2) trivially
    return _is_gxp(S) and S.P.trivial_units and getattr(S.P, "free_abelian", False)


def _no_units(S):
    return S.identity is None or (S.trivial_units and not S.unit_generators)


# ---------------------------------------------------------------------------
# (C1) / (C2)

def check_C1(S: Semigroup, budget: SearchBudget = None) -> Verdict:
    """a·S* ⊆ S*·a for every a."""
    budget = _budget(budget)
    cond = "C1"
    if _no_units(S):
        return Verdict.holds(None, condition=cond, basis="only the identity is a unit", budget=budget)
    if _is_gxp(S) and S.P.trivial_units:
        return Verdict.holds("(g,p)(h,1) = (g theta_p(h) g^-1, 1)(g,p)", condition=cond,
                             basis="the acting monoid has trivial units, so every "
                                   "right unit factor moves to the left", budget=budget)
    if isinstance(S, ZappaSzep):
        rec = check_recurrent(S.group, budget)
        if rec.holds_:
            return Verdict.holds(rec.witness, condition=cond,
                                 basis="recurrent self-similar action", budget=budget)
    return _sampled_unit_commutation(S, budget, cond, left=True)


def check_C2(S: Semigroup, budget: SearchBudget = None) -> Verdict:
    """S*·a ⊆ a·S* for every a."""
    budget = _budget(budget)
    cond = "C2"
    if _no_units(S):
        return Verdict.holds(None, condition=cond, basis="only the identity is a unit", budget=budget)
    return _sampled_unit_commutation(S, budget, cond, left=False)


def _sampled_unit_commutation(S, budget, cond, left):
    exact = not isinstance(S, ZappaSzep) or not left
    units = _nontrivial_units(S, budget, limit=64)
    tried = 0
    for a in _sample(S, budget):
        for x in units:
            tried += 1
            if left:
                ok = S.left_unit_quotient(S._mul(a, x), a) is not None
            else:
                ok = S.right_unit_quotient(a, S._mul(x, a)) is not None
            if not ok and exact:
                _replay_unit_commutation(S, a, x, left)
                return Verdict.fails({"a": a, "x": x}, condition=cond,
                                     basis="explicit non-commuting pair", budget=budget)
            if tried >= budget.max_candidates:
                break
    return Verdict.unknown({"pairs checked": tried}, condition=cond,
                           basis="no counterexample among sampled pairs", budget=budget)


def _replay_unit_commutation(S, a, x, left):
    if left:
        bad = S.left_unit_quotient(S.multiply(a, x), a) is None
    else:
        bad = S.right_unit_quotient(a, S.multiply(x, a)) is None
    if not bad or not S.is_unit(x):
        raise ReplayError(f"counterexample {a!r}, {x!r} does not replay")


# ---------------------------------------------------------------------------
# (D1), effectiveness, strong effectiveness

def _moves(S, x, p):
    """Whether x·pS ≠ pS (exact for every family)."""
    return S.right_unit_quotient(p, S._mul(x, p)) is None


def check_D1(S: Semigroup, budget: SearchBudget = None) -> Verdict:
    """xX ∩ X ≠ ∅ implies xX = X for units x and principal ideals X."""
    budget = _budget(budget)
    cond = "D1"
    if _no_units(S):
        return Verdict.holds(None, condition=cond, basis="only the identity is a unit", budget=budget)
    structural = None
    if _p_has_C2(S):
        structural = ("for G x| P with P satisfying C2, a unit-translate of (g,p)S meets (g,p)S "
                      "only when g^-1 h theta_x(g) lies in theta_p(G), and then they coincide")
    elif isinstance(S, ZappaSzep):
        structural = "in X* |><| G a unit-translate meeting (w,g)S must fix w, hence equals it"
    # sample replay: a structural verdict is never reported against a counterexample
    units = _nontrivial_units(S, budget, limit=32)
    for p in _sample(S, budget, radius=min(budget.radius, 3)):
        for x in units:
            xp = S._mul(x, p)
            if S._right_lcm(xp, p) is not None and S.right_unit_quotient(p, xp) is None:
                return Verdict.fails({"x": x, "p": p}, condition=cond,
                                     basis="unit-translate meets but differs", budget=budget)
    if structural:
        return Verdict.holds(None, condition=cond, basis=structural, budget=budget)
    return Verdict.unknown({"checked": "sampled ideals"}, condition=cond,
                           basis="no counterexample among sampled pairs", budget=budget)


def check_effectiveness(S: Semigroup, budget: SearchBudget = None) -> Verdict:
    """Every unit x ≠ 1 moves some principal right ideal.

    For G ⋊ P (P satisfying C2) the units fixing every ideal form the
    intersection of the stabilisers g θ_p(G) g⁻¹, which the action decides
    exactly.  Elsewhere effectiveness quantifies over all units, so the
    result is UNKNOWN.  The witness records, for sampled units, an ideal
    each one was seen to move (``moved``) and those seen to move none in
    the ball (``unmoved``).
    """
    budget = _budget(budget)
    cond = "effectiveness"
    if _no_units(S):
        return Verdict.holds(None, condition=cond, basis="only the identity is a unit", budget=budget)
    ball = _sample(S, budget)
    moved, unmoved = {}, []
    for x in _nontrivial_units(S, budget, limit=48):
        hit = next((p for p in ball if _moves(S, x, p)), None)
        if hit is None:
            unmoved.append(x)
        else:
            moved[x] = hit
    evidence = {"moved": moved, "unmoved": unmoved}
    if _p_has_C2(S):
        h = S.action.core_witness()
        basis = ("a unit fixes every ideal iff it lies in every stabiliser g theta_p(G) g^-1; here: "
                 + S.action.describe_core)
        if h is None:
            return Verdict.holds(evidence, condition=cond, basis=basis, budget=budget)
        x = (h, S.P.identity)
        _replay_fixing_unit(S, x, budget)
        return Verdict.fails({"unit": x}, condition=cond, basis=basis, budget=budget)
    return Verdict.unknown(evidence, condition=cond, basis="bounded search for moved ideals", budget=budget)


def check_strong_effectiveness(S: Semigroup, budget: SearchBudget = None) -> Verdict:
    """For all units x ≠ 1 and p there is q ∈ pS with x·qS ≠ qS."""
    budget = _budget(budget)
    cond = "strong-effectiveness"
    if _no_units(S):
        return Verdict.holds(None, condition=cond, basis="only the identity is a unit, nothing to move",
                             budget=budget)
    if _p_has_C2(S):
        h = S.action.core_witness()
        basis = ("for G x| P with P satisfying C2 this is equivalent to effectiveness, i.e. to the "
                 "intersection of the stabilisers g theta_p(G) g^-1 being trivial; here: "
                 + S.action.describe_core)
        if h is None:
            return Verdict.holds(None, condition=cond, basis=basis, budget=budget)
        x = (h, S.P.identity)
        _replay_fixing_unit(S, x, budget)
        return Verdict.fails({"unit": x}, condition=cond,
                             basis="this unit fixes every principal right ideal", budget=budget)
    if isinstance(S, ZappaSzep):
        found = _fixed_trivial_restriction(S.group, budget.depth, budget.group_radius)
        basis = ("X* |><| G is strongly effective iff no g != 1 and word w have "
                 "g.w = w with trivial restriction g|_w")
        if found is not None:
            g, w = found
            _replay_fixing_unit(S, ("", g), budget, prefix=w)
            return Verdict.fails({"g": g, "w": w}, condition=cond, basis=basis, budget=budget)
        return Verdict.unknown({"depth": budget.depth, "group radius": budget.group_radius},
                               condition=cond, basis=basis + " (none up to depth)", budget=budget)
    # generic: each sampled unit must move an ideal inside each sampled pS
    ball = _sample(S, budget, radius=min(budget.radius, 3))
    for x in _nontrivial_units(S, budget, limit=16):
        for p in ball[:64]:
            if not any(_moves(S, x, S._mul(p, t)) for t in ball):
                return Verdict.unknown({"unit": x, "p": p}, condition=cond,
                                       basis="no moved ideal found inside pS within the ball",
                                       budget=budget)
    return Verdict.unknown({}, condition=cond, basis="every sampled case witnessed", budget=budget)


def _replay_fixing_unit(S, x, budget, prefix=None):
    """Check on a ball that x fixes every ideal q S (inside prefix·S if given)."""
    if not S.is_unit(x) or x == S.identity:
        raise ReplayError("witness is not a non-trivial unit")
    for t in _sample(S, budget, radius=min(budget.radius, 3))[:400]:
        q = t if prefix is None else S._mul((prefix, S.group.identity), t)
        if _moves(S, x, q):
            raise ReplayError(f"unit moves {S.format_element(q)}")


def _fixed_trivial_restriction(G: SelfSimilarGroup, depth, radius):
    """Shortlex search for (g ≠ 1, w) with g·w = w and g|_w = 1."""
    words = [""]
    for n in range(1, depth + 1):
        words += ["".join(t) for t in _words(G.alphabet, n)]
    for g in G.ball(radius):
        if g.is_identity():
            continue
        for w in words[1:]:
            if G.act(g, w) == w and G.restrict(g, w).is_identity():
                return g, w
    return None


def _words(alphabet, n):
    from itertools import product

    return product(alphabet, repeat=n)


def check_selfsim_right_cancellative(G: SelfSimilarGroup, depth: int = 4,
                                     budget: SearchBudget = None) -> Verdict:
    """X* |><| G is right cancellative iff no (g ≠ 1, w) has g·w = w, g|_w = 1.

    Only words up to ``depth`` are searched, so the best positive answer is
    UNKNOWN with the depth attained.
    """
    budget = _budget(budget)
    cond = "right-cancellative"
    found = _fixed_trivial_restriction(G, depth, budget.group_radius)
    if found is not None:
        g, w = found
        if not (G.act(g, w) == w and G.restrict(g, w).is_identity() and not g.is_identity()):
            raise ReplayError("fixed-point witness does not replay")
        return Verdict.fails({"g": g, "w": w}, condition=cond,
                             basis="g fixes w with trivial restriction", budget=budget)
    return Verdict.unknown({"depth": depth, "group radius": budget.group_radius}, condition=cond,
                           basis="no fixed word with trivial restriction up to depth", budget=budget)


def check_recurrent(G: SelfSimilarGroup, budget: SearchBudget = None) -> Verdict:
    """Transitive on X, and every restriction map φ_x: G_x → G surjective.

    φ_x is a homomorphism, so preimages of the generators prove surjectivity.
    """
    budget = _budget(budget)
    cond = "recurrent"
    k = len(G.alphabet)
    orbit, stack = {0}, [0]
    while stack:
        x = stack.pop()
        for g in G.generators:
            for y in (g.perms[0][x], G.inv(g).perms[0][x]):
                if y not in orbit:
                    orbit.add(y)
                    stack.append(y)
    if len(orbit) != k:
        return Verdict.fails({"orbit of " + G.alphabet[0]: "".join(sorted(G.alphabet[i] for i in orbit))},
                             condition=cond, basis="not transitive on the alphabet", budget=budget)
    ball = G.ball(budget.group_radius)
    witnesses = {}
    for x in G.alphabet:
        for name, s in zip(G.generator_names, G.generators):
            hit = next((g for g in ball if G.act(g, x) == x and G.restrict(g, x) == s), None)
            if hit is None:
                return Verdict.unknown({"letter": x, "generator": name}, condition=cond,
                                       basis="no preimage under restriction within the group ball",
                                       budget=budget)
            witnesses[(x, name)] = G.format(hit)
    return Verdict.holds(witnesses, condition=cond,
                         basis="transitive, and every generator is a restriction of a stabilising element",
                         budget=budget)


# ---------------------------------------------------------------------------
# (D3) and (D2)

def check_D3(S: Semigroup, budget: SearchBudget = None) -> Verdict:
    """For G x| P with P free abelian: (D3) iff every [G : θ_p(G)] is infinite."""
    budget = _budget(budget)
    cond = "D3"
    if not (_is_gxp(S) and getattr(S.P, "free_abelian", False)):
        raise UnsupportedFamily("the D3 criterion needs G x| P with P free abelian")
    act = S.action
    basis = "for P free abelian, D3 holds iff theta_p(G) has infinite index for every p != 1"
    for q in S.P.generators:
        if q == S.P.identity:
            continue
        n = act.index(q)
        if n != math.inf:
            reps = act.coset_reps(q)
            _replay_coset_cover(S, q, reps, budget)
            return Verdict.fails({"q": q, "index": n, "coset representatives": reps},
                                 condition=cond, basis=basis, budget=budget)
    if isinstance(S.P, Naturals):
        return Verdict.unknown({"checked generators": S.P.generators}, condition=cond,
                               basis=basis + " (only the listed primes were inspected)", budget=budget)
    return Verdict.holds({"generators": S.P.generators}, condition=cond, basis=basis, budget=budget)


def _replay_coset_cover(S, q, reps, budget):
    act, G = S.action, S.G
    if len(reps) != act.index(q):
        raise ReplayError("wrong number of coset representatives")
    for i, a in enumerate(reps):
        for b in reps[i + 1:]:
            if act.image_member(q, G.mul(G.inv(a), b)):
                raise ReplayError("representatives share a coset")
    obstacles = [(h, q) for h in reps]
    one = S.identity
    if any(S._left_divide(o, one) is not None for o in obstacles):
        raise ReplayError("identity lies in an obstacle ideal")
    # every sampled ideal meets one of the obstacles, so D3 fails at 1_S
    for t in _sample(S, budget, radius=min(budget.radius, 3))[:200]:
        if all(S._right_lcm(t, o) is None for o in obstacles):
            raise ReplayError(f"{S.format_element(t)} avoids every obstacle")


def find_D2_witness(S: Semigroup, s0, s1, x, F, budget: SearchBudget = None) -> Verdict:
    """Find s2 ∈ s1 S with s2 S ⊄ ∪_{q∈F} qS and s0⁻¹s2 S ∩ x s0⁻¹s2 S = ∅."""
    budget = _budget(budget)
    cond = "D2"
    F = list(F)
    S.check(s0, s1, x, *F)
    if not S.is_unit(x) or x == S.identity:
        raise ValueError("x must be a unit different from the identity")
    if S._left_divide(s0, s1) is None:
        raise ValueError("s1 must lie in s0 S")
    pre = residual_nonempty(S, s1, F, budget)
    if not pre.holds_:
        raise ValueError("s1 S must not be covered by the ideals of F")
    # obstacles disjoint from s1 S can never contain s2
    live = [q for q in F if S._right_lcm(s1, q) is not None]
    s2, basis = None, ""
    if _is_gxp(S) and isinstance(S.action, DiagonalScaling):
        s2, basis = _d2_construct(S, s1, x, live)
    if s2 is None or not _d2_ok(S, s0, s2, x, live):
        s2, basis = None, "shortlex search over s1 t"
        for t in _sample(S, budget):
            cand = S._mul(s1, t)
            if _d2_ok(S, s0, cand, x, live):
                s2 = cand
                break
    if s2 is None:
        return Verdict.unknown({"candidates": budget.max_candidates}, condition=cond,
                               basis="no witness within the ball", budget=budget)
    # replay through the public primitives
    if S.left_divide(s1, s2) is None or not _d2_ok(S, s0, s2, x, F):
        raise ReplayError("D2 witness does not replay")
    return Verdict.holds(s2, condition=cond, basis=basis, budget=budget)


def _d2_ok(S, s0, s2, x, F):
    if any(S._left_divide(q, s2) is not None for q in F):
        return False
    r = S._left_divide(s0, s2)
    return r is not None and S._right_lcm(r, S._mul(x, r)) is None


def _two_adic(n):
    return (n & -n).bit_length() - 1


def _d2_construct(S, s1, x, obstacles):
    """The explicit constructions for the two diagonal-scaling catalog families."""
    act, G, P = S.action, S.G, S.P
    g1, p1 = s1
    g = x[0]
    coords = act._coords(g)
    if isinstance(P, Naturals) and act.rank == 1:
        # pick a prime dividing none of the obstacle multipliers, raise it
        # until g leaves its image
        qs = [q for _, q in obstacles]
        prime = 2
        while any(q % prime == 0 for q in qs):
            prime = _next_prime(prime)
        n = 1
        while g % prime ** n == 0:
            n += 1
        return (g1, p1 * prime ** n), f"prime {prime} avoiding every obstacle, raised to power {n}"
    if hasattr(P, "exponents") and act.rank is None:
        # multiply by a power of 2 beyond the 2-adic valuation of g, and move
        # into a fresh coordinate so no obstacle coset can contain the result
        n = 1 + min(_two_adic(abs(c)) for c in coords if c)
        support = [len(act._coords(g1))] + [len(act._coords(h)) for h, _ in obstacles] + [len(coords)]
        N = max(support) + 1
        e = [0] * (N + 1)
        e[N] = 1
        g2 = G.mul(g1, act.apply(p1, G.from_coords(tuple(e))))
        return (g2, p1 * 2 ** n), f"multiply by 2^{n} and shift into fresh coordinate {N}"
    return None, ""


def _next_prime(p):
    q = p + 1
    while any(q % d == 0 for d in range(2, math.isqrt(q) + 1)):
        q += 1
    return q


# ---------------------------------------------------------------------------
# quotient by left unit multiplication, and semidirect reconstruction

def left_class_rep(S: Semigroup, a):
    """Canonical representative of {x·a : x ∈ S*} for the supported families."""
    if _no_units(S):
        return a
    if _is_gxp(S):
        return (S.G.identity, a[1])
    if isinstance(S, ZappaSzep):
        return (S.group.alphabet[0] * len(a[0]), S.group.identity)
    raise UnsupportedFamily(f"no left-class representatives for {S.name}")


@dataclass
class Quotient:
    """The quotient 𝒮 = S/∼ with a ∼ b iff a = x·b for a unit x."""

    S: Semigroup
    c1: Verdict
    checks: Dict[str, int] = field(default_factory=dict)

    def cls(self, a):
        return left_class_rep(self.S, a)

    def mul(self, a, b):
        return self.cls(self.S._mul(a, b))

    @property
    def identity(self):
        return self.cls(self.S.identity)

    def format(self, a):
        return "[" + self.S.format_element(self.cls(a)) + "]"


def build_quotient(S: Semigroup, budget: SearchBudget = None) -> Quotient:
    """Build 𝒮, refusing unless C1 holds; well-definedness and the triviality
    of 𝒮's units are checked on samples."""
    budget = _budget(budget)
    c1 = check_C1(S, budget)
    if not c1.holds_:
        raise ValueError(f"the quotient needs C1 to hold; the check reported {c1.status.value}")
    Q = Quotient(S, c1)
    ball = _sample(S, budget, radius=min(budget.radius, 2))
    units = _units(S, budget, limit=8)
    count = 0
    for a in ball:
        for x in units:
            b = S._mul(x, a)
            if Q.cls(a) != Q.cls(b):
                raise ReplayError("class representative depends on the unit factor")
            for c in ball[:12]:
                for d in ball[:12]:
                    if Q.cls(S.product(c, a, d)) != Q.cls(S.product(c, b, d)):
                        raise ReplayError(f"[c a d] != [c b d] for a={a!r}, b={b!r}")
                    count += 1
    one = Q.identity
    for a in ball:
        if Q.cls(a) != one and any(Q.mul(a, b) == one for b in ball):
            raise ReplayError(f"{S.format_element(a)} is a non-trivial unit of the quotient")
    Q.checks = {"well-defined products": count, "unit checks": len(ball)}
    return Q


@dataclass
class Reconstruction:
    ok: bool
    elements: int = 0
    pairs: int = 0
    counterexample: object = None
    message: str = ""


def theta(S: Semigroup, p, x):
    """The unit θ_p(x) with p·x = θ_p(x)·p."""
    y = S.left_unit_quotient(S._mul(p, x), p)
    if y is None:
        raise ValueError("p x is not in S* p; C1 fails here")
    return y


def reconstruct_semidirect(S: Semigroup, transversal: Optional[Callable] = None,
                           budget: SearchBudget = None, quotient: Quotient = None) -> Reconstruction:
    """Check that (x, p) ↦ x·p is a bijective homomorphism S* ⋊θ 𝒮 → S on a ball.

    ``transversal`` maps a class representative to its chosen element of S
    (default: the representative itself); it must be multiplicative.
    """
    budget = _budget(budget)
    Q = quotient or build_quotient(S, budget)
    T = transversal or (lambda c: c)
    ball = shortlex_ball(S, budget.radius)
    decomp = {}
    seen = {}
    for s in ball:
        p = T(Q.cls(s))
        x = S.left_unit_quotient(s, p)
        if x is None or not S.is_unit(x):
            return Reconstruction(False, counterexample=s, message="element not of the form x p")
        if S._mul(x, p) != s:
            return Reconstruction(False, counterexample=s, message="x p does not recover the element")
        pair = (x, p)
        if pair in seen:
            return Reconstruction(False, counterexample=(s, seen[pair]), message="two elements share a pair")
        seen[pair] = s
        decomp[s] = pair
    reps = list(dict.fromkeys(T(Q.cls(s)) for s in ball))
    units = _units(S, budget, limit=24)
    # transversal multiplicative, θ an action by injective maps
    for p in reps[:30]:
        for q in reps[:30]:
            if T(Q.cls(S._mul(p, q))) != S._mul(p, q):
                return Reconstruction(False, counterexample=(p, q), message="transversal is not multiplicative")
            for x in units[:8]:
                lhs = theta(S, S._mul(p, q), x)
                rhs = theta(S, p, theta(S, q, x))
                if lhs != rhs:
                    return Reconstruction(False, counterexample=(p, q, x), message="theta_pq != theta_p theta_q")
        images = {}
        for x in units:
            y = theta(S, p, x)
            if y in images and images[y] != x:
                return Reconstruction(False, counterexample=(p, x, images[y]), message="theta_p is not injective")
            images[y] = x
    # φ is a homomorphism: (x,p)(y,q) = (x θ_p(y), pq)
    pairs = list(decomp.values())
    checked = 0
    for (x, p) in pairs[:60]:
        for (y, q) in pairs[:60]:
            left = S._mul(S._mul(x, theta(S, p, y)), S._mul(p, q))
            right = S._mul(S._mul(x, p), S._mul(y, q))
            if left != right:
                return Reconstruction(False, counterexample=((x, p), (y, q)), message="phi is not multiplicative")
            checked += 1
    return Reconstruction(True, elements=len(ball), pairs=checked,
                          message="phi(x,p) = x p is a bijection onto the ball and multiplicative")

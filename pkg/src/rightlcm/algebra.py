"""Exact arithmetic in span{v_p v_q*} for a right LCM semigroup.

Monomials are keyed by canonical pairs: q is replaced by its ideal
representative c = q·u and p by p·u, which is harmless because
v_{pu} v_{qu}* = v_p v_q* for a unit u.  The rewriting rule is

    v_q* v_r = v_a v_b*   where q·a = r·b is a right LCM of q and r,
    v_q* v_r = 0          when qS ∩ rS = ∅.

Families without identity are handled in their unitisation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .coeffs import Gaussian, exact_sqrt, format_gaussian
from .core import SearchBudget, Semigroup, Status, Verdict, monoid_of, residual_nonempty

Key = Tuple[object, object]


class StarAlgebra:
    """The *-algebra of monomials over ``S`` (or its unitisation)."""

    def __init__(self, S: Semigroup):
        self.base = S
        self.S = monoid_of(S)
        self.one_key = (self.S.identity, self.S.identity)

    # -- keys -------------------------------------------------------------
    def key(self, p, q) -> Key:
        S = self.S
        S.check(p, q)
        c, u = S.canonical_with_unit(q)
        return (S._mul(p, u), c)

    def mono_mul(self, k1: Key, k2: Key) -> Optional[Key]:
        """Product of two canonical monomials: a key, or None for zero."""
        S = self.S
        (p, q), (r, s) = k1, k2
        m = S._right_lcm(q, r)
        if m is None:
            return None
        a = S._left_divide(q, m)
        b = S._left_divide(r, m)
        c, u = S.canonical_with_unit(S._mul(s, b))
        return (S._mul(S._mul(p, a), u), c)

    # -- constructors -----------------------------------------------------
    def element(self, terms: Dict[Key, object] = None) -> "AlgebraElement":
        return AlgebraElement(self, terms or {})

    def monomial(self, p, q, coeff=1) -> "AlgebraElement":
        return AlgebraElement(self, {self.key(p, q): Gaussian.coerce(coeff)})

    def v(self, p):
        return self.monomial(p, self.S.identity)

    def vstar(self, q):
        return self.monomial(self.S.identity, q)

    def e(self, p):
        return self.monomial(p, p)

    def one(self):
        return AlgebraElement(self, {self.one_key: Gaussian(1)})

    def zero(self):
        return AlgebraElement(self, {})

    def scalar(self, c):
        return AlgebraElement(self, {self.one_key: Gaussian.coerce(c)})

    def diagonal(self, coeffs: Dict[object, object]) -> "AlgebraElement":
        """Σ λ_p e_{pS} from a map p -> λ_p."""
        out = self.zero()
        for p, c in coeffs.items():
            out = out + self.e(p) * c
        return out

    # -- expectations -----------------------------------------------------
    def phi_D(self, a: "AlgebraElement") -> "AlgebraElement":
        """Keep exactly the terms v_p v_p* = e_{pS}."""
        return AlgebraElement(self, {k: c for k, c in a.terms.items() if k[0] == k[1]})

    def unit_factor(self, key: Key):
        """The unit x with p = x·q for the monomial v_p v_q*, or None."""
        return self.S.left_unit_quotient(key[0], key[1])

    def phi_CI(self, a: "AlgebraElement") -> "AlgebraElement":
        """Keep the terms v_p v_q* with p = x·q for a unit x."""
        return AlgebraElement(self, {k: c for k, c in a.terms.items()
                                     if k[0] == k[1] or self.unit_factor(k) is not None})

    def phi_0(self, a: "AlgebraElement") -> "AlgebraElement":
        """On C_I normal forms e_{qS} v_x: keep only the terms with x = 1."""
        S = self.S
        out = {}
        for k, c in a.terms.items():
            x = self.unit_factor(k)
            if x is None:
                raise ValueError("phi_0 is only defined on elements of the inner core")
            if x == S.identity:
                out[k] = c
        return AlgebraElement(self, out)

    # -- diagonal projections ---------------------------------------------
    def lcm_of(self, ps: Iterable):
        """Canonical right LCM of a finite family (identity for none), or None."""
        S = self.S
        out = S.identity
        for p in ps:
            out = S._right_lcm(out, p)
            if out is None:
                return None
        return S.canonical(out)

    def q_projection(self, F: Sequence, A: Iterable) -> "AlgebraElement":
        """∏_{X∈A} e_X ∏_{Y∈F\\A} (1 - e_Y), expanded exactly."""
        A = list(A)
        rest = [y for y in F if y not in A]
        out = self.one()
        for x in A:
            out = out * self.e(x)
        for y in rest:
            out = out * (self.one() - self.e(y))
        return out

    def q_sum_identity(self, F: Sequence) -> bool:
        """Whether Σ_{A⊆F} Q_{F,A} equals 1 exactly."""
        F = list(F)
        total = self.zero()
        for r in range(len(F) + 1):
            for A in combinations(F, r):
                total = total + self.q_projection(F, A)
        return total == self.one()

    def is_nonzero_projection(self, F: Sequence, A: Iterable,
                              budget: SearchBudget = None) -> Verdict:
        """Decide Q_{F,A} ≠ 0 through σ_A = lcm(A) and the residual oracle.

        Holds carries an element of σ_A S avoiding every Y ∈ F \\ A; Fails
        carries either a disjoint pair inside A or (Y, s) with σ_A = Y·s.
        """
        S = self.S
        A = list(A)
        cond = "Q nonzero"
        sigma = S.identity
        for x in A:
            nxt = S._right_lcm(sigma, x)
            if nxt is None:
                return Verdict.fails(("disjoint", sigma, x), condition=cond,
                                     basis="the ideals in A have empty intersection")
            sigma = nxt
        obstacles = [y for y in F if y not in A]
        v = residual_nonempty(S, sigma, obstacles, budget)
        v.condition = cond
        return v

    def diagonal_norm(self, d: "AlgebraElement", budget: SearchBudget = None) -> "NormResult":
        """max over A ⊆ F with Q_{F,A} ≠ 0 of |Σ_{X∈A} λ_X| for d = Σ λ_X e_X."""
        if not d.is_diagonal():
            raise ValueError("diagonal_norm needs an element of the diagonal")
        items = sorted(d.terms.items(), key=lambda kv: self.S.sort_key(kv[0][0]))
        F = [k[0] for k, _ in items]
        lam = [c for _, c in items]
        best = Fraction(0)
        best_w = None
        unknown = []
        for r in range(len(F) + 1):
            for idx in combinations(range(len(F)), r):
                total = sum((lam[i] for i in idx), Gaussian(0))
                m2 = total.abs2()
                if m2 <= best and best_w is not None:
                    continue
                v = self.is_nonzero_projection(F, [F[i] for i in idx], budget)
                if v.status is Status.UNKNOWN:
                    unknown.append(idx)
                elif v.status is Status.HOLDS and (best_w is None or m2 > best):
                    best, best_w = m2, ([F[i] for i in idx], v.witness)
        if unknown:
            return NormResult(None, None, best_w, Status.UNKNOWN)
        return NormResult(exact_sqrt(best), best, best_w, Status.HOLDS)

    # -- presentation -----------------------------------------------------
    def format_key(self, k: Key) -> str:
        S = self.S
        p, q = k
        one = S.identity
        if p == q:
            return "1" if p == one else f"e[{S.format_element(p)}]"
        if q == one:
            return f"v[{S.format_element(p)}]"
        if p == one:
            return f"v*[{S.format_element(q)}]"
        return f"v[{S.format_element(p)}] v*[{S.format_element(q)}]"

    def key_order(self, k: Key):
        return (self.S.sort_key(k[0]), self.S.sort_key(k[1]))


@dataclass
class NormResult:
    """Exact diagonal norm.  ``value`` is None when the norm is irrational (then
    ``squared`` still holds the exact square) or undetermined (status UNKNOWN)."""

    value: Optional[Fraction]
    squared: Optional[Fraction]
    witness: object
    status: Status

    @property
    def exact(self):
        return self.value is not None


class AlgebraElement:
    """A finite combination of canonical monomials with Gaussian-rational
    coefficients; zero coefficients are never stored."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: StarAlgebra, terms: Dict[Key, Gaussian]):
        self.alg = alg
        self.terms = {k: Gaussian.coerce(c) for k, c in terms.items() if c}

    def _same(self, other):
        if other.alg.S is not self.alg.S and other.alg.base is not self.alg.base:
            raise TypeError("elements of different algebras")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            other = self.alg.scalar(other)
        self._same(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Gaussian(0)) + c
        return AlgebraElement(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            other = self.alg.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            c = Gaussian.coerce(other)
            return AlgebraElement(self.alg, {k: v * c for k, v in self.terms.items()})
        self._same(other)
        out: Dict[Key, Gaussian] = {}
        mm = self.alg.mono_mul
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = mm(k1, k2)
                if k is not None:
                    out[k] = out.get(k, Gaussian(0)) + c1 * c2
        return AlgebraElement(self.alg, out)

    def __rmul__(self, other):
        c = Gaussian.coerce(other)
        return AlgebraElement(self.alg, {k: c * v for k, v in self.terms.items()})

    def adjoint(self):
        alg = self.alg
        out = {}
        for (p, q), c in self.terms.items():
            k = alg.key(q, p)
            out[k] = out.get(k, Gaussian(0)) + c.conjugate()
        return AlgebraElement(alg, out)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, Gaussian)):
            return self == self.alg.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def is_diagonal(self):
        return all(p == q for p, q in self.terms)

    def diagonal_terms(self):
        """Map ideal representative -> coefficient (diagonal elements only)."""
        if not self.is_diagonal():
            raise ValueError("not a diagonal element")
        return {p: c for (p, _), c in self.terms.items()}

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: self.alg.key_order(kv[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for i, (k, c) in enumerate(self.sorted_terms()):
            mono = self.alg.format_key(k)
            neg = c.re < 0 if c.is_real else (c.re == 0 and c.im < 0)
            mag = -c if neg else c
            if mag == 1:
                body = mono
            else:
                cs = format_gaussian(mag)
                if not mag.is_real and mag.re != 0:
                    cs = f"({cs})"
                body = cs if mono == "1" else f"{cs} {mono}"
            if i == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"<AlgebraElement {self}>"

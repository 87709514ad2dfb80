"""Truncated left regular representation V_p ε_t = ε_{pt} on a finite ball.

This layer uses only multiplication and left division of the semigroup; it
never calls the rewriting code, so it can serve as an independent check of
products, projections and diagonal norms.  Columns whose image leaves the
ball are flagged non-interior and excluded from comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set

from .coeffs import Gaussian, exact_sqrt, format_gaussian
from .core import Semigroup, monoid_of, shortlex_ball


class OracleMismatch(AssertionError):
    """Symbolic and matrix computations disagree."""


@dataclass
class Ball:
    S: Semigroup
    elements: List
    radius: int
    index: Dict = field(default_factory=dict)

    def __post_init__(self):
        self.index = {t: i for i, t in enumerate(self.elements)}

    def __contains__(self, t):
        return t in self.index

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def extended(self, extra):
        """The same ball with extra elements appended (e.g. known witnesses)."""
        els = list(self.elements) + [t for t in extra if t not in self.index]
        return Ball(self.S, els, self.radius)


def generate_ball(S: Semigroup, radius: int, generators: Sequence = None) -> Ball:
    """Shortlex ball over the registered (or given) generators; families
    without identity are enumerated in their unitisation."""
    M = monoid_of(S)
    return Ball(M, shortlex_ball(M, radius, generators), radius)


@dataclass
class TruncatedOperator:
    """Sparse matrix: ``cols[t] = {row: value}`` with rows, cols ball indices."""

    ball: Ball
    cols: Dict[int, Dict[int, Gaussian]]
    interior: Set[int]

    def column(self, j):
        return self.cols.get(j, {})

    def diagonal(self):
        return [self.cols.get(j, {}).get(j, Gaussian(0)) for j in range(len(self.ball))]

    def matmul(self, other: "TruncatedOperator") -> "TruncatedOperator":
        """self · other; a column is interior only if every step stayed inside."""
        cols, interior = {}, set()
        for j in range(len(self.ball)):
            col = {}
            ok = j in other.interior
            for k, b in other.column(j).items():
                if k not in self.interior:
                    ok = False
                for i, a in self.column(k).items():
                    col[i] = col.get(i, Gaussian(0)) + a * b
            col = {i: v for i, v in col.items() if v}
            if col:
                cols[j] = col
            if ok:
                interior.add(j)
        return TruncatedOperator(self.ball, cols, interior)

    def triplets(self) -> str:
        """Coordinate-triplet dump: a header listing the basis, then ``row col value``."""
        S = self.ball.S
        lines = [f"# basis {i} {S.format_element(t)}" for i, t in enumerate(self.ball)]
        lines.append(f"# interior {' '.join(map(str, sorted(self.interior)))}")
        for j in sorted(self.cols):
            for i in sorted(self.cols[j]):
                lines.append(f"{i} {j} {format_gaussian(self.cols[j][i])}")
        return "\n".join(lines) + "\n"


def monomial_map(S: Semigroup, p, q, t):
    """Image of ε_t under V_p V_q*: ε_{p·(q\\t)}, or None."""
    s = S._left_divide(q, t)
    return None if s is None else S._mul(p, s)


def represent(a, ball: Ball) -> TruncatedOperator:
    """Matrix of an AlgebraElement on the ball."""
    S = ball.S
    cols, interior = {}, set(range(len(ball)))
    for j, t in enumerate(ball):
        col = {}
        for (p, q), c in a.terms.items():
            img = monomial_map(S, p, q, t)
            if img is None:
                continue
            i = ball.index.get(img)
            if i is None:
                interior.discard(j)
                continue
            col[i] = col.get(i, Gaussian(0)) + c
        col = {i: v for i, v in col.items() if v}
        if col:
            cols[j] = col
    return TruncatedOperator(ball, cols, interior)


def projection_matrix(S: Semigroup, p, ball: Ball) -> TruncatedOperator:
    """E_{pS}: diagonal 0/1 by membership, built without the algebra layer."""
    cols = {j: {j: Gaussian(1)} for j, t in enumerate(ball) if S._left_divide(p, t) is not None}
    return TruncatedOperator(ball, cols, set(range(len(ball))))


@dataclass
class CrosscheckReport:
    checked: int
    skipped: int
    mismatch: Optional[tuple] = None

    @property
    def ok(self):
        return self.mismatch is None

    def assert_ok(self):
        if self.mismatch is not None:
            raise OracleMismatch(f"product mismatch at basis vector {self.mismatch[0]}: "
                                 f"symbolic {self.mismatch[1]} vs matrix {self.mismatch[2]}")


def crosscheck_product(a, b, ball: Ball) -> CrosscheckReport:
    """Compare represent(a·b) with represent(a)·represent(b) on interior columns."""
    prod = represent(a * b, ball)
    mat = represent(a, ball).matmul(represent(b, ball))
    checked = skipped = 0
    S = ball.S
    for j, t in enumerate(ball):
        if j not in mat.interior or j not in prod.interior:
            skipped += 1
            continue
        checked += 1
        if prod.column(j) != mat.column(j):
            fmt = lambda col: {S.format_element(ball.elements[i]): str(v) for i, v in col.items()}
            return CrosscheckReport(checked, skipped,
                                    (S.format_element(t), fmt(prod.column(j)), fmt(mat.column(j))))
    return CrosscheckReport(checked, skipped)


@dataclass
class OracleNorm:
    value: Optional[Fraction]
    squared: Fraction
    witness: object


def oracle_diagonal_norm(coeffs: Dict, ball: Ball) -> OracleNorm:
    """max_t |Σ_{p : t ∈ pS} λ_p| over the ball, for d = Σ λ_p e_{pS}.

    ``coeffs`` maps p to λ_p (the diagonal terms of an AlgebraElement).
    """
    S = ball.S
    mats = [(projection_matrix(S, p, ball), Gaussian.coerce(c)) for p, c in coeffs.items()]
    best, where = Fraction(0), None
    for j, t in enumerate(ball):
        total = Gaussian(0)
        for E, c in mats:
            if j in E.cols:
                total = total + c
        m2 = total.abs2()
        if m2 > best:
            best, where = m2, t
    return OracleNorm(exact_sqrt(best), best, where)


def oracle_projection_nonzero(F: Sequence, A: Sequence, ball: Ball):
    """Whether ∏_A E_X ∏_{F\\A} (1 - E_Y) has a non-zero diagonal entry on
    the ball.  Returns the first such basis element, or None (inconclusive)."""
    S = ball.S
    A = list(A)
    rest = [y for y in F if y not in A]
    for t in ball:
        if all(S._left_divide(x, t) is not None for x in A) and \
                all(S._left_divide(y, t) is None for y in rest):
            return t
    return None


_MISSING = object()


def crosscheck_monomials(alg, pairs: Sequence, ball: Ball) -> CrosscheckReport:
    """Check ``alg.mono_mul(k1, k2)`` against the composed partial maps,
    column by column, for every pair of canonical keys in ``pairs``.

    Column t is interior when both steps of the composition land in the
    ball, and the symbolic product's image does too.  Images t -> p·(q\\t)
    are memoized per monomial, since keys repeat across pairs."""
    S = ball.S
    div, mul = S._left_divide, S._mul
    index = ball.index
    maps: Dict = {}

    def image(key, m, t):
        r = m.get(t, _MISSING)
        if r is _MISSING:
            s = div(key[1], t)
            r = m[t] = None if s is None else mul(key[0], s)
        return r

    checked = skipped = 0
    for k1, k2 in pairs:
        k = alg.mono_mul(k1, k2)
        m1 = maps.setdefault(k1, {})
        m2 = maps.setdefault(k2, {})
        mk = maps.setdefault(k, {}) if k is not None else None
        for t in ball.elements:
            mid = image(k2, m2, t)
            if mid is not None and mid not in index:
                skipped += 1
                continue
            end = None if mid is None else image(k1, m1, mid)
            if end is not None and end not in index:
                skipped += 1
                continue
            sym = None if k is None else image(k, mk, t)
            if sym is not None and sym not in index:
                skipped += 1
                continue
            checked += 1
            if sym != end:
                fmt = lambda x: "0" if x is None else S.format_element(x)
                return CrosscheckReport(checked, skipped,
                                        (S.format_element(t), fmt(sym), fmt(end)))
    return CrosscheckReport(checked, skipped)

"""Agreement runs between the symbolic layer and the truncated representation.

Three comparisons, each on random inputs drawn reproducibly from a seed:
monomial products, diagonal norms, and non-vanishing of the projections
Q_{F,A}.  Any exact disagreement is reported with the basis vector or input
that exhibits it.
"""

from __future__ import annotations

import random
from fractions import Fraction
from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional

from .algebra import StarAlgebra
from .core import SearchBudget, Semigroup, Status, shortlex_ball
from .oracle import crosscheck_monomials, generate_ball, oracle_diagonal_norm, oracle_projection_nonzero


@dataclass
class SuiteResult:
    radius: int
    products: int = 0
    columns: int = 0
    norms: int = 0
    projections: int = 0
    mismatches: List[str] = field(default_factory=list)

    @property
    def ok(self):
        return not self.mismatches

    def summary(self) -> str:
        head = (f"radius {self.radius}: {self.products} products ({self.columns} interior columns), "
                f"{self.norms} norms, {self.projections} projections")
        if self.ok:
            return head + ": all agree"
        return head + f": {len(self.mismatches)} mismatch(es)\n" + "\n".join(
            "  " + m for m in self.mismatches)


def sample_keys(alg: StarAlgebra, rng: random.Random, n: int, radius: int = 2):
    """n random canonical monomial keys with both legs in the ball of the given radius."""
    small = shortlex_ball(alg.S, radius)
    return [alg.key(rng.choice(small), rng.choice(small)) for _ in range(n)]


def sample_diagonal(alg: StarAlgebra, rng: random.Random, size: int, radius: int = 2):
    """A random real combination of at most ``size`` ideal projections."""
    small = shortlex_ball(alg.S, radius)
    coeffs = {}
    for _ in range(size):
        p = rng.choice(small)
        coeffs[p] = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2]))
    return alg.diagonal(coeffs)


def run_suite(S: Semigroup, radius: int = 4, pairs: int = 100, norms: int = 20,
              projections: int = 20, seed: int = 0, budget: Optional[SearchBudget] = None) -> SuiteResult:
    alg = StarAlgebra(S)
    M = alg.S
    out = SuiteResult(radius)
    ball = generate_ball(S, radius)
    if len(ball) == 0:
        return out
    rng = random.Random(seed)
    draw = min(2, radius)

    keys = sample_keys(alg, rng, 2 * pairs, draw)
    rep = crosscheck_monomials(alg, list(zip(keys[::2], keys[1::2])), ball)
    out.products, out.columns = pairs, rep.checked
    if not rep.ok:
        t, sym, mat = rep.mismatch
        out.mismatches.append(f"product: basis vector {t}: symbolic {sym}, matrix {mat}")

    for _ in range(norms):
        d = sample_diagonal(alg, rng, rng.randint(1, 3), draw)
        if d.is_zero():
            continue
        res = alg.diagonal_norm(d, budget)
        out.norms += 1
        coeffs = d.diagonal_terms()
        lower = oracle_diagonal_norm(coeffs, ball)
        if res.status is Status.UNKNOWN:
            continue
        if lower.squared > res.squared:
            out.mismatches.append(f"norm of {d}: oracle {lower.squared} exceeds formula {res.squared} (squared)")
            continue
        witness = res.witness[1] if res.witness else None
        full = oracle_diagonal_norm(coeffs, ball.extended([witness] if witness is not None else []))
        if full.squared != res.squared:
            out.mismatches.append(f"norm of {d}: formula {res.squared}, oracle with witness {full.squared} (squared)")

    small = shortlex_ball(M, draw)
    for _ in range(projections):
        F = list(dict.fromkeys(M.canonical(rng.choice(small)) for _ in range(rng.randint(1, 3))))
        for r in range(len(F) + 1):
            for A in combinations(F, r):
                out.projections += 1
                v = alg.is_nonzero_projection(F, A, budget)
                seen = oracle_projection_nonzero(F, A, ball)
                fmt = "{" + ", ".join(M.format_element(x) for x in F) + "}"
                sub = "{" + ", ".join(M.format_element(x) for x in A) + "}"
                if v.status is Status.HOLDS and v.witness in ball and seen is None:
                    out.mismatches.append(f"projection F={fmt} A={sub}: witness "
                                          f"{M.format_element(v.witness)} in ball, oracle sees zero")
                if v.status is Status.FAILS and seen is not None:
                    out.mismatches.append(f"projection F={fmt} A={sub}: symbolic zero, oracle non-zero at "
                                          f"{M.format_element(seen)}")
    return out

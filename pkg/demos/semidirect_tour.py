"""A walk through Z x| N^x: rewriting, projections, norms and the checkers.

Run with ``python3 demos/semidirect_tour.py``.
"""

from __future__ import annotations

import random

from rightlcm import StarAlgebra, catalog, lab, parse_expression, residual_nonempty
from rightlcm.core import shortlex_ball

S = catalog.get("zxn")
alg = StarAlgebra(S)
fmt = S.format_element

print(f"== {S.name}")
print("elements are pairs (m, n) acting as t -> m + n t")
for a, b in [((0, 2), (1, 3)), ((0, 2), (1, 2)), ((1, 2), (3, 2))]:
    m = S.right_lcm(a, b)
    print(f"  lcm({fmt(a)}, {fmt(b)}) = {fmt(m) if m is not None else 'none (disjoint ideals)'}")

print("\n== normal forms")
for text in ["v*[(0,2)] v[(0,3)]", "v*[(0,2)] v[(1,2)]", "v[(1,2)] v*[(1,2)] v[(1,2)]",
             "(1 - e[(0,2)]) (1 - e[(1,2)])"]:
    print(f"  {text:36s} = {parse_expression(alg, text)}")
# e[(0,2)] e[(1,2)] vanished: the ideals (0,2)S and (1,2)S are disjoint

print("\n== projections Q_{F,A}")
F = [(0, 2), (0, 3)]
for A in ([], F[:1], F[1:], F):
    v = alg.is_nonzero_projection(F, A)
    w = fmt(v.witness) if v.holds_ else v.witness
    print(f"  A = {[fmt(a) for a in A]}: {v.status.value}  (witness {w})")

print("\n== diagonal norm")
d = parse_expression(alg, "2 e[(0,2)] - 3 e[(0,3)] + e[(0,6)]")
res = alg.diagonal_norm(d)
print(f"  || {d} || = {res.value}  on the ideals {[fmt(a) for a in res.witness[0]]}")

print("\n== conditions")
for check in (lab.check_C1, lab.check_D1, lab.check_D3, lab.check_strong_effectiveness):
    v = check(S)
    print(f"  {v.condition}: {v.status.value}")
    print(f"    {v.basis}")

print("\n== D2 witnesses for random valid inputs")
rng = random.Random(0)
ball = shortlex_ball(S, 2)
units = [u for u in ball if S.is_unit(u) and u != S.identity]
shown = 0
while shown < 4:
    s0 = rng.choice(ball)
    s1 = S.multiply(s0, rng.choice(ball))
    x = rng.choice(units)
    F = [rng.choice(ball)]
    if not residual_nonempty(S, s1, F).holds_:
        continue
    v = lab.find_D2_witness(S, s0, s1, x, F)
    print(f"  s0={fmt(s0)} s1={fmt(s1)} x={fmt(x)} F={[fmt(q) for q in F]} -> s2={fmt(v.witness)}")
    shown += 1

print("\n== quotient by units and the reconstruction")
Q = lab.build_quotient(S)
r = lab.reconstruct_semidirect(S, quotient=Q)
print(f"  {r.message}: {r.elements} elements, {r.pairs} products")

"""Self-similar actions and their Zappa-Szep products X* |><| G.

Run with ``python3 demos/self_similar_tour.py``.
"""

from __future__ import annotations

from rightlcm import StarAlgebra, catalog, lab, parse_expression

for name in ("odometer", "lamplighter", "fixed-letter"):
    G = catalog.automaton_of(name)
    print(f"== {name}: {len(G.ball(3))} group elements within radius 3")
    a = G.generators[0]
    for w in ("0", "1", "011", "111"):
        print(f"  {G.format(a)} . {w:3s} = {G.act(a, w):3s}   restriction {G.format(G.restrict(a, w))}")
    print(f"  recurrent: {lab.check_recurrent(G).status.value}")
    v = lab.check_selfsim_right_cancellative(G, 4)
    shown = (f"g = {G.format(v.witness['g'])}, w = {v.witness['w']}" if v.fails_
             else f"none up to depth {v.witness['depth']}")
    print(f"  fixed point with trivial restriction: {v.status.value}  ({shown})")

print("\n== the Zappa-Szep product of the odometer")
S = catalog.get("odometer")
alg = StarAlgebra(S)
fmt = S.format_element
for p, q in [("(0,)", "(1,)"), ("(0,)", "(01,a)"), ("(,a)", "(1,)")]:
    p, q = S.parse_element(p), S.parse_element(q)
    m = S.right_lcm(p, q)
    print(f"  lcm({fmt(p)}, {fmt(q)}) = {fmt(m) if m is not None else 'none'}")
for text in ["v*[(0,)] v[(1,)]", "v*[(0,)] v[(,a)] v[(1,)]", "e[(,a)] - 1"]:
    print(f"  {text:28s} = {parse_expression(alg, text)}")
for check in (lab.check_C1, lab.check_D1, lab.check_strong_effectiveness):
    v = check(S)
    print(f"  {v.condition}: {v.status.value}")

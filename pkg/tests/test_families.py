"""Actions, semidirect products and self-similar groups."""

import itertools
import random

import pytest

from rightlcm import catalog
from rightlcm.automata import SelfSimilarGroup, ZappaSzep, odometer, parse_table
from rightlcm.core import in_ideal, shortlex_ball
from rightlcm.groups import FreeGroup
from rightlcm.semidirect import PolynomialMultiplication, PowerEndomorphisms

from conftest import SELFSIM, SEMIDIRECT, ball


def _samples(S, n=30, seed=0):
    rng = random.Random(seed)
    G, P = S.G, S.P
    gs = [x[0] for x in shortlex_ball(S, 2)]
    ps = shortlex_ball(P, 2)
    return [(rng.choice(gs), rng.choice(ps)) for _ in range(n)], gs, ps


@pytest.mark.parametrize("name", SEMIDIRECT)
def test_action_is_injective_homomorphism(name):
    S = catalog.get(name)
    act, P = S.action, S.P
    pairs, gs, ps = _samples(S)
    for g, p in pairs:
        img = act.apply(p, g)
        assert act.preimage(p, img) == g
        assert act.image_member(p, img)
        for q in ps[:6]:
            assert act.apply(P._mul(p, q), g) == act.apply(p, act.apply(q, g))
        for h in gs[:6]:
            assert act.apply(p, S.G.mul(g, h)) == S.G.mul(img, act.apply(p, h))


@pytest.mark.parametrize("name", SEMIDIRECT)
def test_action_respects_order(name):
    """θ_p(G) ∩ θ_q(G) ⊆ θ_r(G) for pP ∩ qP = rP, probed on images."""
    S = catalog.get(name)
    act, P, G = S.action, S.P, S.G
    ps = shortlex_ball(P, 2)
    gs = [x[0] for x in shortlex_ball(S, 2)]
    for p, q in itertools.product(ps[:6], repeat=2):
        r = P._right_lcm(p, q)
        if r is None:
            continue
        for g in gs[:10]:
            x = act.apply(r, g)
            assert act.image_member(p, x) and act.image_member(q, x)
        for g in gs[:10]:
            x = act.apply(p, g)
            if act.image_member(q, x):
                assert act.image_member(r, x)


@pytest.mark.parametrize("name", SEMIDIRECT)
def test_coset_reps_partition(name):
    """coset_rep is constant on g θ_p(G) and its unit factor reproduces g."""
    S = catalog.get(name)
    act, G = S.action, S.G
    pairs, gs, _ = _samples(S, 20, seed=3)
    for g, p in pairs:
        rep, k = act.coset_rep(p, g)
        assert G.mul(g, act.apply(p, k)) == rep
        for h in gs[:8]:
            assert act.coset_rep(p, G.mul(g, act.apply(p, h)))[0] == rep


@pytest.mark.parametrize("name", SEMIDIRECT)
def test_product_image_solve(name):
    S = catalog.get(name)
    act, G, P = S.action, S.G, S.P
    pairs, gs, ps = _samples(S, 20, seed=4)
    for (d, p1), p2 in zip(pairs, itertools.cycle(ps)):
        sol = act.product_image_solve(p1, p2, d)
        if sol is not None:
            h1, h2 = sol
            assert G.mul(act.apply(p1, h1), G.inv(act.apply(p2, h2))) == d


def test_gxp_lcm_examples():
    Z = catalog.get("zxn")
    assert Z.right_lcm((0, 2), (1, 2)) is None
    r = Z.right_lcm((0, 2), (1, 3))
    assert Z.canonical(r) == (4, 6)
    for name in SEMIDIRECT:
        S = catalog.get(name)
        for x in shortlex_ball(S, 1):
            assert S.canonical(S._right_lcm(x, x)) == S.canonical(x)


def test_free_group_coset_canonical():
    """Coset representatives in F_2 are canonical: equal iff same coset, brute force."""
    S = catalog.get("f2")
    act, G = S.action, S.G
    words = [x[0] for x in shortlex_ball(S, 3) if x[1] == (0, 0)]
    for p in [(1, 0), (0, 1), (1, 1)]:
        for g, h in itertools.combinations(words[:40], 2):
            same = act.image_member(p, G.mul(G.inv(g), h))
            assert (act.coset_rep(p, g)[0] == act.coset_rep(p, h)[0]) == same


def test_free_group_validation():
    with pytest.raises(ValueError, match="relatively prime"):
        PowerEndomorphisms(FreeGroup(2), [(2, 1), (2, 3)])
    with pytest.raises(ValueError, match="identity"):
        PowerEndomorphisms(FreeGroup(2), [(1, 1), (2, 3)])
    with pytest.raises(ValueError, match="relatively prime"):
        PolynomialMultiplication([(0, 1), (0, 0, 1)])


def test_free_group_format():
    G = FreeGroup(2)
    g = G.parse("a b^-2 a^3")
    assert G.format(g) == "a b^-2 a^3"
    assert G.mul(g, G.inv(g)) == G.identity


def test_odometer_examples():
    G = odometer()
    a = G.named["a"]
    assert G.act(a, "00") == "10"
    assert G.act(a, "11") == "00"
    e = G.identity
    assert G.act(e, "0110") == "0110" and G.restrict(e, "01") == e
    with pytest.raises(ValueError, match="outside the alphabet"):
        G.act(a, "2")


@pytest.mark.parametrize("name", SELFSIM)
def test_selfsim_identities(name):
    G = catalog.automaton_of(name)
    gs = G.ball(2)
    X = G.alphabet
    words = [""] + ["".join(w) for n in (1, 2, 3) for w in itertools.product(X, repeat=n)]
    rng = random.Random(1)
    for _ in range(60):
        g, h = rng.choice(gs), rng.choice(gs)
        v, w = rng.choice(words), rng.choice(words)
        assert G.restrict(g, v + w) == G.restrict(G.restrict(g, v), w)
        assert G.restrict(G.mul(g, h), v) == G.mul(G.restrict(g, G.act(h, v)), G.restrict(h, v))
        assert G.restrict(G.inv(g), G.act(g, v)) == G.inv(G.restrict(g, v))
        assert G.act(G.mul(g, h), w) == G.act(g, G.act(h, w))
        assert G.act(g, v + w) == G.act(g, v) + G.act(G.restrict(g, v), w)


@pytest.mark.parametrize("name", SELFSIM)
def test_selfsim_length_and_bijectivity(name):
    G = catalog.automaton_of(name)
    n = 6 if len(G.alphabet) == 2 else 4
    words = ["".join(w) for w in itertools.product(G.alphabet, repeat=n)]
    for g in G.generators:
        images = {G.act(g, w) for w in words}
        assert len(images) == len(words)
        assert all(len(x) == n for x in images)


def test_exact_equality_of_group_elements():
    G = odometer()
    a = G.named["a"]
    # a^2 restricted at 0 is a; a^-1 a is the identity automaton
    assert G.restrict(G.power(a, 2), "0") == a
    assert G.mul(G.inv(a), a) == G.identity
    assert G.power(a, 4) != G.identity


def test_zappa_szep_lcm():
    S = catalog.get("odometer")
    G = S.group
    a = G.named["a"]
    one = G.identity
    assert S._right_lcm(("0", one), ("1", one)) is None
    x, y = ("0", a), ("01", one)
    r = S._right_lcm(x, y)
    assert r is not None and r[0] == "01"
    common = [t for t in shortlex_ball(S, 3) if in_ideal(S, x, t) and in_ideal(S, y, t)]
    assert common and all(in_ideal(S, r, t) for t in common)
    u = ("", a)
    assert S.canonical(S._right_lcm(u, y)) == S.canonical(y)


def test_parse_table_and_errors():
    table = parse_table(["a, 0 -> 1, e", "a, 1 -> 0, a  # carry"])
    G = SelfSimilarGroup("01", table)
    assert G.act(G.named["a"], "1") == "0"
    with pytest.raises(ValueError, match="row 1"):
        parse_table(["a 0 1 e"])
    with pytest.raises(ValueError, match="permute"):
        SelfSimilarGroup("01", parse_table(["a, 0 -> 0, e", "a, 1 -> 0, e"]))
    with pytest.raises(ValueError, match="no transition"):
        SelfSimilarGroup("01", parse_table(["a, 0 -> 1, e"]))


def test_zappa_szep_multiplication_law():
    S = catalog.get("lamplighter")
    G = S.group
    for (x, g), (y, h) in itertools.product(shortlex_ball(S, 2)[:12], repeat=2):
        assert S._mul((x, g), (y, h)) == (x + G.act(g, y), G.mul(G.restrict(g, y), h))

"""Interface examples, algebraic laws and brute-force LCM checks for every family."""

import random

import pytest

from rightlcm import catalog
from rightlcm.core import (FamilyMismatch, NotAUnit, SearchBudget, Status, Unitisation, ideal_class,
                           ideal_equal, in_ideal, monoid_of, residual_nonempty, shortlex_ball)
from rightlcm.monoids import FreeMonoid, Naturals

from conftest import FAMILIES, ball

N = catalog.get("naturals")
Z = catalog.get("zxn")


def test_multiply_examples():
    assert N.multiply(4, 6) == 24
    A = catalog.get("free-monoid-ab")
    assert A.multiply("ab", "ba") == "abba"
    assert Z.multiply((1, 2), (1, 3)) == (3, 6)


def test_family_mismatch():
    with pytest.raises(FamilyMismatch):
        N.multiply(4, "ab")
    with pytest.raises(FamilyMismatch):
        Z.multiply((1, 2), 3)


def test_units():
    assert Z.is_unit((5, 1)) and Z.unit_inverse((5, 1)) == (-5, 1)
    assert not N.is_unit(2)
    with pytest.raises(NotAUnit):
        N.unit_inverse(2)
    A = catalog.get("free-monoid-ab")
    assert A.is_unit("") and A.unit_inverse("") == ""


def test_left_divide_examples():
    assert N.left_divide(2, 6) == 3
    assert catalog.get("free-monoid-ab").left_divide("ab", "bab") is None
    assert Z.left_divide((0, 2), (4, 6)) == (2, 3)
    assert Z.multiply((0, 2), (2, 3)) == (4, 6)


def test_right_lcm_examples():
    assert N.right_lcm(4, 6) == 12
    assert Z.right_lcm((0, 2), (1, 2)) is None
    assert ideal_equal(Z, Z.right_lcm((0, 2), (1, 3)), (4, 6))


def test_ideal_class_examples():
    assert ideal_equal(Z, (4, 6), (10, 6))
    assert Z.multiply((4, 6), (1, 1)) == (10, 6)
    assert not ideal_equal(N, 4, 6)
    assert ideal_class(Z, (10, 6)) == (4, 6)


def test_residual_examples():
    assert residual_nonempty(N, 1, [2, 3]).holds_
    w = residual_nonempty(N, 1, [2, 3]).witness
    assert N.left_divide(2, w) is None and N.left_divide(3, w) is None
    assert residual_nonempty(N, 1, []).holds_
    # (0,2)S and (1,2)S cover only the elements whose N^x part is even;
    # (0,1) itself escapes both
    v = residual_nonempty(Z, (0, 1), [(0, 2), (1, 2)])
    assert v.status is Status.HOLDS and v.witness == (0, 1)
    # with sigma inside the even part the cover is complete
    v = residual_nonempty(Z, (0, 2), [(0, 2), (1, 2)])
    assert v.status is Status.FAILS


def test_residual_without_identity():
    S = catalog.get("naturals-no-one")
    # without an identity p lies outside pS, so 4 escapes 4S
    v = residual_nonempty(S, 2, [4, 6, 10])
    assert v.holds_ and v.witness == 4
    assert S.left_divide(2, 4) == 2 and all(S.left_divide(q, 4) is None for q in (4, 6, 10))
    assert residual_nonempty(S, 4, [2]).fails_


@pytest.mark.parametrize("name", FAMILIES)
def test_associativity_and_left_cancellation(name):
    S = monoid_of(catalog.get(name))
    rng = random.Random(7)
    els = ball(name, 2)
    for _ in range(150):
        p, q, r = (rng.choice(els) for _ in range(3))
        assert S._mul(S._mul(p, q), r) == S._mul(p, S._mul(q, r))
        if S._mul(p, q) == S._mul(p, r):
            assert q == r
        assert S._left_divide(p, S._mul(p, q)) == q


@pytest.mark.parametrize("name", FAMILIES)
def test_lcm_against_ball(name):
    """Every common multiple in a test ball lies in rS; Disjoint means none exists."""
    S = monoid_of(catalog.get(name))
    small = ball(name, 2)
    test_ball = ball(name, 4 if len(small) < 40 else 3)
    rng = random.Random(3)
    pairs = [(rng.choice(small), rng.choice(small)) for _ in range(40)]
    for p, q in pairs:
        r = S._right_lcm(p, q)
        common = [t for t in test_ball if in_ideal(S, p, t) and in_ideal(S, q, t)]
        if r is None:
            assert common == []
        else:
            assert in_ideal(S, p, r) and in_ideal(S, q, r)
            assert all(in_ideal(S, r, t) for t in common)


@pytest.mark.parametrize("name", FAMILIES)
def test_canonical_idempotent_and_unit_invariant(name):
    S = monoid_of(catalog.get(name))
    rng = random.Random(5)
    units = [u for u in ball(name, 2) if S.is_unit(u)]
    for p in ball(name, 2):
        c, u = S.canonical_with_unit(p)
        assert S.canonical(c) == c
        assert S._mul(p, u) == c
        if units:
            x = rng.choice(units)
            assert S.canonical(S._mul(p, x)) == c


def test_unitisation_lcm():
    U = Unitisation(catalog.get("naturals-no-one"))
    one = U.identity
    assert U._right_lcm(one, 6) == 6
    assert U._right_lcm(4, 6) == 12
    assert U._left_divide(6, 6) == one


def test_shortlex_ball_deterministic():
    S = Naturals((2, 3))
    assert shortlex_ball(S, 2, [2, 3]) == [1, 2, 3, 4, 6, 9]
    assert shortlex_ball(FreeMonoid("a"), 3) == ["", "a", "aa", "aaa"]
    assert SearchBudget.from_env(radius=2).radius == 2

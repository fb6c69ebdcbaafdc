import random
import warnings

import pytest
from hypothesis import given, settings, strategies as st

from oracles import int_exceptional, int_violators, isolating_subgroups
from thinsets.ballean import Radius, ordinal_radius
from thinsets.errors import CapExceededError, IdentityRadiusError, PreconditionError
from thinsets.groups import Cyclic, Lattice
from thinsets.thinness import (
    CONSISTENT,
    VIOLATED,
    WindowedSubset,
    collision_set,
    exceptional_set,
    is_m_thin_window,
    lemma1_equivalence_check,
    thin_isolating_subgroup,
)

Z = Lattice(1)
PAIRS = {10**n for n in range(1, 5)} | {10**n + 1 for n in range(1, 5)}


def subset(pts, window=None):
    return WindowedSubset(Z, window=window, elements=pts)


def test_collision_set_examples():
    evens = subset(range(0, 21, 2))
    assert collision_set(evens, 2) == set(range(0, 19, 2))
    assert collision_set(evens, 1) == set()
    assert collision_set(subset({1, 2, 4, 8, 16}), 1) == {1}
    with pytest.raises(IdentityRadiusError):
        collision_set(evens, 0)


def test_exceptional_set_examples():
    A = subset(PAIRS)
    F = Radius(Z, {0, 1})
    assert exceptional_set(A, F, 1) == {10, 100, 1000, 10000}
    assert exceptional_set(A, F, 2) == set()
    assert exceptional_set(A, Radius(Z, ()), 1) == set()


def test_is_m_thin_window_examples():
    A = WindowedSubset(Z, PAIRS.__contains__, window=10**4)
    F = Radius(Z, {0, 1})
    rep = is_m_thin_window(A, F, 2)
    assert rep.verdict == CONSISTENT and rep.violations == []
    rep = is_m_thin_window(A, F, 1)
    assert rep.verdict == VIOLATED
    assert set(rep.violations) == {10, 100, 1000}  # 10000 lies beyond a 10**4 spiral window
    evens = WindowedSubset(Z, lambda x: x % 2 == 0, window=100)
    rep = is_m_thin_window(evens, Radius(Z, {0, 2}), 1)
    assert rep.verdict == VIOLATED and len(rep.violations) == 50


def test_bound_and_min_bound():
    A = WindowedSubset(Z, PAIRS.__contains__, window=3000)
    F = Radius(Z, {0, 1})
    rep = is_m_thin_window(A, F, 1)
    assert is_m_thin_window(A, F, 1, bound=rep.min_bound).consistent
    assert not is_m_thin_window(A, F, 1, bound=rep.min_bound - 1).consistent


@given(st.frozensets(st.integers(-40, 40), max_size=25), st.frozensets(st.integers(-4, 4), max_size=4),
       st.integers(1, 3))
@settings(max_examples=80)
def test_window_checks_match_brute_force(A_pts, F, m):
    A = WindowedSubset(Z, A_pts.__contains__, window=161)
    pts = Z.enumerate_prefix(161)
    R = Radius(Z, F)
    assert exceptional_set(A, R, m) == int_exceptional(set(A_pts), F, m, pts)
    assert is_m_thin_window(A, R, m).violations == int_violators(set(A_pts), F, m, pts)


def test_bounded_exceptional_check_examples():
    A = WindowedSubset(Z, PAIRS.__contains__, window=2 * 10**4 + 1)
    rep = lemma1_equivalence_check(A, Radius(Z, {0, 1}), 1)
    assert rep.agreement
    assert rep.naive_Y == {10, 100, 1000, 10000}
    assert rep.naive_Z == PAIRS
    thin = WindowedSubset(Z, {10**n for n in range(1, 5)}.__contains__, window=2 * 10**4 + 1)
    rep = lemma1_equivalence_check(thin, Radius(Z, {0, 1}), 1)
    assert rep.Y == rep.Z == frozenset() and rep.agreement
    rep = lemma1_equivalence_check(A, Radius(Z, ()), 1)
    assert rep.agreement and not rep.Y


def test_same_radius_reading_is_unsound():
    # |B(a, F) ∩ A| <= 1 for both points, yet x = 1 sees both of them
    A = subset({0, 2}, window=20)
    rep = lemma1_equivalence_check(A, Radius(Z, {1, -1}), 1)
    assert rep.naive_violators_outside == [1]
    assert rep.agreement


@given(st.integers(0, 10**6))
@settings(max_examples=30, deadline=None)
def test_bounded_exceptional_check_random_sets(seed):
    rng = random.Random(seed)
    pts = {rng.randrange(-300, 300) for _ in range(rng.randrange(1, 80))}
    A = WindowedSubset(Z, pts.__contains__, window=601)
    F = Radius(Z, rng.sample(range(-5, 6), rng.randrange(1, 4)))
    assert lemma1_equivalence_check(A, F, rng.randrange(1, 4)).agreement


def test_isolating_subgroup_z12_against_oracle():
    G = Cyclic(12)
    A = WindowedSubset(G, window=12, elements={1, 2, 7})
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        res = thin_isolating_subgroup(A, {0, 6}, 1)
    valid = isolating_subgroups(12, {1, 2, 7}, {0, 6}, 1)
    assert res.subgroup in valid
    assert res.subgroup == min(valid, key=len)


@pytest.mark.parametrize("n, A, S, m", [(12, {1, 2, 7}, {0, 4}, 2), (24, {1, 5, 13, 17}, {0, 8}, 1),
                                         (30, {0, 3, 10}, {0, 15}, 1), (16, {1, 2, 3}, {0, 8}, 3)])
def test_isolating_subgroup_minimal(n, A, S, m):
    G = Cyclic(n)
    sub = WindowedSubset(G, window=n, elements=A)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        res = thin_isolating_subgroup(sub, S, m, cap=10**6)
    assert res.subgroup == min(isolating_subgroups(n, A, S, m), key=len)


def test_isolating_trivial_cases():
    G = Cyclic(12)
    empty = WindowedSubset(G, window=12, elements=())
    assert thin_isolating_subgroup(empty, {0, 4}, 1).subgroup == {0, 4, 8}
    A = WindowedSubset(G, window=12, elements={1, 2, 7})
    assert thin_isolating_subgroup(A, {0, 6}, 3).subgroup == {0, 6}


def test_isolating_caps():
    G = Cyclic(64)
    A = WindowedSubset(G, window=64, elements=set(range(0, 64, 3)))
    with pytest.raises(CapExceededError) as info:
        thin_isolating_subgroup(A, {0, 16, 32, 48}, 1, cap=3)
    assert info.value.chain
    with pytest.raises(PreconditionError):
        thin_isolating_subgroup(WindowedSubset(Z, window=10, elements={1}), {0}, 1)

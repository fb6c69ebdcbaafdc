import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import chain_thin_set, is_partition, pairs_within
from thinsets.ballean import ordinal_radius
from thinsets.errors import (
    ChainError,
    ChainNotCoveringError,
    InputNotThinError,
    NotASubgroupError,
    PartitionArityError,
    PreconditionError,
)
from thinsets.groups import Cyclic, DirectSum, Lattice
from thinsets.partition import (
    Entourage,
    SubgroupChain,
    chain_collisions,
    chain_partition,
    default_schedule,
    greedy_thin_partition,
    uniform_discrete_partition,
    verify_partition,
)
from thinsets.thinness import WindowedSubset

Z = Lattice(1)
D = DirectSum(Cyclic(2))
SCHEDULE = [ordinal_radius(Z, n) for n in range(1, 6)]
WINDOW = 2 * 10**4 + 10


def ladder(offsets):
    pts = {10**n + o for n in range(1, 5) for o in offsets}
    return WindowedSubset(Z, pts.__contains__, window=WINDOW), pts


def test_greedy_pairs():
    A, pts = ladder((0, 1))
    res = greedy_thin_partition(A, 2, SCHEDULE)
    assert [sorted(p) for p in res.parts] == [[10, 100, 1000, 10000], [11, 101, 1001, 10001]]
    assert all(r.consistent for r in res.reports.values())
    assert verify_partition(A, res, SCHEDULE[-1], 1).passed


def test_greedy_already_thin():
    A, pts = ladder((0,))
    res = greedy_thin_partition(A, 1, SCHEDULE)
    assert res.parts == [frozenset(pts)]


def test_greedy_triples():
    A, pts = ladder((0, 1, 2))
    res = greedy_thin_partition(A, 3, SCHEDULE)
    assert len(res.parts) == 3 and is_partition(res.parts, pts)
    for P in res.parts:
        for F in SCHEDULE:
            assert not pairs_within(P, F.elements)


def test_greedy_rejects_explicit_bound():
    A, _ = ladder((0, 1, 2))
    with pytest.raises(InputNotThinError) as info:
        greedy_thin_partition(A, 2, SCHEDULE, bound=0)
    assert info.value.witness is not None


def test_greedy_deterministic():
    A, _ = ladder((0, 1, 2))
    a = greedy_thin_partition(A, 3, SCHEDULE)
    b = greedy_thin_partition(A, 3, SCHEDULE)
    assert a.parts == b.parts and a.trace["colors"] == b.trace["colors"]


def test_default_schedule():
    assert [len(F) for F in default_schedule(Z, 3)] == [1, 2, 4, 8]
    assert [len(F) for F in default_schedule(Cyclic(5), 4)] == [1, 2, 4, 5]


@given(st.integers(0, 10**6), st.integers(2, 4))
@settings(max_examples=40, deadline=None)
def test_greedy_random_clusters(seed, m):
    rng = random.Random(seed)
    pts = set()
    for c in rng.sample(range(-60, 60), 8):
        pts |= {c * 40 + d for d in rng.sample(range(4), rng.randint(1, m))}
    A = WindowedSubset(Z, pts.__contains__, window=5001)
    res = greedy_thin_partition(A, m, default_schedule(Z, 3))
    assert len(res.nonempty_parts) <= m
    assert is_partition(res.parts, pts)
    for F in res.schedule:
        assert verify_partition(A, res, F, 1).passed
        assert verify_partition(A, res, F, m, bound=res.trace["input_bound"]).passed


def test_verify_partition_negative_control():
    A, _ = ladder((0, 1))
    res = greedy_thin_partition(A, 2, SCHEDULE)
    moved = sorted(res.parts[1])[0]
    res.parts = [res.parts[0], res.parts[1] - {moved}]
    chk = verify_partition(A, res, SCHEDULE[-1], 1)
    assert not chk.covering and not chk.passed


def test_uniform_examples():
    res = uniform_discrete_partition([0, 1, 10, 11, 20, 21], Entourage.interval(2), Entourage.interval(1), 2)
    assert [sorted(p) for p in res.parts] == [[0, 10, 20], [1, 11, 21]]
    res = uniform_discrete_partition([0, 100, 200], Entourage.interval(2), Entourage.interval(1), 1)
    assert res.parts == [frozenset({0, 100, 200})]
    triples = [30 * k + d for k in range(5) for d in range(3)]
    res = uniform_discrete_partition(triples, Entourage.interval(4), Entourage.interval(2), 3)
    assert len(res.parts) <= 3
    V = Entourage.interval(2)
    assert all(V(x) & P == {x} for P in res.parts for x in P)


def test_uniform_preconditions():
    with pytest.raises(PreconditionError):
        uniform_discrete_partition([0, 1], Entourage.interval(1), Entourage.interval(1), 2)
    with pytest.raises(PreconditionError) as info:
        uniform_discrete_partition([0, 1, 2], Entourage.interval(2), Entourage.interval(1), 2)
    assert info.value.witness


def test_uniform_box_entourage():
    pts = [(0, 0), (1, 1), (5, 5), (6, 5)]
    res = uniform_discrete_partition(pts, Entourage.box(2, 2), Entourage.box(1, 2), 2)
    assert len(res.parts) == 2


def test_subgroup_chain_validation():
    ch = SubgroupChain.coordinate_prefixes(D, 3)
    assert [len(h) for h in ch.levels] == [1, 2, 4, 8]
    assert ch.level_of((0, 1)) == 2
    with pytest.raises(NotASubgroupError):
        SubgroupChain.from_prefixes(Z, [1, 3])
    with pytest.raises(ChainError):
        SubgroupChain(D, [D.coordinate_subgroup(1)])
    with pytest.raises(ChainNotCoveringError):
        ch.level_of((0, 0, 0, 1))


TWO_THIN = chain_thin_set(4, 2, random.Random(7))


@pytest.mark.parametrize("seed", range(6))
def test_chain_partition_exhaustive_rank4(seed):
    ch = SubgroupChain.coordinate_prefixes(D, 4)
    pts = chain_thin_set(4, 2, random.Random(seed))
    A = WindowedSubset(D, elements=pts)
    res = chain_partition(A, ch, m=2, parts_target=4)
    assert len(res.parts) == 4 and is_partition(res.parts, pts)
    assert res.trace["exceptions"] == 0
    # the exhaustive re-check, independent of the trace
    for g in ch.top - {()}:
        H = ch.levels[ch.level_of(g)]
        for P in res.parts:
            assert all(x in H for x in P if D.mul(g, x) in P)


def test_chain_partition_single_level():
    ch = SubgroupChain.coordinate_prefixes(D, 3)
    A = WindowedSubset(D, elements=[(1,)])
    res = chain_partition(A, ch, m=2)
    assert res.parts[0] | res.parts[1] == {(1,)}


def test_chain_partition_target_pads_parts():
    ch = SubgroupChain.coordinate_prefixes(D, 4)
    A = WindowedSubset(D, elements=TWO_THIN)
    res = chain_partition(A, ch, m=2, parts_target=6)
    assert len(res.parts) == 6 and is_partition(res.parts, TWO_THIN)


def test_chain_exceptions_on_non_isolated_input():
    ch = SubgroupChain.coordinate_prefixes(D, 4)
    crowded = [(1,), (0, 1), (1, 1, 1), (0, 0, 0, 1), (1, 0, 1, 1), (0, 1, 0, 1)]
    res = chain_partition(WindowedSubset(D, elements=crowded), ch, m=2, parts_target=2)
    assert res.trace["exceptions"] > 0


def test_chain_partition_errors():
    ch = SubgroupChain.coordinate_prefixes(D, 2)
    with pytest.raises(ChainNotCoveringError):
        chain_partition(WindowedSubset(D, elements=[(0, 0, 1)]), ch)
    ch = SubgroupChain.coordinate_prefixes(D, 3)
    many = WindowedSubset(D, elements=[(1,), (0, 1), (1, 1)])

    def greedy_singletons(sub, chain, lvl):
        return [{x} for x in sub.elements]

    with pytest.raises(PartitionArityError):
        chain_partition(many, ch, greedy_singletons, m=2, parts_target=2)


def test_chain_partition_annulus_identity():
    ch = SubgroupChain.coordinate_prefixes(D, 4)
    A = WindowedSubset(D, elements=TWO_THIN)
    res = chain_partition(A, ch, m=2, parts_target=4)
    lp = res.trace["level_parts"]
    for a in range(len(ch.levels) - 1):
        ann = ch.annulus(a)
        for i, B in enumerate(res.parts):
            assert B & ann == lp[a + 1][i] - ch.levels[a]


def test_chain_collisions_reports_outside():
    ch = SubgroupChain.coordinate_prefixes(D, 3)
    bad = [frozenset({(0, 0, 1), (1, 0, 1)})]  # g = (1) maps one onto the other outside G_1
    col = chain_collisions(bad, ch)
    assert col[(1,), 0]["outside"]

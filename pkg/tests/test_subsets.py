from fractions import Fraction

import pytest

from thinsets.errors import SpecParseError
from thinsets.groups import Cyclic, FreeGroup, Lattice, RationalVectors, Symmetric
from thinsets.subsets import GENERATORS, parse_element_set, parse_radius, parse_subset_spec

Z, Z2 = Lattice(1), Lattice(2)


def test_evens_on_integers():
    A = parse_subset_spec("evens", Z, window=100)
    assert A.contains(4) and not A.contains(3)
    assert len(A.members()) == 50
    assert parse_subset_spec("evens", Z2, window=25).contains((2, -4))
    assert not parse_subset_spec("evens", Z2, window=25).contains((2, 1))


def test_explicit_sets():
    A = parse_subset_spec("{1, 2, 7}", Z)
    assert A.elements == {1, 2, 7}
    assert parse_subset_spec("explicit {1, 2, 7}", Z).elements == {1, 2, 7}
    assert parse_subset_spec("{(1,2), (0,-1),}", Z2).elements == {(1, 2), (0, -1)}
    assert parse_subset_spec("{(1/2, 0)}", RationalVectors(2)).elements == {(Fraction(1, 2), Fraction(0))}
    assert parse_element_set(FreeGroup(2), "{a, aB, e}") == [(1,), (1, -2), ()]


@pytest.mark.parametrize("spec, inside, outside", [
    ("powers 10", [10, 100, 10**6], [1, 11, 0, -10]),
    ("pairs 10^n", [10, 11, 1001], [12, 1, 2]),
    ("triples 3^n", [3, 4, 5, 27, 29], [6, 30, 1]),
])
def test_ladders(spec, inside, outside):
    A = parse_subset_spec(spec, Z, window=100)
    assert all(A.contains(x) for x in inside)
    assert not any(A.contains(x) for x in outside)


def test_all():
    A = parse_subset_spec("all", Symmetric(3), window=6)
    assert len(A.members()) == 6


@pytest.mark.parametrize("spec, G, column", [
    ("odds", Z, 0),
    ("evens 3", Z, 6),
    ("pairs 10", Z, 8),
    ("powers 1", Z, 7),
    ("{1, x}", Z, 4),
    ("powers 10", Z2, 0),
    ("evens", Symmetric(3), 0),
])
def test_parse_errors_carry_column(spec, G, column):
    with pytest.raises(SpecParseError) as info:
        parse_subset_spec(spec, G, window=10)
    assert info.value.position == column


def test_generators_need_windows():
    with pytest.raises(SpecParseError):
        parse_subset_spec("evens", Z)
    assert set(GENERATORS) >= {"evens", "all", "powers", "pairs", "triples"}


def test_parse_radius():
    assert parse_radius("F5", Z).elements == {0, 1, -1, 2, -2}
    assert parse_radius("{0, 3}", Cyclic(5)).elements == {0, 3}
    with pytest.raises(SpecParseError):
        parse_radius("G3", Z)

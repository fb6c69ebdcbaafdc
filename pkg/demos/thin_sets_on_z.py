"""Thin and 2-thin ladders in the integers.

A ladder {10^n, 10^n + 1} meets every translate of a finite set in at most two
points once we move far enough out, while the single rungs {10^n} meet each
translate in at most one.  We watch the window checks agree, then split the ladder in two.
"""

import argparse

from thinsets.ballean import Radius, ordinal_radius
from thinsets.groups import Lattice
from thinsets.partition import greedy_thin_partition
from thinsets.subsets import parse_subset_spec
from thinsets.thinness import is_m_thin_window, lemma1_equivalence_check


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--window", type=int, default=3000)
    args = ap.parse_args()

    Z = Lattice(1)
    A = parse_subset_spec("pairs 10^n", Z, window=args.window)
    print(f"A = {sorted(A.members())} on the first {args.window} integers")

    for m in (1, 2):
        rep = is_m_thin_window(A, Radius(Z, {0, 1}), m)
        print(f"  F = {{0, 1}}, m = {m}: {rep.summary()}")

    # the exceptional points are all low; a finite bound absorbs them
    rep = is_m_thin_window(A, ordinal_radius(Z, 8), 1)
    print(f"  with F8 and m = 1 the violators end at index {rep.min_bound}")
    print(f"  rerun with that bound: {is_m_thin_window(A, ordinal_radius(Z, 8), 1, bound=rep.min_bound).verdict}")

    check = lemma1_equivalence_check(A, Radius(Z, {0, 1}), 1)
    print(f"  heavy points Y = {sorted(check.Y)}, none outside B(Y, S): {not check.violators_outside}")

    res = greedy_thin_partition(A, 2, [ordinal_radius(Z, n) for n in (2, 4, 8)])
    for i, P in enumerate(res.parts):
        print(f"  part {i}: {sorted(P)}")


if __name__ == "__main__":
    main()

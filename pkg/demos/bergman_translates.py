"""Counting translates inside the pair construction.

Each pair (a, b) of distinct non-identity elements of a small group H gets a
generic value x in K, and contributes (e, x), (a, x), (b, x) to A inside H x K.
A three-point set F = {e, a, b} then sits inside A in exactly six places with
ordered indexing and three with unordered indexing; the generic choice rules
out any other coincidence.
"""

import argparse

from thinsets.constructions import ORDERED, UNORDERED, bergman_set, count_translates_in, generic_indexing, nondegenerate_pairs
from thinsets.errors import GenericityError
from thinsets.groups import Cyclic, Symmetric


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    K = Cyclic(10007)
    for H in (Cyclic(5), Symmetric(3)):
        els = H.enumerate_prefix(H.order)
        for mode in (ORDERED, UNORDERED):
            A = bergman_set(H, K, generic_indexing(H, K, mode, seed=args.seed))
            counts = [count_translates_in([(H.identity, 0), (a, 0), (b, 0)], A).count
                      for a, b in nondegenerate_pairs(els, H.identity, UNORDERED)]
            print(f"{H.spec:7} {mode:9} |A| = {len(A):3}  translate counts {sorted(set(counts))}")

    rejected = 0
    for seed in range(50):
        try:
            generic_indexing(Cyclic(5), Cyclic(10007), ORDERED, seed=seed, strategy="plain")
        except GenericityError:
            rejected += 1
    print(f"plain sampling into Zmod 10007 fails the audit for {rejected} of 50 seeds")


if __name__ == "__main__":
    main()

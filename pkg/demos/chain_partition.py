"""Splitting a 2-thin subset of a countable Boolean group along a subgroup chain.

G is the direct sum of countably many copies of Z_2 and G_k the span of the
first k coordinates.  A set meeting every non-trivial coset of each G_k in at
most two points is split level by level, and the pieces are glued so that a
shift by g only ever collides inside the smallest G_k containing g.
"""

import argparse
import random

from thinsets.groups import Cyclic, DirectSum
from thinsets.partition import SubgroupChain, chain_partition
from thinsets.thinness import WindowedSubset


def sample(n, m, rng):
    chosen, counts = [], {}
    pts = [tuple(rng.randrange(2) for _ in range(n)) for _ in range(4 * 2**n)]
    for x in pts:
        keys = [(k, x[k:]) for k in range(1, n) if any(x[k:])]
        if any(x) and all(counts.get(k, 0) < m for k in keys):
            for k in keys:
                counts[k] = counts.get(k, 0) + 1
            while x and x[-1] == 0:
                x = x[:-1]
            if x not in chosen:
                chosen.append(x)
    return chosen


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rank", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    D = DirectSum(Cyclic(2))
    chain = SubgroupChain.coordinate_prefixes(D, args.rank)
    pts = sample(args.rank, 2, random.Random(args.seed))
    print(f"{len(pts)} points in G_{args.rank} ({2**args.rank} elements)")
    res = chain_partition(WindowedSubset(D, elements=pts), chain, m=2, parts_target=4)
    for i, P in enumerate(res.parts):
        print(f"  part {i}: {len(P)} points")
    print(f"collisions inside their level: {sum(len(c['inside']) for c in res.trace['collisions'].values())}")
    print(f"collisions outside (should be 0): {res.trace['exceptions']}")
    print(f"level partitions nested: {res.trace['all_nested']}")


if __name__ == "__main__":
    main()

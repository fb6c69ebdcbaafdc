"""Quadratic sets and where their collisions come from.

For generic x and pairs (a, b) of rational vectors the set
{x + k a + k^2 b : k = 0..m} lives on a parabola.  Shifts by two differences of
the same parabola meet the set again, and each such meeting is pinned down by
solving a 2x2 Vandermonde system over the rationals.
"""

import argparse
import random

from thinsets.constructions import ORDERED, explain_collisions, generic_indexing, pair_collision_set, quadratic_thin_set, sample_rational_pairs, vandermonde_solve
from thinsets.groups import Lattice, RationalVectors


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d", type=int, default=2)
    ap.add_argument("--m", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    H, Z = RationalVectors(args.d), Lattice(1)
    pairs = sample_rational_pairs(args.d, 10, args.seed)
    A = quadratic_thin_set(H, Z, args.m, generic_indexing(H, Z, ORDERED, seed=args.seed, pairs=pairs))
    print(f"|A| = {len(A)}, coincidences {len(A.coincidences)}")

    a, b = pairs[0]
    print(f"solve back (a, b) from indices 0, 1, 2: {vandermonde_solve(0, 1, 2, H._mul(a, b), H._mul(H.scale(2, a), H.scale(4, b))) == (a, b)}")

    rng = random.Random(args.seed)
    for _ in range(4):
        a, b = rng.choice(pairs)
        i, j, k = rng.sample(range(args.m + 1), 3)
        x = (0, H._mul(H.scale(j - i, a), H.scale(j * j - i * i, b)))
        y = (0, H._mul(H.scale(k - i, a), H.scale(k * k - i * i, b)))
        rep = pair_collision_set(A, x, y)
        explained, unexplained = explain_collisions(A, x, y)
        print(f"  triple {(i, j, k)}: {rep.size} collisions (cap {rep.cap}), explained {len(explained)}, unexplained {len(unexplained)}")


if __name__ == "__main__":
    main()

"""Three-colouring the square of a countable group.

Horizontal lines should carry few points of colour 1, vertical lines few of
colour 2 and diagonals few of colour 3.  On G_L x G_L for the Boolean chain the
sparse points of every line stay inside the block of the line's own level; we
print the census of a few lines and the containment check for all of them.
"""

import argparse

from thinsets.coloring import DIAGONAL, HORIZONTAL, VERTICAL, LineSpec, chain_containments, chain_three_coloring, line_census
from thinsets.groups import Cyclic, DirectSum
from thinsets.partition import SubgroupChain


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--levels", type=int, default=5)
    args = ap.parse_args()

    D = DirectSum(Cyclic(2))
    chain = SubgroupChain.coordinate_prefixes(D, args.levels)
    table = chain_three_coloring(D, chain)
    print(f"coloured {len(table)} pairs")
    for g in [(1,), (0, 1), (1, 1, 1)]:
        for kind in (HORIZONTAL, VERTICAL, DIAGONAL):
            print("  " + line_census(table, LineSpec(kind, g)).summary(D.format_element))
    exc = chain_containments(table, chain)
    print("containment exceptions: " + ", ".join(f"{k} {len(v)}" for k, v in exc.items()))


if __name__ == "__main__":
    main()

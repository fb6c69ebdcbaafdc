"""How many thin pieces does a group need?

The answer depends only on |G| and on kappa: successor sizes need their
predecessor many, limit sizes mostly need themselves, and singular sizes with
kappa = |G| drop to the cofinality, with one case left undecided.
"""

import argparse

from thinsets.cardinals import classify, cofinality, mu_thin_partition_number, parse_cardinal

ROWS = [
    ("aleph 1", "aleph 0"),
    ("aleph (omega+1)", "aleph 0"),
    ("aleph omega", "aleph 3"),
    ("aleph omega", "aleph omega"),
    ("aleph omega1", "aleph omega"),
    ("aleph omega1", "aleph omega1"),
    ("aleph (omega2*2)", "aleph (omega2*2)"),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.parse_args()
    print(f"{'|G|':22} {'kappa':22} {'kind':9} {'cf':18} mu")
    for size, kappa in ROWS:
        G, k = parse_cardinal(size), parse_cardinal(kappa)
        mu = mu_thin_partition_number(G, k)
        shown = " or ".join(sorted(map(str, mu))) if isinstance(mu, frozenset) else str(mu)
        print(f"{size:22} {kappa:22} {classify(G):9} {str(cofinality(G)):18} {shown}")


if __name__ == "__main__":
    main()

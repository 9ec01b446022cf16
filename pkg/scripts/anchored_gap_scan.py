#!/usr/bin/env python3
"""Scan the gap between plain and anchored embeddings of P(a, 1) into balls.

For each a the anchored threshold is a + 1 (reproduced here by the
minimum-action engine), while symplectic folding already provides a plain
embedding for any c > 2 + a/2 once a > 2.  The open interval between the
two thresholds is where an embedding exists but cannot carry an anchor.
"""

from __future__ import annotations

import argparse
from fractions import Fraction

from toricech.geometry import Direction, polydisk
from toricech.obstruct import (
    ANCHOR_E10,
    check_polydisk_ball,
    folding_embedding_exists,
    min_action_bound,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--a-values",
        default="3/2,2,5/2,3,4,6,8,12",
        help="comma-separated rational values of a (default: %(default)s)",
    )
    args = parser.parse_args()
    values = [Fraction(v) for v in args.a_values.split(",")]

    header = f"{'a':>6}  {'plain c >':>10}  {'anchored c >':>12}  {'engine bound':>12}  gap interval"
    print(header)
    print("-" * len(header))
    for a in values:
        engine = min_action_bound(polydisk(a, 1), Direction(1, 1), [ANCHOR_E10])
        anchored = a + 1
        assert engine == anchored, (a, engine)
        plain = 2 + a / 2 if a > 2 else anchored
        gap = f"({plain}, {anchored}]" if plain < anchored else "(none)"
        print(f"{str(a):>6}  {str(plain):>10}  {str(anchored):>12}  {str(engine):>12}  {gap}")

    print()
    print("spot checks at a = 8:")
    for c in (Fraction(6), Fraction(13, 2), Fraction(9), Fraction(19, 2)):
        plain = folding_embedding_exists(8, c)
        anchored = check_polydisk_ball(8, c).verdict
        print(f"  c = {str(c):>5}: plain embedding {plain:>7}, anchored verdict {anchored}")


if __name__ == "__main__":
    main()

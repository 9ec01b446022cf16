#!/usr/bin/env python3
"""Print generator censuses: by index for small indices, and by action for a
chosen domain.  Useful for eyeballing how the combinatorial data grows."""

from __future__ import annotations

import argparse
from fractions import Fraction

from toricech.geometry import CONVEX, ball, ellipsoid, polydisk
from toricech.lattice import (
    action,
    encode_generator,
    enumerate_by_action,
    enumerate_by_index,
    generator_j0,
)

SHAPES = {"ball": ball, "ellipsoid": ellipsoid, "polydisk": polydisk}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-index", type=int, default=6)
    parser.add_argument("--shape", choices=sorted(SHAPES), default="ball")
    parser.add_argument("--params", default="1", help="comma-separated rationals")
    parser.add_argument("--action-bound", default="4")
    args = parser.parse_args()

    print("index censuses (convex flavor):")
    for idx in range(0, args.max_index + 1):
        census = enumerate_by_index(CONVEX, idx)
        names = ", ".join(encode_generator(g) or "(empty)" for g in census)
        print(f"  index {idx}: {len(census):3d} generators  [{names}]")

    region = SHAPES[args.shape](*(Fraction(p) for p in args.params.split(",")))
    bound = Fraction(args.action_bound)
    print()
    print(f"action census for {args.shape}({args.params}) below {bound}:")
    for g in enumerate_by_action(region, bound):
        name = encode_generator(g) or "(empty)"
        print(f"  {name:24s} action {str(action(g, region)):>8s}  j0 {generator_j0(g):>3d}")


if __name__ == "__main__":
    main()

from __future__ import annotations

from fractions import Fraction
from math import gcd

import hypothesis.strategies as st

from toricech.geometry import CONCAVE, CONVEX, Direction, ToricRegion, ellipsoid, polydisk
from toricech.lattice import LABEL_E, LABEL_H, EdgeSpec, path_generator

small_fractions = st.builds(Fraction, st.integers(1, 8), st.integers(1, 6))


@st.composite
def sloped_convex_regions(draw):
    k = draw(st.integers(1, 3))
    mags = sorted(draw(st.lists(small_fractions, min_size=k, max_size=k, unique=True)))
    widths = [draw(small_fractions) for _ in range(k)]
    lead = draw(st.one_of(st.just(Fraction(0)), small_fractions))  # horizontal first edge
    top = draw(st.one_of(st.just(Fraction(0)), small_fractions))  # vertical last edge
    b_cap = top + sum(w * m for w, m in zip(widths, mags))
    pts = [(Fraction(0), b_cap)]
    x, y = Fraction(0), b_cap
    if lead:
        x += lead
        pts.append((x, y))
    for w, m in zip(widths, mags):
        x += w
        y -= w * m
        pts.append((x, y))
    if top:
        pts.append((x, Fraction(0)))
    return ToricRegion(CONVEX, tuple(reversed(pts)))


def convex_regions():
    return st.one_of(
        sloped_convex_regions(),
        st.builds(polydisk, small_fractions, small_fractions),
        st.builds(ellipsoid, small_fractions, small_fractions),
    )


@st.composite
def concave_regions(draw):
    k = draw(st.integers(1, 3))
    mags = sorted(draw(st.lists(small_fractions, min_size=k, max_size=k, unique=True)), reverse=True)
    widths = [draw(small_fractions) for _ in range(k)]
    b_cap = sum(w * m for w, m in zip(widths, mags))
    pts = [(Fraction(0), b_cap)]
    x, y = Fraction(0), b_cap
    for w, m in zip(widths, mags):
        x += w
        y -= w * m
        pts.append((x, y))
    return ToricRegion(CONCAVE, tuple(reversed(pts)))


_CONVEX_DIRECTIONS = [
    Direction(a, b)
    for a in range(0, 4)
    for b in range(0, 4)
    if (a, b) != (0, 0) and gcd(a, b) == 1
]
_CONCAVE_DIRECTIONS = [d for d in _CONVEX_DIRECTIONS if not d.is_axis()]


@st.composite
def convex_generators(draw, max_edges: int = 3, max_multiplicity: int = 3):
    dirs = draw(
        st.lists(st.sampled_from(_CONVEX_DIRECTIONS), max_size=max_edges, unique=True)
    )
    edges = []
    for d in dirs:
        m = draw(st.integers(1, max_multiplicity))
        label = LABEL_E if d.is_axis() else draw(st.sampled_from([LABEL_E, LABEL_H]))
        edges.append(EdgeSpec(d, m, label))
    return path_generator(CONVEX, edges)


@st.composite
def concave_generators(draw, max_edges: int = 3, max_multiplicity: int = 3):
    dirs = draw(
        st.lists(st.sampled_from(_CONCAVE_DIRECTIONS), min_size=1, max_size=max_edges, unique=True)
    )
    edges = []
    for d in dirs:
        m = draw(st.integers(1, max_multiplicity))
        label = draw(st.sampled_from([LABEL_E, LABEL_H]))
        edges.append(EdgeSpec(d, m, label))
    return path_generator(CONCAVE, edges)

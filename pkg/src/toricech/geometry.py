"""Exact rational geometry of toric moment regions.

A toric domain in C^2 is determined by a region Omega in the closed positive
quadrant whose upper boundary is a chain from (a, 0) on the x-axis to (0, b)
on the y-axis.  This module models that chain as a rational polygon and
provides the support-function data everything downstream is built from:

* convex flavor: a concave non-increasing chain (graph of a concave PL
  function, optionally preceded by one vertical segment at x = a), and the
  support value max{a*x + b*y} over the region;
* concave flavor: a convex strictly decreasing chain, and the bracket value
  min{a*x + b*y} over the chain.

All scalars are `fractions.Fraction`; no floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Literal

Flavor = Literal["convex", "concave"]
CONVEX: Flavor = "convex"
CONCAVE: Flavor = "concave"

Point = tuple[Fraction, Fraction]


def _exact(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass Fraction, int, or rational string")
    return Fraction(value)


def as_point(x, y) -> Point:
    return (_exact(x), _exact(y))


@dataclass(frozen=True, order=True)
class Direction:
    """Coprime pair (a, b) of nonnegative integers, not both zero.

    Labels a family of Reeb orbits on the boundary torus whose outward
    normal is (a, b); also serves as the linear functional a*x + b*y.
    """

    a: int
    b: int

    def __post_init__(self) -> None:
        if not (isinstance(self.a, int) and isinstance(self.b, int)):
            raise TypeError("direction components must be integers")
        if self.a < 0 or self.b < 0:
            raise ValueError(f"direction components must be nonnegative, got {(self.a, self.b)}")
        if (self.a, self.b) == (0, 0):
            raise ValueError("direction (0, 0) is not allowed")
        if gcd(self.a, self.b) != 1:
            raise ValueError(f"direction {(self.a, self.b)} is not coprime")

    def is_axis(self) -> bool:
        return self.a == 0 or self.b == 0


def slope_order_key(d: Direction) -> tuple[int, Fraction]:
    """Sort key putting directions in increasing a/b, with (1, 0) last."""
    if d.b == 0:
        return (1, Fraction(0))
    return (0, Fraction(d.a, d.b))


@dataclass(frozen=True)
class ToricRegion:
    """Moment region Omega, stored as the vertices of its upper boundary.

    `boundary` lists the chain vertices from (a, 0) to (0, b).  Consecutive
    vertices must be distinct and edge slopes strictly monotone; the chain
    may touch the axes only at its endpoints.  Zero-area inputs (a <= 0 or
    b <= 0) are rejected.
    """

    flavor: Flavor
    boundary: tuple[Point, ...]

    def __post_init__(self) -> None:
        pts = tuple((_exact(x), _exact(y)) for x, y in self.boundary)
        object.__setattr__(self, "boundary", pts)
        if self.flavor not in (CONVEX, CONCAVE):
            raise ValueError(f"unknown flavor {self.flavor!r}")
        self._validate()

    def _validate(self) -> None:
        bd = self.boundary
        if len(bd) < 2:
            raise ValueError("boundary chain needs at least two vertices")
        (x0, y0), (xn, yn) = bd[0], bd[-1]
        if y0 != 0 or x0 <= 0:
            raise ValueError("first boundary vertex must be (a, 0) with a > 0")
        if xn != 0 or yn <= 0:
            raise ValueError("last boundary vertex must be (0, b) with b > 0")
        for x, y in bd:
            if x < 0 or y < 0:
                raise ValueError("boundary vertices must lie in the closed positive quadrant")
        for x, y in bd[1:-1]:
            if x == 0 or y == 0:
                raise ValueError("chain may touch the axes only at its endpoints")
        steps = [(q[0] - p[0], q[1] - p[1]) for p, q in zip(bd, bd[1:])]
        if any(dx == 0 and dy == 0 for dx, dy in steps):
            raise ValueError("consecutive boundary vertices must be distinct")
        if self.flavor == CONVEX:
            self._validate_convex(steps)
        else:
            self._validate_concave(steps)

    def _validate_convex(self, steps: list[tuple[Fraction, Fraction]]) -> None:
        # traversed from (a, 0): optional single vertical rise, then the graph
        # part with x strictly decreasing and slopes strictly increasing
        start = 0
        if steps[0][0] == 0:
            if steps[0][1] <= 0:
                raise ValueError("vertical segment must rise from (a, 0)")
            start = 1
        prev = None  # slope as (dy, dx), dx < 0
        for dx, dy in steps[start:]:
            if dx >= 0:
                raise ValueError("x must strictly decrease along the graph part of the chain")
            if dy < 0:
                raise ValueError("convex-flavor chain must be non-increasing left of x = a")
            if prev is not None:
                pdy, pdx = prev
                # strict slope increase traversed right-to-left: pdy/pdx < dy/dx
                if not pdy * dx < dy * pdx:
                    raise ValueError("chain slopes must be strictly monotone (no collinear triples)")
            prev = (dy, dx)

    def _validate_concave(self, steps: list[tuple[Fraction, Fraction]]) -> None:
        prev = None
        for dx, dy in steps:
            if dx >= 0 or dy <= 0:
                raise ValueError("concave-flavor chain admits no horizontal or vertical edges")
            if prev is not None:
                pdy, pdx = prev
                # strict slope decrease traversed right-to-left: pdy/pdx > dy/dx
                if not pdy * dx > dy * pdx:
                    raise ValueError("chain slopes must be strictly monotone (no collinear triples)")
            prev = (dy, dx)

    def chain_edges(self) -> Iterator[tuple[Point, Point]]:
        return zip(self.boundary, self.boundary[1:])


def ball(r) -> ToricRegion:
    """Moment triangle of the round ball of capacity r."""
    r = _exact(r)
    return ToricRegion(CONVEX, ((r, Fraction(0)), (Fraction(0), r)))


def ellipsoid(a, b) -> ToricRegion:
    """Moment triangle of the ellipsoid with axis capacities a, b."""
    return ToricRegion(CONVEX, (as_point(a, 0), as_point(0, b)))


def polydisk(a, b) -> ToricRegion:
    """Moment rectangle of the polydisk with factor capacities a, b."""
    return ToricRegion(CONVEX, (as_point(a, 0), as_point(a, b), as_point(0, b)))


def concave_triangle(a, b) -> ToricRegion:
    """The (a, b) moment triangle read as a concave-flavor region."""
    return ToricRegion(CONCAVE, (as_point(a, 0), as_point(0, b)))


def axis_caps(region: ToricRegion) -> tuple[Fraction, Fraction]:
    """The axis intercepts (a, b) of the region."""
    return (region.boundary[0][0], region.boundary[-1][1])


def support(region: ToricRegion, d: Direction) -> Fraction:
    """max of a*x + b*y over the region (attained at a chain vertex)."""
    if region.flavor != CONVEX:
        raise ValueError("support requires convex flavor")
    return max(d.a * x + d.b * y for x, y in region.boundary)


def bracket(region: ToricRegion, d: Direction) -> Fraction:
    """min of a*x + b*y over the upper boundary chain."""
    if region.flavor != CONCAVE:
        raise ValueError("bracket requires concave flavor")
    return min(d.a * x + d.b * y for x, y in region.boundary)


def chain_constraints(region: ToricRegion) -> list[tuple[Fraction, Fraction, Fraction]]:
    """Half-plane data (A, B, C) with A*x + B*y <= C along each chain edge.

    For convex flavor the region is exactly the quadrant intersected with
    these half-planes.
    """
    out = []
    for (ux, uy), (vx, vy) in region.chain_edges():
        a_coef = vy - uy
        b_coef = ux - vx
        out.append((a_coef, b_coef, a_coef * ux + b_coef * uy))
    return out


def edge_normals(region: ToricRegion) -> list[Direction]:
    """Outward primitive normal of each chain edge."""
    out = []
    for a_coef, b_coef, _ in chain_constraints(region):
        num_a, num_b = a_coef, b_coef
        den = num_a.denominator * num_b.denominator // gcd(num_a.denominator, num_b.denominator)
        ia, ib = int(num_a * den), int(num_b * den)
        g = gcd(ia, ib)
        out.append(Direction(ia // g, ib // g))
    return out


def eval_upper(region: ToricRegion, x: Fraction) -> Fraction:
    """Height of the upper boundary at abscissa x (top of a vertical edge)."""
    x = _exact(x)
    a_cap = region.boundary[0][0]
    if x < 0 or x > a_cap:
        raise ValueError(f"abscissa {x} outside [0, {a_cap}]")
    best = None
    for (ux, uy), (vx, vy) in region.chain_edges():
        lo, hi = min(ux, vx), max(ux, vx)
        if lo <= x <= hi:
            if ux == vx:
                y = max(uy, vy)
            else:
                y = uy + (vy - uy) * (x - ux) / (vx - ux)
            if best is None or y > best:
                best = y
    assert best is not None
    return best


def contains_point(region: ToricRegion, p: Point) -> bool:
    """Closed containment of a point in the region."""
    x, y = _exact(p[0]), _exact(p[1])
    if x < 0 or y < 0:
        return False
    if region.flavor == CONVEX:
        return all(a * x + b * y <= c for a, b, c in chain_constraints(region))
    a_cap = region.boundary[0][0]
    if x > a_cap:
        return False
    return y <= eval_upper(region, x)


def region_contains(inner: ToricRegion, outer: ToricRegion) -> bool:
    """Closed containment of regions; flavors may differ.

    A convex-flavor outer is an intersection of half-planes, so checking
    the inner chain vertices suffices.  A concave-flavor outer also needs
    the inner chain evaluated under the outer chain's own vertices.
    """
    if outer.flavor == CONVEX:
        return all(contains_point(outer, v) for v in inner.boundary)
    a_in = inner.boundary[0][0]
    a_out = outer.boundary[0][0]
    if a_in > a_out:
        return False
    if not all(contains_point(outer, v) for v in inner.boundary):
        return False
    for wx, wy in outer.boundary:
        if wx <= a_in and eval_upper(inner, wx) > wy:
            return False
    return True


def region_contains_strictly(inner: ToricRegion, outer: ToricRegion) -> bool:
    """Containment with the inner region disjoint from the outer chain.

    This is the moment-map criterion for the inner toric domain to sit in
    the interior of the outer one.
    """
    if not region_contains(inner, outer):
        return False
    a_in, b_in = axis_caps(inner)
    a_out, b_out = axis_caps(outer)
    if a_in >= a_out or b_in >= b_out:
        return False
    xs = {x for x, _ in inner.boundary}
    xs |= {x for x, _ in outer.boundary if x <= a_in}
    return all(eval_upper(inner, x) < eval_upper(outer, x) for x in xs)


def comparison_directions(first: ToricRegion, second: ToricRegion) -> list[Direction]:
    """Edge normals of both regions plus the axis directions, sorted."""
    dirs = {Direction(1, 0), Direction(0, 1)}
    dirs.update(edge_normals(first))
    dirs.update(edge_normals(second))
    return sorted(dirs)


def support_dominates(inner: ToricRegion, outer: ToricRegion) -> bool:
    """Whether inner's support (convex) or bracket (concave) values are
    bounded by outer's over every comparison direction.

    For same-flavor polygonal regions this decides containment: the finite
    set of edge normals carries all the constraints.
    """
    if inner.flavor != outer.flavor:
        raise ValueError("support comparison requires matching flavors")
    value = support if inner.flavor == CONVEX else bracket
    return all(value(inner, d) <= value(outer, d) for d in comparison_directions(inner, outer))


def violated_direction(
    inner: ToricRegion, outer: ToricRegion
) -> tuple[Direction, Fraction, Fraction] | None:
    """First comparison direction where inner's value exceeds outer's."""
    if inner.flavor != outer.flavor:
        raise ValueError("support comparison requires matching flavors")
    value = support if inner.flavor == CONVEX else bracket
    for d in comparison_directions(inner, outer):
        vi, vo = value(inner, d), value(outer, d)
        if vi > vo:
            return (d, vi, vo)
    return None


def slope_minus_one_support(region: ToricRegion) -> tuple[Point, Fraction]:
    """Maximizer and maximum of x + y on the chain.

    When a whole slope -1 edge maximizes, the lower-right endpoint is
    returned; witness-path construction continues along the steep side
    from that vertex.
    """
    if region.flavor != CONVEX:
        raise ValueError("slope_minus_one_support requires convex flavor")
    best = max(x + y for x, y in region.boundary)
    point = max((p for p in region.boundary if p[0] + p[1] == best), key=lambda p: p[0])
    return (point, best)


def segment_meets_interior(region: ToricRegion, p: Point, q: Point) -> bool:
    """Whether the closed segment [p, q] meets the open interior.

    Solved exactly as a one-dimensional feasibility problem over the
    half-plane description; convex flavor only.
    """
    if region.flavor != CONVEX:
        raise ValueError("interior test implemented for convex flavor only")
    px, py = _exact(p[0]), _exact(p[1])
    qx, qy = _exact(q[0]), _exact(q[1])
    # strict constraints g(t) > 0 along p + t*(q - p)
    pairs = [(px, qx), (py, qy)]
    for a, b, c in chain_constraints(region):
        pairs.append((c - a * px - b * py, c - a * qx - b * qy))
    lo, hi = Fraction(0), Fraction(1)
    lo_strict = hi_strict = False
    for g0, g1 in pairs:
        s = g1 - g0
        if s == 0:
            if g0 <= 0:
                return False
        elif s > 0:
            t0 = -g0 / s
            if t0 > lo or (t0 == lo and not lo_strict):
                lo, lo_strict = t0, True
        else:
            t0 = -g0 / s
            if t0 < hi or (t0 == hi and not hi_strict):
                hi, hi_strict = t0, True
    if lo < hi:
        return True
    return lo == hi and not lo_strict and not hi_strict

"""Labeled integral lattice paths: combinatorial ECH generators.

A generator is a list of edges, each a primitive direction (a, b) with a
multiplicity m and an 'e' or 'h' label; the geometric path runs from
(0, Y) to (X, 0) taking m steps of (b, -a) per edge.  The convex flavor
keeps slopes -a/b strictly decreasing along the path (a concave path),
the concave flavor strictly increasing (a convex path, all edges with
a, b >= 1).

The combinatorial ECH index is 2*(lattice count - 1) -/+ (number of 'h'
labels) for the convex/concave flavor, where the lattice count is taken
over the region bounded by the path and the axes; the concave count
excludes lattice points sitting on the path itself, endpoints included.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd
from typing import Iterable, Iterator

from .geometry import (
    CONCAVE,
    CONVEX,
    Direction,
    Flavor,
    ToricRegion,
    axis_caps,
    bracket,
    slope_order_key,
    support,
)

LABEL_E = "e"
LABEL_H = "h"


@dataclass(frozen=True, order=True)
class EdgeSpec:
    """One edge: primitive direction, positive multiplicity, 'e'/'h' label."""

    direction: Direction
    multiplicity: int
    label: str

    def __post_init__(self) -> None:
        if not isinstance(self.multiplicity, int) or self.multiplicity < 1:
            raise ValueError("edge multiplicity must be a positive integer")
        if self.label not in (LABEL_E, LABEL_H):
            raise ValueError(f"edge label must be 'e' or 'h', got {self.label!r}")
        if self.label == LABEL_H and self.direction.is_axis():
            raise ValueError("horizontal and vertical edges must be labeled 'e'")


@dataclass(frozen=True)
class PathGenerator:
    """A labeled lattice path; edges must already be in path order."""

    flavor: Flavor
    edges: tuple[EdgeSpec, ...]

    def __post_init__(self) -> None:
        if self.flavor not in (CONVEX, CONCAVE):
            raise ValueError(f"unknown flavor {self.flavor!r}")
        object.__setattr__(self, "edges", tuple(self.edges))
        dirs = [e.direction for e in self.edges]
        if len({(d.a, d.b) for d in dirs}) != len(dirs):
            raise ValueError("edge directions must be pairwise distinct")
        keys = [slope_order_key(d) for d in dirs]
        if self.flavor == CONVEX:
            if keys != sorted(keys):
                raise ValueError("convex-flavor edges must be ordered by increasing a/b")
        else:
            if not self.edges:
                raise ValueError("concave-flavor generators must be nonempty")
            if any(d.is_axis() for d in dirs):
                raise ValueError("concave-flavor edges need a >= 1 and b >= 1")
            if keys != sorted(keys, reverse=True):
                raise ValueError("concave-flavor edges must be ordered by decreasing a/b")

    def is_all_e(self) -> bool:
        return all(e.label == LABEL_E for e in self.edges)


def path_generator(flavor: Flavor, edges: Iterable[EdgeSpec]) -> PathGenerator:
    """Build a generator, sorting the edges into canonical path order."""
    edges = sorted(edges, key=lambda e: slope_order_key(e.direction), reverse=(flavor == CONCAVE))
    return PathGenerator(flavor, tuple(edges))


def empty_generator() -> PathGenerator:
    return PathGenerator(CONVEX, ())


_EDGE_RE = re.compile(r"^([eh]):(\d+),(\d+)x(\d+)$")


def encode_generator(g: PathGenerator) -> str:
    """Canonical text form, e.g. 'e:1,0x2+h:1,1x1'; empty path encodes as ''."""
    return "+".join(f"{e.label}:{e.direction.a},{e.direction.b}x{e.multiplicity}" for e in g.edges)


def parse_generator(text: str, flavor: Flavor) -> PathGenerator:
    text = text.strip()
    if not text:
        return path_generator(flavor, ())
    edges = []
    for part in text.split("+"):
        m = _EDGE_RE.match(part.strip())
        if m is None:
            raise ValueError(f"bad edge spec {part!r}; expected e:a,bxm or h:a,bxm")
        label, a, b, mult = m.group(1), int(m.group(2)), int(m.group(3)), int(m.group(4))
        edges.append(EdgeSpec(Direction(a, b), mult, label))
    return path_generator(flavor, edges)


def extents(g: PathGenerator) -> tuple[int, int]:
    """(X, Y) endpoints of the path from (0, Y) to (X, 0)."""
    x = sum(e.multiplicity * e.direction.b for e in g.edges)
    y = sum(e.multiplicity * e.direction.a for e in g.edges)
    return (x, y)


def vertices(g: PathGenerator) -> tuple[tuple[int, int], ...]:
    """Lattice vertices of the path, from (0, Y) to (X, 0)."""
    x, y = 0, extents(g)[1]
    out = [(x, y)]
    for e in g.edges:
        x += e.multiplicity * e.direction.b
        y -= e.multiplicity * e.direction.a
        out.append((x, y))
    return tuple(out)


def h_count(g: PathGenerator) -> int:
    return sum(1 for e in g.edges if e.label == LABEL_H)


def e_count(g: PathGenerator) -> int:
    """Edges labeled 'e', plus 'h'-labeled edges of multiplicity > 1."""
    return sum(1 for e in g.edges if e.label == LABEL_E or e.multiplicity > 1)


def _edge_key(g: PathGenerator) -> tuple[tuple[int, int, int], ...]:
    return tuple((e.direction.a, e.direction.b, e.multiplicity) for e in g.edges)


@lru_cache(maxsize=None)
def _closed_region_count(key: tuple[tuple[int, int, int], ...]) -> int:
    """Lattice points in the closed region under the path, by column sums.

    Column tops are floors of linear functions with integer data, so the
    whole computation stays in integer arithmetic.
    """
    y = sum(a * m for a, b, m in key)
    x, total = 0, 0
    for a, b, m in key:
        if b == 0:
            continue  # vertical drop at x = X; that column is counted below
        for p in range(x, x + m * b):
            total += y + (-(a * (p - x))) // b + 1
        x += m * b
        y -= m * a
    return total + y + 1


def _on_path_lattice_count(g: PathGenerator) -> int:
    """Lattice points on the path: m + 1 per edge, shared vertices once."""
    if not g.edges:
        return 1
    return sum(e.multiplicity for e in g.edges) + 1


def lattice_count_convex(g: PathGenerator) -> int:
    """Lattice points in the closed region under the path, boundary included."""
    if g.flavor != CONVEX:
        raise ValueError("lattice_count_convex requires convex flavor")
    return _closed_region_count(_edge_key(g))


def lattice_count_concave(g: PathGenerator) -> int:
    """Lattice points in the closed region, minus those on the path itself."""
    if g.flavor != CONCAVE:
        raise ValueError("lattice_count_concave requires concave flavor")
    return _closed_region_count(_edge_key(g)) - _on_path_lattice_count(g)


def index_convex(g: PathGenerator) -> int:
    """Combinatorial ECH index: 2*(count - 1) - h."""
    return 2 * (lattice_count_convex(g) - 1) - h_count(g)


def j0_convex(g: PathGenerator) -> int:
    """Combinatorial J0 index: ECH index - 2X - 2Y - e."""
    x, y = extents(g)
    return index_convex(g) - 2 * x - 2 * y - e_count(g)


def index_concave(g: PathGenerator) -> int:
    """Combinatorial ECH index: 2*(count - 1) + h."""
    return 2 * (lattice_count_concave(g) - 1) + h_count(g)


def j0_concave(g: PathGenerator) -> int:
    """Combinatorial J0 index: ECH index - 2X - 2Y + e."""
    x, y = extents(g)
    return index_concave(g) - 2 * x - 2 * y + e_count(g)


def generator_index(g: PathGenerator) -> int:
    return index_convex(g) if g.flavor == CONVEX else index_concave(g)


def generator_j0(g: PathGenerator) -> int:
    return j0_convex(g) if g.flavor == CONVEX else j0_concave(g)


def action(g: PathGenerator, region: ToricRegion) -> Fraction:
    """Sum over edges of multiplicity times the support/bracket value."""
    if g.flavor != region.flavor:
        raise ValueError("generator and region flavors must match")
    value = support if region.flavor == CONVEX else bracket
    return sum((e.multiplicity * value(region, e.direction) for e in g.edges), Fraction(0))


def _sorted_directions(dirs: Iterable[Direction], flavor: Flavor) -> list[Direction]:
    return sorted(dirs, key=slope_order_key, reverse=(flavor == CONCAVE))


def _unlabeled_paths(
    flavor: Flavor,
    directions: list[Direction],
    max_multiplicity,
) -> Iterator[tuple[tuple[Direction, int], ...]]:
    """All multiplicity assignments; `max_multiplicity(d, chosen)` caps each."""

    n = len(directions)

    def rec(i: int, chosen: tuple[tuple[Direction, int], ...]) -> Iterator[tuple]:
        if i == n:
            yield chosen
            return
        d = directions[i]
        cap = max_multiplicity(d, chosen)
        yield from rec(i + 1, chosen)
        for m in range(1, cap + 1):
            yield from rec(i + 1, chosen + ((d, m),))

    yield from rec(0, ())


def _labelings(flavor: Flavor, path: tuple[tuple[Direction, int], ...]) -> Iterator[PathGenerator]:
    eligible = [i for i, (d, _) in enumerate(path) if not d.is_axis()]
    for mask in range(1 << len(eligible)):
        labels = [LABEL_E] * len(path)
        for bit, i in enumerate(eligible):
            if mask >> bit & 1:
                labels[i] = LABEL_H
        yield PathGenerator(
            flavor, tuple(EdgeSpec(d, m, lab) for (d, m), lab in zip(path, labels))
        )


def paths_by_extents(
    flavor: Flavor, max_x: int, max_y: int, max_sum: int | None = None
) -> Iterator[tuple[tuple[Direction, int], ...]]:
    """Unlabeled paths with X <= max_x, Y <= max_y (and X + Y <= max_sum)."""
    dirs = []
    for a in range(0, max_y + 1):
        for b in range(0, max_x + 1):
            try:
                d = Direction(a, b)
            except ValueError:
                continue
            if flavor == CONCAVE and d.is_axis():
                continue
            dirs.append(d)
    dirs = _sorted_directions(dirs, flavor)

    def cap(d: Direction, chosen) -> int:
        used_x = sum(m * dd.b for dd, m in chosen)
        used_y = sum(m * dd.a for dd, m in chosen)
        caps = []
        if d.b > 0:
            caps.append((max_x - used_x) // d.b)
        if d.a > 0:
            caps.append((max_y - used_y) // d.a)
        if max_sum is not None:
            step = d.a + d.b
            caps.append((max_sum - used_x - used_y) // step)
        return max(0, min(caps))

    for path in _unlabeled_paths(flavor, dirs, cap):
        if flavor == CONCAVE and not path:
            continue
        yield path


def enumerate_by_index(flavor: Flavor, index: int) -> list[PathGenerator]:
    """All generators of the given flavor with the exact combinatorial index.

    Finiteness: X + Y <= index for the convex flavor and
    X + Y <= index/2 + 2 for the concave flavor (verified by sweep tests).
    """
    if index < 0:
        return []
    bound = index if flavor == CONVEX else index // 2 + 2
    out = []
    for path in paths_by_extents(flavor, bound, bound, max_sum=bound):
        base = path_generator(flavor, tuple(EdgeSpec(d, m, LABEL_E) for d, m in path))
        count = lattice_count_convex(base) if flavor == CONVEX else lattice_count_concave(base)
        if flavor == CONVEX:
            h_needed = 2 * (count - 1) - index
        else:
            h_needed = index - 2 * (count - 1)
        eligible = [i for i, (d, _) in enumerate(path) if not d.is_axis()]
        if h_needed < 0 or h_needed > len(eligible):
            continue
        for combo in combinations(eligible, h_needed):
            labels = [LABEL_H if i in combo else LABEL_E for i in range(len(path))]
            out.append(
                PathGenerator(flavor, tuple(EdgeSpec(d, m, lab) for (d, m), lab in zip(path, labels)))
            )
    out.sort(key=encode_generator)
    return out


def _strict_budget_cap(budget: Fraction, unit: Fraction) -> int:
    """Largest m with m * unit < budget."""
    if budget <= 0:
        return 0
    ratio = budget / unit
    cap = ratio.numerator // ratio.denominator
    if ratio.denominator == 1:
        cap -= 1
    return max(0, cap)


def enumerate_by_action(
    region: ToricRegion, bound: Fraction, *, max_index: int | None = None
) -> list[PathGenerator]:
    """All generators of the region's flavor with action strictly below `bound`.

    Output is duplicate-free, sorted by (action, encoding).  For a concave
    region the census is infinite once `bound` exceeds min(a, b) (directions
    hugging an axis endpoint have bounded bracket), so a `max_index` cap is
    required there; generators are then also filtered to index <= max_index.
    """
    bound = Fraction(bound)
    if bound <= 0:
        raise ValueError("action bound must be positive")
    a_cap, b_cap = axis_caps(region)
    flavor = region.flavor
    value = support if flavor == CONVEX else bracket

    dirs = []
    if flavor == CONVEX:
        # support >= a*a_cap and >= b*b_cap bounds the direction box
        a_max = _strict_budget_cap(bound, a_cap)
        b_max = _strict_budget_cap(bound, b_cap)
        for a in range(0, a_max + 1):
            for b in range(0, b_max + 1):
                try:
                    d = Direction(a, b)
                except ValueError:
                    continue
                if value(region, d) < bound:
                    dirs.append(d)
    else:
        if bound > min(a_cap, b_cap) and max_index is None:
            raise ValueError(
                "concave census is infinite for this bound; pass max_index to cap the index"
            )
        # bracket values only grow in a and in b, so the admissible pairs
        # form a staircase; scan rows until the row minimum leaves the budget
        sum_box = max_index // 2 + 2 if max_index is not None else None
        a = 1
        while sum_box is None or a + 1 <= sum_box:
            row = []
            b = 1
            while sum_box is None or a + b <= sum_box:
                pair_value = min(a * x + b * y for x, y in region.boundary)
                if pair_value >= bound:
                    break
                if gcd(a, b) == 1:
                    row.append(Direction(a, b))
                b += 1
            if b == 1:
                break  # (a, 1) already out of budget; later rows only grow
            dirs.extend(row)
            a += 1
    dirs = _sorted_directions(dirs, flavor)
    units = {d: value(region, d) for d in dirs}

    def cap(d: Direction, chosen) -> int:
        used = sum(m * units[dd] for dd, m in chosen)
        caps = [_strict_budget_cap(bound - used, units[d])]
        if max_index is not None:
            step = d.a + d.b
            used_sum = sum(m * (dd.a + dd.b) for dd, m in chosen)
            caps.append((max_index // 2 + 2 - used_sum) // step)
        return max(0, min(caps))

    out = []
    for path in _unlabeled_paths(flavor, dirs, cap):
        if flavor == CONCAVE and not path:
            continue
        for g in _labelings(flavor, path):
            if max_index is not None and generator_index(g) > max_index:
                continue
            out.append(g)
    out.sort(key=lambda g: (action(g, region), encode_generator(g)))
    return out


def is_extremal(g: PathGenerator, region: ToricRegion) -> bool:
    """Whether g strictly minimizes (convex) or maximizes (concave) action
    among all-'e' generators of the same combinatorial index."""
    if not g.is_all_e():
        raise ValueError("extremality is defined for all-'e' generators")
    if g.flavor != region.flavor:
        raise ValueError("generator and region flavors must match")
    own = action(g, region)
    for other in enumerate_by_index(g.flavor, generator_index(g)):
        if other == g or not other.is_all_e():
            continue
        other_action = action(other, region)
        if g.flavor == CONVEX:
            if other_action <= own:
                return False
        else:
            if other_action >= own:
                return False
    return True

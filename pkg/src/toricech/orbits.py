"""Orbit sets on perturbed toric boundaries and their index bookkeeping.

After a nice perturbation, each primitive direction (a, b) carries one
elliptic simple orbit, plus one positive hyperbolic orbit when a, b > 0.
Orbit sets are multisets of such orbits (hyperbolic ones with multiplicity
one).  The per-orbit trivialization data on the convex side is

    c_tau = a + b,   Q_tau = a * b,   CZ(elliptic iterate) = 1,   CZ(hyperbolic) = 0,

with linking number max(a*b', a'*b) between distinct orbits (min(...) on
the concave side).  The resulting ECH and J0 indices reproduce the
combinatorial path indices through the edge-to-orbit bijection `iota`,
which is this module's master cross-check.

Concave-flavor ECH/J0 indices are deliberately not provided: the concave
trivialization table does not mesh with the literal concave lattice count
convention used in `lattice`, so concave flows use only the combinatorial
indices.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .geometry import CONCAVE, CONVEX, Direction, Flavor
from .lattice import LABEL_E, LABEL_H, EdgeSpec, PathGenerator, path_generator

ELLIPTIC = "e"
HYPERBOLIC = "h"


@dataclass(frozen=True, order=True)
class OrbitLabel:
    """A simple Reeb orbit: elliptic 'e' or hyperbolic 'h' at direction (a, b)."""

    kind: str
    direction: Direction

    def __post_init__(self) -> None:
        if self.kind not in (ELLIPTIC, HYPERBOLIC):
            raise ValueError(f"orbit kind must be 'e' or 'h', got {self.kind!r}")
        if self.kind == HYPERBOLIC and self.direction.is_axis():
            raise ValueError("axis orbits are elliptic; no hyperbolic orbit at (1,0)/(0,1)")


def _entry_key(entry: tuple[OrbitLabel, int]) -> tuple[int, int, str]:
    lab = entry[0]
    return (lab.direction.a, lab.direction.b, lab.kind)


@dataclass(frozen=True)
class OrbitSet:
    """Multiset of labeled orbits with multiplicities; hyperbolic ones once."""

    flavor: Flavor
    entries: tuple[tuple[OrbitLabel, int], ...]

    def __post_init__(self) -> None:
        if self.flavor not in (CONVEX, CONCAVE):
            raise ValueError(f"unknown flavor {self.flavor!r}")
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        keys = [_entry_key(e) for e in entries]
        if any(k2 <= k1 for k1, k2 in zip(keys, keys[1:])):
            raise ValueError("orbit entries must be sorted and distinct; use orbit_set()")
        for lab, m in entries:
            if not isinstance(m, int) or m < 1:
                raise ValueError("orbit multiplicities must be positive integers")
            if lab.kind == HYPERBOLIC and m != 1:
                raise ValueError("hyperbolic orbits carry multiplicity one")
            if self.flavor == CONCAVE and lab.direction.is_axis():
                raise ValueError("concave-flavor orbit sets exclude the axis orbits")


def orbit_set(flavor: Flavor, entries: Iterable[tuple[OrbitLabel, int]]) -> OrbitSet:
    return OrbitSet(flavor, tuple(sorted(entries, key=_entry_key)))


@lru_cache(maxsize=None)
def _label(kind: str, direction: Direction) -> OrbitLabel:
    return OrbitLabel(kind, direction)


def iota(g: PathGenerator) -> OrbitSet:
    """Edge-to-orbit bijection: an 'e' edge of multiplicity m contributes the
    m-fold elliptic orbit; an 'h' edge contributes the (m-1)-fold elliptic
    orbit together with the hyperbolic one."""
    entries: list[tuple[OrbitLabel, int]] = []
    for e in g.edges:
        if e.label == LABEL_E:
            entries.append((_label(ELLIPTIC, e.direction), e.multiplicity))
        else:
            if e.multiplicity > 1:
                entries.append((_label(ELLIPTIC, e.direction), e.multiplicity - 1))
            entries.append((_label(HYPERBOLIC, e.direction), 1))
    return orbit_set(g.flavor, entries)


def iota_inv(alpha: OrbitSet) -> PathGenerator:
    """Inverse of `iota`: regroup orbits by direction into labeled edges."""
    by_dir: dict[Direction, dict[str, int]] = defaultdict(dict)
    for lab, m in alpha.entries:
        by_dir[lab.direction][lab.kind] = m
    edges = []
    for d, kinds in by_dir.items():
        elliptic = kinds.get(ELLIPTIC, 0)
        if HYPERBOLIC in kinds:
            edges.append(EdgeSpec(d, elliptic + 1, LABEL_H))
        else:
            edges.append(EdgeSpec(d, elliptic, LABEL_E))
    return path_generator(alpha.flavor, edges)


def linking(x: OrbitLabel, y: OrbitLabel, flavor: Flavor) -> int:
    """Linking number of two distinct simple orbits."""
    if x == y:
        raise ValueError("self-linking requires trivialization; use q_tau")
    a, b = x.direction.a, x.direction.b
    a2, b2 = y.direction.a, y.direction.b
    if flavor == CONVEX:
        return max(a * b2, a2 * b)
    return min(a * b2, a2 * b)


def _require_convex(alpha: OrbitSet) -> None:
    if alpha.flavor != CONVEX:
        raise ValueError("concave orbit-layer index not supported")


def c_tau(alpha: OrbitSet) -> int:
    """Relative first Chern number: sum of m * (a + b)."""
    _require_convex(alpha)
    return sum(m * (lab.direction.a + lab.direction.b) for lab, m in alpha.entries)


def q_tau(alpha: OrbitSet) -> int:
    """Relative intersection pairing: m^2 * a * b diagonally plus pairwise
    linking over ordered pairs."""
    _require_convex(alpha)
    entries = alpha.entries
    total = sum(m * m * lab.direction.a * lab.direction.b for lab, m in entries)
    for i in range(len(entries)):
        lab_i, m_i = entries[i]
        a_i, b_i = lab_i.direction.a, lab_i.direction.b
        for j in range(i + 1, len(entries)):
            lab_j, m_j = entries[j]
            a_j, b_j = lab_j.direction.a, lab_j.direction.b
            total += 2 * m_i * m_j * max(a_i * b_j, a_j * b_i)
    return total


def cz_total(alpha: OrbitSet) -> int:
    """Sum of Conley-Zehnder terms over all iterates up to each multiplicity:
    1 per elliptic iterate, 0 for hyperbolic."""
    _require_convex(alpha)
    return sum(m for lab, m in alpha.entries if lab.kind == ELLIPTIC)


@lru_cache(maxsize=None)
def _index_parts(alpha: OrbitSet) -> tuple[int, int, int]:
    return (c_tau(alpha), q_tau(alpha), cz_total(alpha))


def ech_index(alpha: OrbitSet) -> int:
    """ECH index c_tau + Q_tau + CZ total."""
    c, q, cz = _index_parts(alpha)
    return c + q + cz


def j0_index(alpha: OrbitSet) -> int:
    """J0 index: ECH index - 2 c_tau - CZ at top multiplicity per orbit."""
    c, q, cz = _index_parts(alpha)
    top = sum(1 for lab, _ in alpha.entries if lab.kind == ELLIPTIC)
    return (c + q + cz) - 2 * c - top


def linking_degrees(alpha: OrbitSet) -> tuple[int, int]:
    """Total linking with the two axis orbits: (with e_{1,0}, with e_{0,1}).

    The degree with e_{1,0} sums m * b over entries away from (1, 0); the
    degree with e_{0,1} sums m * a away from (0, 1).  These are the
    quantities monotone under cobordisms containing an anchor cylinder.
    """
    deg_e10 = sum(
        m * lab.direction.b for lab, m in alpha.entries if (lab.direction.a, lab.direction.b) != (1, 0)
    )
    deg_e01 = sum(
        m * lab.direction.a for lab, m in alpha.entries if (lab.direction.a, lab.direction.b) != (0, 1)
    )
    return (deg_e10, deg_e01)

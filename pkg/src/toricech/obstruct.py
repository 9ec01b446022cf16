"""Decision procedures for anchored-embedding obstructions.

Each checker returns an ObstructionReport whose verdict is one of
obstructed / not_obstructed / inconclusive, together with a certificate a
caller can re-verify by exact arithmetic: a violated support inequality, a
minimum-action census, an anchor annulus, or an explicit witness path.

Strictness policy: criteria stated with strict inequalities are evaluated
exactly, and boundary equality lands on the obstructed side for necessary
conditions and on "unknown" for existence-only constructions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal

from .geometry import (
    CONVEX,
    Direction,
    Point,
    ToricRegion,
    axis_caps,
    ball,
    contains_point,
    polydisk,
    region_contains,
    region_contains_strictly,
    segment_meets_interior,
    slope_minus_one_support,
    violated_direction,
)
from .lattice import (
    PathGenerator,
    EdgeSpec,
    LABEL_E,
    action,
    encode_generator,
    enumerate_by_index,
    index_convex,
    path_generator,
)
from .orbits import iota, linking_degrees

Verdict = Literal["obstructed", "not_obstructed", "inconclusive"]
OBSTRUCTED: Verdict = "obstructed"
NOT_OBSTRUCTED: Verdict = "not_obstructed"
INCONCLUSIVE: Verdict = "inconclusive"

ANCHOR_E10 = "e10"
ANCHOR_E01 = "e01"

ADVISORY_NOTE = "engine generalization beyond the proved target classes; verdict is advisory"
FOLDING_NOTE = (
    "only anchored embeddings are obstructed; plain symplectic embeddings may still "
    "exist (e.g. via symplectic folding)"
)


class WitnessConstructionError(RuntimeError):
    pass


@dataclass(frozen=True)
class WitnessPath:
    """Polyline with x + y strictly decreasing along every segment."""

    points: tuple[Point, ...]

    def __post_init__(self) -> None:
        pts = tuple((Fraction(x), Fraction(y)) for x, y in self.points)
        object.__setattr__(self, "points", pts)
        if len(pts) < 2:
            raise ValueError("witness path needs at least two points")
        for p, q in zip(pts, pts[1:]):
            if p == q:
                raise ValueError("witness path points must be pairwise distinct in sequence")
            if (q[0] - p[0]) + (q[1] - p[1]) >= 0:
                raise ValueError("x + y must strictly decrease along every witness segment")


@dataclass(frozen=True)
class ObstructionReport:
    verdict: Verdict
    theorem: str
    certificate: dict | None = None
    notes: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.verdict == OBSTRUCTED and not self.certificate:
            raise ValueError("obstructed verdicts must carry a checkable certificate")


def witness_violations(
    path: WitnessPath, inner: ToricRegion, outer: ToricRegion
) -> list[str]:
    """Re-check a witness path; returns human-readable violations (empty if valid)."""
    problems = []
    for p, q in zip(path.points, path.points[1:]):
        if (q[0] + q[1]) >= (p[0] + p[1]):
            problems.append(f"x+y does not decrease from {p} to {q}")
    for p in path.points:
        if not contains_point(outer, p):
            problems.append(f"vertex {p} lies outside the outer region")
    for p, q in zip(path.points, path.points[1:]):
        if segment_meets_interior(inner, p, q):
            problems.append(f"segment {p} -> {q} meets the interior of the inner region")
    return problems


def witness_eta(
    inner: ToricRegion, outer: ToricRegion, delta: Fraction
) -> WitnessPath:
    """Construct a monotone witness path in outer minus the open inner region.

    Runs from (0, b(outer)) to the diagonal-support vertex of the inner
    chain pushed by delta along (1, 1), then follows the steep side of the
    inner chain (slopes below -1), each intermediate vertex pushed by
    delta, ending exactly at (a(inner), 0).  Fails after halving delta down
    to a floor, which indicates boundary contact between the chains.
    """
    if inner.flavor != CONVEX or outer.flavor != CONVEX:
        raise ValueError("witness construction requires convex flavor")
    delta = Fraction(delta)
    if delta <= 0:
        raise ValueError("delta must be positive")
    a_in, _ = axis_caps(inner)
    _, b_out = axis_caps(outer)
    tangency, diag = slope_minus_one_support(inner)
    if b_out <= diag:
        raise ValueError("witness requires b(outer) above the inner diagonal support")
    if not region_contains(inner, outer):
        raise ValueError("witness requires the inner region inside the outer region")

    idx = inner.boundary.index(tangency)
    start = (Fraction(0), b_out)
    end = inner.boundary[0]  # (a_in, 0)
    floor = delta / 2**31
    while delta > floor:
        pushed = [(vx + delta, vy + delta) for vx, vy in inner.boundary[1 : idx + 1]]
        pushed.reverse()  # path order: tangency first, then down the steep side
        candidate_points = [start, (tangency[0] + delta, tangency[1] + delta)]
        candidate_points.extend(pushed[1:] if idx >= 1 else [])
        candidate_points.append(end)
        try:
            candidate = WitnessPath(tuple(candidate_points))
        except ValueError:
            delta /= 2
            continue
        if not witness_violations(candidate, inner, outer):
            return candidate
        delta /= 2
    raise WitnessConstructionError("witness construction failed; boundary contact suspected")


def check_inclusion_anchor(inner: ToricRegion, outer: ToricRegion) -> ObstructionReport:
    """Inclusion with room to spare carries an annulus anchor over e_{1,0}."""
    if inner.flavor != outer.flavor:
        raise ValueError("inclusion check requires matching flavors")
    a_in, _ = axis_caps(inner)
    a_out, _ = axis_caps(outer)
    if region_contains_strictly(inner, outer):
        certificate = {
            "kind": "annulus_anchor",
            "description": "annulus {a(inner) <= pi|z1|^2 <= a(outer), z2 = 0}",
            "moment_interval": [a_in, a_out],
        }
        return ObstructionReport(NOT_OBSTRUCTED, "inclusion-anchor", certificate)
    return ObstructionReport(
        INCONCLUSIVE,
        "inclusion-anchor",
        None,
        ("no strict-interior containment; inclusion construction unavailable",),
    )


def _census_rows(
    source: ToricRegion, census: Iterable[PathGenerator], target: Direction, anchors: frozenset[str]
) -> list[dict]:
    rows = []
    for g in census:
        deg10, deg01 = linking_degrees(iota(g))
        reasons = []
        if ANCHOR_E10 in anchors and deg10 > target.b:
            reasons.append(f"linking degree with e10 is {deg10} > {target.b}")
        if ANCHOR_E01 in anchors and deg01 > target.a:
            reasons.append(f"linking degree with e01 is {deg01} > {target.a}")
        rows.append(
            {
                "generator": encode_generator(g),
                "action": action(g, source),
                "admitted": not reasons,
                "filtered_because": reasons,
            }
        )
    return rows


def min_action_bound(
    source: ToricRegion, target_class: Direction, anchors: Iterable[str] = ()
) -> Fraction:
    """Minimum source action over same-index generators passing the anchor
    linking filters; a lower bound for the target's support at target_class
    under the corresponding anchored embedding."""
    bound, _ = _min_action_data(source, target_class, frozenset(anchors))
    return bound


def _min_action_data(
    source: ToricRegion, target_class: Direction, anchors: frozenset[str]
) -> tuple[Fraction, list[dict]]:
    if source.flavor != CONVEX:
        raise ValueError("minimum-action engine requires a convex source")
    bad = anchors - {ANCHOR_E10, ANCHOR_E01}
    if bad:
        raise ValueError(f"unknown anchors {sorted(bad)}")
    target = path_generator(CONVEX, [EdgeSpec(target_class, 1, LABEL_E)])
    census = enumerate_by_index(CONVEX, index_convex(target))
    rows = _census_rows(source, census, target_class, anchors)
    admitted = [r["action"] for r in rows if r["admitted"]]
    return (min(admitted), rows)


def _engine_is_proved(target_class: Direction, anchors: frozenset[str]) -> bool:
    if anchors == frozenset({ANCHOR_E10, ANCHOR_E01}):
        return True
    return target_class == Direction(1, 1) and anchors == frozenset({ANCHOR_E10})


def check_polydisk_ball(a, c) -> ObstructionReport:
    """Anchored embedding of the polydisk P(a, 1) into the ball B^4(c) along
    e_{1,0} exists iff c > a + 1 (for a > 1)."""
    a, c = Fraction(a), Fraction(c)
    if a <= 1:
        raise ValueError("theorem hypothesis a>1 violated")
    if c <= 0:
        raise ValueError("ball capacity c must be positive")
    source = polydisk(a, 1)
    bound, rows = _min_action_data(source, Direction(1, 1), frozenset({ANCHOR_E10}))
    notes = []
    if c <= bound:
        plain = folding_embedding_exists(a, c)
        if plain == "yes":
            notes.append(FOLDING_NOTE)
        certificate = {
            "kind": "min_action_bound",
            "target_class": [1, 1],
            "anchors": [ANCHOR_E10],
            "required_target_support": bound,
            "target_support": c,
            "inequality": "target support must be >= the bound, strictly at the boundary",
            "census": rows,
        }
        return ObstructionReport(OBSTRUCTED, "polydisk-ball", certificate, tuple(notes))
    inclusion = check_inclusion_anchor(source, ball(c))
    certificate = {
        "kind": "inclusion",
        "description": "P(a,1) sits in the open ball; the annulus anchor applies",
        "annulus": inclusion.certificate,
    }
    return ObstructionReport(NOT_OBSTRUCTED, "polydisk-ball", certificate)


def check_convex1(inner: ToricRegion, outer: ToricRegion) -> ObstructionReport:
    """One-directional test for an anchored embedding along e_{1,0} between
    convex-flavor regions with a(inner) > b(outer): containment is necessary."""
    if inner.flavor != CONVEX or outer.flavor != CONVEX:
        raise ValueError("convex1 check requires convex flavor")
    a_in, _ = axis_caps(inner)
    a_out, b_out = axis_caps(outer)
    if a_in >= a_out:
        certificate = {
            "kind": "nonpositive_anchor_area",
            "anchor_area": a_out - a_in,
            "inequality": "anchor area a(outer) - a(inner) must be positive",
        }
        return ObstructionReport(OBSTRUCTED, "convex1", certificate)
    if a_in > b_out and not region_contains(inner, outer):
        d, vi, vo = violated_direction(inner, outer)
        certificate = {
            "kind": "support_violation",
            "direction": [d.a, d.b],
            "inner_support": vi,
            "outer_support": vo,
        }
        return ObstructionReport(OBSTRUCTED, "convex1", certificate, (FOLDING_NOTE,))
    notes = []
    if a_in <= b_out:
        notes.append("hypothesis a(inner) > b(outer) fails; criterion does not apply")
    else:
        notes.append("containment holds; the criterion imposes no obstruction")
    return ObstructionReport(INCONCLUSIVE, "convex1", None, tuple(notes))


def check_2anchored(inner: ToricRegion, outer: ToricRegion) -> ObstructionReport:
    """2-anchored embeddings along both axis orbits force containment."""
    if inner.flavor != outer.flavor:
        raise ValueError("2-anchored check requires matching flavors")
    if not region_contains(inner, outer):
        d, vi, vo = violated_direction(inner, outer)
        kind = "support_violation" if inner.flavor == CONVEX else "bracket_violation"
        certificate = {
            "kind": kind,
            "direction": [d.a, d.b],
            "inner_value": vi,
            "outer_value": vo,
        }
        return ObstructionReport(OBSTRUCTED, "2anchored", certificate)
    return ObstructionReport(
        INCONCLUSIVE,
        "2anchored",
        None,
        ("containment holds; the criterion imposes no obstruction",),
    )


def check_cross_anchor(inner: ToricRegion, outer: ToricRegion) -> ObstructionReport:
    """For nested convex regions, the inclusion upgrades to an anchor from
    e_{1,0} of the inner boundary to e_{0,1} of the outer boundary iff
    b(outer) exceeds the inner diagonal support."""
    if inner.flavor != CONVEX or outer.flavor != CONVEX:
        raise ValueError("cross-anchor check requires convex flavor")
    if not region_contains(inner, outer):
        raise ValueError("containment precondition violated")
    tangency, diag = slope_minus_one_support(inner)
    _, b_out = axis_caps(outer)
    if b_out > diag:
        delta = min(Fraction(1, 8), (b_out - diag) / 4)
        witness = witness_eta(inner, outer, delta)
        certificate = {
            "kind": "witness_path",
            "points": [list(p) for p in witness.points],
        }
        return ObstructionReport(NOT_OBSTRUCTED, "cross-anchor", certificate)
    certificate = {
        "kind": "diagonal_support_excess",
        "outer_axis_cap": b_out,
        "inner_diagonal_support": diag,
        "tangency_point": list(tangency),
        "inequality": "b(outer) <= inner diagonal support forbids a monotone path",
    }
    return ObstructionReport(OBSTRUCTED, "cross-anchor", certificate)


def folding_embedding_exists(a, c) -> Literal["yes", "unknown"]:
    """Certifies known plain-embedding constructions of P(a, 1) into B^4(c):
    inclusion for c > a + 1, folding for a > 2 and c > 2 + a/2."""
    a, c = Fraction(a), Fraction(c)
    if a < 1:
        raise ValueError("folding certificate requires a >= 1")
    if c > a + 1:
        return "yes"
    if a > 2 and c > 2 + a / 2:
        return "yes"
    return "unknown"


def min_action_report(
    source: ToricRegion, target_class: Direction, anchors: Iterable[str] = ()
) -> dict:
    """Bound plus census rows and an advisory flag for unproved instances."""
    anchors = frozenset(anchors)
    bound, rows = _min_action_data(source, target_class, anchors)
    report = {
        "target_class": [target_class.a, target_class.b],
        "anchors": sorted(anchors),
        "bound": bound,
        "census": rows,
    }
    if not _engine_is_proved(target_class, anchors):
        report["notes"] = [ADVISORY_NOTE]
    return report

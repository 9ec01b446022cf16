from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import concave_generators, concave_regions, convex_generators, convex_regions
from oracles import brute_force_counts, envelope_counts
from toricech.geometry import (
    CONCAVE,
    CONVEX,
    Direction,
    ToricRegion,
    ball,
    concave_triangle,
    ellipsoid,
    polydisk,
)
from toricech.lattice import (
    LABEL_E,
    LABEL_H,
    EdgeSpec,
    PathGenerator,
    action,
    empty_generator,
    encode_generator,
    enumerate_by_action,
    enumerate_by_index,
    extents,
    index_concave,
    index_convex,
    is_extremal,
    j0_concave,
    j0_convex,
    lattice_count_concave,
    lattice_count_convex,
    parse_generator,
    path_generator,
    paths_by_extents,
    vertices,
)

F = Fraction


def gen(text: str, flavor=CONVEX) -> PathGenerator:
    return parse_generator(text, flavor)


def all_e_paths(flavor, max_x, max_y, max_sum=None):
    for path in paths_by_extents(flavor, max_x, max_y, max_sum):
        yield path_generator(flavor, tuple(EdgeSpec(d, m, LABEL_E) for d, m in path))


class TestEdgeSpec:
    def test_h_label_forbidden_on_axes(self):
        with pytest.raises(ValueError):
            EdgeSpec(Direction(1, 0), 1, LABEL_H)
        with pytest.raises(ValueError):
            EdgeSpec(Direction(0, 1), 2, LABEL_H)

    def test_positive_multiplicity(self):
        with pytest.raises(ValueError):
            EdgeSpec(Direction(1, 1), 0, LABEL_E)


class TestPathGenerator:
    def test_duplicate_directions_rejected(self):
        with pytest.raises(ValueError):
            path_generator(CONVEX, [EdgeSpec(Direction(1, 1), 1, "e"), EdgeSpec(Direction(1, 1), 2, "e")])

    def test_empty_concave_rejected(self):
        with pytest.raises(ValueError):
            path_generator(CONCAVE, [])

    def test_axis_edges_rejected_in_concave(self):
        with pytest.raises(ValueError):
            path_generator(CONCAVE, [EdgeSpec(Direction(1, 0), 1, "e")])

    def test_factory_sorts_into_path_order(self):
        g = path_generator(
            CONVEX,
            [
                EdgeSpec(Direction(1, 0), 1, "e"),
                EdgeSpec(Direction(0, 1), 2, "e"),
                EdgeSpec(Direction(1, 1), 1, "h"),
            ],
        )
        assert encode_generator(g) == "e:0,1x2+h:1,1x1+e:1,0x1"

    def test_encode_parse_round_trip(self):
        for text in ("", "e:1,0x2", "e:0,1x1+h:1,1x3", "e:1,1x1+h:2,1x2+e:1,0x1"):
            assert encode_generator(gen(text)) == text


class TestExtents:
    def test_unit_diagonal(self):
        assert extents(gen("e:1,1x1")) == (1, 1)

    def test_vertical_orbit_squared(self):
        assert extents(gen("e:1,0x2")) == (0, 2)

    def test_horizontal_orbit_squared(self):
        assert extents(gen("e:0,1x2")) == (2, 0)

    def test_vertices_walk(self):
        g = gen("e:1,1x2+e:2,1x1")
        assert vertices(g) == ((0, 4), (2, 2), (3, 0))


class TestLatticeCounts:
    def test_empty(self):
        assert lattice_count_convex(empty_generator()) == 1

    def test_unit_diagonal(self):
        assert lattice_count_convex(gen("e:1,1x1")) == 3

    def test_vertical_column(self):
        assert lattice_count_convex(gen("e:1,0x2")) == 3

    def test_concave_unit_diagonal_excludes_endpoints(self):
        assert lattice_count_concave(gen("e:1,1x1", CONCAVE)) == 1

    def test_concave_shallow(self):
        assert lattice_count_concave(gen("e:1,2x1", CONCAVE)) == 2

    def test_concave_steep_transpose(self):
        assert lattice_count_concave(gen("e:2,1x1", CONCAVE)) == 2

    def test_brute_force_oracle_smoke(self):
        for text, flavor in (
            ("e:1,1x2+e:3,1x1", CONVEX),
            ("e:0,1x2+e:1,2x1+e:1,0x3", CONVEX),
            ("e:1,3x1+e:1,1x2+e:4,1x1", CONCAVE),
        ):
            g = gen(text, flavor)
            total, on_path = brute_force_counts(g)
            if flavor == CONVEX:
                assert lattice_count_convex(g) == total
            else:
                assert lattice_count_concave(g) == total - on_path

    @settings(max_examples=80)
    @given(convex_generators())
    def test_brute_force_oracle_convex(self, g):
        total, _ = brute_force_counts(g)
        assert lattice_count_convex(g) == total

    @settings(max_examples=80)
    @given(concave_generators())
    def test_brute_force_oracle_concave(self, g):
        total, on_path = brute_force_counts(g)
        assert lattice_count_concave(g) == total - on_path

    def test_envelope_oracle_agrees_with_brute_force(self):
        # the fast oracle used in the exhaustive acceptance sweep is itself
        # checked against the double loop here
        for flavor in (CONVEX, CONCAVE):
            for g in all_e_paths(flavor, 6, 6):
                assert envelope_counts(g) == brute_force_counts(g)


class TestIndices:
    def test_index4_values(self):
        assert index_convex(gen("e:1,1x1")) == 4
        assert j0_convex(gen("e:1,1x1")) == -1
        assert index_convex(gen("h:1,1x1")) == 3
        assert j0_convex(gen("h:1,1x1")) == -1
        assert index_convex(gen("e:1,0x1")) == 2

    def test_concave_indices(self):
        assert index_concave(gen("e:1,1x1", CONCAVE)) == 0
        assert index_concave(gen("e:1,2x1", CONCAVE)) == 2
        assert index_concave(gen("h:1,1x1", CONCAVE)) == 1

    @settings(max_examples=80)
    @given(convex_generators())
    def test_h_flip_drops_convex_index_by_one(self, g):
        for i, e in enumerate(g.edges):
            if e.label == LABEL_E and not e.direction.is_axis():
                flipped = PathGenerator(
                    CONVEX,
                    g.edges[:i] + (EdgeSpec(e.direction, e.multiplicity, LABEL_H),) + g.edges[i + 1 :],
                )
                assert index_convex(flipped) == index_convex(g) - 1

    @settings(max_examples=80)
    @given(concave_generators())
    def test_h_flip_raises_concave_index_by_one(self, g):
        for i, e in enumerate(g.edges):
            if e.label == LABEL_E:
                flipped = PathGenerator(
                    CONCAVE,
                    g.edges[:i] + (EdgeSpec(e.direction, e.multiplicity, LABEL_H),) + g.edges[i + 1 :],
                )
                assert index_concave(flipped) == index_concave(g) + 1

    @settings(max_examples=80)
    @given(convex_generators())
    def test_index_bounded_below_by_extents(self, g):
        x, y = extents(g)
        assert index_convex(g) >= x + y

    def test_extent_bound_sweep_convex(self):
        # the enumeration bound X + Y <= index, verified exhaustively
        for g_base in all_e_paths(CONVEX, 7, 7):
            x, y = extents(g_base)
            h_edges = sum(1 for e in g_base.edges if not e.direction.is_axis())
            worst = index_convex(g_base) - h_edges  # all eligible edges flipped
            assert worst >= x + y

    def test_extent_bound_sweep_concave(self):
        # the enumeration bound X + Y <= index/2 + 2, verified exhaustively
        for g in all_e_paths(CONCAVE, 7, 7):
            x, y = extents(g)
            assert x + y <= index_concave(g) // 2 + 2


class TestTranspose:
    @staticmethod
    def transpose_generator(g: PathGenerator) -> PathGenerator:
        return path_generator(
            g.flavor,
            [EdgeSpec(Direction(e.direction.b, e.direction.a), e.multiplicity, e.label) for e in g.edges],
        )

    @staticmethod
    def transpose_region(region: ToricRegion) -> ToricRegion:
        return ToricRegion(region.flavor, tuple((y, x) for x, y in reversed(region.boundary)))

    @settings(max_examples=60)
    @given(convex_generators())
    def test_transpose_preserves_convex_data(self, g):
        t = self.transpose_generator(g)
        assert lattice_count_convex(t) == lattice_count_convex(g)
        assert index_convex(t) == index_convex(g)
        assert j0_convex(t) == j0_convex(g)
        assert extents(t) == tuple(reversed(extents(g)))

    @settings(max_examples=60)
    @given(concave_generators())
    def test_transpose_preserves_concave_data(self, g):
        t = self.transpose_generator(g)
        assert lattice_count_concave(t) == lattice_count_concave(g)
        assert index_concave(t) == index_concave(g)
        assert j0_concave(t) == j0_concave(g)
        assert extents(t) == tuple(reversed(extents(g)))

    @settings(max_examples=40)
    @given(convex_generators(), convex_regions())
    def test_transpose_action_via_reflected_region(self, g, region):
        assert action(self.transpose_generator(g), self.transpose_region(region)) == action(g, region)


class TestAction:
    def test_polydisk_vertical_squared(self):
        assert action(gen("e:1,0x2"), polydisk(F("7/2"), 1)) == 7

    def test_ball_diagonal(self):
        assert action(gen("e:1,1x1"), ball(F("5/3"))) == F("5/3")

    def test_empty_action_zero(self):
        assert action(empty_generator(), ball(1)) == 0

    def test_flavor_mismatch(self):
        with pytest.raises(ValueError):
            action(gen("e:1,1x1"), concave_triangle(1, 1))

    @settings(max_examples=60)
    @given(convex_generators(), convex_regions())
    def test_labels_never_affect_action(self, g, region):
        all_e = path_generator(
            CONVEX, [EdgeSpec(e.direction, e.multiplicity, LABEL_E) for e in g.edges]
        )
        assert action(g, region) == action(all_e, region)


class TestEnumerateByAction:
    def test_ball_budget_five_halves(self):
        census = enumerate_by_action(ball(1), F("5/2"))
        encodings = {encode_generator(g) for g in census}
        assert "" in encodings  # empty generator
        # index-4 sublist is exactly the three expected generators
        idx4 = sorted(encode_generator(g) for g in census if index_convex(g) == 4)
        assert idx4 == ["e:0,1x2", "e:1,0x2", "e:1,1x1"]
        for g in census:
            assert action(g, ball(1)) < F("5/2")

    def test_tiny_budget_gives_only_empty(self):
        census = enumerate_by_action(ball(1), F("1/2"))
        assert [encode_generator(g) for g in census] == [""]

    def test_polydisk_budget_two(self):
        census = {encode_generator(g) for g in enumerate_by_action(polydisk(2, 1), 2)}
        assert "e:0,1x1" in census
        assert "e:1,0x1" not in census

    def test_rejects_nonpositive_bound(self):
        with pytest.raises(ValueError):
            enumerate_by_action(ball(1), 0)

    def test_sorted_by_action_then_encoding(self):
        census = enumerate_by_action(ball(1), 3)
        keys = [(action(g, ball(1)), encode_generator(g)) for g in census]
        assert keys == sorted(keys)

    def test_no_duplicates_and_label_closed(self):
        census = enumerate_by_action(ball(1), 3)
        encodings = [encode_generator(g) for g in census]
        assert len(encodings) == len(set(encodings))
        for g in census:
            if any(e.label == LABEL_H for e in g.edges):
                weakened = path_generator(
                    CONVEX, [EdgeSpec(e.direction, e.multiplicity, LABEL_E) for e in g.edges]
                )
                assert weakened in census

    def test_cardinality_monotone_in_budget(self):
        sizes = [len(enumerate_by_action(ball(1), bound)) for bound in (1, F("3/2"), 2, F("5/2"), 3)]
        assert sizes == sorted(sizes)

    def test_concave_small_budget(self):
        # chain dips to (1/2, 1/2), so bracket (1,1) = 1 while both caps are 2
        region = ToricRegion(
            CONCAVE, ((F(2), F(0)), (F(1, 2), F(1, 2)), (F(0), F(2)))
        )
        census = enumerate_by_action(region, 2)  # bound <= min(a, b): finite
        encodings = {encode_generator(g) for g in census}
        assert encodings == {
            "e:1,1x1",
            "h:1,1x1",
            "e:1,2x1",
            "h:1,2x1",
            "e:2,1x1",
            "h:2,1x1",
        }
        for g in census:
            assert action(g, region) < 2

    def test_concave_infinite_budget_needs_cap(self):
        with pytest.raises(ValueError, match="max_index"):
            enumerate_by_action(concave_triangle(2, 2), 3)

    def test_concave_budget_with_cap(self):
        region = concave_triangle(2, 2)
        census = enumerate_by_action(region, 3, max_index=4)
        assert census
        for g in census:
            assert action(g, region) < 3
            assert index_concave(g) <= 4
        # completeness at this cap: every generator found by a wide sweep
        wide = [
            g
            for g in (
                path_generator(CONCAVE, tuple(EdgeSpec(d, m, lab) for (d, m), lab in zip(path, labels)))
                for path in paths_by_extents(CONCAVE, 8, 8)
                for labels in _label_choices(len(path))
            )
            if action(g, region) < 3 and index_concave(g) <= 4
        ]
        assert {encode_generator(g) for g in census} == {encode_generator(g) for g in wide}


def _label_choices(n):
    if n == 0:
        return [()]
    smaller = _label_choices(n - 1)
    return [c + (lab,) for c in smaller for lab in (LABEL_E, LABEL_H)]


class TestEnumerateByIndex:
    def test_index_zero(self):
        assert [encode_generator(g) for g in enumerate_by_index(CONVEX, 0)] == [""]

    def test_index_two(self):
        assert [encode_generator(g) for g in enumerate_by_index(CONVEX, 2)] == [
            "e:0,1x1",
            "e:1,0x1",
        ]

    def test_index_three_is_h11(self):
        assert [encode_generator(g) for g in enumerate_by_index(CONVEX, 3)] == ["h:1,1x1"]

    def test_index_four_census(self):
        assert [encode_generator(g) for g in enumerate_by_index(CONVEX, 4)] == [
            "e:0,1x2",
            "e:1,0x2",
            "e:1,1x1",
        ]

    def test_negative_index_empty(self):
        assert enumerate_by_index(CONVEX, -1) == []

    def test_matches_brute_force_sweep_convex(self):
        # independent reconstruction: filter a big extent sweep by index
        for target in range(0, 9):
            expected = set()
            for path in paths_by_extents(CONVEX, 8, 8):
                for labels in _label_choices(len(path)):
                    try:
                        g = path_generator(
                            CONVEX,
                            tuple(EdgeSpec(d, m, lab) for (d, m), lab in zip(path, labels)),
                        )
                    except ValueError:
                        continue  # h on an axis edge
                    if index_convex(g) == target:
                        expected.add(encode_generator(g))
            got = {encode_generator(g) for g in enumerate_by_index(CONVEX, target)}
            assert got == expected, f"index {target}"

    def test_matches_brute_force_sweep_concave(self):
        for target in range(0, 7):
            expected = set()
            for path in paths_by_extents(CONCAVE, 8, 8):
                for labels in _label_choices(len(path)):
                    g = path_generator(
                        CONCAVE,
                        tuple(EdgeSpec(d, m, lab) for (d, m), lab in zip(path, labels)),
                    )
                    if index_concave(g) == target:
                        expected.add(encode_generator(g))
            got = {encode_generator(g) for g in enumerate_by_index(CONCAVE, target)}
            assert got == expected, f"index {target}"

    def test_concave_index_zero_is_unit_diagonal(self):
        assert [encode_generator(g) for g in enumerate_by_index(CONCAVE, 0)] == ["e:1,1x1"]


class TestIsExtremal:
    def test_diagonal_minimal_on_narrow_ellipsoid(self):
        region = ellipsoid(1, F(10, 7))
        assert is_extremal(gen("e:1,1x1"), region)

    def test_diagonal_not_minimal_on_wide_polydisk(self):
        assert not is_extremal(gen("e:1,1x1"), polydisk(8, 2))

    def test_axis_orbit_minimal_when_shorter(self):
        region = ellipsoid(2, 3)
        assert is_extremal(gen("e:1,0x1"), region)
        assert not is_extremal(gen("e:0,1x1"), region)

    def test_concave_maximality(self):
        region = concave_triangle(1, 2)
        # index-2 census is {e_{1,2}, e_{2,1}} with actions 1 and 2
        assert is_extremal(gen("e:2,1x1", CONCAVE), region)
        assert not is_extremal(gen("e:1,2x1", CONCAVE), region)

    def test_requires_all_e(self):
        with pytest.raises(ValueError):
            is_extremal(gen("h:1,1x1"), ball(1))

import random

import pytest

from latticecert.geometry import PostconditionError, PreconditionError
from latticecert.lemma_lab import (
    MainLemmaStatus,
    PointConfiguration,
    adjacent_pair_on_segment,
    campaign_main_lemma,
    campaign_midpoint,
    campaign_shp,
    campaign_split_pair,
    campaign_split_single,
    check_main_lemma,
    exhaustive_main_lemma_grid,
    extra_lattice_points,
    has_shp,
    in_hull,
    lemma_threshold,
    parity_midpoint,
    random_shp_configuration,
    split_by_point,
    split_by_two_points,
)

SQUARE = PointConfiguration.of([(0, 0), (2, 0), (0, 2), (2, 2)])


class TestConfiguration:
    def test_distinct_and_nonempty(self):
        with pytest.raises(ValueError):
            PointConfiguration.of([(0, 0), (0, 0)])
        with pytest.raises(ValueError):
            PointConfiguration.of([])

    def test_order_preserved(self):
        c = PointConfiguration.of([(2, 0), (0, 0)])
        assert c.points == ((2, 0), (0, 0))


class TestSupportHyperplaneProperty:
    def test_square_vertices(self):
        assert has_shp(SQUARE)

    def test_midpoint_breaks_it(self):
        assert not has_shp(PointConfiguration.of([(0, 0), (1, 0), (2, 0)]))

    def test_singleton(self):
        assert has_shp(PointConfiguration.of([(0, 0)]))

    def test_one_dimensional(self):
        assert has_shp(PointConfiguration.of([(0,), (5,)]))
        assert not has_shp(PointConfiguration.of([(0,), (2,), (5,)]))

    def test_agrees_with_lp_route_in_higher_dimension(self):
        # n = 4 always takes the LP fallback; cross-check small cases
        cross = [(1, 0, 0, 0), (-1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
        assert has_shp(PointConfiguration.of(cross))
        assert not has_shp(PointConfiguration.of(cross + [(0, 0, 0, 0)]))


class TestParityMidpoint:
    def test_scan_order_matches_input_order(self):
        config = PointConfiguration.of([(0, 0), (2, 0), (0, 2), (2, 2), (1, 3)])
        assert parity_midpoint(config) == (1, 0)

    def test_requires_convex_position(self):
        config = PointConfiguration.of([(0, 0), (2, 0), (0, 2), (2, 2), (1, 0)])
        with pytest.raises(PreconditionError):
            parity_midpoint(config)

    def test_requires_cardinality(self):
        with pytest.raises(PreconditionError):
            parity_midpoint(SQUARE)
        with pytest.raises(PreconditionError):
            parity_midpoint(PointConfiguration.of([(0,), (2,), (5,)]))

    def test_postcondition_holds_on_randoms(self, rng):
        for n in (2, 3):
            for _ in range(30):
                config = random_shp_configuration(rng, n, 2**n + 1)
                z = parity_midpoint(config)
                assert z not in config.points
                assert in_hull(z, config.points)


class TestSplitByPoint:
    def test_square_center(self):
        s1, s2 = split_by_point(SQUARE, (1, 1))
        assert len(s1) + len(s2) == 4
        assert set(s1) | set(s2) == set(SQUARE.points)

    def test_one_dimensional_case(self):
        s1, s2 = split_by_point(PointConfiguration.of([(0,), (2,)]), (1,))
        assert (s1, s2) == (((0,),), ((2,),))

    def test_member_rejected(self):
        with pytest.raises(PreconditionError):
            split_by_point(SQUARE, (0, 0))

    def test_outside_hull_rejected(self):
        with pytest.raises(PreconditionError):
            split_by_point(SQUARE, (9, 9))


class TestSplitByTwoPoints:
    def test_big_square(self):
        big = PointConfiguration.of([(0, 0), (4, 0), (0, 4), (4, 4)])
        s1, s2 = split_by_two_points(big, (1, 1), (2, 2))
        assert len(s1) + len(s2) >= len(big) - 2

    def test_boundary_pivot_in_three_dimensions(self):
        cube = PointConfiguration.of(
            [(x, y, z) for x in (0, 2) for y in (0, 2) for z in (0, 2)]
        )
        s1, s2 = split_by_two_points(cube, (1, 1, 1), (1, 1, 0))
        assert len(s1) + len(s2) >= len(cube) - 2

    def test_equal_pivots_rejected(self):
        big = PointConfiguration.of([(0, 0), (4, 0), (0, 4), (4, 4)])
        with pytest.raises(PreconditionError):
            split_by_two_points(big, (1, 1), (1, 1))

    def test_one_dimension_rejected(self):
        with pytest.raises(PreconditionError):
            split_by_two_points(PointConfiguration.of([(0,), (4,)]), (1,), (2,))


class TestExtraLatticePoints:
    def test_square(self):
        assert list(extra_lattice_points(SQUARE)) == [
            (0, 1),
            (1, 0),
            (1, 1),
            (1, 2),
            (2, 1),
        ]

    def test_unimodular_triangle(self):
        tri = PointConfiguration.of([(0, 0), (1, 0), (0, 1)])
        assert len(extra_lattice_points(tri)) == 0

    def test_segment(self):
        seg = PointConfiguration.of([(0, 0), (3, 0)])
        assert list(extra_lattice_points(seg)) == [(1, 0), (2, 0)]


class TestMainLemma:
    def test_below_threshold_is_vacuous(self):
        assert check_main_lemma(SQUARE, 1).status is MainLemmaStatus.VACUOUS

    def test_threshold_formula(self):
        assert lemma_threshold(2, 1) == 5
        assert lemma_threshold(2, 2) == 7
        assert lemma_threshold(3, 3) == 21

    def test_pentagon_holds(self):
        pent = PointConfiguration.of([(0, 0), (2, 0), (3, 2), (1, 4), (-1, 2)])
        result = check_main_lemma(pent, 1)
        assert result.status is MainLemmaStatus.HOLDS
        assert result.extra_found >= 1

    def test_seven_points_three_extras(self, rng):
        for _ in range(20):
            config = random_shp_configuration(rng, 2, 7)
            result = check_main_lemma(config, 2)
            assert result.status is MainLemmaStatus.HOLDS
            assert result.extra_found >= 3

    def test_dimension_one_rejected(self):
        with pytest.raises(PreconditionError):
            check_main_lemma(PointConfiguration.of([(0,), (9,)]), 1)


def test_adjacent_pair_on_segment():
    assert adjacent_pair_on_segment((0, 0), (6, 3)) == ((0, 0), (2, 1))
    assert adjacent_pair_on_segment((1, 1), (1, 5)) == ((1, 1), (1, 2))
    with pytest.raises(PreconditionError):
        adjacent_pair_on_segment((1, 1), (1, 1))


class TestCampaigns:
    def test_all_clean_at_small_scale(self):
        assert campaign_midpoint(2, 50, seed=3)["failures"] == 0
        assert campaign_split_single(2, 50, seed=3)["failures"] == 0
        assert campaign_split_pair(2, 50, seed=3)["failures"] == 0
        assert campaign_main_lemma(2, 1, 50, seed=3)["failures"] == 0
        assert campaign_shp(2, 50, seed=3)["failures"] == 0

    def test_reports_are_deterministic(self):
        a = campaign_split_pair(3, 25, seed=11)
        b = campaign_split_pair(3, 25, seed=11)
        assert a == b
        c = campaign_split_pair(3, 25, seed=12)
        assert c != a or c["seed"] != a["seed"]

    def test_exhaustive_grid(self):
        report = exhaustive_main_lemma_grid()
        assert report["failures"] == 0
        assert report["convex_position_sets"] == 22


def test_generator_respects_size_and_convex_position(rng):
    for n, size in [(2, 5), (2, 9), (3, 9), (3, 15)]:
        config = random_shp_configuration(rng, n, size)
        assert len(config) == size
        assert has_shp(config)

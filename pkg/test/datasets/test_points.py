"""Test ideals of points."""

import pytest

from koszulx.algorithms.groebner import submodule_equal
from koszulx.algorithms.hilbert import degree_of_Z
from koszulx.classes.field import GF
from koszulx.datasets.fixtures import fixture_ideal
from koszulx.datasets.points import (
    collinear,
    fat_point_ideal,
    normalize_point,
    point_ideal,
    points_ideal,
)

F = GF(32003)
F7 = GF(7)


class TestNormalizePoint:
    """Test the normalize_point function."""

    def test_scaling(self):
        """Test that the first nonzero coordinate becomes one."""
        assert normalize_point((0, 2, 4), F7) == (0, 1, 2)
        assert normalize_point((3, 0, 0), F7) == (1, 0, 0)
        assert normalize_point((-1, 1, 0), F7) == (1, 6, 0)

    def test_invalid(self):
        """Test wrong lengths and the zero vector."""
        with pytest.raises(ValueError):
            normalize_point((1, 2), F7)
        with pytest.raises(ValueError):
            normalize_point((0, 7, 14), F7)


class TestPointIdeals:
    """Test point_ideal, fat_point_ideal and points_ideal."""

    def test_point(self):
        """Test the ideal of a point."""
        assert str(point_ideal((0, 0, 1), F)) == "<x, y>"
        I = point_ideal((1, 2, 3), F)
        assert len(I) == 2
        assert all(f.evaluate((1, 2, 3)) == 0 for f in I.polynomials())
        assert degree_of_Z(I) == 1

    def test_fat_point(self):
        """Test powers of a point ideal."""
        assert submodule_equal(fat_point_ideal((0, 0, 1), 2, F), fixture_ideal("fat-point", F))
        assert submodule_equal(fat_point_ideal((0, 0, 1), 1, F), point_ideal((0, 0, 1), F))
        assert degree_of_Z(fat_point_ideal((1, 1, 1), 3, F)) == 6
        with pytest.raises(ValueError):
            fat_point_ideal((0, 0, 1), 0, F)

    def test_points(self):
        """Test ideals of reduced points."""
        triangle = points_ideal([(1, 0, 0), (0, 1, 0), (0, 0, 1)], F)
        assert submodule_equal(triangle, fixture_ideal("coordinate-triangle", F))
        four = points_ideal([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)], F)
        assert degree_of_Z(four) == 4
        assert four.degrees == (2, 2)

    def test_points_invalid(self):
        """Test empty and repeated point lists."""
        with pytest.raises(ValueError):
            points_ideal([], F)
        with pytest.raises(ValueError):
            points_ideal([(1, 0, 0), (2, 0, 0)], F)


class TestCollinear:
    """Test the collinear function."""

    def test_collinear(self):
        """Test points on and off a line."""
        assert collinear((1, 0, 0), (0, 1, 0), (1, 1, 0), F)
        assert not collinear((1, 0, 0), (0, 1, 0), (0, 0, 1), F)
        assert collinear((1, 0, 0), (0, 1, 0), (1, 8, 0), F7)

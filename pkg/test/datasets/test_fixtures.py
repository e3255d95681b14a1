"""Test the named fixtures."""

import pytest

from koszulx.algorithms.hilbert import degree_of_Z
from koszulx.algorithms.modules import is_saturated
from koszulx.classes.field import GF
from koszulx.datasets.fixtures import (
    FIXTURES,
    LCI_FIXTURES,
    SATURATED_FIXTURES,
    fixture,
    fixture_ideal,
)

F = GF(32003)


class TestFixtures:
    """Test fixture and fixture_ideal."""

    def test_fixture(self):
        """Test the generators of a fixture."""
        assert [str(f) for f in fixture("fat-point", F)] == ["x^2", "x*y", "y^2"]
        assert fixture("fat-point", GF(101))[0].field == GF(101)

    def test_unknown(self):
        """Test that unknown names raise."""
        with pytest.raises(KeyError):
            fixture("no-such-ideal")

    def test_ideal(self):
        """Test that fixture ideals carry their name."""
        I = fixture_ideal("coordinate-triangle", F)
        assert I.name == "coordinate-triangle"
        assert len(I) == 3

    def test_groups(self):
        """Test that the groups only name known fixtures."""
        assert set(SATURATED_FIXTURES) <= set(FIXTURES)
        assert set(LCI_FIXTURES) <= set(SATURATED_FIXTURES)

    @pytest.mark.parametrize("name", SATURATED_FIXTURES)
    def test_saturated(self, name):
        """Test that the saturated fixtures are saturated of codimension two."""
        I = fixture_ideal(name, F)
        assert is_saturated(I)
        assert degree_of_Z(I) >= 1

    def test_unsaturated(self):
        """Test that the unsaturated fixture is not saturated."""
        assert not is_saturated(fixture_ideal("unsaturated-fat-point", F))

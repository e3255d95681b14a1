"""Test minimal graded free resolutions."""

import pytest

from koszulx.algorithms.hilbert import hilbert_function
from koszulx.algorithms.resolution import (
    GradedResolution,
    ResolutionStep,
    minimal_resolution,
    prune_constants,
)
from koszulx.classes.field import GF
from koszulx.classes.module import FreeModule, Submodule
from koszulx.classes.polynomial import Polynomial

F = GF(32003)
x = Polynomial.variable("x", F)
y = Polynomial.variable("y", F)
z = Polynomial.variable("z", F)
one = Polynomial.constant(1, F)
zero = Polynomial.zero(F)


def ideal(*forms):
    return Submodule.ideal(forms, F)


class TestMinimalResolution:
    """Test the minimal_resolution function."""

    def test_coordinate_triangle(self):
        """Test the Hilbert-Burch resolution of three reduced points."""
        I = ideal(x * y, x * z, y * z)
        res = minimal_resolution(I)
        assert isinstance(res, GradedResolution)
        assert res.shifts() == [(-2, -2, -2), (-3, -3)]
        assert res.is_hilbert_burch()
        assert res.is_minimal()
        assert res.is_complex()
        assert res.betti_table() == {(0, 2): 3, (1, 3): 2}

    def test_euler_characteristic(self):
        """Test that the alternating sum of ranks is the Hilbert function."""
        I = ideal(x**2, x * y, y**3)
        res = minimal_resolution(I)
        assert res.shifts() == [(-2, -2, -3), (-3, -4)]
        for n in range(8):
            assert res.euler_characteristic(n) == hilbert_function(I, n)

    def test_redundant_generators(self):
        """Test that redundant generators do not enter the resolution."""
        res = minimal_resolution(ideal(x * y, x * z, y * z, x * y + x * z))
        assert res.shifts() == [(-2, -2, -2), (-3, -3)]

    def test_regular_sequence(self):
        """Test the Koszul complex of x^2, y^2, z^2."""
        res = minimal_resolution(ideal(x**2, y**2, z**2))
        assert res.length == 2
        assert res.shifts() == [(-2, -2, -2), (-4, -4, -4), (-6,)]
        assert not res.is_hilbert_burch()
        assert res.is_complex()

    def test_zero(self):
        """Test that the zero submodule has no resolution."""
        with pytest.raises(ValueError):
            minimal_resolution(Submodule(FreeModule.ring(F), []))


class TestPruneConstants:
    """Test the prune_constants function."""

    def test_unit_entry(self):
        """Test removal of a unit entry and the generator it makes redundant."""
        ring = FreeModule.ring(F)
        generators = [ring.element([x]), ring.element([y]), ring.element([x + y])]
        phi = [[y, one], [-x, one], [zero, -one]]
        gens, matrices, twists = prune_constants(generators, [phi], [[1, 1, 1], [2, 1]])
        assert gens == [ring.element([y]), ring.element([x + y])]
        assert matrices == [[[-x - y], [y]]]
        assert twists == [[1, 1], [2]]

    def test_nothing_to_prune(self):
        """Test that a minimal resolution is left untouched."""
        ring = FreeModule.ring(F)
        generators = [ring.element([x]), ring.element([y])]
        phi = [[y], [-x]]
        assert prune_constants(generators, [phi], [[1, 1], [2]]) == (
            generators,
            [phi],
            [[1, 1], [2]],
        )


class TestResolutionStep:
    """Test the ResolutionStep class."""

    def test_apply(self):
        """Test images, entries and unit detection."""
        source, target = FreeModule((2,), F), FreeModule((1, 1), F)
        step = ResolutionStep(source, target, [target.element([y, -x])])
        assert step.entry(1, 0) == -x
        assert step.apply(source.element([z])) == target.element([y * z, -x * z])
        assert not step.has_unit_entry()
        assert len(step.image()) == 1

    def test_invalid(self):
        """Test that columns must match the source basis."""
        source, target = FreeModule((2,), F), FreeModule((1, 1), F)
        with pytest.raises(ValueError):
            ResolutionStep(source, target, [])
        with pytest.raises(ValueError):
            ResolutionStep(source, target, [target.element([y**2, x * y])])
        with pytest.raises(ValueError):
            ResolutionStep(source, FreeModule((1,), F), [target.element([y, -x])])

"""Test seeded random forms, ideals and the five points family."""

import numpy as np
import pytest

from koszulx.algorithms.groebner import contains
from koszulx.algorithms.hilbert import oracle_hilbert
from koszulx.algorithms.kv import KVComputation
from koszulx.classes.field import GF
from koszulx.classes.module import FreeModule
from koszulx.datasets.fixtures import fixture_ideal
from koszulx.datasets.random_ideals import (
    FivePointsReport,
    five_points_counterexample,
    random_codim2_ideal,
    random_element,
    random_form,
    random_point,
)

F = GF(32003)


class TestRandomForms:
    """Test random_form, random_element and random_point."""

    def test_form(self):
        """Test degree and reproducibility of random forms."""
        f = random_form(3, np.random.default_rng(0), F)
        assert f.homogeneous_degree == 3
        assert f == random_form(3, np.random.default_rng(0), F)
        assert f != random_form(3, np.random.default_rng(1), F)

    def test_element(self):
        """Test that random elements lie in the ideal."""
        J = fixture_ideal("coordinate-triangle", F)
        g = random_element(J, 4, np.random.default_rng(2))
        assert g.homogeneous_degree == 4
        assert contains(J, FreeModule.ring(F).element([g]))

    def test_point(self):
        """Test that random points are normalised."""
        P = random_point(np.random.default_rng(3), F)
        assert len(P) == 3
        assert next(c for c in P if c) == 1


class TestRandomCodim2Ideal:
    """Test the random_codim2_ideal function."""

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_codimension_two(self, seed):
        """Test that the forms generate a codimension-two ideal."""
        forms = random_codim2_ideal(np.random.default_rng(seed), F)
        assert len(forms) == 3
        assert all(f.homogeneous_degree in (2, 3, 4) for f in forms)
        KVComputation(forms).check_codimension()

    def test_reproducible(self):
        """Test that equal seeds give equal forms."""
        first = random_codim2_ideal(np.random.default_rng(7), F, degrees=(2, 3))
        second = random_codim2_ideal(np.random.default_rng(7), F, degrees=(2, 3))
        assert first == second


@pytest.mark.slow
class TestFivePoints:
    """Test the five_points_counterexample function."""

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_counterexample(self, seed):
        """Test four cubics through five points with a non-Koszul vanishing syzygy."""
        report = five_points_counterexample(seed, F)
        assert isinstance(report, FivePointsReport)
        assert report.passed, report.checks
        assert report.checks["oracle_J2_J3"] and report.checks["oracle_deg_Z"]
        assert (oracle_hilbert(report.J, 2), oracle_hilbert(report.J, 3)) == (1, 5)
        assert report.kv.deg_Z == 5
        assert [f.homogeneous_degree for f in report.forms] == [3, 3, 3, 3]
        assert report.witness is not None
        assert not contains(report.kv.K, report.witness)

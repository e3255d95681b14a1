"""Test line arrangements and their Jacobian ideals."""

import numpy as np
import pytest

from koszulx.classes.field import GF
from koszulx.classes.polynomial import Polynomial
from koszulx.datasets.arrangements import (
    ArrangementReport,
    ArrangementSpec,
    arrangement_report,
    build_arrangement,
    jacobian_ideal,
    line_arrangement,
)
from koszulx.exception import PreconditionError

F = GF(32003)
x = Polynomial.variable("x", F)
y = Polynomial.variable("y", F)
z = Polynomial.variable("z", F)


class TestArrangementSpec:
    """Test the ArrangementSpec class."""

    def test_formulas(self):
        """Test degree, expected degree of Z and expected shifts."""
        spec = ArrangementSpec(2, 1, (1, 2), (3,), F)
        assert spec.degree == 4
        assert spec.expected_deg_Z() == 7
        assert spec.expected_shifts() == [(-3, -3, -3), (-4, -5)]

    def test_residues(self):
        """Test that scalars are reduced modulo p."""
        assert ArrangementSpec(1, 1, (32004,), (-1,), F).a == (1,)
        assert ArrangementSpec(1, 1, (32004,), (-1,), F).b == (32002,)

    @pytest.mark.parametrize(
        "m, n, a, b",
        [
            (0, 1, (), (1,)),
            (2, 1, (1,), (1,)),
            (1, 1, (0,), (1,)),
            (2, 1, (1, 32004), (1,)),
        ],
    )
    def test_invalid(self, m, n, a, b):
        """Test rejected parameters."""
        with pytest.raises(ValueError):
            ArrangementSpec(m, n, a, b, F)

    def test_random(self):
        """Test that random scalars are valid and reproducible."""
        first = ArrangementSpec.random(3, 2, np.random.default_rng(5), F)
        second = ArrangementSpec.random(3, 2, np.random.default_rng(5), F)
        assert first == second
        assert len(set(first.a)) == 3 and 0 not in first.a


class TestArrangement:
    """Test build_arrangement, line_arrangement and jacobian_ideal."""

    def test_line_arrangement(self):
        """Test products of lines."""
        assert line_arrangement([x, y, z]) == x * y * z
        with pytest.raises(ValueError):
            line_arrangement([])
        with pytest.raises(ValueError):
            line_arrangement([x, y**2])
        with pytest.raises(ValueError):
            line_arrangement([x + y, 2 * x + 2 * y])

    def test_build(self):
        """Test the arrangement polynomial."""
        Q = build_arrangement(ArrangementSpec(1, 1, (1,), (2,), F))
        assert Q == x * (y - x) * (z - 2 * x)
        assert Q.homogeneous_degree == 3

    def test_characteristic_divides_degree(self):
        """Test that p dividing m + n + 1 is rejected."""
        with pytest.raises(PreconditionError, match="characteristic divides degree"):
            build_arrangement(ArrangementSpec(1, 1, (1,), (2,), GF(3)))

    def test_jacobian_ideal(self):
        """Test the Jacobian ideal of an arrangement."""
        J = jacobian_ideal(build_arrangement(ArrangementSpec(2, 1, (1, 2), (3,), F)))
        assert J.name == "J_Q"
        assert J.degrees == (3, 3, 3)


class TestArrangementReport:
    """Test the arrangement_report function."""

    @pytest.mark.parametrize("m, n", [(1, 1), (2, 1), (1, 2)])
    def test_small(self, m, n):
        """Test the closed formulas on small arrangements."""
        spec = ArrangementSpec(m, n, tuple(range(1, m + 1)), tuple(range(1, n + 1)), F)
        report = arrangement_report(spec)
        assert isinstance(report, ArrangementReport)
        assert report.passed, report.checks
        assert report.kv.deg_Z == spec.expected_deg_Z()
        assert report.kv.verdict_theorem_consistent is True

    @pytest.mark.slow
    def test_random(self):
        """Test a random arrangement with more lines."""
        spec = ArrangementSpec.random(3, 2, np.random.default_rng(1), F)
        assert arrangement_report(spec).passed

"""Test monomials."""

import pytest

from koszulx.classes.monomial import Monomial


class TestMonomial:
    """Test the Monomial class."""

    def test_creation(self):
        """Test construction and degree."""
        m = Monomial((2, 1, 0))
        assert m.degree == 3
        assert tuple(m) == (2, 1, 0)
        assert m[0] == 2
        assert repr(m) == "Monomial((2, 1, 0))"

    def test_invalid(self):
        """Test that wrong lengths and negative exponents are rejected."""
        with pytest.raises(ValueError):
            Monomial((1, 2))
        with pytest.raises(ValueError):
            Monomial((1, -1, 0))

    def test_one_and_variables(self):
        """Test the constant monomial and the variables."""
        assert Monomial.one() == Monomial((0, 0, 0))
        assert Monomial.variable("y") == Monomial((0, 1, 0))
        with pytest.raises(ValueError):
            Monomial.variable("w")

    def test_arithmetic(self):
        """Test product, quotient, lcm and gcd."""
        m, n = Monomial((2, 1, 0)), Monomial((1, 0, 3))
        assert m * n == Monomial((3, 1, 3))
        assert (m * n) / n == m
        assert m.lcm(n) == Monomial((2, 1, 3))
        assert m.gcd(n) == Monomial((1, 0, 0))
        with pytest.raises(ValueError):
            m / n

    def test_divides(self):
        """Test divisibility."""
        assert Monomial((1, 0, 0)).divides(Monomial((2, 1, 0)))
        assert not Monomial((0, 0, 1)).divides(Monomial((2, 1, 0)))

    def test_hash(self):
        """Test that equal monomials hash equally."""
        assert len({Monomial((1, 1, 0)), Monomial([1, 1, 0])}) == 1

    def test_str(self):
        """Test the printed form."""
        assert str(Monomial((2, 1, 0))) == "x^2*y"
        assert str(Monomial((0, 0, 1))) == "z"
        assert str(Monomial.one()) == "1"

"""Test prime fields and field elements."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from koszulx.classes.field import GF, FieldElement, PrimeField
from koszulx.exception import FieldError

F7 = GF(7)
F = GF(32003)


class TestPrimeField:
    """Test the PrimeField class."""

    def test_construction(self):
        """Test that a field is built from a prime."""
        field = PrimeField(101)
        assert field.p == 101
        assert str(field) == "GF(101)"
        assert repr(field) == "PrimeField(101)"

    def test_not_prime(self):
        """Test that a composite characteristic is rejected."""
        with pytest.raises(ValueError):
            PrimeField(32004)
        with pytest.raises(ValueError):
            PrimeField(1)

    def test_equality_and_hash(self):
        """Test that fields with the same characteristic are equal."""
        assert PrimeField(7) == PrimeField(7)
        assert PrimeField(7) != PrimeField(11)
        assert hash(PrimeField(7)) == hash(F7)

    def test_shared_instance(self):
        """Test that GF returns one shared instance per characteristic."""
        assert GF(7) is GF(7)
        assert GF(32003) is F

    def test_default(self, monkeypatch):
        """Test the default characteristic and its environment override."""
        monkeypatch.delenv("KV_DEFAULT_P", raising=False)
        assert GF().p == 32003
        monkeypatch.setenv("KV_DEFAULT_P", "101")
        assert GF().p == 101

    def test_reduce_and_inverse(self):
        """Test residues and inverses of raw integers."""
        assert F7.reduce(-1) == 6
        assert F7.inverse(3) == 5
        with pytest.raises(FieldError, match="zero has no inverse"):
            F7.inverse(14)

    def test_divides_characteristic(self):
        """Test divisibility by the characteristic."""
        assert F7.divides_characteristic(21)
        assert not F7.divides_characteristic(20)


class TestFieldElement:
    """Test the FieldElement class."""

    def test_arithmetic(self):
        """Test the four operations modulo p."""
        a, b = F7(3), F7(5)
        assert a + b == 1
        assert a - b == 5
        assert a * b == 1
        assert a / b == 2
        assert -a == 4
        assert a**2 == 2
        assert a ** -1 == 5
        assert 2 + a == 5
        assert 1 - a == 5

    def test_inverse_of_two(self):
        """Test the inverse of two in GF(32003)."""
        assert F(2).inv() == FieldElement(16002, F)
        assert repr(F(2).inv()) == "FieldElement(16002, p=32003)"

    def test_zero_has_no_inverse(self):
        """Test that inverting zero raises."""
        with pytest.raises(FieldError):
            F7(0).inv()
        with pytest.raises(FieldError):
            F7(1) / 7

    def test_mixed_fields(self):
        """Test that elements of different fields cannot be combined."""
        with pytest.raises(FieldError):
            F7(1) + GF(11)(1)
        with pytest.raises(FieldError):
            FieldElement(F7(1), GF(11))

    def test_conversions(self):
        """Test int, bool, str and the signed representative."""
        assert int(F7(-1)) == 6
        assert not F7(7)
        assert F7(8)
        assert str(F7(9)) == "2"
        assert F7(6).signed() == -1
        assert F7(3).signed() == 3

    @given(st.integers(), st.integers(), st.integers())
    def test_ring_axioms(self, a, b, c):
        """Test associativity and distributivity on random residues."""
        x, y, z = F(a), F(b), F(c)
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z

    @given(st.integers(min_value=1, max_value=32002))
    def test_inverse_property(self, a):
        """Test that every nonzero residue times its inverse is one."""
        assert F(a) * F(a).inv() == 1

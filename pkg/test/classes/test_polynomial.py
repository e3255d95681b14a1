"""Test polynomials."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from koszulx.classes.field import GF
from koszulx.classes.monomial import Monomial
from koszulx.classes.polynomial import Polynomial, jacobian
from koszulx.exception import FieldError, PreconditionError
from koszulx.utils.linalg import monomials_of_degree

F = GF(32003)
x = Polynomial.variable("x", F)
y = Polynomial.variable("y", F)
z = Polynomial.variable("z", F)

exponents = st.tuples(*[st.integers(min_value=0, max_value=3)] * 3)
polynomials = st.dictionaries(exponents, st.integers(min_value=0, max_value=32002), max_size=5).map(
    lambda terms: Polynomial(terms, F)
)


def _forms_of_degree(d):
    basis = monomials_of_degree(d)
    return st.lists(
        st.integers(min_value=0, max_value=32002), min_size=len(basis), max_size=len(basis)
    ).map(lambda coefficients: Polynomial(dict(zip(basis, coefficients)), F))


homogeneous_forms = (
    st.integers(min_value=1, max_value=6)
    .flatmap(_forms_of_degree)
    .filter(lambda f: not f.is_zero())
)


class TestPolynomial:
    """Test the Polynomial class."""

    def test_creation_from_mapping(self):
        """Test that repeated monomials are added up and zeros dropped."""
        f = Polynomial([(2, (1, 0, 0)), (3, (1, 0, 0)), (0, (0, 1, 0))], F)
        assert f.raw == {(1, 0, 0): 5}
        g = Polynomial({Monomial((0, 0, 1)): -1}, F)
        assert g.coefficient((0, 0, 1)) == 32002

    def test_invalid_coefficient(self):
        """Test that coefficients must be integers or field elements."""
        with pytest.raises(TypeError):
            Polynomial({(1, 0, 0): 0.5}, F)
        with pytest.raises(FieldError):
            Polynomial({(1, 0, 0): GF(7)(1)}, F)

    def test_constructors(self):
        """Test zero, constants, variables and monomials."""
        assert Polynomial.zero(F).is_zero()
        assert Polynomial.constant(3, F) == 3
        assert Polynomial.monomial((1, 1, 0), 2, F) == 2 * x * y
        with pytest.raises(ValueError):
            Polynomial.variable("w", F)

    def test_terms_order(self):
        """Test that terms come in decreasing grevlex order."""
        f = z**2 + x * y + x**2
        assert [m for _, m in f.terms] == [
            Monomial((2, 0, 0)),
            Monomial((1, 1, 0)),
            Monomial((0, 0, 2)),
        ]
        coeff, mono = f.leading_term()
        assert coeff == 1 and mono == Monomial((2, 0, 0))

    def test_degrees(self):
        """Test total and homogeneous degrees."""
        assert (x * y + z**2).homogeneous_degree == 2
        assert (x + y**2).homogeneous_degree is None
        assert (x + y**2).degree == 2
        assert Polynomial.zero(F).degree is None
        assert Polynomial.zero(F).is_homogeneous()
        assert not (x + 1).is_homogeneous()

    def test_arithmetic(self):
        """Test sums, products and powers."""
        assert (x + y) * (x - y) == x**2 - y**2
        assert (x + y) ** 2 == x**2 + 2 * x * y + y**2
        assert x - x == 0
        assert 1 - x == -(x - 1)
        with pytest.raises(ValueError):
            x ** -1

    def test_mixed_fields(self):
        """Test that polynomials over different fields cannot be combined."""
        with pytest.raises(FieldError):
            x + Polynomial.variable("x", GF(7))

    def test_scale_shift_monic(self):
        """Test scalar multiples, monomial shifts and normalisation."""
        f = 3 * x + y
        assert f.scale(0).is_zero()
        assert f.shift((0, 0, 1), 2) == 6 * x * z + 2 * y * z
        assert f.monic() == x + F(3).inv() * y
        assert Polynomial.zero(F).monic().is_zero()

    def test_derivative(self):
        """Test formal partial derivatives."""
        f = x**3 + x * y * z
        assert f.derivative("x") == 3 * x**2 + y * z
        assert f.derivative("z") == x * y
        assert (Polynomial.variable("x", GF(3)) ** 3).derivative("x").is_zero()
        with pytest.raises(ValueError):
            f.derivative("t")

    def test_evaluate(self):
        """Test evaluation at a point."""
        f = x**2 - y * z
        assert f.evaluate((1, 2, 3)) == -5
        assert (x * y).evaluate((0, 1, 1)) == 0

    def test_str(self):
        """Test the printed form."""
        assert str((x + y) * (x - y)) == "x^2 - y^2"
        assert str(-2 * x + y) == "-2*x + y"
        assert str(Polynomial.zero(F)) == "0"
        assert str(Polynomial.constant(-1, F)) == "-1"

    def test_hash(self):
        """Test that equal polynomials hash equally."""
        assert hash(x * y) == hash(y * x)
        assert len({x + y, y + x}) == 1

    @settings(max_examples=50)
    @given(polynomials, polynomials, polynomials)
    def test_ring_axioms(self, f, g, h):
        """Test commutativity, associativity and distributivity."""
        assert f * g == g * f
        assert (f + g) + h == f + (g + h)
        assert f * (g + h) == f * g + f * h


class TestJacobian:
    """Test the jacobian function."""

    def test_coordinate_triangle(self):
        """Test the partial derivatives of x*y*z."""
        assert jacobian(x * y * z) == (y * z, x * z, x * y)

    def test_characteristic_divides_degree(self):
        """Test that p dividing the degree is rejected."""
        F3 = GF(3)
        X, Y, Z = (Polynomial.variable(v, F3) for v in "xyz")
        with pytest.raises(PreconditionError, match="characteristic divides degree"):
            jacobian(X * Y * Z)

    def test_inhomogeneous(self):
        """Test that inhomogeneous forms are rejected."""
        with pytest.raises(PreconditionError):
            jacobian(x + y**2)

    @settings(max_examples=30)
    @given(homogeneous_forms)
    def test_euler_relation(self, Q):
        """Test x Q_x + y Q_y + z Q_z = deg(Q) Q on random forms."""
        Qx, Qy, Qz = jacobian(Q)
        assert x * Qx + y * Qy + z * Qz == Q * Q.homogeneous_degree

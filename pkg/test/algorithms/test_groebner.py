"""Test Gröbner bases of ideals and submodules."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from koszulx.algorithms.groebner import (
    GroebnerBasis,
    buchberger,
    contains,
    groebner_with_syzygies,
    normal_form,
    submodule_equal,
)
from koszulx.classes.field import GF
from koszulx.classes.module import FreeModule, Submodule
from koszulx.classes.order import position_over_term, term_over_position
from koszulx.classes.polynomial import Polynomial
from koszulx.exception import AmbientMismatchError
from koszulx.utils.linalg import monomials_of_degree

F = GF(32003)
x = Polynomial.variable("x", F)
y = Polynomial.variable("y", F)
z = Polynomial.variable("z", F)

scalars = st.integers(min_value=0, max_value=32002)
units = st.integers(min_value=1, max_value=32002)


def forms_of_degree(d):
    basis = monomials_of_degree(d)
    return st.lists(scalars, min_size=len(basis), max_size=len(basis)).map(
        lambda coefficients: Polynomial(dict(zip(basis, coefficients)), F)
    )


def ideal(*forms):
    return Submodule.ideal(forms, F)


class TestBuchberger:
    """Test the buchberger function."""

    def test_redundant_generator(self):
        """Test that a multiple of a generator disappears from the reduced basis."""
        G = buchberger(ideal(x, y, x**2))
        assert isinstance(G, GroebnerBasis)
        assert [str(g) for g in G] == ["(x)", "(y)"]

    def test_new_leading_term(self):
        """Test that an S-polynomial contributes y^3."""
        G = buchberger(ideal(x**2 - y**2, x * y))
        assert len(G) == 3
        assert set(G.leading_monomials()) == {(0, (2, 0, 0)), (0, (1, 1, 0)), (0, (0, 3, 0))}
        assert G.max_degree() == 3

    def test_monic(self):
        """Test that basis elements are monic."""
        G = buchberger(ideal(3 * x * y, 5 * z**2))
        for g in G:
            assert g.leading_term()[2] == 1

    def test_idempotent(self):
        """Test that the basis of a reduced basis is itself."""
        G = buchberger(ideal(x * y - z**2, x * z, y**3))
        assert buchberger(G.to_submodule()) == G
        assert hash(buchberger(G.to_submodule())) == hash(G)

    def test_independent_of_generators(self):
        """Test that equal ideals give equal reduced bases."""
        assert buchberger(ideal(x + y, x - y)) == buchberger(ideal(x, y))

    def test_wrong_order(self):
        """Test that an order of the wrong rank is rejected."""
        with pytest.raises(AmbientMismatchError):
            buchberger(ideal(x), term_over_position((0, 0)))

    def test_module(self):
        """Test a basis of a rank-two submodule in two orders."""
        M = FreeModule((0, 0), F)
        N = Submodule(M, [M.element([x, y]), M.element([y, z])])
        for order in (term_over_position((0, 0)), position_over_term((0, 0))):
            G = buchberger(N, order)
            for g in N:
                assert normal_form(g, G).is_zero()

    def test_tracked_representations(self):
        """Test that tracked expressions recombine to the basis elements."""
        forms = [x * y, x * z, y * z]
        G = buchberger(ideal(*forms), track=True)
        assert G.representations is not None
        for g, rep in zip(G, G.representations):
            combined = sum((a * f for a, f in zip(rep, forms)), Polynomial.zero(F))
            assert combined == g[0]

    def test_stats(self):
        """Test the counters of the computation."""
        stats = buchberger(ideal(x * y, x * z, y * z)).stats
        assert set(stats.to_dict()) == {"pairs_processed", "zero_reductions", "pairs_skipped"}
        assert stats.pairs_processed >= 0


class TestNormalForm:
    """Test normal forms, membership and equality."""

    def test_normal_form(self):
        """Test reduction modulo an ideal."""
        G = buchberger(ideal(x))
        ring = FreeModule.ring(F)
        assert normal_form(ring.element([x**2 + z**2]), G) == ring.element([z**2])
        assert G.normal_form(ring.element([x * y])).is_zero()

    def test_normal_form_wrong_ambient(self):
        """Test that elements of another module are rejected."""
        G = buchberger(ideal(x))
        with pytest.raises(AmbientMismatchError):
            normal_form(FreeModule((0, 0), F).element([x, y]), G)

    def test_contains(self):
        """Test membership including zero and the zero submodule."""
        ring = FreeModule.ring(F)
        I = ideal(x * y, z**2)
        assert contains(I, ring.element([x**2 * y + z**3]))
        assert not contains(I, ring.element([x * z]))
        assert contains(I, ring.zero())
        assert not contains(Submodule(ring, []), ring.element([x]))

    def test_submodule_equal(self):
        """Test equality of submodules given by different generators."""
        assert submodule_equal(ideal(x, y), ideal(x + y, x - y, x**2))
        assert not submodule_equal(ideal(x, y), ideal(x, z))
        assert submodule_equal(Submodule(FreeModule.ring(F), []), ideal())
        with pytest.raises(AmbientMismatchError):
            submodule_equal(ideal(x), Submodule(FreeModule((0, 0), F), []))


class TestGroebnerWithSyzygies:
    """Test relations collected during Buchberger's algorithm."""

    def test_relations(self):
        """Test that every relation annihilates the generators."""
        forms = [x * y, x * z, y * z]
        basis, relations, source = groebner_with_syzygies(ideal(*forms))
        assert source.twists == (2, 2, 2)
        assert len(basis) == 3
        assert relations
        for s in relations:
            total = sum((a * f for a, f in zip(s, forms)), Polynomial.zero(F))
            assert total.is_zero()
            assert s.module_degree == 3


class TestGroebnerProperties:
    """Test properties of reduced bases and normal forms on random input."""

    @settings(max_examples=30, deadline=None)
    @given(forms_of_degree(4), forms_of_degree(4), scalars, scalars)
    def test_normal_form_is_linear(self, f, g, a, b):
        """Test NF(a f + b g) = a NF(f) + b NF(g)."""
        G = buchberger(ideal(x * y - z**2, x * z, y**3))
        ring = FreeModule.ring(F)
        u, v = ring.element([f]), ring.element([g])
        combined = normal_form(u * a + v * b, G)
        assert combined == normal_form(u, G) * a + normal_form(v, G) * b

    @settings(max_examples=20, deadline=None)
    @given(
        st.permutations([x * y - z**2, x * z, y**3, x**2 + y * z]),
        st.lists(units, min_size=4, max_size=4),
    )
    def test_reduced_basis_is_canonical(self, forms, factors):
        """Test that permuting and rescaling generators leaves the reduced basis unchanged."""
        expected = buchberger(ideal(x * y - z**2, x * z, y**3, x**2 + y * z))
        G = buchberger(ideal(*[f * c for f, c in zip(forms, factors)]))
        assert G == expected
        assert sorted(str(g) for g in G) == sorted(str(g) for g in expected)

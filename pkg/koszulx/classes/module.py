"""Graded free modules over k[x,y,z], their elements and their submodules.

A free module ⊕_j R(-d_j) is described by its twist vector (d_1, ..., d_r):
the basis vector e_j has degree d_j, so ``R(i)_n = R_{i+n}``. Elements are
vectors of polynomials; an element is homogeneous of module degree D when
every nonzero component f_j satisfies ``deg f_j + d_j = D``.
"""

import abc
from collections.abc import Iterable, Iterator, Sequence
from math import comb
from typing import Any

from koszulx.classes.field import GF, FieldElement, PrimeField
from koszulx.classes.order import MonomialOrder, term_over_position
from koszulx.classes.polynomial import Polynomial
from koszulx.exception import AmbientMismatchError, HomogeneityError

__all__ = ["FreeModule", "ModuleElement", "GradedModule", "Submodule", "QuotientModule"]


class FreeModule:
    """The graded free module ⊕_{j=1}^r R(-d_j).

    Parameters
    ----------
    twists : sequence of int
        The twists (d_1, ..., d_r); the rank is their number.
    field : PrimeField, optional
        Coefficient field, GF(32003) by default.

    Examples
    --------
    >>> F = FreeModule((2, 2, 2))
    >>> F.rank
    3
    >>> F.dimension(3)
    9
    """

    __slots__ = ("twists", "field")

    def __init__(self, twists: Sequence[int], field: PrimeField | None = None) -> None:
        twists = tuple(int(t) for t in twists)
        if len(twists) == 0:
            raise ValueError("a free module needs a positive rank")
        self.twists = twists
        self.field = field if field is not None else GF()

    @classmethod
    def ring(cls, field: PrimeField | None = None) -> "FreeModule":
        """Return R itself as the rank-one free module with twist 0."""
        return cls((0,), field)

    @property
    def rank(self) -> int:
        """Return the rank."""
        return len(self.twists)

    def __len__(self) -> int:
        """Return the rank."""
        return len(self.twists)

    def basis(self, j: int) -> "ModuleElement":
        """Return the basis vector e_j (zero-based)."""
        if not 0 <= j < self.rank:
            raise IndexError(f"basis index {j} out of range for rank {self.rank}")
        one = Polynomial.constant(1, self.field)
        zero = Polynomial.zero(self.field)
        return ModuleElement(self, [one if i == j else zero for i in range(self.rank)])

    def zero(self) -> "ModuleElement":
        """Return the zero vector."""
        return ModuleElement(self, [Polynomial.zero(self.field)] * self.rank)

    def element(self, components: Sequence[Polynomial]) -> "ModuleElement":
        """Return the vector with the given components."""
        return ModuleElement(self, components)

    def dimension(self, n: int) -> int:
        """Return dim_k of the degree-n graded piece."""
        return sum(comb(n - d + 2, 2) for d in self.twists if n >= d)

    def order(self) -> MonomialOrder:
        """Return the default (term over position) order on this module."""
        return term_over_position(self.twists)

    def direct_sum(self, other: "FreeModule") -> "FreeModule":
        """Return the direct sum with another free module."""
        if other.field != self.field:
            raise AmbientMismatchError("free modules over different fields")
        return FreeModule(self.twists + other.twists, self.field)

    def __eq__(self, other) -> bool:
        """Return True if both modules have the same twists and field."""
        if not isinstance(other, FreeModule):
            return NotImplemented
        return self.twists == other.twists and self.field == other.field

    def __hash__(self) -> int:
        """Return hash of twists and field."""
        return hash((self.twists, self.field))

    def __repr__(self) -> str:
        """Return a printable representation of the module."""
        return f"FreeModule({self.twists})"

    def __str__(self) -> str:
        """Return the module as a direct sum of twisted copies of R."""
        return " ⊕ ".join(f"R({-d})" if d else "R" for d in self.twists)


class ModuleElement:
    """A vector of polynomials in a graded free module.

    Parameters
    ----------
    ambient : FreeModule
        The free module containing the element.
    components : sequence of Polynomial
        One polynomial per basis vector.

    Raises
    ------
    ValueError
        If the number of components differs from the rank.
    """

    __slots__ = ("ambient", "components", "_hash")

    def __init__(self, ambient: FreeModule, components: Sequence[Polynomial]) -> None:
        components = tuple(components)
        if len(components) != ambient.rank:
            raise ValueError(
                f"expected {ambient.rank} components, got {len(components)}"
            )
        for f in components:
            if f.field != ambient.field:
                raise AmbientMismatchError("component over a different field")
        self.ambient = ambient
        self.components = components
        self._hash = None

    @classmethod
    def from_vector(cls, ambient: FreeModule, vector: dict) -> "ModuleElement":
        """Build an element from a ``{(position, exponents): residue}`` map."""
        parts: list[dict] = [{} for _ in range(ambient.rank)]
        for (pos, exps), c in vector.items():
            if c:
                parts[pos][exps] = c
        return cls(ambient, [Polynomial._from_raw(t, ambient.field) for t in parts])

    def vector(self) -> dict:
        """Return the element as a ``{(position, exponents): residue}`` map."""
        return {
            (pos, exps): c
            for pos, f in enumerate(self.components)
            for exps, c in f.raw.items()
        }

    def __getitem__(self, j: int) -> Polynomial:
        """Return the j-th component."""
        return self.components[j]

    def __iter__(self) -> Iterator[Polynomial]:
        """Iterate over the components."""
        return iter(self.components)

    def __len__(self) -> int:
        """Return the number of components."""
        return len(self.components)

    def is_zero(self) -> bool:
        """Return True for the zero vector."""
        return all(f.is_zero() for f in self.components)

    def __bool__(self) -> bool:
        """Return True for nonzero vectors."""
        return not self.is_zero()

    @property
    def module_degree(self) -> int | None:
        """Return the module degree, or None if zero or not homogeneous."""
        degrees = set()
        for f, d in zip(self.components, self.ambient.twists):
            if f.is_zero():
                continue
            hd = f.homogeneous_degree
            if hd is None:
                return None
            degrees.add(hd + d)
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def is_homogeneous(self) -> bool:
        """Return True if the element is zero or homogeneous."""
        return self.is_zero() or self.module_degree is not None

    def _check(self, other: "ModuleElement") -> None:
        if not isinstance(other, ModuleElement):
            raise TypeError(f"expected a ModuleElement, got {type(other).__name__}")
        if other.ambient != self.ambient:
            raise AmbientMismatchError(
                f"elements of {self.ambient!r} and {other.ambient!r} cannot be combined"
            )

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        """Return the sum of two elements."""
        self._check(other)
        return ModuleElement(
            self.ambient, [f + g for f, g in zip(self.components, other.components)]
        )

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        """Return the difference of two elements."""
        self._check(other)
        return ModuleElement(
            self.ambient, [f - g for f, g in zip(self.components, other.components)]
        )

    def __neg__(self) -> "ModuleElement":
        """Return the additive inverse."""
        return ModuleElement(self.ambient, [-f for f in self.components])

    def __mul__(self, other) -> "ModuleElement":
        """Return the element multiplied by a polynomial or a scalar."""
        if isinstance(other, (Polynomial, int, FieldElement)):
            return ModuleElement(self.ambient, [f * other for f in self.components])
        return NotImplemented

    __rmul__ = __mul__

    def leading_term(self, order: MonomialOrder | None = None) -> tuple[int, tuple, int]:
        """Return ``(position, exponents, residue)`` of the leading term.

        Raises
        ------
        ValueError
            If the element is zero.
        """
        vec = self.vector()
        if not vec:
            raise ValueError("the zero vector has no leading term")
        order = order or self.ambient.order()
        pos, exps = max(vec, key=lambda t: order.key(*t))
        return pos, exps, vec[(pos, exps)]

    def __eq__(self, other) -> bool:
        """Return True if both elements have equal ambients and components."""
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self.ambient == other.ambient and self.components == other.components

    def __hash__(self) -> int:
        """Return hash of ambient and components."""
        if self._hash is None:
            self._hash = hash((self.ambient, self.components))
        return self._hash

    def __repr__(self) -> str:
        """Return a printable representation of the element."""
        return f"ModuleElement({self.ambient!r}, {str(self)})"

    def __str__(self) -> str:
        """Return the components as a parenthesised tuple."""
        return "(" + ", ".join(str(f) for f in self.components) + ")"


class GradedModule(abc.ABC):
    """Abstract class for finitely generated graded modules.

    Submodules of a free module and their quotients are the two concrete
    kinds; both are described by an ambient free module and a list of
    homogeneous generators.

    Parameters
    ----------
    name : str, optional
        A name for the module.
    """

    def __init__(self, name: str = "") -> None:
        self.name = name

    @property
    @abc.abstractmethod
    def ambient(self) -> FreeModule:
        """Return the ambient free module."""

    @property
    @abc.abstractmethod
    def generators(self) -> tuple[ModuleElement, ...]:
        """Return the generators of the submodule involved."""

    @abc.abstractmethod
    def __repr__(self) -> str:
        """Return a printable representation."""

    @property
    def field(self) -> PrimeField:
        """Return the coefficient field."""
        return self.ambient.field


class Submodule(GradedModule):
    """A submodule of a graded free module given by homogeneous generators.

    Ideals of R are the rank-one case, see :meth:`ideal`.

    Parameters
    ----------
    ambient : FreeModule
        The free module containing the submodule.
    generators : iterable of ModuleElement
        Homogeneous generators; zero vectors are dropped.
    order : MonomialOrder, optional
        Preferred order for Gröbner computations, term over position when
        omitted. Syzygy modules carry their Schreyer order here.
    name : str, optional
        A name for the submodule.

    Raises
    ------
    HomogeneityError
        If a generator is not homogeneous.
    AmbientMismatchError
        If a generator lives in a different free module.

    Examples
    --------
    >>> from koszulx.read_write import parse_polynomials
    >>> I = Submodule.ideal(parse_polynomials("x*y, x*z, y*z"))
    >>> len(I)
    3
    """

    def __init__(
        self,
        ambient: FreeModule,
        generators: Iterable[ModuleElement],
        order: MonomialOrder | None = None,
        name: str = "",
    ) -> None:
        super().__init__(name)
        gens = []
        for g in generators:
            if g.ambient != ambient:
                raise AmbientMismatchError(
                    f"generator {g} does not live in {ambient!r}"
                )
            if not g.is_homogeneous():
                raise HomogeneityError(f"generator {g} is not homogeneous")
            if not g.is_zero():
                gens.append(g)
        self._ambient = ambient
        self._generators = tuple(gens)
        self.order = order if order is not None else ambient.order()
        self._cache: dict[Any, Any] = {}

    @classmethod
    def ideal(
        cls, polynomials: Iterable[Polynomial], field: PrimeField | None = None, name: str = ""
    ) -> "Submodule":
        """Return the ideal generated by polynomials, as a rank-one submodule.

        Raises
        ------
        HomogeneityError
            If a polynomial is not homogeneous.
        """
        polynomials = list(polynomials)
        if field is None:
            field = polynomials[0].field if polynomials else GF()
        ring = FreeModule.ring(field)
        return cls(ring, [ModuleElement(ring, [f]) for f in polynomials], name=name)

    @classmethod
    def direct_sum_of_ideal(
        cls, polynomials: Sequence[Polynomial], ambient: FreeModule, name: str = ""
    ) -> "Submodule":
        """Return ⊕_j J(-d_j) inside ``ambient`` for the ideal J = <polynomials>.

        The generators are ``g * e_j`` for every polynomial g and position j.
        """
        gens = []
        for j in range(ambient.rank):
            e = ambient.basis(j)
            gens.extend(e * g for g in polynomials)
        return cls(ambient, gens, name=name)

    @property
    def ambient(self) -> FreeModule:
        """Return the ambient free module."""
        return self._ambient

    @property
    def generators(self) -> tuple[ModuleElement, ...]:
        """Return the nonzero generators."""
        return self._generators

    @property
    def degrees(self) -> tuple[int, ...]:
        """Return the module degrees of the generators."""
        return tuple(g.module_degree for g in self._generators)

    def is_ideal(self) -> bool:
        """Return True for rank-one submodules of R."""
        return self._ambient.rank == 1 and self._ambient.twists == (0,)

    def polynomials(self) -> tuple[Polynomial, ...]:
        """Return the generators of a rank-one submodule as polynomials."""
        if self._ambient.rank != 1:
            raise ValueError("only rank-one submodules have polynomial generators")
        return tuple(g[0] for g in self._generators)

    def is_zero(self) -> bool:
        """Return True for the zero submodule."""
        return not self._generators

    def __len__(self) -> int:
        """Return the number of generators."""
        return len(self._generators)

    def __iter__(self) -> Iterator[ModuleElement]:
        """Iterate over the generators."""
        return iter(self._generators)

    def __getitem__(self, index: int) -> ModuleElement:
        """Return a generator."""
        return self._generators[index]

    def __contains__(self, item: ModuleElement) -> bool:
        """Return True if the element lies in the submodule."""
        from koszulx.algorithms.groebner import contains

        return contains(self, item)

    def groebner_basis(self, order: MonomialOrder | None = None):
        """Return the (cached) reduced Gröbner basis.

        Parameters
        ----------
        order : MonomialOrder, optional
            Defaults to the submodule's preferred order.
        """
        from koszulx.algorithms.groebner import buchberger

        order = order or self.order
        key = ("gb", order)
        if key not in self._cache:
            self._cache[key] = buchberger(self, order)
        return self._cache[key]

    def quotient_module(self) -> "QuotientModule":
        """Return the quotient of the ambient module by this submodule."""
        return QuotientModule(self)

    def with_order(self, order: MonomialOrder) -> "Submodule":
        """Return the same submodule with another preferred order."""
        return Submodule(self._ambient, self._generators, order=order, name=self.name)

    def __repr__(self) -> str:
        """Return a printable representation of the submodule."""
        name = f"{self.name!r}, " if self.name else ""
        return f"Submodule({name}{len(self)} generators in {self._ambient!r})"

    def __str__(self) -> str:
        """Return the generators in angle brackets."""
        if self.is_ideal():
            return "<" + ", ".join(str(f) for f in self.polynomials()) + ">"
        return "<" + ", ".join(str(g) for g in self._generators) + ">"


class QuotientModule(GradedModule):
    """The quotient F/M of a free module by a submodule.

    Parameters
    ----------
    submodule : Submodule
        The submodule M.
    name : str, optional
        A name for the quotient.
    """

    def __init__(self, submodule: Submodule, name: str = "") -> None:
        super().__init__(name)
        self.submodule = submodule

    @property
    def ambient(self) -> FreeModule:
        """Return the free module being divided."""
        return self.submodule.ambient

    @property
    def generators(self) -> tuple[ModuleElement, ...]:
        """Return the generators of the submodule divided out."""
        return self.submodule.generators

    def __repr__(self) -> str:
        """Return a printable representation of the quotient."""
        return f"QuotientModule({self.submodule!r})"

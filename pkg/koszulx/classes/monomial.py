"""Monomials in the variables x, y, z."""

from collections.abc import Iterable, Iterator

__all__ = ["Monomial", "VARIABLES"]

VARIABLES = ("x", "y", "z")


class Monomial:
    """A monomial x^a y^b z^c.

    Monomials are immutable and hashable. The Gröbner engine works on the raw
    exponent tuples; this class is the public face of those tuples.

    Parameters
    ----------
    exponents : iterable of int
        Three non-negative exponents, for x, y and z.

    Examples
    --------
    >>> m = Monomial((2, 1, 0))
    >>> m.degree
    3
    >>> str(m)
    'x^2*y'
    """

    __slots__ = ("exponents", "degree")

    def __init__(self, exponents: Iterable[int]) -> None:
        exponents = tuple(int(e) for e in exponents)
        if len(exponents) != len(VARIABLES):
            raise ValueError(
                f"a monomial needs {len(VARIABLES)} exponents, got {len(exponents)}"
            )
        if any(e < 0 for e in exponents):
            raise ValueError(f"exponents must be non-negative, got {exponents}")
        self.exponents = exponents
        self.degree = sum(exponents)

    @classmethod
    def one(cls) -> "Monomial":
        """Return the constant monomial 1."""
        return cls((0, 0, 0))

    @classmethod
    def variable(cls, name: str) -> "Monomial":
        """Return the monomial of a single variable.

        Parameters
        ----------
        name : {'x', 'y', 'z'}
            The variable.
        """
        if name not in VARIABLES:
            raise ValueError(f"unknown variable {name!r}")
        return cls(tuple(int(v == name) for v in VARIABLES))

    def __iter__(self) -> Iterator[int]:
        """Iterate over the exponents."""
        return iter(self.exponents)

    def __getitem__(self, index: int) -> int:
        """Return the exponent of the variable at `index`."""
        return self.exponents[index]

    def __mul__(self, other: "Monomial") -> "Monomial":
        """Return the product of two monomials."""
        return Monomial(a + b for a, b in zip(self.exponents, other.exponents))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        """Return the quotient by a monomial dividing this one.

        Raises
        ------
        ValueError
            If `other` does not divide this monomial.
        """
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(a - b for a, b in zip(self.exponents, other.exponents))

    def divides(self, other: "Monomial") -> bool:
        """Return True if this monomial divides `other`."""
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        """Return the least common multiple."""
        return Monomial(max(a, b) for a, b in zip(self.exponents, other.exponents))

    def gcd(self, other: "Monomial") -> "Monomial":
        """Return the greatest common divisor."""
        return Monomial(min(a, b) for a, b in zip(self.exponents, other.exponents))

    def __eq__(self, other) -> bool:
        """Return True if the exponents agree."""
        if isinstance(other, Monomial):
            return self.exponents == other.exponents
        return NotImplemented

    def __hash__(self) -> int:
        """Return hash of the exponent tuple."""
        return hash(self.exponents)

    def __repr__(self) -> str:
        """Return a printable representation of the monomial."""
        return f"Monomial({self.exponents})"

    def __str__(self) -> str:
        """Return the monomial with explicit ``*`` between factors."""
        factors = []
        for name, e in zip(VARIABLES, self.exponents):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return "*".join(factors) if factors else "1"

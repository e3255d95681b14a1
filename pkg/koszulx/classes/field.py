"""Prime fields GF(p) and their elements."""

from functools import lru_cache
from numbers import Integral

from sympy import isprime

from koszulx.exception import FieldError

__all__ = ["PrimeField", "FieldElement", "GF", "DEFAULT_CHARACTERISTIC"]

DEFAULT_CHARACTERISTIC = 32003


class PrimeField:
    """The finite field with ``p`` elements.

    Coefficients of every polynomial in a session live in one prime field. The
    field stores residues as plain integers in ``range(p)``; arithmetic helpers
    on raw integers are used by the Gröbner engine, while :class:`FieldElement`
    is the public scalar type.

    Parameters
    ----------
    p : int
        The characteristic. It must be prime.

    Raises
    ------
    ValueError
        If `p` is not a prime number.

    Examples
    --------
    >>> F = PrimeField(32003)
    >>> F(2).inv()
    FieldElement(16002, p=32003)
    """

    __slots__ = ("p",)

    def __init__(self, p: int) -> None:
        if not isinstance(p, Integral) or not isprime(int(p)):
            raise ValueError(f"field characteristic must be prime, got {p}")
        self.p = int(p)

    def __call__(self, value) -> "FieldElement":
        """Return the residue of an integer as a field element."""
        return FieldElement(value, self)

    def __eq__(self, other) -> bool:
        """Return True if both fields have the same characteristic."""
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        """Return hash of the characteristic."""
        return hash(("GF", self.p))

    def __repr__(self) -> str:
        """Return a printable representation of the field."""
        return f"PrimeField({self.p})"

    def __str__(self) -> str:
        """Return the conventional name of the field."""
        return f"GF({self.p})"

    def reduce(self, value: int) -> int:
        """Return the canonical residue of an integer."""
        return int(value) % self.p

    def inverse(self, value: int) -> int:
        """Return the inverse of a nonzero residue.

        Raises
        ------
        FieldError
            If `value` is zero modulo p.
        """
        value %= self.p
        if value == 0:
            raise FieldError("zero has no inverse")
        return pow(value, -1, self.p)

    def divides_characteristic(self, n: int) -> bool:
        """Return True if p divides the integer `n`."""
        return n % self.p == 0


@lru_cache(maxsize=None)
def _shared_field(p: int) -> PrimeField:
    return PrimeField(p)


def GF(p: int | None = None) -> PrimeField:
    """Return the shared :class:`PrimeField` instance for `p`.

    Parameters
    ----------
    p : int, optional
        The characteristic. Defaults to the session default, which is 32003
        unless the environment variable ``KV_DEFAULT_P`` says otherwise.
    """
    if p is None:
        from koszulx.config import default_characteristic

        p = default_characteristic()
    return _shared_field(int(p))


class FieldElement:
    """An element of a prime field.

    Parameters
    ----------
    value : int or FieldElement
        Any integer; it is reduced modulo p.
    field : PrimeField
        The field containing the element.
    """

    __slots__ = ("value", "field")

    def __init__(self, value, field: PrimeField) -> None:
        if isinstance(value, FieldElement):
            if value.field != field:
                raise FieldError(
                    f"cannot coerce an element of {value.field} into {field}"
                )
            value = value.value
        self.value = int(value) % field.p
        self.field = field

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(
                    f"cannot combine elements of {self.field} and {other.field}"
                )
            return other.value
        if isinstance(other, Integral):
            return int(other) % self.field.p
        return NotImplemented

    def __add__(self, other) -> "FieldElement":
        """Return the sum of two field elements."""
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return FieldElement(self.value + value, self.field)

    __radd__ = __add__

    def __sub__(self, other) -> "FieldElement":
        """Return the difference of two field elements."""
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return FieldElement(self.value - value, self.field)

    def __rsub__(self, other) -> "FieldElement":
        """Return ``other - self``."""
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return FieldElement(value - self.value, self.field)

    def __mul__(self, other) -> "FieldElement":
        """Return the product of two field elements."""
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return FieldElement(self.value * value, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "FieldElement":
        """Return ``self * other^-1``."""
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return FieldElement(self.value * self.field.inverse(value), self.field)

    def __neg__(self) -> "FieldElement":
        """Return the additive inverse."""
        return FieldElement(-self.value, self.field)

    def __pow__(self, exponent: int) -> "FieldElement":
        """Return the element raised to an integer power."""
        if exponent < 0:
            return self.inv() ** (-exponent)
        return FieldElement(pow(self.value, exponent, self.field.p), self.field)

    def inv(self) -> "FieldElement":
        """Return the multiplicative inverse.

        Raises
        ------
        FieldError
            If the element is zero.
        """
        return FieldElement(self.field.inverse(self.value), self.field)

    def __eq__(self, other) -> bool:
        """Return True if `other` represents the same residue."""
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, Integral):
            return self.value == int(other) % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        """Return hash of the residue and the field."""
        return hash((self.value, self.field.p))

    def __bool__(self) -> bool:
        """Return True for nonzero elements."""
        return self.value != 0

    def __int__(self) -> int:
        """Return the canonical residue."""
        return self.value

    def __repr__(self) -> str:
        """Return a printable representation of the element."""
        return f"FieldElement({self.value}, p={self.field.p})"

    def __str__(self) -> str:
        """Return the residue as a string."""
        return str(self.value)

    def signed(self) -> int:
        """Return the representative in ``(-p/2, p/2]`` used when printing."""
        if self.value > self.field.p // 2:
            return self.value - self.field.p
        return self.value

"""Polynomials in k[x,y,z] over a prime field."""

from collections.abc import Iterable, Mapping
from numbers import Integral

from koszulx.classes.field import GF, FieldElement, PrimeField
from koszulx.classes.monomial import VARIABLES, Monomial
from koszulx.classes.order import MonomialOrder, grevlex
from koszulx.exception import FieldError, PreconditionError

__all__ = ["Polynomial", "jacobian"]

_GREVLEX = grevlex()


def _grevlex_key(exps: tuple[int, int, int]) -> tuple:
    return _GREVLEX.key(0, exps)


class Polynomial:
    """A polynomial in x, y, z with coefficients in GF(p).

    Polynomials are immutable values. Internally the terms are kept in a
    dictionary from exponent tuples to nonzero residues; :attr:`terms` exposes
    them as ``(FieldElement, Monomial)`` pairs strictly decreasing in grevlex
    order.

    Parameters
    ----------
    terms : mapping or iterable, optional
        Either a mapping from monomials (or exponent tuples) to coefficients,
        or an iterable of ``(coefficient, monomial)`` pairs. Repeated
        monomials are added up and zero coefficients dropped.
    field : PrimeField, optional
        The coefficient field, GF(32003) by default.

    Examples
    --------
    >>> x, y = Polynomial.variable("x"), Polynomial.variable("y")
    >>> str((x + y) * (x - y))
    'x^2 - y^2'
    """

    __slots__ = ("_terms", "field", "_hash")

    def __init__(self, terms=None, field: PrimeField | None = None) -> None:
        self.field = field if field is not None else GF()
        self._hash = None
        p = self.field.p
        collected: dict[tuple[int, int, int], int] = {}
        if terms is None:
            items = ()
        elif isinstance(terms, Mapping):
            items = ((c, m) for m, c in terms.items())
        else:
            items = terms
        for coeff, mono in items:
            exps = mono.exponents if isinstance(mono, Monomial) else tuple(mono)
            if len(exps) != len(VARIABLES) or any(e < 0 for e in exps):
                raise ValueError(f"invalid exponent tuple {exps}")
            value = self._coefficient(coeff)
            collected[exps] = (collected.get(exps, 0) + value) % p
        self._terms = {m: c for m, c in collected.items() if c}

    def _coefficient(self, coeff) -> int:
        if isinstance(coeff, FieldElement):
            if coeff.field != self.field:
                raise FieldError(
                    f"coefficient from {coeff.field} used in a polynomial over {self.field}"
                )
            return coeff.value
        if isinstance(coeff, Integral):
            return int(coeff) % self.field.p
        raise TypeError(f"coefficients must be integers or field elements, got {coeff!r}")

    @classmethod
    def _from_raw(cls, terms: dict, field: PrimeField) -> "Polynomial":
        """Wrap a dictionary of nonzero residues without copying or checking."""
        poly = cls.__new__(cls)
        poly._terms = terms
        poly.field = field
        poly._hash = None
        return poly

    @classmethod
    def zero(cls, field: PrimeField | None = None) -> "Polynomial":
        """Return the zero polynomial."""
        return cls(None, field)

    @classmethod
    def constant(cls, value, field: PrimeField | None = None) -> "Polynomial":
        """Return a constant polynomial."""
        return cls([(value, (0, 0, 0))], field)

    @classmethod
    def variable(cls, name: str, field: PrimeField | None = None) -> "Polynomial":
        """Return one of the variables x, y, z as a polynomial."""
        return cls([(1, Monomial.variable(name))], field)

    @classmethod
    def monomial(cls, exps, coeff=1, field: PrimeField | None = None) -> "Polynomial":
        """Return the single term ``coeff * x^a y^b z^c``."""
        return cls([(coeff, exps)], field)

    @property
    def raw(self) -> dict[tuple[int, int, int], int]:
        """Return the underlying dictionary; callers must not mutate it."""
        return self._terms

    @property
    def terms(self) -> list[tuple[FieldElement, Monomial]]:
        """Return the terms, strictly decreasing in grevlex order."""
        return [
            (FieldElement(self._terms[m], self.field), Monomial(m))
            for m in sorted(self._terms, key=_grevlex_key, reverse=True)
        ]

    def sorted_terms(self, order: MonomialOrder | None = None) -> list:
        """Return ``(exponents, residue)`` pairs decreasing in `order`."""
        order = order or _GREVLEX
        return sorted(
            self._terms.items(), key=lambda t: order.key(0, t[0]), reverse=True
        )

    def __len__(self) -> int:
        """Return the number of terms."""
        return len(self._terms)

    def __bool__(self) -> bool:
        """Return True for nonzero polynomials."""
        return bool(self._terms)

    def is_zero(self) -> bool:
        """Return True for the zero polynomial."""
        return not self._terms

    @property
    def degree(self) -> int | None:
        """Return the total degree, or None for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(m) for m in self._terms)

    @property
    def homogeneous_degree(self) -> int | None:
        """Return the common degree of all terms, or None.

        None is returned for the zero polynomial and for polynomials mixing
        degrees.
        """
        degrees = {sum(m) for m in self._terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def is_homogeneous(self) -> bool:
        """Return True if the polynomial is zero or homogeneous."""
        return not self._terms or self.homogeneous_degree is not None

    def leading_term(self, order: MonomialOrder | None = None):
        """Return the leading ``(FieldElement, Monomial)`` pair.

        Raises
        ------
        ValueError
            If the polynomial is zero.
        """
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        order = order or _GREVLEX
        m = max(self._terms, key=lambda e: order.key(0, e))
        return FieldElement(self._terms[m], self.field), Monomial(m)

    def coefficient(self, mono) -> FieldElement:
        """Return the coefficient of a monomial (zero if absent)."""
        exps = mono.exponents if isinstance(mono, Monomial) else tuple(mono)
        return FieldElement(self._terms.get(exps, 0), self.field)

    def _check_field(self, other: "Polynomial") -> None:
        if other.field != self.field:
            raise FieldError(
                f"cannot combine polynomials over {self.field} and {other.field}"
            )

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check_field(other)
            return other
        if isinstance(other, (Integral, FieldElement)):
            return Polynomial.constant(other, self.field)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        """Return the sum of two polynomials."""
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.field.p
        terms = dict(self._terms)
        for m, c in other._terms.items():
            value = (terms.get(m, 0) + c) % p
            if value:
                terms[m] = value
            else:
                terms.pop(m, None)
        return Polynomial._from_raw(terms, self.field)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        """Return the additive inverse."""
        p = self.field.p
        return Polynomial._from_raw({m: p - c for m, c in self._terms.items()}, self.field)

    def __sub__(self, other) -> "Polynomial":
        """Return the difference of two polynomials."""
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        """Return ``other - self``."""
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Polynomial":
        """Return the product with a polynomial or a scalar."""
        if isinstance(other, (Integral, FieldElement)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_field(other)
        p = self.field.p
        terms: dict[tuple[int, int, int], int] = {}
        for (a1, b1, c1), u in self._terms.items():
            for (a2, b2, c2), v in other._terms.items():
                m = (a1 + a2, b1 + b2, c1 + c2)
                terms[m] = (terms.get(m, 0) + u * v) % p
        return Polynomial._from_raw({m: c for m, c in terms.items() if c}, self.field)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        """Return the polynomial raised to a non-negative integer power."""
        if exponent < 0:
            raise ValueError("polynomials only have non-negative powers")
        result = Polynomial.constant(1, self.field)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, scalar) -> "Polynomial":
        """Return the polynomial multiplied by a field scalar."""
        c = self._coefficient(scalar)
        if c == 0:
            return Polynomial.zero(self.field)
        p = self.field.p
        return Polynomial._from_raw(
            {m: (v * c) % p for m, v in self._terms.items()}, self.field
        )

    def shift(self, exps: tuple[int, int, int], scalar: int = 1) -> "Polynomial":
        """Return ``scalar * x^a y^b z^c * self``."""
        a, b, c = exps
        p = self.field.p
        scalar %= p
        if scalar == 0:
            return Polynomial.zero(self.field)
        return Polynomial._from_raw(
            {(m[0] + a, m[1] + b, m[2] + c): (v * scalar) % p for m, v in self._terms.items()},
            self.field,
        )

    def monic(self, order: MonomialOrder | None = None) -> "Polynomial":
        """Return the polynomial scaled to leading coefficient 1."""
        if not self._terms:
            return self
        lc, _ = self.leading_term(order)
        return self.scale(lc.inv())

    def derivative(self, var: str) -> "Polynomial":
        """Return the formal partial derivative with respect to a variable.

        Parameters
        ----------
        var : {'x', 'y', 'z'}
            The variable.
        """
        if var not in VARIABLES:
            raise ValueError(f"unknown variable {var!r}")
        i = VARIABLES.index(var)
        p = self.field.p
        terms: dict[tuple[int, int, int], int] = {}
        for m, c in self._terms.items():
            if m[i] == 0:
                continue
            value = (c * m[i]) % p
            if value:
                lowered = list(m)
                lowered[i] -= 1
                terms[tuple(lowered)] = value
        return Polynomial._from_raw(terms, self.field)

    def evaluate(self, point: Iterable) -> FieldElement:
        """Return the value at a point of k^3."""
        values = [int(v) % self.field.p for v in point]
        p = self.field.p
        total = 0
        for (a, b, c), coeff in self._terms.items():
            total += coeff * pow(values[0], a, p) * pow(values[1], b, p) * pow(values[2], c, p)
        return FieldElement(total, self.field)

    def __eq__(self, other) -> bool:
        """Return True if both polynomials have the same terms and field."""
        if isinstance(other, Polynomial):
            return self.field == other.field and self._terms == other._terms
        if isinstance(other, (Integral, FieldElement)):
            return self == Polynomial.constant(other, self.field)
        return NotImplemented

    def __hash__(self) -> int:
        """Return hash of the term set."""
        if self._hash is None:
            self._hash = hash((self.field.p, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        """Return a printable representation of the polynomial."""
        return f"Polynomial({str(self)!r}, p={self.field.p})"

    def __str__(self) -> str:
        """Return the polynomial in the grammar accepted by the parser.

        Terms appear in decreasing grevlex order and ``*`` separates every pair
        of factors, so that printing and parsing are inverse to each other.
        """
        if not self._terms:
            return "0"
        pieces = []
        for coeff, mono in self.terms:
            value = coeff.signed()
            sign = "-" if value < 0 else "+"
            magnitude = abs(value)
            if mono.degree == 0:
                body = str(magnitude)
            elif magnitude == 1:
                body = str(mono)
            else:
                body = f"{magnitude}*{mono}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text


def jacobian(Q: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """Return the three partial derivatives of a homogeneous form.

    Parameters
    ----------
    Q : Polynomial
        Homogeneous of degree d with p not dividing d, so that the Euler
        relation x Q_x + y Q_y + z Q_z = d Q is nondegenerate.

    Returns
    -------
    tuple of Polynomial
        ``(Q_x, Q_y, Q_z)``, each homogeneous of degree d - 1 or zero.

    Raises
    ------
    PreconditionError
        If Q is not a nonzero homogeneous form, or if p divides its degree
        (message "characteristic divides degree").

    Examples
    --------
    >>> from koszulx.read_write import parse_polynomial
    >>> [str(f) for f in jacobian(parse_polynomial("x*y*z"))]
    ['y*z', 'x*z', 'x*y']
    """
    d = Q.homogeneous_degree
    if d is None:
        raise PreconditionError("the Jacobian ideal needs a nonzero homogeneous form")
    if Q.field.divides_characteristic(d):
        raise PreconditionError("characteristic divides degree")
    return tuple(Q.derivative(v) for v in VARIABLES)

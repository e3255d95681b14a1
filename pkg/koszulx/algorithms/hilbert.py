"""Hilbert functions and Hilbert polynomials of graded modules over k[x,y,z].

The Hilbert function of F/M is the number of standard monomials, those not
divisible by a leading term of a Gröbner basis of M. For each position the
leading exponents are turned into a staircase table ``c_min(a, b)``, the
least z-exponent making ``x^a y^b z^c`` divisible by a leading term; counting
in a degree is then one vectorised comparison.

The Hilbert polynomial is certified rather than guessed: values are computed
up to a degree past which the standard-monomial count of a monomial module is
known to be polynomial, the quadratic through the last three values is
checked on the four values before them, and anything else raises
:class:`~koszulx.exception.StabilizationError`.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np
import scipy.sparse
import sympy

from koszulx.algorithms.modules import saturate
from koszulx.classes.module import FreeModule, QuotientModule, Submodule
from koszulx.exception import CodimensionError, PreconditionError, StabilizationError
from koszulx.utils.linalg import module_monomials, monomials_of_degree, rank_mod_p

__all__ = [
    "HilbertData",
    "hilbert_function",
    "hilbert_polynomial",
    "free_hilbert",
    "degree_of_Z",
    "oracle_hilbert",
    "DEFAULT_DEGREE_CAP",
    "ORACLE_MAX_ENTRIES",
]

DEFAULT_DEGREE_CAP = 120
ORACLE_MAX_ENTRIES = 4_000_000
_FIT_POINTS = 3
_CHECK_POINTS = 4
_UNBOUNDED = np.iinfo(np.int64).max


def _format_polynomial(coefficients) -> str:
    pieces = []
    for power in (2, 1, 0):
        c = coefficients[power]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        if power == 0:
            body = str(magnitude)
        else:
            var = "n" if power == 1 else "n^2"
            body = var if magnitude == 1 else f"{magnitude}*{var}"
        pieces.append((sign, body))
    if not pieces:
        return "0"
    text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


@dataclass(frozen=True)
class HilbertData:
    """Values of a Hilbert function together with its Hilbert polynomial.

    Parameters
    ----------
    values : tuple of int
        ``values[n]`` is the dimension in degree n, for n = 0, 1, ...
    stable_from : int
        From this degree on the values agree with the polynomial.
    coefficients : tuple of Fraction
        ``(c0, c1, c2)`` of the polynomial c2 n^2 + c1 n + c0.

    Examples
    --------
    >>> H = free_hilbert((0,), 10)
    >>> H.polynomial
    ((1, 1), (3, 2), (1, 2))
    >>> str(H)
    '1/2*n^2 + 3/2*n + 1'
    """

    values: tuple[int, ...]
    stable_from: int
    coefficients: tuple[Fraction, Fraction, Fraction]

    @property
    def polynomial(self) -> tuple[tuple[int, int], ...]:
        """Return the coefficients as (numerator, denominator) pairs."""
        return tuple((c.numerator, c.denominator) for c in self.coefficients)

    @property
    def degree(self) -> int:
        """Return the degree of the polynomial, -1 for the zero polynomial."""
        for power in (2, 1, 0):
            if self.coefficients[power] != 0:
                return power
        return -1

    def __call__(self, n: int) -> Fraction:
        """Return the value of the Hilbert polynomial at n."""
        c0, c1, c2 = self.coefficients
        return c0 + c1 * n + c2 * n * n

    def value(self, n: int) -> int:
        """Return the Hilbert function at n, from the table or the polynomial."""
        if n < 0:
            return 0
        if n < len(self.values):
            return self.values[n]
        if n >= self.stable_from:
            return int(self(n))
        raise ValueError(f"degree {n} is outside the computed range")

    def is_constant(self) -> bool:
        """Return True if the polynomial has degree at most zero."""
        return self.degree <= 0

    @property
    def constant(self) -> int:
        """Return the value of a constant polynomial.

        Raises
        ------
        ValueError
            If the polynomial is not an integer constant.
        """
        c0 = self.coefficients[0]
        if not self.is_constant() or c0.denominator != 1:
            raise ValueError(f"Hilbert polynomial {self} is not constant")
        return int(c0)

    def same_polynomial(self, other: "HilbertData") -> bool:
        """Return True if both Hilbert polynomials are equal."""
        return self.coefficients == other.coefficients

    def _combine(self, other: "HilbertData", sign: int) -> "HilbertData":
        if not isinstance(other, HilbertData):
            return NotImplemented
        length = min(len(self.values), len(other.values))
        values = tuple(self.values[n] + sign * other.values[n] for n in range(length))
        coefficients = tuple(a + sign * b for a, b in zip(self.coefficients, other.coefficients))
        return HilbertData(values, max(self.stable_from, other.stable_from), coefficients)

    def __add__(self, other: "HilbertData") -> "HilbertData":
        """Return the Hilbert data of a direct sum."""
        return self._combine(other, 1)

    def __sub__(self, other: "HilbertData") -> "HilbertData":
        """Return the difference of Hilbert functions and polynomials."""
        return self._combine(other, -1)

    def __mul__(self, k: int) -> "HilbertData":
        """Return the data scaled by an integer."""
        return HilbertData(
            tuple(k * v for v in self.values),
            self.stable_from,
            tuple(k * c for c in self.coefficients),
        )

    __rmul__ = __mul__

    @classmethod
    def constant_polynomial(cls, c: int, length: int = 1) -> "HilbertData":
        """Return the data of a function that is constant equal to c."""
        return cls((c,) * length, 0, (Fraction(c), Fraction(0), Fraction(0)))

    def to_dict(self) -> dict:
        """Return a JSON-compatible description."""
        return {
            "polynomial": [list(pair) for pair in self.polynomial],
            "stable_from": self.stable_from,
            "values": list(self.values),
        }

    def __str__(self) -> str:
        """Return the polynomial in the variable n."""
        return _format_polynomial(self.coefficients)


class _Staircase:
    """Counts monomials of each degree outside a monomial ideal of k[x,y,z]."""

    def __init__(self, leads) -> None:
        leads = list(leads)
        if not leads:
            self.table = None
            return
        self.A = max(lead[0] for lead in leads)
        self.B = max(lead[1] for lead in leads)
        table = np.full((self.A + 1, self.B + 1), _UNBOUNDED, dtype=np.int64)
        for a, b, c in leads:
            np.minimum(table[a:, b:], c, out=table[a:, b:])
        self.table = table
        self.lcm_degree = self.A + self.B + max(lead[2] for lead in leads)

    def count(self, e: int) -> int:
        """Return the number of standard monomials of degree e."""
        if e < 0:
            return 0
        if self.table is None:
            return comb(e + 2, 2)
        a = np.arange(e + 1)[:, None]
        b = np.arange(e + 1)[None, :]
        c_min = self.table[np.minimum(a, self.A), np.minimum(b, self.B)]
        standard = (a + b <= e) & (e - a - b < c_min)
        return int(np.count_nonzero(standard))

    def stable_from(self, twist: int) -> int:
        """Return a degree from which the count is polynomial."""
        if self.table is None:
            return twist - 2
        return twist + self.lcm_degree - 2


def _unwrap(M) -> tuple[Submodule, bool]:
    if isinstance(M, QuotientModule):
        return M.submodule, True
    if isinstance(M, Submodule):
        return M, False
    raise TypeError(f"expected a Submodule or a QuotientModule, got {type(M).__name__}")


def _staircases(sub: Submodule) -> list[_Staircase]:
    if sub.is_zero():
        return [_Staircase([]) for _ in sub.ambient.twists]
    grouped = sub.groebner_basis().leading_monomials_by_position()
    return [_Staircase(grouped[j]) for j in range(sub.ambient.rank)]


def _count(stairs: list[_Staircase], twists, n: int) -> int:
    return sum(s.count(n - d) for s, d in zip(stairs, twists))


def hilbert_function(M, n: int) -> int:
    """Return the dimension of the degree-n piece of a graded module.

    Parameters
    ----------
    M : FreeModule, Submodule or QuotientModule
        The module.
    n : int
        A non-negative degree.

    Returns
    -------
    int
        ``dim_k M_n``, counted from the leading terms of a Gröbner basis.

    Examples
    --------
    >>> from koszulx.read_write import parse_polynomials
    >>> I = Submodule.ideal(parse_polynomials("xy, xz, yz"))
    >>> hilbert_function(I.quotient_module(), 3)
    3
    """
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")
    if isinstance(M, FreeModule):
        return M.dimension(n)
    sub, is_quotient = _unwrap(M)
    standard = _count(_staircases(sub), sub.ambient.twists, n)
    return standard if is_quotient else sub.ambient.dimension(n) - standard


def _fit(values: list[int], n0: int) -> tuple[Fraction, Fraction, Fraction]:
    n = sympy.Symbol("n")
    points = [(k, values[k]) for k in range(n0 - _FIT_POINTS + 1, n0 + 1)]
    poly = sympy.Poly(sympy.interpolate(points, n), n)
    coefficients = [Fraction(0)] * 3
    for (power,), c in poly.terms():
        coefficients[power] = Fraction(int(c.p), int(c.q))
    return tuple(coefficients)


def _free_coefficients(twists) -> tuple[Fraction, Fraction, Fraction]:
    # C(n - d + 2, 2) = (n^2 + (3 - 2d) n + (d - 1)(d - 2)) / 2
    c0 = sum(Fraction((d - 1) * (d - 2), 2) for d in twists)
    c1 = sum(Fraction(3 - 2 * d, 2) for d in twists)
    c2 = Fraction(len(twists), 2)
    return (c0, c1, c2)


def free_hilbert(twists, upto: int) -> HilbertData:
    """Return the Hilbert data of the free module ⊕ R(-d_j).

    Parameters
    ----------
    twists : sequence of int
        The twists d_j.
    upto : int
        Last degree of the value table.
    """
    F = FreeModule(twists) if len(twists) else None
    values = tuple(F.dimension(n) if F else 0 for n in range(upto + 1))
    stable = max([d - 2 for d in twists] + [0])
    return HilbertData(values, stable, _free_coefficients(twists))


def hilbert_polynomial(M, degree_cap: int | None = None) -> HilbertData:
    """Return the Hilbert function and certified Hilbert polynomial of a module.

    Parameters
    ----------
    M : FreeModule, Submodule or QuotientModule
        The module.
    degree_cap : int, optional
        Largest degree that may be evaluated, 120 by default.

    Returns
    -------
    HilbertData
        Values up to the certification degree, the degree from which they
        follow the polynomial, and the polynomial itself.

    Raises
    ------
    StabilizationError
        If certification needs degrees beyond `degree_cap`, or the fitted
        polynomial disagrees with the values before the fitting window.

    Examples
    --------
    >>> from koszulx.read_write import parse_polynomials
    >>> I = Submodule.ideal(parse_polynomials("x^2, x*y, y^2"))
    >>> hilbert_polynomial(I.quotient_module()).constant
    3
    """
    cap = DEFAULT_DEGREE_CAP if degree_cap is None else degree_cap
    if isinstance(M, FreeModule):
        return free_hilbert(M.twists, max(M.twists) + 2)
    sub, is_quotient = _unwrap(M)
    stairs = _staircases(sub)
    twists = sub.ambient.twists
    rigorous = max(s.stable_from(d) for s, d in zip(stairs, twists))
    top_degree = 0 if sub.is_zero() else sub.groebner_basis().max_degree()
    input_degrees = sum(sorted(sub.degrees, reverse=True)[:3])
    n0 = max(top_degree + input_degrees + 3, rigorous + _FIT_POINTS + _CHECK_POINTS, 6)
    if n0 > cap:
        raise StabilizationError(
            f"certifying the Hilbert polynomial needs degree {n0}, beyond the cap {cap}"
        )
    values = []
    for n in range(n0 + 1):
        standard = _count(stairs, twists, n)
        values.append(standard if is_quotient else sub.ambient.dimension(n) - standard)
    coefficients = _fit(values, n0)
    c0, c1, c2 = coefficients
    agrees = [values[n] == c0 + c1 * n + c2 * n * n for n in range(n0 + 1)]
    first_check = n0 - _FIT_POINTS - _CHECK_POINTS + 1
    if not all(agrees[first_check:]):
        raise StabilizationError(
            f"Hilbert function not polynomial on degrees {first_check}..{n0}"
        )
    stable_from = n0
    while stable_from > 0 and agrees[stable_from - 1]:
        stable_from -= 1
    return HilbertData(tuple(values), stable_from, coefficients)


def degree_of_Z(I: Submodule, degree_cap: int | None = None) -> int:
    """Return the degree of the zero-dimensional scheme cut out by an ideal.

    Parameters
    ----------
    I : Submodule
        An ideal of R.
    degree_cap : int, optional
        Passed to :func:`hilbert_polynomial`.

    Returns
    -------
    int
        The constant value of the Hilbert polynomial of R / I^sat.

    Raises
    ------
    CodimensionError
        If that polynomial is not constant ("not zero-dimensional").
    """
    if not I.is_ideal():
        raise ValueError("degree_of_Z expects an ideal of R")
    H = hilbert_polynomial(QuotientModule(saturate(I)), degree_cap)
    if not H.is_constant():
        raise CodimensionError("not zero-dimensional")
    return H.constant


def oracle_hilbert(M, n: int, max_entries: int = ORACLE_MAX_ENTRIES) -> int:
    """Return ``dim_k M_n`` by linear algebra, without Gröbner bases.

    All products of generators with monomials landing in degree n are
    written as rows of a sparse coefficient matrix over GF(p), whose rank is
    the dimension of the submodule in degree n.

    Parameters
    ----------
    M : Submodule or QuotientModule
        The module.
    n : int
        A non-negative degree.
    max_entries : int, optional
        Bound on rows × columns of the coefficient matrix.

    Raises
    ------
    PreconditionError
        If the coefficient matrix exceeds `max_entries`.
    """
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")
    sub, is_quotient = _unwrap(M)
    F = sub.ambient
    columns = module_monomials(F.twists, n)
    index = {t: i for i, t in enumerate(columns)}
    row_count = sum(len(monomials_of_degree(n - g.module_degree)) for g in sub.generators)
    if row_count * len(columns) > max_entries:
        raise PreconditionError(
            f"oracle size cap exceeded: {row_count} x {len(columns)} matrix in degree {n}"
        )
    rows, cols, data = [], [], []
    row = 0
    for g in sub.generators:
        vector = g.vector()
        for a, b, c in monomials_of_degree(n - g.module_degree):
            for (pos, (e0, e1, e2)), value in vector.items():
                rows.append(row)
                cols.append(index[(pos, (e0 + a, e1 + b, e2 + c))])
                data.append(value)
            row += 1
    matrix = scipy.sparse.coo_matrix(
        (np.array(data, dtype=np.int64), (rows, cols)), shape=(row, len(columns))
    )
    rank = rank_mod_p(matrix.tocsr(), F.field.p)
    return len(columns) - rank if is_quotient else rank

"""Euler characteristic test for the natural map Sym_2 I → I^2.

A saturated codimension-two ideal has a Hilbert–Burch resolution
0 → F → G → I → 0 with G = ⊕ R(-a_j) and F = ⊕ R(-b_i). The complex

    0 → ∧^2 F → F ⊗ G → Sym_2 G → Sym_2 I → 0

is exact, so its Euler characteristic χ(n) is the Hilbert function of
Sym_2 I. Comparing χ with the Hilbert function of I^2 measures the kernel of
Sym_2 I → I^2 degree by degree; it vanishes exactly for local complete
intersections.
"""

from dataclasses import dataclass, field
from math import comb

from koszulx.algorithms.hilbert import degree_of_Z, hilbert_function
from koszulx.algorithms.modules import ideal_product, is_saturated
from koszulx.algorithms.resolution import minimal_resolution
from koszulx.classes.module import Submodule
from koszulx.exception import InconsistencyError, PreconditionError

__all__ = ["Sym2Report", "sym2_euler_check", "euler_characteristic"]


@dataclass
class Sym2Report:
    """Degree-wise comparison of Sym_2 I with I^2.

    Attributes
    ----------
    generator_shifts : tuple of int
        The degrees a_j of the minimal generators of I.
    relation_shifts : tuple of int
        The degrees b_i of the minimal relations.
    discrepancy : dict
        Maps each degree n checked to χ(n) - H(I^2)(n).
    """

    generator_shifts: tuple[int, ...]
    relation_shifts: tuple[int, ...]
    discrepancy: dict[int, int] = field(default_factory=dict)

    @property
    def total_discrepancy(self) -> int:
        """Return the sum of the discrepancies over the degrees checked."""
        return sum(self.discrepancy.values())

    @property
    def verdict_iso(self) -> bool:
        """Return True if Sym_2 I → I^2 is an isomorphism in every degree checked."""
        return self.total_discrepancy == 0

    def to_dict(self) -> dict:
        """Return a JSON-compatible description."""
        return {
            "generator_shifts": list(self.generator_shifts),
            "relation_shifts": list(self.relation_shifts),
            "discrepancy": {str(n): d for n, d in sorted(self.discrepancy.items())},
            "total_discrepancy": self.total_discrepancy,
            "verdict_iso": self.verdict_iso,
        }


def _free_dimension(d: int, n: int) -> int:
    """Return dim R(-d)_n."""
    if n < d:
        return 0
    return comb(n - d + 2, 2)


def euler_characteristic(a, b, n: int) -> int:
    """Return χ(n) for the complex ∧^2 F → F ⊗ G → Sym_2 G.

    Parameters
    ----------
    a : sequence of int
        Twists of G.
    b : sequence of int
        Twists of F.
    n : int
        Degree.

    Examples
    --------
    >>> euler_characteristic((2, 2, 2), (3, 3), 4)
    6
    """
    sym = sum(
        _free_dimension(a[j] + a[k], n) for j in range(len(a)) for k in range(j, len(a))
    )
    tensor = sum(_free_dimension(bi + aj, n) for bi in b for aj in a)
    wedge = sum(
        _free_dimension(b[i] + b[k], n) for i in range(len(b)) for k in range(i + 1, len(b))
    )
    return sym - tensor + wedge


def sym2_euler_check(I: Submodule, upto: int | None = None) -> Sym2Report:
    """Compare the Hilbert functions of Sym_2 I and I^2 degree by degree.

    Parameters
    ----------
    I : Submodule
        A saturated ideal of codimension two.
    upto : int, optional
        Last degree compared, 2 max(a_j) + 3 by default.

    Returns
    -------
    Sym2Report
        ``verdict_iso`` is True exactly when I is a local complete
        intersection.

    Raises
    ------
    PreconditionError
        If `I` is not a saturated ideal or its resolution is not of
        Hilbert–Burch shape.
    CodimensionError
        If `I` does not have codimension two.
    InconsistencyError
        If some discrepancy is negative.

    Examples
    --------
    >>> from koszulx.read_write import parse_polynomials
    >>> sym2_euler_check(Submodule.ideal(parse_polynomials("xy, xz, yz"))).verdict_iso
    True
    """
    if not I.is_ideal():
        raise PreconditionError("the Sym_2 check applies to ideals of R")
    if not is_saturated(I):
        raise PreconditionError("the ideal is not saturated")
    degree_of_Z(I)
    resolution = minimal_resolution(I)
    if not resolution.is_hilbert_burch():
        raise PreconditionError(
            f"expected a Hilbert-Burch resolution, got shifts {resolution.shifts()}"
        )
    a = resolution.free_modules[0].twists
    b = resolution.free_modules[1].twists
    upto = 2 * max(a) + 3 if upto is None else upto
    square = ideal_product(I, I)
    discrepancy = {}
    for n in range(upto + 1):
        d = euler_characteristic(a, b, n) - hilbert_function(square, n)
        if d < 0:
            raise InconsistencyError(f"negative Sym_2 discrepancy {d} in degree {n}")
        discrepancy[n] = d
    return Sym2Report(tuple(a), tuple(b), discrepancy)

"""Line arrangements and their Jacobian ideals.

The free family studied here is Q = x L_1 L_2 with
L_1 = ∏_{i=1}^m (y - a_i x) and L_2 = ∏_{j=1}^n (z - b_j x), the a_i and b_j
nonzero and distinct. Its Jacobian ideal J_Q is a local complete
intersection with

    0 → R(-m-2n) ⊕ R(-2m-n) → R(-m-n)^3 → J_Q → 0

and H(R/J_Q) = m^2 + n^2 + mn, H(J_Q/J_Q^2) = 2(m^2 + n^2 + mn).
"""

from dataclasses import dataclass
from dataclasses import field as dataclass_field
from functools import reduce

import numpy as np

from koszulx.algorithms.kv import KVReport, kv_verdict
from koszulx.algorithms.resolution import minimal_resolution
from koszulx.classes.field import GF, PrimeField
from koszulx.classes.module import Submodule
from koszulx.classes.polynomial import Polynomial, jacobian
from koszulx.exception import PreconditionError

__all__ = [
    "ArrangementSpec",
    "ArrangementReport",
    "build_arrangement",
    "line_arrangement",
    "jacobian_ideal",
    "arrangement_report",
]


@dataclass(frozen=True)
class ArrangementSpec:
    """Parameters of the arrangement x ∏(y - a_i x) ∏(z - b_j x).

    Parameters
    ----------
    m, n : int
        Number of lines through (0:0:1) and through (0:1:0), besides x = 0.
    a : tuple of int
        The m slopes a_i, nonzero and pairwise distinct mod p.
    b : tuple of int
        The n slopes b_j, nonzero and pairwise distinct mod p.
    field : PrimeField, optional
        The coefficient field.

    Raises
    ------
    ValueError
        If a count is not positive, does not match its list, or a scalar is
        zero or repeated modulo p.
    """

    m: int
    n: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    field: PrimeField = dataclass_field(default_factory=GF)

    def __post_init__(self) -> None:
        for name, count, scalars in (("a", self.m, self.a), ("b", self.n, self.b)):
            if count < 1:
                raise ValueError(f"the number of {name}-lines must be positive, got {count}")
            if len(scalars) != count:
                raise ValueError(f"expected {count} scalars {name}, got {len(scalars)}")
            residues = [self.field.reduce(int(s)) for s in scalars]
            if 0 in residues:
                raise ValueError(f"the scalars {name} must be nonzero mod {self.field.p}")
            if len(set(residues)) != count:
                raise ValueError(f"the scalars {name} must be distinct mod {self.field.p}")
            object.__setattr__(self, name, tuple(residues))

    @classmethod
    def random(
        cls, m: int, n: int, rng: np.random.Generator, field: PrimeField | None = None
    ) -> "ArrangementSpec":
        """Return arrangement parameters with scalars drawn uniformly without repetition."""
        field = field if field is not None else GF()
        a = rng.choice(field.p - 1, size=m, replace=False) + 1
        b = rng.choice(field.p - 1, size=n, replace=False) + 1
        return cls(m, n, tuple(int(v) for v in a), tuple(int(v) for v in b), field)

    @property
    def degree(self) -> int:
        """Return the number of lines m + n + 1."""
        return self.m + self.n + 1

    def expected_deg_Z(self) -> int:
        """Return m^2 + n^2 + mn."""
        return self.m**2 + self.n**2 + self.m * self.n

    def expected_shifts(self) -> list[tuple[int, ...]]:
        """Return the shifts of the minimal resolution of J_Q."""
        m, n = self.m, self.n
        return [(-(m + n),) * 3, tuple(sorted((-m - 2 * n, -2 * m - n), reverse=True))]


def line_arrangement(forms) -> Polynomial:
    """Return the product of pairwise non-proportional linear forms.

    Raises
    ------
    ValueError
        If no form is given, a form is not linear, or two forms define the
        same line.

    Examples
    --------
    >>> from koszulx.read_write import parse_polynomials
    >>> str(line_arrangement(parse_polynomials("x, y, z")))
    'x*y*z'
    """
    forms = list(forms)
    if not forms:
        raise ValueError("an arrangement needs at least one line")
    lines = set()
    for ell in forms:
        if ell.homogeneous_degree != 1:
            raise ValueError(f"{ell} is not a linear form")
        line = ell.monic()
        if line in lines:
            raise ValueError(f"the line {ell} = 0 appears twice")
        lines.add(line)
    return reduce(lambda f, g: f * g, forms)


def build_arrangement(spec: ArrangementSpec) -> Polynomial:
    """Return Q = x ∏(y - a_i x) ∏(z - b_j x), of degree m + n + 1.

    Raises
    ------
    PreconditionError
        If the characteristic divides m + n + 1.
    """
    F = spec.field
    if F.divides_characteristic(spec.degree):
        raise PreconditionError("characteristic divides degree")
    x, y, z = (Polynomial.variable(v, F) for v in ("x", "y", "z"))
    forms = [x] + [y - x * a for a in spec.a] + [z - x * b for b in spec.b]
    return line_arrangement(forms)


def jacobian_ideal(Q: Polynomial) -> Submodule:
    """Return J_Q = <Q_x, Q_y, Q_z>."""
    partials = [f for f in jacobian(Q) if not f.is_zero()]
    return Submodule.ideal(partials, Q.field, name="J_Q")


@dataclass
class ArrangementReport:
    """The comparison of an arrangement Jacobian with its closed formulas.

    Attributes
    ----------
    spec : ArrangementSpec
    Q : Polynomial
    kv : KVReport
        The report of :func:`koszulx.algorithms.kv.kv_verdict` on J_Q.
    shifts : list of tuple
        Shifts of the minimal resolution of J_Q.
    checks : dict
        Each expected property mapped to whether it held.
    """

    spec: ArrangementSpec
    Q: Polynomial
    kv: KVReport
    shifts: list
    checks: dict = dataclass_field(default_factory=dict)

    @property
    def passed(self) -> bool:
        """Return True if every check held."""
        return all(self.checks.values())


def arrangement_report(spec: ArrangementSpec, degree_cap: int | None = None) -> ArrangementReport:
    """Compute the Jacobian ideal of the arrangement and check its formulas.

    Examples
    --------
    >>> report = arrangement_report(ArrangementSpec(1, 1, (1,), (1,)))
    >>> report.kv.deg_Z, report.shifts
    (3, [(-2, -2, -2), (-3, -3)])
    """
    Q = build_arrangement(spec)
    J = jacobian_ideal(Q)
    kv = kv_verdict(J.polynomials(), degree_cap)
    shifts = [tuple(sorted(s, reverse=True)) for s in minimal_resolution(J).shifts()]
    expected = spec.expected_deg_Z()
    checks = {
        "deg_Z": kv.deg_Z == expected,
        "I_mod_I2": kv.H_I_mod_I2.is_constant() and kv.H_I_mod_I2.constant == 2 * expected,
        "shifts": shifts == spec.expected_shifts(),
        "lci": kv.verdict_lci,
        "k_eq_v": kv.verdict_KeqV,
    }
    return ArrangementReport(spec, Q, kv, shifts, checks)

"""Koszul and vanishing syzygies of a codimension-two ideal.

For forms f = (f_1, ..., f_r) of degrees d_j generating an ideal I whose
basepoint locus Z is zero-dimensional, three submodules of ⊕ R(-d_j) are
compared:

``S``
    all syzygies, the kernel of e_j ↦ f_j;
``K``
    the Koszul syzygies f_k e_j - f_j e_k;
``V``
    the vanishing syzygies, those with every component in I^sat, so that
    V = S ∩ ⊕ I^sat(-d_j).

Always K ⊆ V ⊆ S. For r = 3 the modules K and V agree exactly when I is a
local complete intersection, which is decided independently through the
Herzog slack H(I/I^2) - 2 deg Z, zero exactly in the lci case.
"""

import operator
from dataclasses import dataclass, field
from functools import cached_property, reduce

import numpy as np

from koszulx.algorithms.groebner import contains, submodule_equal
from koszulx.algorithms.hilbert import (
    HilbertData,
    free_hilbert,
    hilbert_function,
    hilbert_polynomial,
)
from koszulx.algorithms.modules import (
    ideal_product,
    intersect,
    is_saturated,
    koszul_submodule,
    saturate,
    syzygies,
)
from koszulx.classes.module import FreeModule, ModuleElement, QuotientModule, Submodule
from koszulx.classes.polynomial import Polynomial
from koszulx.exception import (
    AmbientMismatchError,
    CodimensionError,
    HomogeneityError,
    InconsistencyError,
    PreconditionError,
)
from koszulx.utils.linalg import add_scaled, kernel_mod_p, monomials_of_degree

__all__ = [
    "KVComputation",
    "KVReport",
    "SaturationCheck",
    "KoszulChainChecks",
    "build_S",
    "build_K",
    "build_V",
    "kv_verdict",
    "check_saturated_KV",
    "check_I2_IIsat",
    "koszul_chain_checks",
    "is_regular_sequence",
    "koszul_exactness_check",
    "vanishing_sequence_check",
    "find_vanishing_witness",
]


@dataclass
class KVReport:
    """Everything computed about S, K and V for one list of forms.

    Attributes
    ----------
    forms : tuple of Polynomial
        The forms f_1, ..., f_r.
    degrees : tuple of int
        Their degrees.
    deg_Z : int
        Degree of the basepoint scheme.
    S, K, V : Submodule
        Syzygies, Koszul syzygies and vanishing syzygies.
    H_K, H_V, H_S, H_Isat, H_I_mod_I2 : HilbertData
        Hilbert data of K, V, S, I^sat and I/I^2.
    herzog_slack : int
        H(I/I^2) - 2 deg Z, never negative.
    verdict_KeqV : bool
        Whether K = V.
    verdict_lci : bool
        Whether the slack is zero, that is I is a local complete intersection.
    verdict_theorem_consistent : bool or None
        Whether both verdicts agree, for three forms; None otherwise.
    witnesses : list of ModuleElement
        Vanishing syzygies that are not Koszul, when K ≠ V.
    hilbert_identities : dict
        Name of each bookkeeping identity between Hilbert polynomials mapped
        to whether it held.
    field_char : int
        Characteristic of the coefficient field.
    """

    forms: tuple
    degrees: tuple
    deg_Z: int
    S: Submodule
    K: Submodule
    V: Submodule
    H_K: HilbertData
    H_V: HilbertData
    H_S: HilbertData
    H_Isat: HilbertData
    H_I_mod_I2: HilbertData
    herzog_slack: int
    verdict_KeqV: bool
    verdict_lci: bool
    verdict_theorem_consistent: bool | None
    witnesses: list = field(default_factory=list)
    hilbert_identities: dict = field(default_factory=dict)
    field_char: int = 0

    @property
    def r(self) -> int:
        """Return the number of forms."""
        return len(self.forms)

    def to_dict(self) -> dict:
        """Return the JSON document of the report (schema ``kv-report/1``)."""
        from koszulx.read_write import REPORT_SCHEMA

        return {
            "schema": REPORT_SCHEMA,
            "field_char": self.field_char,
            "input": [str(f) for f in self.forms],
            "degrees": list(self.degrees),
            "deg_Z": self.deg_Z,
            "herzog_slack": self.herzog_slack,
            "hilbert": {
                "K": self.H_K.to_dict(),
                "V": self.H_V.to_dict(),
                "I_mod_I2": self.H_I_mod_I2.to_dict(),
            },
            "verdicts": {
                "k_eq_v": self.verdict_KeqV,
                "lci": self.verdict_lci,
                "consistent": self.verdict_theorem_consistent,
            },
            "identities": dict(sorted(self.hilbert_identities.items())),
            "witnesses": [[str(c) for c in w] for w in self.witnesses],
        }


@dataclass(frozen=True)
class SaturationCheck:
    """Saturatedness of K, V and S; true as a boolean when K and V are saturated."""

    K: bool
    V: bool
    S: bool

    def __bool__(self) -> bool:
        return self.K and self.V


@dataclass(frozen=True)
class KoszulChainChecks:
    """Outcome of the three Koszul complex checks; true when all hold.

    Attributes
    ----------
    injective : bool
        The relations among the Koszul generators are generated by the single
        vector (f_3, -f_2, f_1).
    hilbert : bool
        H(K) = Σ_{j<k} H(R(-d_j-d_k)) - H(R(-d_1-d_2-d_3)).
    proper : bool
        K is strictly smaller than S.
    """

    injective: bool
    hilbert: bool
    proper: bool

    def __bool__(self) -> bool:
        return self.injective and self.hilbert and self.proper


class KVComputation:
    """Lazily computed modules and Hilbert data attached to a list of forms.

    Every attribute is computed on first access and then kept.

    Parameters
    ----------
    f : sequence of Polynomial
        At least two nonzero homogeneous forms over one field.
    degree_cap : int, optional
        Largest degree used when certifying Hilbert polynomials.

    Raises
    ------
    HomogeneityError
        If a form is zero or not homogeneous.
    ValueError
        If fewer than two forms are given.
    """

    def __init__(self, f, degree_cap: int | None = None) -> None:
        forms = tuple(f)
        if len(forms) < 2:
            raise ValueError("at least two forms are needed")
        for g in forms:
            if not isinstance(g, Polynomial):
                raise TypeError(f"expected polynomials, got {type(g).__name__}")
            if g.homogeneous_degree is None:
                raise HomogeneityError(f"{g} is not a nonzero homogeneous form")
            if g.field != forms[0].field:
                raise AmbientMismatchError("forms over different fields")
        self.forms = forms
        self.degrees = tuple(g.homogeneous_degree for g in forms)
        self.field = forms[0].field
        self.degree_cap = degree_cap
        self.ideal = Submodule.ideal(forms, self.field, name="I")
        self.ambient = FreeModule(self.degrees, self.field)

    @property
    def r(self) -> int:
        """Return the number of forms."""
        return len(self.forms)

    def _hilbert(self, M) -> HilbertData:
        return hilbert_polynomial(M, self.degree_cap)

    @cached_property
    def saturation(self) -> Submodule:
        """Return I^sat."""
        return saturate(self.ideal)

    @cached_property
    def deg_Z(self) -> int:
        """Return deg Z after checking that I has codimension two.

        Raises
        ------
        CodimensionError
            If R/I^sat has a non-constant Hilbert polynomial (a curve in the
            basepoint locus) or the zero polynomial (empty basepoint locus).
        """
        H = self._hilbert(QuotientModule(self.saturation))
        if not H.is_constant():
            raise CodimensionError(
                "not zero-dimensional: the basepoint locus contains a curve"
            )
        if H.constant == 0:
            raise CodimensionError(
                "empty basepoint locus: the ideal has codimension 3 (regular sequence case)"
            )
        return H.constant

    def check_codimension(self) -> None:
        """Raise :class:`CodimensionError` unless I has codimension two."""
        self.deg_Z

    @cached_property
    def S(self) -> Submodule:
        """Return the syzygy module S ⊆ ⊕ R(-d_j)."""
        self.check_codimension()
        return syzygies(self.ideal)

    @cached_property
    def K(self) -> Submodule:
        """Return the Koszul submodule K."""
        return koszul_submodule(self.forms)

    @cached_property
    def vanishing_ambient(self) -> Submodule:
        """Return ⊕ I^sat(-d_j) inside ⊕ R(-d_j)."""
        return Submodule.direct_sum_of_ideal(self.saturation.polynomials(), self.ambient)

    @cached_property
    def V(self) -> Submodule:
        """Return V = S ∩ ⊕ I^sat(-d_j)."""
        V = intersect(self.S, self.vanishing_ambient)
        V.name = "V"
        return V

    @cached_property
    def square(self) -> Submodule:
        """Return I^2."""
        return ideal_product(self.ideal, self.ideal)

    @cached_property
    def product_with_saturation(self) -> Submodule:
        """Return I · I^sat."""
        return ideal_product(self.ideal, self.saturation)

    @cached_property
    def H_I_mod_I2(self) -> HilbertData:
        """Return H(I/I^2) = H(R/I^2) - H(R/I)."""
        return self._hilbert(QuotientModule(self.square)) - self._hilbert(
            QuotientModule(self.ideal)
        )

    @cached_property
    def herzog_slack(self) -> int:
        """Return H(I/I^2) - 2 deg Z.

        Raises
        ------
        InconsistencyError
            If H(I/I^2) is not constant or the slack is negative.
        """
        H = self.H_I_mod_I2
        if not H.is_constant():
            raise InconsistencyError(f"H(I/I^2) = {H} is not constant for a codimension-two ideal")
        slack = H.constant - 2 * self.deg_Z
        if slack < 0:
            raise InconsistencyError(f"negative Herzog slack {slack}")
        return slack

    def witnesses(self) -> list[ModuleElement]:
        """Return the generators of V that are not in K."""
        return [v for v in self.V if not contains(self.K, v)]

    def hilbert_identities(self, H_K, H_V, H_Isat, verdict_KeqV) -> dict[str, bool]:
        """Check the bookkeeping identities between Hilbert polynomials."""
        upto = 1
        R = free_hilbert((0,), upto)
        twisted = reduce(operator.add, (free_hilbert((d,), upto) for d in self.degrees))
        deg_Z = HilbertData.constant_polynomial(self.deg_Z)
        H_I2 = self._hilbert(self.square)
        H_IIsat = self._hilbert(self.product_with_saturation)
        identities = {
            "I_sat": H_Isat.same_polynomial(R - deg_Z),
            "I_squared": H_I2.same_polynomial(R - self.H_I_mod_I2 - deg_Z),
            "I_squared_vs_I_Isat": H_I2.same_polynomial(H_IIsat),
            "V": H_V.same_polynomial(twisted - R + self.H_I_mod_I2 - (self.r - 1) * deg_Z),
            "K_eq_V_iff_equal_hilbert": H_K.same_polynomial(H_V) == verdict_KeqV,
        }
        if self.r == 3:
            identities["K"] = H_K.same_polynomial(twisted - R)
        return identities

    def report(self) -> KVReport:
        """Return the full report, see :func:`kv_verdict`."""
        deg_Z = self.deg_Z
        slack = self.herzog_slack
        H_K = self._hilbert(self.K)
        H_V = self._hilbert(self.V)
        H_S = self._hilbert(self.S)
        H_Isat = self._hilbert(self.saturation)
        verdict_KeqV = submodule_equal(self.K, self.V)
        verdict_lci = slack == 0
        consistent = (verdict_KeqV == verdict_lci) if self.r == 3 else None
        witnesses = [] if verdict_KeqV else self.witnesses()
        if not verdict_KeqV and not witnesses:
            raise InconsistencyError("K differs from V but every generator of V lies in K")
        return KVReport(
            forms=self.forms,
            degrees=self.degrees,
            deg_Z=deg_Z,
            S=self.S,
            K=self.K,
            V=self.V,
            H_K=H_K,
            H_V=H_V,
            H_S=H_S,
            H_Isat=H_Isat,
            H_I_mod_I2=self.H_I_mod_I2,
            herzog_slack=slack,
            verdict_KeqV=verdict_KeqV,
            verdict_lci=verdict_lci,
            verdict_theorem_consistent=consistent,
            witnesses=witnesses,
            hilbert_identities=self.hilbert_identities(H_K, H_V, H_Isat, verdict_KeqV),
            field_char=self.field.p,
        )


def build_S(f, degree_cap: int | None = None) -> Submodule:
    """Return the syzygy module of a codimension-two ideal.

    Raises
    ------
    CodimensionError
        If <f> does not have codimension two.
    """
    return KVComputation(f, degree_cap).S


def build_K(f) -> Submodule:
    """Return the Koszul submodule of the forms `f`."""
    return koszul_submodule(f)


def build_V(f, degree_cap: int | None = None) -> Submodule:
    """Return the module of vanishing syzygies S ∩ ⊕ I^sat(-d_j).

    Raises
    ------
    CodimensionError
        If <f> does not have codimension two.
    """
    return KVComputation(f, degree_cap).V


def kv_verdict(f, degree_cap: int | None = None) -> KVReport:
    """Compare Koszul and vanishing syzygies and decide local complete intersection.

    Parameters
    ----------
    f : sequence of Polynomial
        Homogeneous forms generating a codimension-two ideal; the theorem
        verdict is rendered for three forms.
    degree_cap : int, optional
        Largest degree used when certifying Hilbert polynomials.

    Returns
    -------
    KVReport
        All verdicts; for three forms ``verdict_theorem_consistent`` must be
        True, anything else signals an engine bug.

    Raises
    ------
    CodimensionError
        If <f> does not have codimension two.
    StabilizationError
        If a Hilbert polynomial could not be certified below `degree_cap`.
    InconsistencyError
        If the Herzog slack is negative.

    Examples
    --------
    >>> from koszulx.read_write import parse_polynomials
    >>> report = kv_verdict(parse_polynomials("x^2, x*y, y^2"))
    >>> report.deg_Z, report.herzog_slack, report.verdict_KeqV
    (3, 1, False)
    """
    return KVComputation(f, degree_cap).report()


def check_saturated_KV(f, degree_cap: int | None = None) -> SaturationCheck:
    """Check that K and V are saturated submodules, recording S as well.

    The returned object is truthy exactly when K and V are saturated; a falsy
    result signals an engine bug.
    """
    comp = KVComputation(f, degree_cap)
    comp.check_codimension()
    return SaturationCheck(K=is_saturated(comp.K), V=is_saturated(comp.V), S=is_saturated(comp.S))


def check_I2_IIsat(f, degree_cap: int | None = None) -> bool:
    """Return True if I^2 and I · I^sat have the same saturation."""
    comp = KVComputation(f, degree_cap)
    comp.check_codimension()
    return submodule_equal(saturate(comp.square), saturate(comp.product_with_saturation))


def koszul_chain_checks(f, degree_cap: int | None = None) -> KoszulChainChecks:
    """Check the Koszul complex of three forms generating a codimension-two ideal.

    Raises
    ------
    ValueError
        If the number of forms is not three.
    CodimensionError
        If <f> does not have codimension two.
    """
    comp = KVComputation(f, degree_cap)
    if comp.r != 3:
        raise ValueError("the Koszul chain checks need exactly three forms")
    comp.check_codimension()
    f1, f2, f3 = comp.forms
    relations = syzygies(comp.K)
    expected = Submodule(relations.ambient, [ModuleElement(relations.ambient, [f3, -f2, f1])])
    injective = submodule_equal(relations, expected)
    d1, d2, d3 = comp.degrees
    koszul_hilbert = (
        free_hilbert((d1 + d2, d1 + d3, d2 + d3), 1) - free_hilbert((d1 + d2 + d3,), 1)
    )
    hilbert = hilbert_polynomial(comp.K, degree_cap).same_polynomial(koszul_hilbert)
    proper = not submodule_equal(comp.K, comp.S)
    return KoszulChainChecks(injective=injective, hilbert=hilbert, proper=proper)


def is_regular_sequence(f, degree_cap: int | None = None) -> bool:
    """Return True if the forms are a regular sequence in k[x,y,z].

    Homogeneous forms f_1, ..., f_r with r ≤ 3 are a regular sequence exactly
    when R/<f> has dimension 3 - r, read off the degree of its Hilbert
    polynomial (the zero polynomial for r = 3).
    """
    comp = KVComputation(f, degree_cap)
    if comp.r > 3:
        return False
    H = hilbert_polynomial(QuotientModule(comp.ideal), degree_cap)
    return H.degree == 2 - comp.r


def koszul_exactness_check(f, degree_cap: int | None = None) -> bool:
    """Return True if K = S for a regular sequence.

    Raises
    ------
    PreconditionError
        If the forms are not a regular sequence.
    """
    if not is_regular_sequence(f, degree_cap):
        raise PreconditionError("the forms are not a regular sequence")
    return submodule_equal(koszul_submodule(f), syzygies(Submodule.ideal(f)))


def vanishing_sequence_check(f, upto: int | None = None, degree_cap: int | None = None) -> bool:
    """Check the exact sequence 0 → V → ⊕ I^sat(-d_j) → I · I^sat → 0 degree-wise.

    Parameters
    ----------
    f : sequence of Polynomial
        Forms generating a codimension-two ideal.
    upto : int, optional
        Last degree checked, 2 max(d_j) + 4 by default.
    """
    comp = KVComputation(f, degree_cap)
    comp.check_codimension()
    upto = 2 * max(comp.degrees) + 4 if upto is None else upto
    return all(
        hilbert_function(comp.vanishing_ambient, n) - hilbert_function(comp.V, n)
        == hilbert_function(comp.product_with_saturation, n)
        for n in range(upto + 1)
    )


def find_vanishing_witness(
    f, max_degree: int | None = None, degree_cap: int | None = None
) -> ModuleElement | None:
    """Search a vanishing syzygy that is not Koszul, degree by degree.

    In each module degree D the vanishing syzygies are the kernel of the
    linear map ⊕ (I^sat)_{D-d_j} → R_D, (a_j) ↦ Σ a_j f_j, computed on a
    spanning set of monomial multiples of the generators of I^sat. The first
    kernel vector outside K is returned.

    Parameters
    ----------
    f : sequence of Polynomial
        Forms generating a codimension-two ideal.
    max_degree : int, optional
        Last module degree searched, 2 max(d_j) + 2 by default.

    Returns
    -------
    ModuleElement or None
        A homogeneous element of V \\ K, monic, or None if V and K agree in
        every degree searched.
    """
    comp = KVComputation(f, degree_cap)
    comp.check_codimension()
    p = comp.field.p
    F = comp.ambient
    max_degree = 2 * max(comp.degrees) + 2 if max_degree is None else max_degree
    gens = comp.saturation.polynomials()
    K_basis = comp.K.groebner_basis()
    for D in range(min(comp.degrees), max_degree + 1):
        spanning = []
        for j, dj in enumerate(comp.degrees):
            for g in gens:
                for mu in monomials_of_degree(D - dj - g.homogeneous_degree):
                    spanning.append((j, g.shift(mu)))
        if not spanning:
            continue
        rows = {m: i for i, m in enumerate(monomials_of_degree(D))}
        A = np.zeros((len(rows), len(spanning)), dtype=np.int64)
        for col, (j, a) in enumerate(spanning):
            for m, c in (a * comp.forms[j]).raw.items():
                A[rows[m], col] = c
        for kernel_vector in kernel_mod_p(A, p):
            vector: dict = {}
            for col in np.nonzero(kernel_vector)[0]:
                j, a = spanning[col]
                add_scaled(vector, {(j, m): c for m, c in a.raw.items()}, int(kernel_vector[col]), p)
            if not vector:
                continue
            remainder = K_basis.reduce_vector(vector)
            if remainder:
                v = ModuleElement.from_vector(F, vector)
                _, _, lc = v.leading_term()
                return v * pow(lc, -1, p)
    return None

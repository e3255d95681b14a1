"""Seeded random forms, codimension-two ideals and the five points family.

Every generator takes an explicit :class:`numpy.random.Generator` or seed,
so that equal seeds always give equal ideals.
"""

import warnings
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from koszulx.algorithms.groebner import submodule_equal
from koszulx.algorithms.hilbert import hilbert_function, oracle_hilbert
from koszulx.algorithms.kv import KVComputation, KVReport
from koszulx.algorithms.modules import intersect, minimal_generators
from koszulx.classes.field import GF, PrimeField
from koszulx.classes.module import QuotientModule, Submodule
from koszulx.classes.polynomial import Polynomial
from koszulx.datasets.points import collinear, fat_point_ideal, normalize_point, points_ideal
from koszulx.exception import (
    CodimensionError,
    InconsistencyError,
    KoszulXError,
    PreconditionError,
)
from koszulx.utils.linalg import monomials_of_degree

__all__ = [
    "random_form",
    "random_element",
    "random_point",
    "random_codim2_ideal",
    "FivePointsReport",
    "five_points_counterexample",
]

MAX_DRAWS = 50
FIVE_POINTS_ATTEMPTS = 5


def random_form(d: int, rng: np.random.Generator, field: PrimeField | None = None) -> Polynomial:
    """Return a form of degree `d` with uniformly random coefficients."""
    field = field if field is not None else GF()
    monomials = monomials_of_degree(d)
    coefficients = rng.integers(0, field.p, size=len(monomials))
    return Polynomial(
        {m: int(c) for m, c in zip(monomials, coefficients) if c}, field
    )


def random_element(J: Submodule, d: int, rng: np.random.Generator) -> Polynomial:
    """Return a random element of the degree `d` part of an ideal.

    The element is Σ a_g g over the generators g of degree at most d, with
    random forms a_g of degree d - deg g.
    """
    result = Polynomial.zero(J.field)
    for g in J.polynomials():
        e = d - g.homogeneous_degree
        if e >= 0:
            result = result + random_form(e, rng, J.field) * g
    return result


def random_point(rng: np.random.Generator, field: PrimeField | None = None) -> tuple[int, int, int]:
    """Return a uniformly random point of the projective plane over GF(p)."""
    field = field if field is not None else GF()
    while True:
        coords = rng.integers(0, field.p, size=3)
        if coords.any():
            return normalize_point([int(c) for c in coords], field)


def _random_scheme(rng: np.random.Generator, field: PrimeField) -> Submodule:
    # one to four reduced points, sometimes with a fat point of length 3
    count = int(rng.integers(1, 5))
    points = {random_point(rng, field) for _ in range(count)}
    J = points_ideal(sorted(points), field)
    if rng.random() < 0.5:
        fat = random_point(rng, field)
        if fat not in points:
            J = intersect(J, fat_point_ideal(fat, 2, field))
    return J


def random_codim2_ideal(
    rng: np.random.Generator,
    field: PrimeField | None = None,
    r: int = 3,
    degrees=(2, 3, 4),
) -> list[Polynomial]:
    """Return r forms generating a random ideal of codimension two.

    A random zero-dimensional scheme Z is drawn (reduced points, possibly
    with a fat point), and the forms are random elements of its ideal in
    degrees chosen from `degrees`. The draw is repeated until the
    codimension check passes.

    Raises
    ------
    KoszulXError
        If no draw passed within the retry cap.
    """
    field = field if field is not None else GF()
    for _ in range(MAX_DRAWS):
        J = _random_scheme(rng, field)
        usable = [d for d in degrees if hilbert_function(J, d) > 0]
        if not usable:
            continue
        forms = [random_element(J, int(rng.choice(usable)), rng) for _ in range(r)]
        if any(f.is_zero() for f in forms):
            continue
        try:
            KVComputation(forms).check_codimension()
        except CodimensionError:
            continue
        return forms
    raise KoszulXError(f"no codimension-two ideal within {MAX_DRAWS} draws")


@dataclass
class FivePointsReport:
    """The four cubics through five general points and their syzygies.

    Attributes
    ----------
    seed : int
    attempt : int
        Index of the draw that passed the genericity checks.
    points : list of tuple
    J : Submodule
        The ideal of the five points.
    forms : list of Polynomial
        Four random cubics of J.
    kv : KVReport
    checks : dict
        Each expected property mapped to whether it held.
    """

    seed: int
    attempt: int
    points: list
    J: Submodule
    forms: list
    kv: KVReport
    checks: dict

    @property
    def witness(self):
        """Return a vanishing syzygy that is not Koszul, if one was found."""
        return self.kv.witnesses[0] if self.kv.witnesses else None

    @property
    def passed(self) -> bool:
        """Return True if every check held."""
        return all(self.checks.values())


def _general_position(points, field: PrimeField) -> bool:
    if len(set(points)) != len(points):
        return False
    for quad in combinations(points, 4):
        if all(collinear(*triple, field) for triple in combinations(quad, 3)):
            return False
    return True


def five_points_counterexample(
    seed: int,
    field: PrimeField | None = None,
    degree_cap: int | None = None,
    max_attempts: int = FIVE_POINTS_ATTEMPTS,
) -> FivePointsReport:
    """Build four cubics through five general points with a non-Koszul vanishing syzygy.

    The ideal J of five general points is generated by a conic and two
    cubics. Four random elements f_1, ..., f_4 of J_3 generate an ideal with
    saturation J, a local complete intersection, yet some syzygy of the f_i
    vanishing at the points is not Koszul.

    Parameters
    ----------
    seed : int
        Seed; draw number k uses ``numpy.random.default_rng([seed, k])``.
    field : PrimeField, optional
    degree_cap : int, optional
    max_attempts : int, default=5
        Number of draws before giving up.

    Raises
    ------
    PreconditionError
        If no draw passed the genericity checks.
    InconsistencyError
        If the Gröbner and linear algebra dimensions of J_2, J_3 disagree.
    """
    field = field if field is not None else GF()
    for attempt in range(max_attempts):
        rng = np.random.default_rng([seed, attempt])
        points = [random_point(rng, field) for _ in range(5)]
        if not _general_position(points, field):
            warnings.warn(
                f"five points of seed {seed} draw {attempt} are not general, drawing again",
                UserWarning,
                stacklevel=2,
            )
            continue
        J = points_ideal(points, field)
        generator_degrees = sorted(minimal_generators(J).degrees)
        dims = (hilbert_function(J, 2), hilbert_function(J, 3))
        if dims != (oracle_hilbert(J, 2), oracle_hilbert(J, 3)):
            raise InconsistencyError(
                f"Hilbert function of the five points ideal disagrees with linear algebra: {dims}"
            )
        if dims != (1, 5) or generator_degrees != [2, 3, 3]:
            warnings.warn(
                f"ideal of five points of seed {seed} draw {attempt} is not generic, drawing again",
                UserWarning,
                stacklevel=2,
            )
            continue
        forms = [random_element(J, 3, rng) for _ in range(4)]
        comp = KVComputation(forms, degree_cap)
        if not submodule_equal(comp.saturation, J):
            warnings.warn(
                f"cubics of seed {seed} draw {attempt} do not cut out the points, drawing again",
                UserWarning,
                stacklevel=2,
            )
            continue
        kv = comp.report()
        checks = {
            "generators_2_3_3": True,
            "oracle_J2_J3": True,
            "saturation_is_J": True,
            "deg_Z": kv.deg_Z == 5,
            "oracle_deg_Z": oracle_hilbert(QuotientModule(J), 3) == 5,
            "lci": kv.verdict_lci,
            "koszul_generators": len(comp.K) == 6,
            "K_proper_in_V": not kv.verdict_KeqV and bool(kv.witnesses),
        }
        return FivePointsReport(seed, attempt, points, J, forms, kv, checks)
    raise PreconditionError(
        f"five general points could not be verified for seed {seed} in {max_attempts} draws"
    )

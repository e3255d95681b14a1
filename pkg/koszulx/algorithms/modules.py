"""Operations on submodules: Koszul relations, syzygies, intersections, colons.

All operations reduce to one engine call, the syzygy computation of
:func:`koszulx.algorithms.groebner.groebner_with_syzygies`, and return
minimally generated submodules.
"""

import warnings
from collections.abc import Sequence
from itertools import groupby

from koszulx.algorithms.groebner import contains, groebner_with_syzygies
from koszulx.classes.field import PrimeField
from koszulx.classes.module import FreeModule, ModuleElement, Submodule
from koszulx.classes.order import schreyer_order
from koszulx.classes.polynomial import Polynomial
from koszulx.exception import AmbientMismatchError, HomogeneityError, InconsistencyError
from koszulx.utils.linalg import SparseEchelon

__all__ = [
    "koszul_submodule",
    "syzygies",
    "minimal_generators",
    "intersect",
    "quotient",
    "saturation_step",
    "is_saturated",
    "saturate",
    "ideal_product",
    "unit_ideal",
]

SATURATION_WARN_AFTER = 16
SATURATION_MAX_ITERATIONS = 200


def _degrees_of(f: Sequence[Polynomial]) -> list[int]:
    degrees = []
    for g in f:
        d = g.homogeneous_degree
        if d is None:
            raise HomogeneityError(f"{g} is not a nonzero homogeneous form")
        degrees.append(d)
    return degrees


def koszul_submodule(f: Sequence[Polynomial]) -> Submodule:
    """Return the submodule generated by the Koszul relations on `f`.

    Parameters
    ----------
    f : sequence of Polynomial
        Forms f_1, ..., f_r of degrees d_1, ..., d_r, with r at least 2.

    Returns
    -------
    Submodule
        The submodule of ⊕ R(-d_j) generated by ``f_k e_j - f_j e_k`` for
        j < k, listed in lexicographic order of (j, k); the generator (j, k)
        has module degree d_j + d_k.

    Raises
    ------
    HomogeneityError
        If some f_i is zero or not homogeneous.
    ValueError
        If fewer than two forms are given.

    Examples
    --------
    >>> from koszulx.read_write import parse_polynomials
    >>> K = koszul_submodule(parse_polynomials("xy, xz, yz"))
    >>> [str(g) for g in K]
    ['(x*z, -x*y, 0)', '(y*z, 0, -x*y)', '(0, y*z, -x*z)']
    """
    f = list(f)
    if len(f) < 2:
        raise ValueError("Koszul relations need at least two forms")
    degrees = _degrees_of(f)
    F = FreeModule(degrees, f[0].field)
    gens = []
    for j in range(len(f)):
        for k in range(j + 1, len(f)):
            gens.append(F.basis(j) * f[k] - F.basis(k) * f[j])
    return Submodule(F, gens, name="K")


def minimal_generators(M: Submodule, canonical: bool = False) -> Submodule:
    """Return a minimal generating set of a graded submodule.

    Generators are scanned by increasing degree, and a generator is kept
    exactly when it does not lie in the span of the generators kept before
    it. In a fixed degree this is linear algebra modulo the part of the
    submodule generated in lower degrees.

    Parameters
    ----------
    M : Submodule
        A submodule with homogeneous generators.
    canonical : bool, default=False
        Replace the kept generators of each degree by the reduced echelon
        basis of their normal forms. The result then depends only on the
        submodule and its order, not on the generators given.

    Returns
    -------
    Submodule
        The same submodule with monic minimal generators, sorted by degree.
    """
    if M.is_zero():
        return Submodule(M.ambient, [], order=M.order, name=M.name)
    p = M.ambient.field.p
    order = M.order

    def key(term):
        return order.key(*term)

    indexed = sorted(enumerate(M.generators), key=lambda ig: (ig[1].module_degree, ig[0]))
    kept: list[ModuleElement] = []
    for _, group in groupby(indexed, key=lambda ig: ig[1].module_degree):
        lower = Submodule(M.ambient, kept).groebner_basis() if kept else None
        echelon = SparseEchelon(p, key=key)
        chosen = []
        for _, g in group:
            vec = g.vector() if lower is None else lower.reduce_vector(g.vector())
            if vec and echelon.insert(vec):
                _, _, lc = g.leading_term(order)
                chosen.append(g * pow(lc, -1, p))
        if canonical:
            chosen = [ModuleElement.from_vector(M.ambient, row) for row in echelon.reduced_rows()]
        kept.extend(chosen)
    return Submodule(M.ambient, kept, order=order, name=M.name)


def syzygies(M: Submodule, minimal: bool = True) -> Submodule:
    """Return the module of relations among the generators of `M`.

    Parameters
    ----------
    M : Submodule
        Submodule with nonzero homogeneous generators g_1, ..., g_s.
    minimal : bool, default=True
        Return a minimal generating set.

    Returns
    -------
    Submodule
        The submodule of ``⊕ R(-deg g_i)`` of vectors a with Σ a_i g_i = 0,
        carrying the Schreyer order induced by the leading terms of the g_i.

    Raises
    ------
    ValueError
        If `M` has no generators.
    """
    if M.is_zero():
        raise ValueError("the zero submodule has no generators to relate")
    _, relations, source = groebner_with_syzygies(M)
    leading = [g.leading_term(M.order)[:2] for g in M.generators]
    order = schreyer_order(M.order, leading, source.twists)
    S = Submodule(source, relations, order=order, name="S")
    if minimal:
        return minimal_generators(S, canonical=True)
    return S


def intersect(M: Submodule, N: Submodule) -> Submodule:
    """Return the intersection of two submodules of one free module.

    The intersection is read off the relations among the concatenated
    generators of `M` and `N`: a relation Σ a_i m_i + Σ b_k n_k = 0 yields
    the element Σ a_i m_i of both.

    Raises
    ------
    AmbientMismatchError
        If the submodules live in different free modules.

    Examples
    --------
    >>> from koszulx.read_write import parse_polynomials
    >>> I = Submodule.ideal(parse_polynomials("x"))
    >>> J = Submodule.ideal(parse_polynomials("y"))
    >>> str(intersect(I, J))
    '<x*y>'
    """
    if M.ambient != N.ambient:
        raise AmbientMismatchError(f"{M!r} and {N!r} live in different free modules")
    if M.is_zero() or N.is_zero():
        return Submodule(M.ambient, [])
    combined = Submodule(M.ambient, M.generators + N.generators)
    _, relations, _ = groebner_with_syzygies(combined)
    r = len(M)
    elements = []
    for s in relations:
        v = M.ambient.zero()
        for i in range(r):
            if not s[i].is_zero():
                v = v + M[i] * s[i]
        elements.append(v)
    return minimal_generators(Submodule(M.ambient, elements), canonical=True)


def quotient(M: Submodule, g: Polynomial) -> Submodule:
    """Return the colon module M : g = {v : g v ∈ M}.

    Parameters
    ----------
    M : Submodule
        A submodule of a free module F.
    g : Polynomial
        A nonzero form.

    Raises
    ------
    ValueError
        If `g` is zero.
    HomogeneityError
        If `g` is not homogeneous.

    Examples
    --------
    >>> from koszulx.read_write import parse_polynomial, parse_polynomials
    >>> M = Submodule.ideal(parse_polynomials("x^2, x*y"))
    >>> str(quotient(M, parse_polynomial("x")))
    '<x, y>'
    """
    if g.is_zero():
        raise ValueError("cannot take the quotient by the zero polynomial")
    if g.homogeneous_degree is None:
        raise HomogeneityError(f"{g} is not homogeneous")
    F = M.ambient
    if g.homogeneous_degree == 0:
        return Submodule(F, M.generators, name=M.name)
    multiples = [F.basis(j) * g for j in range(F.rank)]
    if M.is_zero():
        return Submodule(F, [])
    combined = Submodule(F, M.generators + tuple(multiples))
    _, relations, _ = groebner_with_syzygies(combined)
    r = len(M)
    elements = [
        ModuleElement(F, [s[r + j] for j in range(F.rank)]) for s in relations
    ]
    return minimal_generators(Submodule(F, elements), canonical=True)


def _variables(field: PrimeField) -> list[Polynomial]:
    return [Polynomial.variable(v, field) for v in ("x", "y", "z")]


def saturation_step(M: Submodule) -> Submodule:
    """Return M : m = (M : x) ∩ (M : y) ∩ (M : z)."""
    x, y, z = _variables(M.ambient.field)
    return intersect(intersect(quotient(M, x), quotient(M, y)), quotient(M, z))


def is_saturated(M: Submodule) -> bool:
    """Return True if M : m = M."""
    return all(contains(M, v) for v in saturation_step(M))


def saturate(M: Submodule, max_iterations: int = SATURATION_MAX_ITERATIONS) -> Submodule:
    """Return the saturation of `M` with respect to m = <x, y, z>.

    The colon by m is iterated until it stops growing; the submodule returned
    is certified to satisfy M : m = M.

    Parameters
    ----------
    M : Submodule
        Any submodule.
    max_iterations : int, optional
        Bound on the number of colon steps.

    Returns
    -------
    Submodule
        The smallest saturated submodule containing `M`.

    Raises
    ------
    InconsistencyError
        If the ascending chain did not stabilise within `max_iterations`.

    Examples
    --------
    >>> from koszulx.read_write import parse_polynomials
    >>> str(saturate(Submodule.ideal(parse_polynomials("x^2, x*y, x*z"))))
    '<x>'
    """
    current = minimal_generators(M)
    for iteration in range(1, max_iterations + 1):
        step = saturation_step(current)
        if all(contains(current, v) for v in step):
            return Submodule(current.ambient, current.generators, name=M.name)
        if iteration == SATURATION_WARN_AFTER:
            warnings.warn(
                f"saturation of {M!r} still growing after {iteration} colon steps",
                RuntimeWarning,
                stacklevel=2,
            )
        current = step
    raise InconsistencyError(
        f"saturation did not stabilise within {max_iterations} colon steps"
    )


def ideal_product(I: Submodule, J: Submodule) -> Submodule:
    """Return the product of two ideals, generated by pairwise products.

    Raises
    ------
    ValueError
        If one of the arguments is not an ideal of R.
    """
    if not (I.is_ideal() and J.is_ideal()):
        raise ValueError("products are only formed for ideals of R")
    if I.field != J.field:
        raise AmbientMismatchError("ideals over different fields")
    f, g = I.polynomials(), J.polynomials()
    if I is J:
        products = [f[i] * f[j] for i in range(len(f)) for j in range(i, len(f))]
    else:
        products = [a * b for a in f for b in g]
    return minimal_generators(Submodule.ideal(products, I.field), canonical=True)


def unit_ideal(field: PrimeField) -> Submodule:
    """Return the ideal R = <1>."""
    return Submodule.ideal([Polynomial.constant(1, field)], field)


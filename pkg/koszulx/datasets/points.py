"""Ideals of points of the projective plane."""

from collections.abc import Iterable, Sequence
from functools import reduce

from koszulx.algorithms.modules import ideal_product, intersect, minimal_generators
from koszulx.classes.field import GF, PrimeField
from koszulx.classes.module import Submodule
from koszulx.classes.polynomial import Polynomial

__all__ = ["normalize_point", "point_ideal", "fat_point_ideal", "points_ideal", "collinear"]


def normalize_point(point: Sequence[int], field: PrimeField) -> tuple[int, int, int]:
    """Return the representative of a projective point with first nonzero coordinate 1.

    Raises
    ------
    ValueError
        If the point does not have three coordinates or they all vanish mod p.
    """
    if len(point) != 3:
        raise ValueError(f"a point of the plane has three coordinates, got {len(point)}")
    coords = [field.reduce(int(c)) for c in point]
    for c in coords:
        if c:
            inv = field.inverse(c)
            return tuple((v * inv) % field.p for v in coords)
    raise ValueError("(0:0:0) is not a point of the projective plane")


def point_ideal(point: Sequence[int], field: PrimeField | None = None) -> Submodule:
    """Return the ideal of a point (a:b:c), generated by two linear forms.

    The ideal is cut out by the 2 x 2 minors of the matrix with rows
    (x, y, z) and (a, b, c).

    Examples
    --------
    >>> str(point_ideal((0, 0, 1)))
    '<x, y>'
    """
    field = field if field is not None else GF()
    a, b, c = normalize_point(point, field)
    x, y, z = (Polynomial.variable(v, field) for v in ("x", "y", "z"))
    minors = [x * b - y * a, x * c - z * a, y * c - z * b]
    return minimal_generators(Submodule.ideal(minors, field), canonical=True)


def fat_point_ideal(
    point: Sequence[int], multiplicity: int = 2, field: PrimeField | None = None
) -> Submodule:
    """Return the power m_P^k of the ideal of a point, a fat point of length k(k+1)/2."""
    if multiplicity < 1:
        raise ValueError("the multiplicity of a fat point is at least 1")
    base = point_ideal(point, field)
    result = base
    for _ in range(multiplicity - 1):
        result = ideal_product(result, base)
    return result


def points_ideal(points: Iterable[Sequence[int]], field: PrimeField | None = None) -> Submodule:
    """Return the ideal of all forms vanishing at the given points.

    Raises
    ------
    ValueError
        If no point is given or two points coincide.
    """
    field = field if field is not None else GF()
    normalized = [normalize_point(pt, field) for pt in points]
    if not normalized:
        raise ValueError("at least one point is needed")
    if len(set(normalized)) != len(normalized):
        raise ValueError("the points are not distinct")
    return reduce(intersect, (point_ideal(pt, field) for pt in normalized))


def collinear(P: Sequence[int], Q: Sequence[int], R: Sequence[int], field: PrimeField) -> bool:
    """Return True if three points lie on a line, that is det(P, Q, R) = 0 mod p."""
    (a, b, c), (d, e, f), (g, h, i) = P, Q, R
    det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    return field.reduce(det) == 0

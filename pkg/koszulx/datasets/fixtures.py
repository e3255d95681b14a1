"""Named ideals used as regression fixtures."""

from koszulx.classes.field import PrimeField
from koszulx.classes.module import Submodule
from koszulx.classes.polynomial import Polynomial
from koszulx.read_write import parse_polynomials

__all__ = [
    "FIXTURES",
    "SATURATED_FIXTURES",
    "LCI_FIXTURES",
    "fixture",
    "fixture_ideal",
]

FIXTURES = {
    # Jacobian of the coordinate triangle xyz: three reduced points
    "coordinate-triangle": "x*y, x*z, y*z",
    # the square of a point ideal, a fat point of length 3
    "fat-point": "x^2, x*y, y^2",
    "fat-point-length-4": "x^2, x*y, y^3",
    "reduced-point": "x, y",
    "complete-intersection": "x^2, y^3",
    # I^sat = <x^2, x*y, y^2>
    "unsaturated-fat-point": "x^2, y^2, x*y*z",
    "regular-sequence": "x^2, y^2, z^2",
}

SATURATED_FIXTURES = (
    "coordinate-triangle",
    "fat-point",
    "fat-point-length-4",
    "reduced-point",
    "complete-intersection",
)

LCI_FIXTURES = ("coordinate-triangle", "reduced-point", "complete-intersection")


def fixture(name: str, field: PrimeField | None = None) -> list[Polynomial]:
    """Return the generators of a named fixture.

    Raises
    ------
    KeyError
        If `name` is not a fixture.

    Examples
    --------
    >>> [str(f) for f in fixture("fat-point")]
    ['x^2', 'x*y', 'y^2']
    """
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}, choose from {sorted(FIXTURES)}")
    return parse_polynomials(FIXTURES[name], field)


def fixture_ideal(name: str, field: PrimeField | None = None) -> Submodule:
    """Return a named fixture as an ideal."""
    polys = fixture(name, field)
    return Submodule.ideal(polys, polys[0].field, name=name)

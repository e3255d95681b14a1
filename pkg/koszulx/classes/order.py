"""Monomial orders on k[x,y,z] and on graded free modules.

Every order is realised as a sort key on module monomials ``(position,
exponents)``: a larger key is a larger monomial. Ring monomials are the
rank-one case with position 0.

Four kinds are available:

``grevlex``
    graded reverse lexicographic order with x > y > z on the ring.
``top``
    term over position: compare twisted degree and the grevlex tail of the
    exponents first, break ties by position (lower index wins).
``pot``
    position over term: lower positions dominate, then ``top`` within a
    position.
``schreyer``
    the order induced on a source module by a list of leading module
    monomials in a target module; used for syzygy modules.
"""

from collections.abc import Sequence

__all__ = [
    "MonomialOrder",
    "grevlex",
    "term_over_position",
    "position_over_term",
    "schreyer_order",
]

_KINDS = ("grevlex", "top", "pot", "schreyer")


class MonomialOrder:
    """A monomial order on a free module with twists.

    Instances are immutable by convention and hashable, and they memoise their
    keys.

    Parameters
    ----------
    kind : {'grevlex', 'top', 'pot', 'schreyer'}
        The kind of order.
    twists : sequence of int, optional
        The twists (d_1, ..., d_r) of the free module ⊕ R(-d_j).
    base : MonomialOrder, optional
        For ``schreyer`` only: the order on the target module.
    leading : sequence of (int, tuple), optional
        For ``schreyer`` only: the leading module monomials of the images of
        the source basis vectors.

    Raises
    ------
    ValueError
        If `kind` is unknown or the Schreyer data is missing.
    """

    __slots__ = ("kind", "twists", "base", "leading", "_cache")

    def __init__(
        self,
        kind: str = "grevlex",
        twists: Sequence[int] = (0,),
        base: "MonomialOrder | None" = None,
        leading: Sequence[tuple[int, tuple[int, int, int]]] | None = None,
    ) -> None:
        if kind not in _KINDS:
            raise ValueError(f"order kind must be one of {_KINDS}, got {kind}")
        if kind == "grevlex" and len(twists) != 1:
            raise ValueError("grevlex is an order on the ring, use 'top' or 'pot'")
        if kind == "schreyer":
            if base is None or leading is None:
                raise ValueError("a Schreyer order needs a base order and leading terms")
            if len(leading) != len(twists):
                raise ValueError(
                    "a Schreyer order needs one leading term per source position"
                )
        self.kind = kind
        self.twists = tuple(int(t) for t in twists)
        self.base = base
        self.leading = None if leading is None else tuple(
            (int(p), tuple(e)) for p, e in leading
        )
        self._cache = {}

    @property
    def rank(self) -> int:
        """Return the rank of the free module the order lives on."""
        return len(self.twists)

    def key(self, pos: int, exps: tuple[int, int, int]) -> tuple:
        """Return the sort key of the module monomial ``exps * e_pos``.

        Parameters
        ----------
        pos : int
            Position (zero-based basis index).
        exps : tuple of int
            Exponents of x, y, z.

        Returns
        -------
        tuple
            A key; larger keys are larger monomials.
        """
        cache_key = (pos, exps)
        try:
            return self._cache[cache_key]
        except KeyError:
            pass
        a, b, c = exps
        if self.kind == "grevlex":
            value = (a + b + c, -c, -b)
        elif self.kind == "top":
            value = (a + b + c + self.twists[pos], -c, -b, -pos)
        elif self.kind == "pot":
            value = (-pos, a + b + c + self.twists[pos], -c, -b)
        else:
            lpos, lexps = self.leading[pos]
            shifted = (lexps[0] + a, lexps[1] + b, lexps[2] + c)
            value = self.base.key(lpos, shifted) + (-pos,)
        self._cache[cache_key] = value
        return value

    def __eq__(self, other) -> bool:
        """Return True if both orders compare all monomials the same way."""
        if not isinstance(other, MonomialOrder):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.twists == other.twists
            and self.base == other.base
            and self.leading == other.leading
        )

    def __hash__(self) -> int:
        """Return hash of the defining data."""
        return hash((self.kind, self.twists, self.base, self.leading))

    def __repr__(self) -> str:
        """Return a printable representation of the order."""
        if self.kind == "grevlex":
            return "MonomialOrder('grevlex')"
        return f"MonomialOrder({self.kind!r}, twists={self.twists})"

    def to_dict(self) -> dict:
        """Return a JSON-compatible description of the order."""
        data = {"kind": self.kind, "twists": list(self.twists)}
        if self.kind == "schreyer":
            data["base"] = self.base.to_dict()
            data["leading"] = [[p, list(e)] for p, e in self.leading]
        return data


def grevlex() -> MonomialOrder:
    """Return graded reverse lexicographic order with x > y > z."""
    return MonomialOrder("grevlex")


def term_over_position(twists: Sequence[int]) -> MonomialOrder:
    """Return the term-over-position order refining grevlex."""
    return MonomialOrder("top", twists)


def position_over_term(twists: Sequence[int]) -> MonomialOrder:
    """Return the position-over-term order refining grevlex."""
    return MonomialOrder("pot", twists)


def schreyer_order(
    base: MonomialOrder,
    leading: Sequence[tuple[int, tuple[int, int, int]]],
    twists: Sequence[int],
) -> MonomialOrder:
    """Return the Schreyer order induced by leading terms in a target module.

    Parameters
    ----------
    base : MonomialOrder
        Order on the target module.
    leading : sequence of (int, tuple)
        Leading module monomial of the image of each source basis vector.
    twists : sequence of int
        Twists of the source module.
    """
    return MonomialOrder("schreyer", twists, base=base, leading=leading)

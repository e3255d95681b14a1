"""Gröbner bases of submodules of graded free modules.

Buchberger's algorithm for homogeneous input, processing S-pairs degree by
degree (normal selection strategy) with Buchberger's chain criterion, and the
coprime-leading-term criterion for ideals. Vectors are handled as dictionaries
``{(position, exponents): residue}``; reduction walks the terms of a vector in
decreasing order through a heap.

Optionally every basis element carries its expression in terms of the input
generators. S-pairs and input generators that reduce to zero then leave behind
a relation among the generators; by Schreyer's theorem these relations
generate the syzygy module of the input.
"""

import heapq
from collections.abc import Sequence
from dataclasses import dataclass

from koszulx.classes.module import FreeModule, ModuleElement, Submodule
from koszulx.classes.order import MonomialOrder, term_over_position
from koszulx.exception import AmbientMismatchError, HomogeneityError

__all__ = [
    "GroebnerStats",
    "GroebnerBasis",
    "buchberger",
    "normal_form",
    "contains",
    "submodule_equal",
    "groebner_with_syzygies",
]


@dataclass
class GroebnerStats:
    """Counters collected while running Buchberger's algorithm.

    Attributes
    ----------
    pairs_processed : int
        S-pairs that were formed and reduced.
    zero_reductions : int
        S-pairs and input generators whose remainder was zero.
    pairs_skipped : int
        S-pairs discarded by the chain or coprime criterion.
    """

    pairs_processed: int = 0
    zero_reductions: int = 0
    pairs_skipped: int = 0

    def to_dict(self) -> dict:
        """Return the counters as a dictionary."""
        return {
            "pairs_processed": self.pairs_processed,
            "zero_reductions": self.zero_reductions,
            "pairs_skipped": self.pairs_skipped,
        }


class _Entry:
    """A monic basis vector together with its leading term and expression."""

    __slots__ = ("vec", "rep", "pos", "exps")

    def __init__(self, vec: dict, rep: dict | None, pos: int, exps: tuple) -> None:
        self.vec = vec
        self.rep = rep
        self.pos = pos
        self.exps = exps


def _heap_key(order: MonomialOrder, term: tuple) -> tuple:
    return tuple(-v for v in order.key(*term))


def _axpy(target: dict, source: dict, shift: tuple, scalar: int, p: int, heap=None, order=None):
    """Add ``scalar * x^shift * source`` to ``target`` in place."""
    a, b, c = shift
    for (pos, (e0, e1, e2)), v in source.items():
        term = (pos, (e0 + a, e1 + b, e2 + c))
        old = target.get(term)
        if old is None:
            target[term] = (scalar * v) % p
            if heap is not None:
                heapq.heappush(heap, (_heap_key(order, term), term))
        else:
            new = (old + scalar * v) % p
            if new:
                target[term] = new
            else:
                del target[term]


def _find_reducer(by_pos: dict, pos: int, exps: tuple, skip: "_Entry | None" = None):
    e0, e1, e2 = exps
    for entry in by_pos.get(pos, ()):
        if entry is skip:
            continue
        l0, l1, l2 = entry.exps
        if l0 <= e0 and l1 <= e1 and l2 <= e2:
            return entry
    return None


def _reduce(
    vec: dict,
    rep: dict | None,
    by_pos: dict,
    order: MonomialOrder,
    p: int,
    skip: "_Entry | None" = None,
) -> tuple[dict, dict | None]:
    """Fully reduce a vector against monic basis entries.

    Returns the remainder, none of whose terms is divisible by a leading term
    of the basis, together with the updated expression ``rep``.
    """
    vec = dict(vec)
    rep = dict(rep) if rep is not None else None
    heap = [(_heap_key(order, t), t) for t in vec]
    heapq.heapify(heap)
    remainder = {}
    while heap:
        _, term = heapq.heappop(heap)
        coeff = vec.get(term)
        if coeff is None:
            continue
        pos, exps = term
        entry = _find_reducer(by_pos, pos, exps, skip)
        del vec[term]
        if entry is None:
            remainder[term] = coeff
            continue
        shift = (exps[0] - entry.exps[0], exps[1] - entry.exps[1], exps[2] - entry.exps[2])
        # the leading term of entry cancels ``term`` exactly
        lead = (entry.pos, entry.exps)
        rest = {t: v for t, v in entry.vec.items() if t != lead}
        _axpy(vec, rest, shift, -coeff, p, heap, order)
        if rep is not None and entry.rep is not None:
            _axpy(rep, entry.rep, shift, -coeff, p)
    return remainder, rep


def _leading(vec: dict, order: MonomialOrder) -> tuple:
    return max(vec, key=lambda t: order.key(*t))


def _make_monic(vec: dict, rep: dict | None, order: MonomialOrder, p: int) -> _Entry:
    pos, exps = _leading(vec, order)
    inv = pow(vec[(pos, exps)], -1, p)
    vec = {t: (v * inv) % p for t, v in vec.items()}
    if rep is not None:
        rep = {t: (v * inv) % p for t, v in rep.items()}
    return _Entry(vec, rep, pos, exps)


def _vector_degree(vec: dict, twists: Sequence[int]) -> int:
    (pos, exps) = next(iter(vec))
    return sum(exps) + twists[pos]


def _run_buchberger(
    vectors: Sequence[dict],
    twists: Sequence[int],
    order: MonomialOrder,
    p: int,
    track: bool = False,
) -> tuple[list[_Entry], list[dict], GroebnerStats]:
    """Return a minimal Gröbner basis, syzygy relations and statistics.

    The input vectors must be nonzero and homogeneous. With ``track`` each
    basis entry carries its expression in the inputs (a vector over the
    positions ``0..len(vectors)-1``) and the relations left by zero
    reductions are returned.
    """
    stats = GroebnerStats()
    basis: list[_Entry] = []
    by_pos: dict[int, list[_Entry]] = {}
    pairs: dict[int, list[tuple[int, int]]] = {}
    pending: set[tuple[int, int]] = set()
    relations: list[dict] = []
    ideal_case = len(twists) == 1

    inputs: dict[int, list[int]] = {}
    for idx, vec in enumerate(vectors):
        inputs.setdefault(_vector_degree(vec, twists), []).append(idx)

    def add(vec: dict, rep: dict | None) -> None:
        entry = _make_monic(vec, rep, order, p)
        new = len(basis)
        for old, other in enumerate(basis):
            if other.pos != entry.pos:
                continue
            lcm = tuple(max(u, v) for u, v in zip(other.exps, entry.exps))
            degree = sum(lcm) + twists[entry.pos]
            pairs.setdefault(degree, []).append((old, new))
            pending.add((old, new))
        basis.append(entry)
        by_pos.setdefault(entry.pos, []).append(entry)

    def lcm_of(i: int, j: int) -> tuple:
        return tuple(max(u, v) for u, v in zip(basis[i].exps, basis[j].exps))

    def chain_criterion(i: int, j: int, lcm: tuple) -> bool:
        pos = basis[i].pos
        for k, entry in enumerate(basis):
            if k in (i, j) or entry.pos != pos:
                continue
            if not all(u <= v for u, v in zip(entry.exps, lcm)):
                continue
            if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
                continue
            return True
        return False

    while inputs or pairs:
        degree = min(list(inputs) + list(pairs))

        for idx in inputs.pop(degree, []):
            rep = {(idx, (0, 0, 0)): 1} if track else None
            rem, rep = _reduce(vectors[idx], rep, by_pos, order, p)
            if rem:
                add(rem, rep)
            else:
                stats.zero_reductions += 1
                if track and rep:
                    relations.append(rep)

        batch = pairs.pop(degree, [])
        batch.sort(key=lambda ij: (order.key(basis[ij[0]].pos, lcm_of(*ij)), ij))
        for i, j in batch:
            pending.discard((i, j))
            lcm = lcm_of(i, j)
            if chain_criterion(i, j, lcm):
                stats.pairs_skipped += 1
                continue
            fi, fj = basis[i], basis[j]
            if ideal_case and not track and all(
                min(u, v) == 0 for u, v in zip(fi.exps, fj.exps)
            ):
                stats.pairs_skipped += 1
                continue
            shift_i = tuple(m - e for m, e in zip(lcm, fi.exps))
            shift_j = tuple(m - e for m, e in zip(lcm, fj.exps))
            spoly: dict = {}
            _axpy(spoly, fi.vec, shift_i, 1, p)
            _axpy(spoly, fj.vec, shift_j, -1, p)
            rep = None
            if track:
                rep = {}
                _axpy(rep, fi.rep, shift_i, 1, p)
                _axpy(rep, fj.rep, shift_j, -1, p)
            stats.pairs_processed += 1
            rem, rep = _reduce(spoly, rep, by_pos, order, p)
            if rem:
                add(rem, rep)
            else:
                stats.zero_reductions += 1
                if track and rep:
                    relations.append(rep)

    return basis, relations, stats


def _interreduce(basis: list[_Entry], order: MonomialOrder, p: int) -> list[_Entry]:
    """Return the reduced basis from a minimal one, sorted by decreasing leads."""
    by_pos: dict[int, list[_Entry]] = {}
    for entry in basis:
        by_pos.setdefault(entry.pos, []).append(entry)
    reduced = []
    for entry in basis:
        lead = (entry.pos, entry.exps)
        tail = {t: v for t, v in entry.vec.items() if t != lead}
        rest, rep = _reduce(tail, entry.rep, by_pos, order, p, skip=entry)
        rest[lead] = 1
        reduced.append(_Entry(rest, rep, entry.pos, entry.exps))
    reduced.sort(key=lambda e: order.key(e.pos, e.exps), reverse=True)
    return reduced


class GroebnerBasis:
    """A reduced Gröbner basis of a submodule.

    Parameters
    ----------
    ambient : FreeModule
        The free module containing the submodule.
    order : MonomialOrder
        The monomial order.
    entries : list
        Monic basis vectors produced by the engine.
    stats : GroebnerStats
        Counters of the computation.
    reduced : bool, default=True
        Whether the basis is reduced.
    generators : tuple of ModuleElement, optional
        The input generators, when expressions were tracked.

    Attributes
    ----------
    elements : tuple of ModuleElement
        The basis, sorted by decreasing leading term.
    representations : tuple of ModuleElement or None
        When tracked, the expression of each element in the input generators,
        as a vector over the free module with one basis vector per generator.
    """

    def __init__(
        self,
        ambient: FreeModule,
        order: MonomialOrder,
        entries: list,
        stats: GroebnerStats,
        reduced: bool = True,
        generators: tuple | None = None,
    ) -> None:
        self.ambient = ambient
        self.order = order
        self.stats = stats
        self.reduced = reduced
        self._entries = entries
        self._by_pos: dict[int, list] = {}
        for entry in entries:
            self._by_pos.setdefault(entry.pos, []).append(entry)
        self.elements = tuple(ModuleElement.from_vector(ambient, e.vec) for e in entries)
        self.representations = None
        if generators and all(e.rep is not None for e in entries):
            source = FreeModule([g.module_degree for g in generators], ambient.field)
            self.representations = tuple(
                ModuleElement.from_vector(source, e.rep) for e in entries
            )

    def __len__(self) -> int:
        """Return the number of basis elements."""
        return len(self.elements)

    def __iter__(self):
        """Iterate over the basis elements."""
        return iter(self.elements)

    def __getitem__(self, index: int) -> ModuleElement:
        """Return a basis element."""
        return self.elements[index]

    def leading_monomials(self) -> list[tuple[int, tuple[int, int, int]]]:
        """Return the leading module monomials ``(position, exponents)``."""
        return [(e.pos, e.exps) for e in self._entries]

    def leading_monomials_by_position(self) -> dict[int, list[tuple[int, int, int]]]:
        """Return the leading exponents grouped by position."""
        grouped: dict[int, list] = {j: [] for j in range(self.ambient.rank)}
        for e in self._entries:
            grouped[e.pos].append(e.exps)
        return grouped

    def max_degree(self) -> int:
        """Return the largest module degree of a basis element (0 if empty)."""
        return max(
            (sum(e.exps) + self.ambient.twists[e.pos] for e in self._entries), default=0
        )

    def reduce_vector(self, vec: dict) -> dict:
        """Return the normal form of a raw vector."""
        rem, _ = _reduce(vec, None, self._by_pos, self.order, self.ambient.field.p)
        return rem

    def normal_form(self, v: ModuleElement) -> ModuleElement:
        """Return the normal form of an element, see :func:`normal_form`."""
        return normal_form(v, self)

    def canonical_form(self) -> frozenset:
        """Return a hashable form of the basis, independent of element order."""
        return frozenset(frozenset(e.vec.items()) for e in self._entries)

    def to_submodule(self) -> Submodule:
        """Return the submodule generated by the basis."""
        return Submodule(self.ambient, self.elements, order=self.order)

    def __eq__(self, other) -> bool:
        """Return True if both bases have the same ambient, order and elements."""
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return (
            self.ambient == other.ambient
            and self.order == other.order
            and self.canonical_form() == other.canonical_form()
        )

    def __hash__(self) -> int:
        """Return hash of the canonical form."""
        return hash((self.ambient, self.order, self.canonical_form()))

    def __repr__(self) -> str:
        """Return a printable representation of the basis."""
        return f"GroebnerBasis({len(self)} elements, order={self.order!r})"


def _check_input(M: Submodule) -> None:
    for g in M.generators:
        if g.module_degree is None:
            raise HomogeneityError(f"generator {g} is not homogeneous")


def buchberger(
    M: Submodule, order: MonomialOrder | None = None, track: bool = False
) -> GroebnerBasis:
    """Return the reduced Gröbner basis of a submodule.

    Parameters
    ----------
    M : Submodule
        Submodule with homogeneous generators.
    order : MonomialOrder, optional
        Defaults to the submodule's preferred order.
    track : bool, default=False
        Record the expression of every basis element in the generators of M
        (see :attr:`GroebnerBasis.representations`).

    Returns
    -------
    GroebnerBasis
        The unique reduced basis of (M, order); running the algorithm on it
        again returns an equal basis.

    Examples
    --------
    >>> from koszulx.read_write import parse_polynomials
    >>> I = Submodule.ideal(parse_polynomials("x, y, x^2"))
    >>> [str(g) for g in buchberger(I)]
    ['(x)', '(y)']
    """
    _check_input(M)
    order = order or M.order
    if order.rank != M.ambient.rank:
        raise AmbientMismatchError(
            f"order of rank {order.rank} used on a module of rank {M.ambient.rank}"
        )
    p = M.ambient.field.p
    vectors = [g.vector() for g in M.generators]
    entries, _, stats = _run_buchberger(vectors, M.ambient.twists, order, p, track)
    entries = _interreduce(entries, order, p)
    return GroebnerBasis(
        M.ambient, order, entries, stats, generators=M.generators if track else None
    )


def groebner_with_syzygies(M: Submodule, order: MonomialOrder | None = None):
    """Return the reduced basis of M and relations among its generators.

    Returns
    -------
    tuple
        ``(basis, relations, source)`` where ``relations`` is a list of
        homogeneous elements of ``source = ⊕ R(-deg g_i)`` generating the
        module of syzygies on the generators g_i of M.
    """
    _check_input(M)
    order = order or M.order
    p = M.ambient.field.p
    vectors = [g.vector() for g in M.generators]
    entries, relations, stats = _run_buchberger(
        vectors, M.ambient.twists, order, p, track=True
    )
    source = FreeModule([g.module_degree for g in M.generators] or [0], M.ambient.field)
    entries = _interreduce(entries, order, p)
    basis = GroebnerBasis(M.ambient, order, entries, stats, generators=M.generators)
    return basis, [ModuleElement.from_vector(source, r) for r in relations], source


def normal_form(v: ModuleElement, G: GroebnerBasis) -> ModuleElement:
    """Return the normal form of an element with respect to a Gröbner basis.

    Parameters
    ----------
    v : ModuleElement
        Element of the ambient module of `G`.
    G : GroebnerBasis
        A Gröbner basis.

    Returns
    -------
    ModuleElement
        An element congruent to `v` modulo the submodule, none of whose terms
        is divisible by a leading term of `G`. It is zero exactly when `v`
        lies in the submodule.

    Raises
    ------
    AmbientMismatchError
        If `v` and `G` live in different free modules.
    """
    if v.ambient != G.ambient:
        raise AmbientMismatchError(
            f"element of {v.ambient!r} reduced against a basis in {G.ambient!r}"
        )
    return ModuleElement.from_vector(G.ambient, G.reduce_vector(v.vector()))


def contains(M: Submodule, v: ModuleElement) -> bool:
    """Return True if `v` lies in the submodule `M`.

    Raises
    ------
    AmbientMismatchError
        If `v` does not live in the ambient module of `M`.
    """
    if v.ambient != M.ambient:
        raise AmbientMismatchError(
            f"element of {v.ambient!r} tested against a submodule of {M.ambient!r}"
        )
    if v.is_zero():
        return True
    if M.is_zero():
        return False
    return normal_form(v, M.groebner_basis()).is_zero()


def submodule_equal(M: Submodule, N: Submodule) -> bool:
    """Return True if two submodules of the same free module are equal.

    The test compares reduced Gröbner bases under the term-over-position
    order of the ambient module.

    Raises
    ------
    AmbientMismatchError
        If the submodules live in different free modules.
    """
    if M.ambient != N.ambient:
        raise AmbientMismatchError(f"{M!r} and {N!r} live in different free modules")
    if M.is_zero() or N.is_zero():
        return M.is_zero() and N.is_zero()
    order = term_over_position(M.ambient.twists)
    return M.groebner_basis(order).canonical_form() == N.groebner_basis(order).canonical_form()

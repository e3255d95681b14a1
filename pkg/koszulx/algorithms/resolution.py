"""Minimal graded free resolutions of submodules.

A resolution of a submodule M ⊆ F is stored as the generator map
ψ : F_0 → F followed by the steps φ_i : F_i → F_{i-1}, each given by the
images of the basis of its source (the columns of its matrix).
"""

from collections.abc import Sequence

from koszulx.algorithms.modules import minimal_generators, syzygies
from koszulx.classes.module import FreeModule, ModuleElement, Submodule
from koszulx.classes.polynomial import Polynomial
from koszulx.exception import InconsistencyError

__all__ = ["ResolutionStep", "GradedResolution", "minimal_resolution", "prune_constants"]


class ResolutionStep:
    """One map φ : F_i → F_{i-1} of a graded free resolution.

    Parameters
    ----------
    source : FreeModule
        The free module F_i.
    target : FreeModule
        The free module F_{i-1}.
    columns : sequence of ModuleElement
        The images φ(e_1), ..., φ(e_s) in `target`, one per basis vector of
        `source`; column c is homogeneous of module degree ``source.twists[c]``.

    Raises
    ------
    ValueError
        If the number of columns differs from the rank of `source`, or a
        column does not have the degree of its basis vector.
    """

    def __init__(
        self, source: FreeModule, target: FreeModule, columns: Sequence[ModuleElement]
    ) -> None:
        columns = tuple(columns)
        if len(columns) != source.rank:
            raise ValueError(
                f"a map out of a rank {source.rank} module needs {source.rank} columns"
            )
        for c, col in enumerate(columns):
            if col.ambient != target:
                raise ValueError(f"column {c} does not live in {target!r}")
            if not col.is_zero() and col.module_degree != source.twists[c]:
                raise ValueError(
                    f"column {c} has degree {col.module_degree}, "
                    f"expected {source.twists[c]}"
                )
        self.source = source
        self.target = target
        self.columns = columns

    def entry(self, row: int, col: int) -> Polynomial:
        """Return the matrix entry in a row and a column."""
        return self.columns[col][row]

    def apply(self, v: ModuleElement) -> ModuleElement:
        """Return the image of an element of the source."""
        image = self.target.zero()
        for coeff, col in zip(v.components, self.columns):
            if not coeff.is_zero():
                image = image + col * coeff
        return image

    def image(self) -> Submodule:
        """Return the image of the map as a submodule of the target."""
        return Submodule(self.target, self.columns)

    def has_unit_entry(self) -> bool:
        """Return True if some entry is a nonzero constant."""
        return any(
            not f.is_zero() and f.homogeneous_degree == 0
            for col in self.columns
            for f in col.components
        )

    def __repr__(self) -> str:
        """Return a printable representation of the step."""
        return f"ResolutionStep({self.source} -> {self.target})"


class GradedResolution:
    """A graded free resolution of a submodule of a free module.

    Parameters
    ----------
    generators : sequence of ModuleElement
        The images of the basis of F_0, that is the generators of the
        resolved submodule.
    steps : sequence of ResolutionStep
        The maps φ_1 : F_1 → F_0, φ_2 : F_2 → F_1, ...
    resolved : Submodule
        The submodule being resolved.

    Examples
    --------
    >>> from koszulx.read_write import parse_polynomials
    >>> res = minimal_resolution(Submodule.ideal(parse_polynomials("xy, xz, yz")))
    >>> res.shifts()
    [(-2, -2, -2), (-3, -3)]
    """

    def __init__(
        self,
        generators: Sequence[ModuleElement],
        steps: Sequence[ResolutionStep],
        resolved: Submodule,
    ) -> None:
        self.generators = tuple(generators)
        self.steps = tuple(steps)
        self.resolved = resolved
        self.free_modules = [
            FreeModule([g.module_degree for g in self.generators], resolved.field)
        ]
        self.free_modules.extend(step.source for step in self.steps)

    @property
    def length(self) -> int:
        """Return the number of steps."""
        return len(self.steps)

    def shifts(self) -> list[tuple[int, ...]]:
        """Return the shifts of F_0, F_1, ... (the negated twists)."""
        return [tuple(-d for d in F.twists) for F in self.free_modules]

    def betti_table(self) -> dict[tuple[int, int], int]:
        """Return the graded Betti numbers.

        Returns
        -------
        dict
            Maps ``(i, d)`` to the number of copies of R(-d) in F_i.
        """
        table: dict[tuple[int, int], int] = {}
        for i, F in enumerate(self.free_modules):
            for d in F.twists:
                table[(i, d)] = table.get((i, d), 0) + 1
        return table

    def is_minimal(self) -> bool:
        """Return True if no matrix entry is a nonzero constant."""
        return not any(step.has_unit_entry() for step in self.steps)

    def is_hilbert_burch(self) -> bool:
        """Return True for a resolution 0 → F_1 → F_0 with rank F_1 = rank F_0 - 1."""
        return self.length == 1 and self.steps[0].source.rank == self.free_modules[0].rank - 1

    def is_complex(self) -> bool:
        """Return True if consecutive maps compose to zero."""
        first = ResolutionStep(self.free_modules[0], self.resolved.ambient, self.generators)
        maps = [first, *self.steps]
        for outer, inner in zip(maps, maps[1:]):
            for col in inner.columns:
                if not outer.apply(col).is_zero():
                    return False
        return True

    def euler_characteristic(self, n: int) -> int:
        """Return Σ_i (-1)^i dim (F_i)_n, the dimension of the resolved module in degree n."""
        return sum((-1) ** i * F.dimension(n) for i, F in enumerate(self.free_modules))

    def __repr__(self) -> str:
        """Return a printable representation of the resolution."""
        chain = " <- ".join(str(F) for F in self.free_modules)
        return f"GradedResolution({chain})"


def _unit_position(matrix: list[list[Polynomial]]) -> tuple[int, int] | None:
    for r, row in enumerate(matrix):
        for c, f in enumerate(row):
            if not f.is_zero() and f.homogeneous_degree == 0:
                return r, c
    return None


def prune_constants(
    generators: Sequence[ModuleElement],
    matrices: list[list[list[Polynomial]]],
    twists: list[list[int]],
) -> tuple[list[ModuleElement], list[list[list[Polynomial]]], list[list[int]]]:
    """Remove every constant entry from the matrices of a free resolution.

    For a nonzero constant u at (r, c) of φ_i, found scanning the lowest row
    first and then the lowest column, column operations clear the rest of row
    r; then row r and column c of φ_i are deleted, together with row c of
    φ_{i+1} and column r of φ_{i-1} (the generator r when i = 1).

    Parameters
    ----------
    generators : sequence of ModuleElement
        Images of the basis of F_0.
    matrices : list
        ``matrices[i-1]`` is φ_i as a list of rows of polynomials.
    twists : list
        ``twists[i]`` are the twists of F_i.

    Returns
    -------
    tuple
        The pruned generators, matrices and twists.
    """
    generators = list(generators)
    matrices = [[list(row) for row in m] for m in matrices]
    twists = [list(t) for t in twists]
    i = 0
    while i < len(matrices):
        phi = matrices[i]
        found = _unit_position(phi)
        if found is None:
            i += 1
            continue
        r, c = found
        u_inv = phi[r][c].field.inverse(phi[r][c].raw[(0, 0, 0)])
        for c2 in range(len(phi[r])):
            if c2 == c or phi[r][c2].is_zero():
                continue
            factor = phi[r][c2].scale(u_inv)
            for row in phi:
                row[c2] = row[c2] - row[c] * factor
        for row in phi:
            del row[c]
        del phi[r]
        if i + 1 < len(matrices):
            del matrices[i + 1][c]
        if i == 0:
            del generators[r]
        else:
            for row in matrices[i - 1]:
                del row[r]
        del twists[i][r]
        del twists[i + 1][c]
        if not twists[i + 1]:
            del matrices[i:]
            del twists[i + 1:]
    return generators, matrices, twists


def minimal_resolution(M: Submodule, max_length: int = 8) -> GradedResolution:
    """Return a minimal graded free resolution of a submodule.

    Syzygies of minimal generators are computed step by step, each step in
    the Schreyer order of the previous one, until they vanish; remaining
    constant entries are then eliminated.

    Parameters
    ----------
    M : Submodule
        Nonzero submodule with homogeneous generators.
    max_length : int, default=8
        Bound on the number of steps.

    Returns
    -------
    GradedResolution
        For a saturated codimension-two ideal the resolution has exactly one
        step ⊕_{i=1}^{m} R(-b_i) → ⊕_{j=1}^{m+1} R(-a_j).

    Raises
    ------
    ValueError
        If `M` is the zero submodule.
    InconsistencyError
        If more than `max_length` steps are produced or the result is not
        minimal.
    """
    if M.is_zero():
        raise ValueError("the zero submodule has no generators to resolve")
    generators = list(minimal_generators(M).generators)
    matrices: list[list[list[Polynomial]]] = []
    twists: list[list[int]] = [[g.module_degree for g in generators]]
    current = Submodule(M.ambient, generators)
    while True:
        S = syzygies(current)
        if S.is_zero():
            break
        if len(matrices) == max_length:
            raise InconsistencyError(f"resolution longer than {max_length} steps")
        matrices.append([[col[r] for col in S.generators] for r in range(S.ambient.rank)])
        twists.append(list(S.degrees))
        current = S
    generators, matrices, twists = prune_constants(generators, matrices, twists)
    resolution = _assemble(generators, matrices, twists, M)
    if not resolution.is_minimal():
        raise InconsistencyError("pruning left a constant entry in the resolution")
    return resolution


def _assemble(generators, matrices, twists, M: Submodule) -> GradedResolution:
    steps = []
    for i, phi in enumerate(matrices):
        source = FreeModule(twists[i + 1], M.field)
        target = FreeModule(twists[i], M.field)
        columns = [
            ModuleElement(target, [phi[r][c] for r in range(target.rank)])
            for c in range(source.rank)
        ]
        steps.append(ResolutionStep(source, target, columns))
    return GradedResolution(generators, steps, M)

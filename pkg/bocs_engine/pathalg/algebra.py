"""Presented algebras kQ/I and their normal-form bases.

Relations are not completed to a Groebner basis. Instead the ideal is spanned,
length by length, by the products ``u * r * v`` of relations with paths, and the
quotient is read off from a row reduction in which longer paths come first. The
paths that are not pivots form the basis; each pivot path gets a rewrite rule.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from bocs_engine.config import LENGTH_CAP
from bocs_engine.errors import NotFiniteDimensionalError
from bocs_engine.linalg import RATIONALS, entries, matrix, rref
from bocs_engine.logger import logger
from bocs_engine.pathalg.elements import Path, PathElement
from bocs_engine.pathalg.quiver import Quiver


@dataclass
class AlgebraPresentation:
    """A quiver with relations.

    Attributes:
        quiver: The quiver, with its vertex order.
        relations: Generators of the ideal. Every path in a relation has length at least 2.
        name: A label used in logs and exports.
    """

    quiver: Quiver
    relations: list[PathElement] = field(default_factory=list)
    name: str = "algebra"

    def __post_init__(self) -> None:
        for relation in self.relations:
            # Check that a valid relation has been requested
            if relation.is_zero():
                raise ValueError(f"Relation of {self.name} is zero")
            if any(len(p) < 2 for p in relation.paths()):
                raise ValueError(
                    f"Relation '{relation}' of {self.name} contains a path of length < 2"
                )
            for path in relation.paths():
                if self.quiver.path_endpoints(path) != (relation.source, relation.target):
                    raise ValueError(
                        f"Path {'*'.join(path)} of relation '{relation}' is not a path "
                        f"{relation.source} -> {relation.target}"
                    )

    @property
    def vertices(self) -> list[str]:
        return self.quiver.vertices


@dataclass
class AlgebraBasis:
    """A basis of kQ/I made of paths, and the rules rewriting every other path into it.

    Attributes:
        presentation: The presented algebra.
        paths: Basis paths keyed by ``(source, target)``. Trivial paths are the empty tuple.
        rewrite: Normal form of each reducible path of length at most ``stable_length``.
        stable_length: The length at which the path span stabilised. All paths of this
            length or longer are reducible.
    """

    presentation: AlgebraPresentation
    paths: dict[tuple[str, str], list[Path]]
    rewrite: dict[Path, PathElement]
    stable_length: int
    _cache: dict[Path, PathElement] = field(default_factory=dict, repr=False)

    @property
    def quiver(self) -> Quiver:
        return self.presentation.quiver

    @property
    def dimension(self) -> int:
        return sum(len(p) for p in self.paths.values())

    def between(self, source: str, target: str) -> list[Path]:
        """Basis paths ``source -> target``, i.e. a basis of e_target A e_source."""
        return self.paths.get((source, target), [])

    def starting_at(self, source: str) -> list[tuple[Path, str]]:
        """(path, target) pairs of the basis paths leaving ``source``, in vertex order."""
        return [
            (path, target)
            for target in self.quiver.vertices
            for path in self.between(source, target)
        ]

    def is_basis_path(self, path: Path, source: str, target: str) -> bool:
        return path in self.between(source, target)

    def reduce_path(self, path: Path, source: str, target: str) -> PathElement:
        if not path or self.is_basis_path(path, source, target):
            return PathElement.path(path, source, target)
        if path in self.rewrite:
            return self.rewrite[path]
        if path in self._cache:
            return self._cache[path]

        # Longer than anything tabulated: reduce the tail, then extend it by one arrow
        head = self.quiver.arrow(path[0])
        tail = self.reduce_path(path[1:], source, head.source)
        result = PathElement.zero(source, target)
        for tail_path, coeff in tail.items():
            extended = self.reduce_path((head.name,) + tail_path, source, target)
            result = result + extended.scale(coeff)
        self._cache[path] = result
        return result


def _enumerate_paths(quiver: Quiver, length: int) -> list[tuple[Path, str, str]]:
    """All paths with 1..length arrows, longest first."""
    layers = []
    layer = quiver.paths_of_length(0)
    for _ in range(length):
        layer = sorted(
            ((a.name,) + p, s, a.target) for p, s, t in layer for a in quiver.arrows_from(t)
        )
        if not layer:
            break
        layers.append(layer)
    return [entry for layer in reversed(layers) for entry in layer]


def _ideal_span(
    presentation: AlgebraPresentation, length: int
) -> list[PathElement]:
    """Products u * r * v truncated at ``length`` whose shortest path fits."""
    quiver = presentation.quiver
    by_length = {k: quiver.paths_of_length(k) for k in range(length + 1)}
    generators = []
    for relation in presentation.relations:
        shortest = min(len(p) for p in relation.paths())
        room = length - shortest
        for left_len in range(room + 1):
            lefts = [(p, t) for p, s, t in by_length[left_len] if s == relation.target]
            for right_len in range(room - left_len + 1):
                rights = [
                    (p, s) for p, s, t in by_length[right_len] if t == relation.source
                ]
                for u, target in lefts:
                    for v, source in rights:
                        product = (
                            PathElement.path(u, relation.target, target)
                            * relation
                            * PathElement.path(v, source, relation.source)
                        )
                        truncated = PathElement(
                            {p: c for p, c in product.items() if len(p) <= length},
                            source,
                            target,
                        )
                        if not truncated.is_zero():
                            generators.append(truncated)
    return generators


def _reduce_at_length(presentation: AlgebraPresentation, length: int):
    columns = _enumerate_paths(presentation.quiver, length)
    position = {path: k for k, (path, _, _) in enumerate(columns)}
    generators = _ideal_span(presentation, length)
    rows = []
    for element in generators:
        row = [0] * len(columns)
        for path, coeff in element.items():
            row[position[path]] = coeff
        rows.append(row)
    reduction = rref(matrix(rows, RATIONALS, cols=len(columns)))
    return columns, reduction


def algebra_basis(presentation: AlgebraPresentation, cap: int = LENGTH_CAP) -> AlgebraBasis:
    """Compute a path basis and rewrite table for ``presentation``.

    Args:
        presentation: The presented algebra.
        cap: The longest path length to examine before giving up.

    Returns:
        The ``AlgebraBasis`` read off at the first length where the quotient stops growing.

    Raises:
        NotFiniteDimensionalError: if the quotient is still growing at ``cap``.
    """
    # Check that a valid cap has been requested
    if cap < 2:
        raise ValueError(f"Length cap must be at least 2, got {cap}")

    quiver = presentation.quiver
    previous = len(quiver.vertices)
    for length in range(1, cap + 1):
        columns, reduction = _reduce_at_length(presentation, length)
        current = len(quiver.vertices) + len(columns) - reduction.rank
        if current == previous and length >= 2:
            break
        previous = current
    else:
        raise NotFiniteDimensionalError(
            f"{presentation.name} is not finite-dimensional within length {cap}"
        )

    pivots = set(reduction.pivots)
    basis: dict[tuple[str, str], list[Path]] = {}
    for vertex in quiver.vertices:
        basis.setdefault((vertex, vertex), []).append(())
    free = [k for k in range(len(columns)) if k not in pivots]
    for k in sorted(free, key=lambda k: (len(columns[k][0]), columns[k][0])):
        path, source, target = columns[k]
        basis.setdefault((source, target), []).append(path)

    table = entries(reduction.reduced)
    rewrite = {}
    for row, pivot in enumerate(reduction.pivots):
        path, source, target = columns[pivot]
        rewrite[path] = PathElement(
            {columns[k][0]: -table[row][k] for k in free if table[row][k]},
            source,
            target,
        )

    result = AlgebraBasis(presentation, basis, rewrite, length)
    logger.debug(
        f"{presentation.name}: dimension {result.dimension}, stable at length {length}"
    )
    return result


def normal_form(x: PathElement, basis: AlgebraBasis) -> PathElement:
    """Rewrite ``x`` as a combination of basis paths."""
    result = PathElement.zero(x.source, x.target)
    for path, coeff in x.items():
        result = result + basis.reduce_path(path, x.source, x.target).scale(coeff)
    return result


def multiply(x: PathElement, y: PathElement, basis: AlgebraBasis) -> PathElement:
    """``x * y`` in normal form (``y`` applied first)."""
    return normal_form(x * y, basis)

"""Projective and standard modules, and the quasi-hereditary test."""

from __future__ import annotations

from dataclasses import dataclass, field

import pandas as pd
from sympy.polys.domains import QQ

from bocs_engine.errors import BocsError
from bocs_engine.findim.modules import FDModule, ModuleMap, closure, quotient
from bocs_engine.linalg import RATIONALS, Field, matrix, solve
from bocs_engine.linalg.matrices import column, entries, from_entries, independent_indices
from bocs_engine.logger import logger
from bocs_engine.pathalg import (
    AlgebraBasis,
    AlgebraPresentation,
    PathElement,
    Quiver,
    algebra_basis,
    multiply,
)


def projective(basis: AlgebraBasis, vertex: str, field: Field = RATIONALS) -> FDModule:
    """P(vertex) = A e_vertex, spanned by the basis paths leaving ``vertex``.

    Arrows act by left multiplication. The generator e_vertex is the first basis
    vector at ``vertex``.
    """
    quiver = basis.quiver
    domain = field.domain
    action = {}
    for arrow in quiver.arrows:
        source_paths = basis.between(vertex, arrow.source)
        target_paths = basis.between(vertex, arrow.target)
        cols = []
        for path in source_paths:
            product = multiply(
                PathElement.path((arrow.name,), arrow.source, arrow.target),
                PathElement.path(path, vertex, arrow.source),
                basis,
            )
            cols.append([field(product.coefficient(p)) for p in target_paths])
        action[arrow.name] = from_entries(
            [[col[k] for col in cols] for k in range(len(target_paths))],
            (len(target_paths), len(source_paths)),
            domain,
        )
    dims = {v: len(basis.between(vertex, v)) for v in quiver.vertices}
    return FDModule(basis.presentation, dims, action, field, f"P({vertex})")


def map_from_projective(p: FDModule, vertex: str, basis: AlgebraBasis, target: FDModule, vector: list) -> ModuleMap:
    """The map P(vertex) -> target sending e_vertex to ``vector``."""
    components = {}
    for v in target.vertices:
        cols = []
        for path in basis.between(vertex, v):
            m = target.path_matrix(path, vertex, v)
            if m.shape[0] == 0:
                cols.append([])
            elif not vector:
                cols.append([target.field.zero] * m.shape[0])
            else:
                cols.append([row[0] for row in entries(m * column(vector, target.field.domain))])
        components[v] = from_entries(
            [[col[k] for col in cols] for k in range(target.dims[v])],
            (target.dims[v], p.dims[v]),
            target.field.domain,
        )
    return ModuleMap(p, target, components)


def _standard_vectors(size: int, field: Field) -> list[list]:
    return [[field.one if k == r else field.zero for k in range(size)] for r in range(size)]


def standard_module(basis: AlgebraBasis, vertex: str, field: Field = RATIONALS) -> FDModule:
    """Delta(vertex): P(vertex) modulo the images of all maps from P(j), j later in the order.

    Those images together form the submodule generated by P(vertex)_j for j > vertex.
    """
    p = projective(basis, vertex, field)
    vertices = basis.quiver.vertices
    later = vertices[vertices.index(vertex) + 1 :]
    generators = {j: _standard_vectors(p.dims[j], field) for j in later}
    delta, _ = quotient(p, closure(p, generators), name=f"Delta({vertex})")
    return delta


# ------------------------------ Quasi-heredity ------------------------------ #


@dataclass
class HeredityStep:
    """One idempotent of the heredity chain.

    Attributes:
        vertex: The vertex e whose ideal A e A is split off.
        loops_vanish: Whether e rad(A) e = 0.
        ideal_dim: dim A e A.
        left_dim: dim A e.
        right_dim: dim e A.
    """

    vertex: str
    loops_vanish: bool
    ideal_dim: int
    left_dim: int
    right_dim: int

    @property
    def accepted(self) -> bool:
        return self.loops_vanish and self.ideal_dim == self.left_dim * self.right_dim


@dataclass
class HeredityCheck:
    """Outcome of ``is_quasi_hereditary`` with the chain as certificate."""

    order: list[str]
    steps: list[HeredityStep] = field(default_factory=list)

    @property
    def is_quasi_hereditary(self) -> bool:
        return all(step.accepted for step in self.steps)

    @property
    def failed_at(self) -> str | None:
        return next((s.vertex for s in self.steps if not s.accepted), None)

    def __bool__(self) -> bool:
        return self.is_quasi_hereditary


def reorder(presentation: AlgebraPresentation, order: list[str]) -> AlgebraPresentation:
    """The same algebra with the vertex order replaced by ``order``."""
    if sorted(order) != sorted(presentation.quiver.vertices):
        raise ValueError(f"{order} is not a permutation of {presentation.quiver.vertices}")
    return AlgebraPresentation(
        Quiver(list(order), list(presentation.quiver.arrows)),
        list(presentation.relations),
        presentation.name,
    )


def _without_vertex(presentation: AlgebraPresentation, vertex: str) -> AlgebraPresentation:
    """The presentation of A / A e A for e = e_vertex."""
    quiver = presentation.quiver
    removed = {a.name for a in quiver.arrows if vertex in (a.source, a.target)}
    arrows = [a for a in quiver.arrows if a.name not in removed]
    relations = []
    for relation in presentation.relations:
        if vertex in (relation.source, relation.target):
            continue
        kept = PathElement(
            {p: c for p, c in relation.items() if not removed.intersection(p)},
            relation.source,
            relation.target,
        )
        if not kept.is_zero():
            relations.append(kept)
    return AlgebraPresentation(
        Quiver([v for v in quiver.vertices if v != vertex], arrows),
        relations,
        f"{presentation.name}/{vertex}",
    )


def _ideal_dimension(basis: AlgebraBasis, vertex: str) -> int:
    """dim A e A, the span of all products p * q through ``vertex``."""
    total = 0
    vertices = basis.quiver.vertices
    for s in vertices:
        for t in vertices:
            targets = basis.between(s, t)
            if not targets:
                continue
            vectors = []
            for p in basis.between(vertex, t):
                for q in basis.between(s, vertex):
                    product = multiply(
                        PathElement.path(p, vertex, t), PathElement.path(q, s, vertex), basis
                    )
                    vectors.append([product.coefficient(path) for path in targets])
            total += len(independent_indices(vectors, QQ))
    return total


def is_quasi_hereditary(basis: AlgebraBasis) -> HeredityCheck:
    """Test the heredity chain e_n, e_(n-1), ... for the vertex order of ``basis``.

    Each step splits off the last remaining vertex e. It is accepted when e rad(A) e = 0
    and dim(A e A) = dim(A e) * dim(e A); the test then recurses on A / A e A.
    """
    check = HeredityCheck(list(basis.quiver.vertices))
    current = basis
    while current.quiver.vertices:
        vertex = current.quiver.vertices[-1]
        left = sum(len(current.between(vertex, t)) for t in current.quiver.vertices)
        right = sum(len(current.between(s, vertex)) for s in current.quiver.vertices)
        step = HeredityStep(
            vertex,
            current.between(vertex, vertex) == [()],
            _ideal_dimension(current, vertex),
            left,
            right,
        )
        check.steps.append(step)
        if not step.accepted:
            logger.info(
                f"{basis.presentation.name} is not quasi-hereditary: the step at vertex "
                f"{vertex} fails"
            )
            break
        current = algebra_basis(_without_vertex(current.presentation, vertex))
    return check


def delta_multiplicities(basis: AlgebraBasis) -> pd.DataFrame:
    """The filtration multiplicities [P(i):Delta(j)] as a DataFrame indexed by i.

    The multiplicities solve dimvec P(i) = sum_j m_ij dimvec Delta(j).

    Raises:
        BocsError: when the solution is not a nonnegative integer matrix with unit
            diagonal, so the order is not quasi-hereditary.
    """
    vertices = basis.quiver.vertices
    deltas = [standard_module(basis, v).dimension_vector for v in vertices]
    system = matrix([list(col) for col in zip(*deltas)], RATIONALS)
    rows = []
    for i, vertex in enumerate(vertices):
        rhs = matrix([[d] for d in projective(basis, vertex).dimension_vector], RATIONALS)
        solution = [row[0] for row in entries(solve(system, rhs).particular)]
        if any(QQ.denom(x) != 1 or x < 0 for x in solution) or solution[i] != 1:
            raise BocsError(
                f"Multiplicities of P({vertex}) are {solution}: the order is not quasi-hereditary"
            )
        rows.append([int(QQ.numer(x)) for x in solution])
    return pd.DataFrame(rows, index=pd.Index(vertices, name="P"), columns=pd.Index(vertices, name="Delta"))

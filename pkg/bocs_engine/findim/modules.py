"""Finite-dimensional modules over a presented algebra, given as quiver representations."""

from __future__ import annotations

from dataclasses import dataclass, field

from sympy.polys.matrices import DomainMatrix

from bocs_engine.linalg import RATIONALS, Field, entries, identity, is_zero_matrix, matrices_equal, zeros
from bocs_engine.linalg.matrices import (
    column,
    coordinates,
    from_entries,
    independent_indices,
    kernel_basis,
)
from bocs_engine.pathalg import AlgebraPresentation, Path, PathElement

Vector = list


@dataclass
class FDModule:
    """A representation of the quiver of ``algebra`` satisfying its relations.

    Attributes:
        algebra: The presented algebra acting on the module.
        dims: Dimension of the space at each vertex. Missing vertices are 0.
        action: Matrix of each arrow, of shape (dim at target) x (dim at source).
            Missing arrows act by zero.
        field: The ground field of the matrices.
        name: A label used in logs and tables.
    """

    algebra: AlgebraPresentation
    dims: dict[str, int] = field(default_factory=dict)
    action: dict[str, DomainMatrix] = field(default_factory=dict)
    field: Field = RATIONALS
    name: str = "M"

    def __post_init__(self) -> None:
        quiver = self.algebra.quiver
        self.dims = {v: int(self.dims.get(v, 0)) for v in quiver.vertices}

        for arrow in quiver.arrows:
            shape = (self.dims[arrow.target], self.dims[arrow.source])
            matrix = self.action.get(arrow.name)
            if matrix is None:
                self.action[arrow.name] = zeros(*shape, self.field)
            # Check that a valid matrix has been given for each arrow
            elif matrix.shape != shape:
                raise ValueError(
                    f"Arrow {arrow.name} of {self.name} needs a {shape} matrix, "
                    f"got {matrix.shape}"
                )

        for relation in self.algebra.relations:
            if not is_zero_matrix(self.evaluate(relation)):
                raise ValueError(f"{self.name} does not satisfy the relation {relation}")

    @property
    def vertices(self) -> list[str]:
        return self.algebra.quiver.vertices

    @property
    def dimension_vector(self) -> tuple[int, ...]:
        return tuple(self.dims[v] for v in self.vertices)

    @property
    def total(self) -> int:
        return sum(self.dims.values())

    def path_matrix(self, path: Path, source: str, target: str) -> DomainMatrix:
        if not path and source != target:
            raise ValueError("A trivial path has a single vertex")
        result = identity(self.dims[source], self.field)
        for name in reversed(path):
            result = self.action[name] * result
        return result

    def evaluate(self, element: PathElement) -> DomainMatrix:
        """The matrix by which ``element`` acts, from its source to its target."""
        result = zeros(self.dims[element.target], self.dims[element.source], self.field)
        for path, coeff in element.items():
            m = self.path_matrix(path, element.source, element.target)
            result = result + m * self.field(coeff)
        return result

    def apply(self, name: str, vector: Vector) -> Vector:
        matrix = self.action[name]
        if matrix.shape[0] == 0:
            return []
        if not vector:
            return [self.field.zero] * matrix.shape[0]
        return [row[0] for row in entries(matrix * column(vector, self.field.domain))]

    def __repr__(self) -> str:
        return f"FDModule({self.name}, dims={self.dimension_vector})"


@dataclass
class ModuleMap:
    """A homomorphism ``source -> target`` given by one matrix per vertex.

    Attributes:
        source: The domain module.
        target: The codomain module.
        components: ``f_v`` for each vertex, of shape (target dim) x (source dim).
    """

    source: FDModule
    target: FDModule
    components: dict[str, DomainMatrix] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for v in self.source.vertices:
            shape = (self.target.dims[v], self.source.dims[v])
            if v not in self.components:
                self.components[v] = zeros(*shape, self.source.field)
            elif self.components[v].shape != shape:
                raise ValueError(f"Component at {v} needs shape {shape}")

    def is_homomorphism(self) -> bool:
        for arrow in self.source.algebra.quiver.arrows:
            left = self.components[arrow.target] * self.source.action[arrow.name]
            right = self.target.action[arrow.name] * self.components[arrow.source]
            if not matrices_equal(left, right):
                return False
        return True

    def then(self, other: ModuleMap) -> ModuleMap:
        """``other`` after ``self``."""
        return ModuleMap(
            self.source,
            other.target,
            {v: other.components[v] * self.components[v] for v in self.source.vertices},
        )

    def is_zero(self) -> bool:
        return all(is_zero_matrix(m) for m in self.components.values())

    def flatten(self) -> list:
        """All entries, vertex by vertex, row-major."""
        return [x for v in self.source.vertices for row in entries(self.components[v]) for x in row]

    def image_vectors(self, vertex: str) -> list[Vector]:
        m = self.components[vertex]
        rows = entries(m)
        return [[row[c] for row in rows] for c in range(m.shape[1])]


# ------------------------------ Hom spaces ------------------------------ #


def hom_space(m: FDModule, n: FDModule) -> list[ModuleMap]:
    """A basis of Hom(m, n): the solutions of ``f_t M_a = N_a f_s`` for every arrow."""
    quiver = m.algebra.quiver
    domain = m.field.domain
    index = {}
    for v in quiver.vertices:
        for r in range(n.dims[v]):
            for c in range(m.dims[v]):
                index[(v, r, c)] = len(index)

    equations = []
    for arrow in quiver.arrows:
        s, t = arrow.source, arrow.target
        ma, na = entries(m.action[arrow.name]), entries(n.action[arrow.name])
        for r in range(n.dims[t]):
            for c in range(m.dims[s]):
                row = [domain.zero] * len(index)
                for k in range(m.dims[t]):
                    row[index[(t, r, k)]] += ma[k][c]
                for k in range(n.dims[s]):
                    row[index[(s, k, c)]] -= na[r][k]
                equations.append(row)

    if not index:
        return []
    if equations:
        solutions = kernel_basis(
            from_entries(equations, (len(equations), len(index)), domain)
        )
    else:
        solutions = [column(_standard(j, len(index), domain), domain) for j in range(len(index))]

    maps = []
    for solution in solutions:
        values = [row[0] for row in entries(solution)]
        components = {}
        for v in quiver.vertices:
            shape = (n.dims[v], m.dims[v])
            rows = [[values[index[(v, r, c)]] for c in range(shape[1])] for r in range(shape[0])]
            components[v] = from_entries(rows, shape, domain)
        maps.append(ModuleMap(m, n, components))
    return maps


# ------------------------------ Submodules and quotients ------------------------------ #


def _standard(k: int, size: int, domain) -> Vector:
    return [domain.one if j == k else domain.zero for j in range(size)]


def _basis_matrix(vectors: list[Vector], size: int, domain) -> DomainMatrix:
    return from_entries(
        [[vec[k] for vec in vectors] for k in range(size)], (size, len(vectors)), domain
    )


def closure(module: FDModule, generators: dict[str, list[Vector]]) -> dict[str, list[Vector]]:
    """Bases of the submodule generated by ``generators``, vertex by vertex."""
    domain = module.field.domain
    spans = {v: [] for v in module.vertices}
    queue = [(v, vec) for v, vecs in generators.items() for vec in vecs]
    while queue:
        v, vec = queue.pop(0)
        if not independent_indices([vec], domain, start=spans[v]):
            continue
        spans[v].append(list(vec))
        for arrow in module.algebra.quiver.arrows_from(v):
            queue.append((arrow.target, module.apply(arrow.name, vec)))
    return spans


def submodule(module: FDModule, generators: dict[str, list[Vector]], name: str = "") -> tuple[FDModule, ModuleMap]:
    """The submodule generated by ``generators`` and its inclusion."""
    domain = module.field.domain
    spans = closure(module, generators)
    action = {}
    for arrow in module.algebra.quiver.arrows:
        images = [module.apply(arrow.name, vec) for vec in spans[arrow.source]]
        cols = [coordinates(spans[arrow.target], img, domain) for img in images]
        size = len(spans[arrow.target])
        action[arrow.name] = from_entries(
            [[col[k] for col in cols] for k in range(size)], (size, len(cols)), domain
        )
    sub = FDModule(
        module.algebra,
        {v: len(spans[v]) for v in module.vertices},
        action,
        module.field,
        name or f"sub({module.name})",
    )
    inclusion = ModuleMap(
        sub,
        module,
        {v: _basis_matrix(spans[v], module.dims[v], domain) for v in module.vertices},
    )
    return sub, inclusion


def quotient(module: FDModule, spans: dict[str, list[Vector]], name: str = "") -> tuple[FDModule, ModuleMap]:
    """``module`` modulo the submodule with bases ``spans``, and the projection.

    The quotient basis at each vertex is the set of standard vectors completing the
    submodule basis, chosen greedily in order.
    """
    domain = module.field.domain
    complements = {}
    for v in module.vertices:
        size = module.dims[v]
        standard = [_standard(k, size, domain) for k in range(size)]
        chosen = independent_indices(standard, domain, start=spans.get(v, []))
        complements[v] = [standard[k] for k in chosen]

    def _project(v: str, vec: Vector) -> Vector:
        sub = spans.get(v, [])
        coords = coordinates(sub + complements[v], vec, domain)
        return coords[len(sub):]

    action = {}
    for arrow in module.algebra.quiver.arrows:
        cols = [
            _project(arrow.target, module.apply(arrow.name, vec))
            for vec in complements[arrow.source]
        ]
        size = len(complements[arrow.target])
        action[arrow.name] = from_entries(
            [[col[k] for col in cols] for k in range(size)], (size, len(cols)), domain
        )
    result = FDModule(
        module.algebra,
        {v: len(complements[v]) for v in module.vertices},
        action,
        module.field,
        name or f"{module.name}/sub",
    )

    projection = {}
    for v in module.vertices:
        size = len(complements[v])
        cols = [_project(v, _standard(k, module.dims[v], domain)) for k in range(module.dims[v])]
        projection[v] = from_entries(
            [[col[k] for col in cols] for k in range(size)], (size, module.dims[v]), domain
        )
    return result, ModuleMap(module, result, projection)


def image(f: ModuleMap) -> dict[str, list[Vector]]:
    """Bases of the image of ``f`` inside ``f.target``."""
    return closure(f.target, {v: f.image_vectors(v) for v in f.source.vertices})


def kernel(f: ModuleMap) -> tuple[FDModule, ModuleMap]:
    """The kernel of ``f`` as a submodule of ``f.source``."""
    generators = {}
    for v in f.source.vertices:
        if f.source.dims[v] == 0:
            continue
        m = f.components[v]
        if m.shape[0] == 0:
            generators[v] = [
                _standard(k, f.source.dims[v], f.source.field.domain)
                for k in range(f.source.dims[v])
            ]
        else:
            generators[v] = [[row[0] for row in entries(vec)] for vec in kernel_basis(m)]
    return submodule(f.source, generators, name=f"ker({f.source.name})")


def direct_sum(modules: list[FDModule], name: str = "") -> FDModule:
    """Block-diagonal direct sum of modules over the same algebra."""
    if not modules:
        raise ValueError("An empty direct sum needs an algebra; use zero_module")
    first = modules[0]
    domain = first.field.domain
    dims = {v: sum(m.dims[v] for m in modules) for v in first.vertices}
    action = {}
    for arrow in first.algebra.quiver.arrows:
        rows_total, cols_total = dims[arrow.target], dims[arrow.source]
        rows = [[domain.zero] * cols_total for _ in range(rows_total)]
        r0 = c0 = 0
        for m in modules:
            block = entries(m.action[arrow.name])
            for r, row in enumerate(block):
                for c, x in enumerate(row):
                    rows[r0 + r][c0 + c] = x
            r0 += m.dims[arrow.target]
            c0 += m.dims[arrow.source]
        action[arrow.name] = from_entries(rows, (rows_total, cols_total), domain)
    return FDModule(
        first.algebra, dims, action, first.field, name or " + ".join(m.name for m in modules)
    )


def zero_module(algebra: AlgebraPresentation, field: Field = RATIONALS) -> FDModule:
    return FDModule(algebra, {}, {}, field, "0")


def simple_module(algebra: AlgebraPresentation, vertex: str, field: Field = RATIONALS) -> FDModule:
    return FDModule(algebra, {vertex: 1}, {}, field, f"L({vertex})")


def top_and_radical(module: FDModule) -> tuple[dict[str, int], tuple[FDModule, ModuleMap]]:
    """Top multiplicities and the radical, the sum of the images of all arrows."""
    generators = {v: [] for v in module.vertices}
    for arrow in module.algebra.quiver.arrows:
        m = module.action[arrow.name]
        rows = entries(m)
        generators[arrow.target].extend(
            [[row[c] for row in rows] for c in range(m.shape[1])]
        )
    radical, inclusion = submodule(module, generators, name=f"rad({module.name})")
    top = {v: module.dims[v] - radical.dims[v] for v in module.vertices}
    return top, (radical, inclusion)

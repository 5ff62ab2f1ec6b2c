"""Representations of a differential biquiver and the morphisms between them.

A morphism ``f: M -> N`` has a matrix ``f_i: M_i -> N_i`` for each vertex and a matrix
``f_phi: M_i -> N_j`` for each dashed arrow ``phi: i --> j``. For every solid arrow ``a``
with ``d(a) = sum lambda * u * phi * v`` it satisfies

    sum lambda N_u f_phi M_v = N_a f_i - f_j M_a.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from sympy.polys.matrices import DomainMatrix

from bocs_engine.dbq.differential import DifferentialBiquiver
from bocs_engine.errors import InconsistentSystemError, InverseConstructionError
from bocs_engine.findim import projective
from bocs_engine.linalg import RATIONALS, Field, identity, inverse, is_invertible, matrices_equal, zeros
from bocs_engine.linalg.matrices import column, entries, from_entries, kernel_basis, solve
from bocs_engine.logger import logger
from bocs_engine.pathalg import algebra_basis

Word = tuple[str, ...]


@dataclass
class DbqRep:
    """A representation of the solid arrows that kills every relation generator.

    Attributes:
        dbq: The differential biquiver.
        dims: Dimension at each vertex. Missing vertices are 0.
        action: Matrix of each solid arrow. Missing arrows act by zero.
        field: Ground field of the matrices.
        name: A label for logs.
    """

    dbq: DifferentialBiquiver
    dims: dict[str, int] = field(default_factory=dict)
    action: dict[str, DomainMatrix] = field(default_factory=dict)
    field: Field = RATIONALS
    name: str = "M"
    check: bool = True

    def __post_init__(self) -> None:
        quiver = self.dbq.biquiver
        self.dims = {v: int(self.dims.get(v, 0)) for v in quiver.vertices}
        for arrow in quiver.solid_arrows:
            shape = (self.dims[arrow.target], self.dims[arrow.source])
            matrix = self.action.get(arrow.name)
            if matrix is None:
                self.action[arrow.name] = zeros(*shape, self.field)
            # Check that a valid matrix has been given for each solid arrow
            elif matrix.shape != shape:
                raise ValueError(
                    f"Arrow {arrow.name} of {self.name} needs a {shape} matrix, got {matrix.shape}"
                )
        if self.check and not self.satisfies_relations():
            raise ValueError(f"{self.name} does not satisfy the relations of {self.dbq.name}")

    @property
    def dimension_vector(self) -> tuple[int, ...]:
        return tuple(self.dims[v] for v in self.dbq.vertices)

    def word_matrix(self, word: Word, source: str) -> DomainMatrix:
        """The matrix of a solid word starting at ``source`` (last letter first)."""
        result = identity(self.dims[source], self.field)
        for name in reversed(word):
            result = self.action[name] * result
        return result

    def satisfies_relations(self) -> bool:
        for generator in self.dbq.ideal:
            total = zeros(self.dims[generator.target], self.dims[generator.source], self.field)
            for word, coeff in generator.items():
                total = total + self.word_matrix(word, generator.source) * self.field(coeff)
            if any(x for row in entries(total) for x in row):
                return False
        return True


@dataclass
class DbqMorphism:
    """A morphism of representations of a differential biquiver.

    Attributes:
        source: The domain representation.
        target: The codomain representation.
        vertex: ``f_i`` for each vertex.
        dashed: ``f_phi`` for each dashed arrow, along the arrow's direction.
    """

    source: DbqRep
    target: DbqRep
    vertex: dict[str, DomainMatrix] = field(default_factory=dict)
    dashed: dict[str, DomainMatrix] = field(default_factory=dict)

    def __post_init__(self) -> None:
        quiver = self.source.dbq.biquiver
        fld = self.source.field
        for v in quiver.vertices:
            if v not in self.vertex:
                self.vertex[v] = zeros(self.target.dims[v], self.source.dims[v], fld)
        for arrow in quiver.dashed_arrows:
            if arrow.name not in self.dashed:
                self.dashed[arrow.name] = zeros(
                    self.target.dims[arrow.target], self.source.dims[arrow.source], fld
                )

    def flatten(self) -> list:
        parts = [self.vertex[v] for v in self.source.dbq.vertices]
        parts += [self.dashed[a.name] for a in self.source.dbq.biquiver.dashed_arrows]
        return [x for m in parts for row in entries(m) for x in row]

    def vertex_part(self) -> tuple[DomainMatrix, ...]:
        return tuple(self.vertex[v] for v in self.source.dbq.vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DbqMorphism):
            return NotImplemented
        return (
            self.vertex.keys() == other.vertex.keys()
            and self.dashed.keys() == other.dashed.keys()
            and all(matrices_equal(m, other.vertex[v]) for v, m in self.vertex.items())
            and all(matrices_equal(m, other.dashed[a]) for a, m in self.dashed.items())
        )


def _split_dashed(dbq: DifferentialBiquiver, word: Word) -> list[tuple[Word, str, Word]]:
    """Positions of dashed letters: (left word, dashed letter, right word)."""
    quiver = dbq.biquiver
    return [
        (word[:k], name, word[k + 1 :])
        for k, name in enumerate(word)
        if quiver.degree(name) == 1
    ]


def _unknowns(dbq: DifferentialBiquiver, m: DbqRep, n: DbqRep) -> dict[tuple, int]:
    index = {}
    for v in dbq.vertices:
        for r in range(n.dims[v]):
            for c in range(m.dims[v]):
                index[("v", v, r, c)] = len(index)
    for arrow in dbq.biquiver.dashed_arrows:
        for r in range(n.dims[arrow.target]):
            for c in range(m.dims[arrow.source]):
                index[("d", arrow.name, r, c)] = len(index)
    return index


def _morphism_equations(dbq: DifferentialBiquiver, m: DbqRep, n: DbqRep, index: dict[tuple, int]) -> list[list]:
    """One row per entry of ``sum lambda N_u f_phi M_v - N_a f_i + f_j M_a = 0``."""
    domain = m.field.domain
    rows = []
    for arrow in dbq.biquiver.solid_arrows:
        i, j = arrow.source, arrow.target
        na, ma = entries(n.action[arrow.name]), entries(m.action[arrow.name])
        block = [[[domain.zero] * len(index) for _ in range(m.dims[i])] for _ in range(n.dims[j])]
        for r in range(n.dims[j]):
            for c in range(m.dims[i]):
                for k in range(n.dims[i]):
                    block[r][c][index[("v", i, k, c)]] -= na[r][k]
                for k in range(m.dims[j]):
                    block[r][c][index[("v", j, r, k)]] += ma[k][c]
        for word, coeff in dbq.d(arrow.name).items():
            for left, phi, right in _split_dashed(dbq, word):
                phi_arrow = dbq.biquiver.arrow(phi)
                nu = entries(n.word_matrix(left, phi_arrow.target))
                mv = entries(m.word_matrix(right, i))
                lam = m.field(coeff)
                for r in range(n.dims[j]):
                    for c in range(m.dims[i]):
                        row = block[r][c]
                        for k in range(n.dims[phi_arrow.target]):
                            if not nu[r][k]:
                                continue
                            for l in range(m.dims[phi_arrow.source]):
                                if mv[l][c]:
                                    row[index[("d", phi, k, l)]] += lam * nu[r][k] * mv[l][c]
        rows.extend(row for block_row in block for row in block_row)
    return rows


def _assemble(dbq: DifferentialBiquiver, m: DbqRep, n: DbqRep, index: dict[tuple, int], values: list) -> DbqMorphism:
    domain = m.field.domain
    vertex, dashed = {}, {}
    for v in dbq.vertices:
        shape = (n.dims[v], m.dims[v])
        vertex[v] = from_entries(
            [[values[index[("v", v, r, c)]] for c in range(shape[1])] for r in range(shape[0])],
            shape,
            domain,
        )
    for arrow in dbq.biquiver.dashed_arrows:
        shape = (n.dims[arrow.target], m.dims[arrow.source])
        dashed[arrow.name] = from_entries(
            [[values[index[("d", arrow.name, r, c)]] for c in range(shape[1])] for r in range(shape[0])],
            shape,
            domain,
        )
    return DbqMorphism(m, n, vertex, dashed)


def morphism_space(dbq: DifferentialBiquiver, m: DbqRep, n: DbqRep) -> list[DbqMorphism]:
    """A basis of all morphisms ``m -> n``."""
    index = _unknowns(dbq, m, n)
    if not index:
        return []
    domain = m.field.domain
    rows = _morphism_equations(dbq, m, n, index)
    if rows:
        solutions = [
            [row[0] for row in entries(vec)]
            for vec in kernel_basis(from_entries(rows, (len(rows), len(index)), domain))
        ]
    else:
        solutions = [
            [domain.one if k == j else domain.zero for k in range(len(index))]
            for j in range(len(index))
        ]
    return [_assemble(dbq, m, n, index, values) for values in solutions]


def is_morphism(dbq: DifferentialBiquiver, f: DbqMorphism) -> bool:
    index = _unknowns(dbq, f.source, f.target)
    values = [None] * len(index)
    for (kind, name, r, c), k in index.items():
        matrix = f.vertex[name] if kind == "v" else f.dashed[name]
        values[k] = entries(matrix)[r][c]
    return all(
        sum((x * y for x, y in zip(row, values)), f.source.field.zero) == f.source.field.zero
        for row in _morphism_equations(dbq, f.source, f.target, index)
    )


def identity_morphism(m: DbqRep) -> DbqMorphism:
    return DbqMorphism(m, m, {v: identity(m.dims[v], m.field) for v in m.dbq.vertices})


def compose(dbq: DifferentialBiquiver, g: DbqMorphism, f: DbqMorphism) -> DbqMorphism:
    """``g o f`` for ``f: U -> V`` and ``g: V -> W``.

    (g o f)_i = g_i f_i and, for ``phi: i --> j`` with
    ``d(phi) = sum lambda c psi c' psi' c''``,

        (g o f)_phi = g_j f_phi + g_phi f_i + sum lambda W_c g_psi V_c' f_psi' U_c''.
    """
    u, v, w = f.source, f.target, g.target
    vertex = {x: g.vertex[x] * f.vertex[x] for x in dbq.vertices}
    dashed = {}
    for arrow in dbq.biquiver.dashed_arrows:
        i, j = arrow.source, arrow.target
        total = g.vertex[j] * f.dashed[arrow.name] + g.dashed[arrow.name] * f.vertex[i]
        for word, coeff in dbq.d(arrow.name).items():
            outer, psi, rest = _split_dashed(dbq, word)[0]
            middle, psi2, inner = _split_dashed(dbq, rest)[0]
            psi_arrow = dbq.biquiver.arrow(psi)
            psi2_arrow = dbq.biquiver.arrow(psi2)
            term = (
                w.word_matrix(outer, psi_arrow.target)
                * g.dashed[psi]
                * v.word_matrix(middle, psi2_arrow.target)
                * f.dashed[psi2]
                * u.word_matrix(inner, i)
            )
            total = total + term * u.field(coeff)
        dashed[arrow.name] = total
    return DbqMorphism(u, w, vertex, dashed)


def inverse_morphism(dbq: DifferentialBiquiver, f: DbqMorphism) -> DbqMorphism:
    """The two-sided inverse of ``f``, whose vertex components must all be invertible.

    The dashed components solve ``(g o f)_phi = 0``, a linear system once ``g_i = f_i^-1``
    is fixed.

    Raises:
        InverseConstructionError: if the solved components do not give a two-sided inverse.
    """
    m, n = f.source, f.target
    fld = m.field
    domain = fld.domain
    g_vertex = {v: inverse(f.vertex[v]) for v in dbq.vertices}

    index = {}
    for arrow in dbq.biquiver.dashed_arrows:
        for r in range(m.dims[arrow.target]):
            for c in range(n.dims[arrow.source]):
                index[(arrow.name, r, c)] = len(index)

    def _candidate(values: list) -> DbqMorphism:
        dashed = {}
        for arrow in dbq.biquiver.dashed_arrows:
            shape = (m.dims[arrow.target], n.dims[arrow.source])
            dashed[arrow.name] = from_entries(
                [[values[index[(arrow.name, r, c)]] for c in range(shape[1])] for r in range(shape[0])],
                shape,
                domain,
            )
        return DbqMorphism(n, m, dict(g_vertex), dashed)

    # (g o f)_phi is affine in the unknowns: read it off at zero and at each unit vector
    base = compose(dbq, _candidate([domain.zero] * len(index)), f)
    constant = [x for a in dbq.biquiver.dashed_arrows for row in entries(base.dashed[a.name]) for x in row]
    columns = []
    for k in range(len(index)):
        unit = [domain.one if j == k else domain.zero for j in range(len(index))]
        image = compose(dbq, _candidate(unit), f)
        values = [x for a in dbq.biquiver.dashed_arrows for row in entries(image.dashed[a.name]) for x in row]
        columns.append([x - y for x, y in zip(values, constant)])

    if index and constant:
        system = from_entries(
            [[col[r] for col in columns] for r in range(len(constant))],
            (len(constant), len(index)),
            domain,
        )
        try:
            solution = solve(system, column([-x for x in constant], domain)).particular
        except InconsistentSystemError:
            raise InverseConstructionError(
                f"No dashed components invert the morphism {m.name} -> {n.name}"
            )
        values = [row[0] for row in entries(solution)]
    else:
        values = []
    g = _candidate(values)

    if not (
        is_morphism(dbq, g)
        and compose(dbq, g, f) == identity_morphism(m)
        and compose(dbq, f, g) == identity_morphism(n)
    ):
        raise InverseConstructionError(
            f"The constructed inverse of {m.name} -> {n.name} is not two-sided"
        )
    return g


def is_isomorphism(dbq: DifferentialBiquiver, f: DbqMorphism) -> bool:
    """Whether ``f`` is invertible: every ``f_i`` is, and a two-sided inverse is built."""
    if not all(is_invertible(f.vertex[v]) for v in dbq.vertices):
        return False
    inverse_morphism(dbq, f)
    return True


def right_algebra_dim(dbq: DifferentialBiquiver) -> int:
    """dim End(P_B(1) + ... + P_B(n)) in the category of representations of ``dbq``.

    P_B(i) is the projective representation of the solid algebra at vertex i.
    """
    basis = algebra_basis(dbq.solid_algebra())
    reps = []
    for v in dbq.vertices:
        p = projective(basis, v)
        reps.append(DbqRep(dbq, dict(p.dims), dict(p.action), p.field, f"P_B({v})"))
    total = sum(len(morphism_space(dbq, m, n)) for m in reps for n in reps)
    logger.debug(f"Right algebra of {dbq.name} has dimension {total}")
    return total

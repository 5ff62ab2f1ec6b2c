"""Exact dense matrices over the rationals or a prime field.

Matrices are ``sympy`` ``DomainMatrix`` objects. The helpers below add the
operations the rest of the package needs on top of ``DomainMatrix.rref``: a kernel
basis, the solution space of a linear system, and greedy selection of independent
vectors.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from sympy.polys.matrices import DomainMatrix

from bocs_engine.errors import InconsistentSystemError
from bocs_engine.linalg.fields import Field


class RowReduction(NamedTuple):
    rank: int
    reduced: DomainMatrix
    pivots: tuple[int, ...]


class SolutionSpace(NamedTuple):
    """Solutions of ``m * x = rhs``: ``particular`` plus any combination of ``kernel``."""

    particular: DomainMatrix
    kernel: list[DomainMatrix]


def field_of(m: DomainMatrix) -> Field:
    return Field(m.domain.characteristic())


def matrix(rows: Sequence[Sequence], field: Field, cols: int | None = None) -> DomainMatrix:
    """Build a matrix from nested sequences of integers or rationals."""
    n_rows = len(rows)
    n_cols = cols if cols is not None else (len(rows[0]) if n_rows else 0)
    converted = [[field(x) for x in row] for row in rows]
    if any(len(row) != n_cols for row in converted):
        raise ValueError("All rows of a matrix must have the same length")
    return DomainMatrix(converted, (n_rows, n_cols), field.domain)


def from_entries(rows: list[list], shape: tuple[int, int], domain) -> DomainMatrix:
    """Wrap entries that already live in ``domain``."""
    if shape[0] == 0:
        rows = []
    return DomainMatrix(rows, shape, domain)


def zeros(rows: int, cols: int, field: Field) -> DomainMatrix:
    return DomainMatrix.zeros((rows, cols), field.domain)


def identity(n: int, field: Field) -> DomainMatrix:
    return DomainMatrix.eye(n, field.domain)


def entries(m: DomainMatrix) -> list[list]:
    rows, cols = m.shape
    if rows == 0:
        return []
    if cols == 0:
        return [[] for _ in range(rows)]
    return m.to_list()


def column(values: Sequence, domain) -> DomainMatrix:
    return from_entries([[v] for v in values], (len(values), 1), domain)


def flatten(m: DomainMatrix) -> list:
    """Entries of ``m`` in row-major order."""
    return [x for row in entries(m) for x in row]


def is_zero_matrix(m: DomainMatrix) -> bool:
    zero = m.domain.zero
    return all(x == zero for row in entries(m) for x in row)


def matrices_equal(a: DomainMatrix, b: DomainMatrix) -> bool:
    """Entrywise equality. ``==`` on ``DomainMatrix`` also compares the dense or sparse storage."""
    return a.shape == b.shape and a.domain == b.domain and entries(a) == entries(b)


def rref(m: DomainMatrix) -> RowReduction:
    """Reduced row-echelon form, rank and pivot columns of ``m``."""
    rows, cols = m.shape
    if rows == 0 or cols == 0:
        return RowReduction(0, m, ())
    reduced, pivots = m.rref()
    pivots = tuple(pivots)
    return RowReduction(len(pivots), reduced, pivots)


def rank(m: DomainMatrix) -> int:
    return rref(m).rank


def kernel_basis(m: DomainMatrix) -> list[DomainMatrix]:
    """Column vectors spanning the null space of ``m``, one per free column."""
    _, cols = m.shape
    domain = m.domain
    reduction = rref(m)
    table = entries(reduction.reduced)
    basis = []
    for free in (c for c in range(cols) if c not in reduction.pivots):
        vector = [domain.zero] * cols
        vector[free] = domain.one
        for row, pivot in enumerate(reduction.pivots):
            vector[pivot] = -table[row][free]
        basis.append(column(vector, domain))
    return basis


def solve(m: DomainMatrix, rhs: DomainMatrix) -> SolutionSpace:
    """Solve ``m * x = rhs`` exactly.

    Raises:
        InconsistentSystemError: when no ``x`` exists.
    """
    rows, cols = m.shape
    if rows != rhs.shape[0]:
        raise ValueError(f"Row counts differ: {rows} and {rhs.shape[0]}")

    domain = m.domain
    width = rhs.shape[1]
    if cols == 0:
        if not is_zero_matrix(rhs):
            raise InconsistentSystemError("The system has no solution")
        return SolutionSpace(zeros(0, width, field_of(m)), [])

    reduction = rref(m.hstack(rhs))
    if any(p >= cols for p in reduction.pivots):
        raise InconsistentSystemError("The system has no solution")

    table = entries(reduction.reduced)
    particular = [[domain.zero] * width for _ in range(cols)]
    for row, pivot in enumerate(reduction.pivots):
        particular[pivot] = list(table[row][cols:])
    return SolutionSpace(from_entries(particular, (cols, width), domain), kernel_basis(m))


def is_invertible(m: DomainMatrix) -> bool:
    rows, cols = m.shape
    return rows == cols and rank(m) == rows


def inverse(m: DomainMatrix) -> DomainMatrix:
    if not is_invertible(m):
        raise InconsistentSystemError("The matrix is not invertible")
    if m.shape[0] == 0:
        return m
    return solve(m, DomainMatrix.eye(m.shape[0], m.domain)).particular


def independent_indices(vectors: Sequence[Sequence], domain, start: Sequence[Sequence] = ()) -> list[int]:
    """Indices of ``vectors`` that extend the span of ``start``, chosen greedily in order."""
    basis: list[list] = []
    pivots: list[int] = []
    chosen = []

    def _reduce(vector: list) -> list:
        vector = list(vector)
        for row, pivot in zip(basis, pivots):
            coeff = vector[pivot]
            if coeff != domain.zero:
                vector = [v - coeff * r for v, r in zip(vector, row)]
        return vector

    def _absorb(vector: list) -> bool:
        reduced = _reduce(vector)
        lead = next((k for k, v in enumerate(reduced) if v != domain.zero), None)
        if lead is None:
            return False
        scale = domain.quo(domain.one, reduced[lead])
        reduced = [scale * v for v in reduced]
        # keep the stored rows fully reduced against each other
        for k, row in enumerate(basis):
            coeff = row[lead]
            if coeff != domain.zero:
                basis[k] = [r - coeff * v for r, v in zip(row, reduced)]
        basis.append(reduced)
        pivots.append(lead)
        return True

    for vector in start:
        _absorb(vector)
    for index, vector in enumerate(vectors):
        if _absorb(vector):
            chosen.append(index)
    return chosen


def coordinates(basis: Sequence[Sequence], vector: Sequence, domain) -> list:
    """Coefficients expressing ``vector`` in the linearly independent ``basis``.

    Raises:
        InconsistentSystemError: when ``vector`` is outside the span.
    """
    length = len(vector)
    if not basis:
        if any(v != domain.zero for v in vector):
            raise InconsistentSystemError("The vector is outside the span")
        return []
    m = from_entries(
        [[b[k] for b in basis] for k in range(length)], (length, len(basis)), domain
    )
    return [row[0] for row in entries(solve(m, column(list(vector), domain)).particular)]

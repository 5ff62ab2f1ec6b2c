"""Brute-force count of indecomposable representations over a small prime field.

Every representation within the dimension caps is enumerated, in lexicographic order of
dimension vectors and then of matrix entries. A representation is indecomposable when
the vertex parts of its endomorphisms form a local ring (each one is invertible or
nilpotent). Indecomposables are grouped into isomorphism classes; the first one seen
represents its class.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from bocs_engine.config import ORACLE_BUDGET, ORACLE_PRIMES
from bocs_engine.dbq.biquiver import BiArrow, BiQuiver
from bocs_engine.dbq.differential import CompatibleIdeal, DifferentialBiquiver
from bocs_engine.dbq.mixed import as_mixed
from bocs_engine.dbq.representations import (
    DbqMorphism,
    DbqRep,
    is_isomorphism,
    morphism_space,
)
from bocs_engine.errors import SearchSpaceError
from bocs_engine.linalg import Field, is_invertible
from bocs_engine.linalg.matrices import from_entries, is_zero_matrix
from bocs_engine.logger import logger
from bocs_engine.pathalg import AlgebraPresentation


@dataclass
class OracleResult:
    """Isomorphism classes of indecomposables found within the caps.

    Attributes:
        characteristic: The prime p of the ground field.
        caps: The largest dimension tried at each vertex.
        representatives: One representation per class, in the order found.
        examined: How many representations were enumerated.
    """

    characteristic: int
    caps: dict[str, int]
    representatives: list[DbqRep] = field(default_factory=list)
    examined: int = 0

    @property
    def count(self) -> int:
        return len(self.representatives)

    def dimension_vectors(self) -> list[tuple[int, ...]]:
        return [rep.dimension_vector for rep in self.representatives]


def regular_bocs(presentation: AlgebraPresentation) -> DifferentialBiquiver:
    """The bocs whose representations are the modules of ``presentation``.

    It has the solid arrows and relations of the algebra, no dashed arrows and zero
    differential.
    """
    quiver = presentation.quiver
    return DifferentialBiquiver(
        BiQuiver(list(quiver.vertices), [BiArrow(a.name, a.source, a.target) for a in quiver.arrows]),
        {},
        CompatibleIdeal([as_mixed(r) for r in presentation.relations]),
        f"regular({presentation.name})",
    )


def _dimension_vectors(vertices: list[str], caps: dict[str, int]):
    for dims in itertools.product(*(range(caps.get(v, 0) + 1) for v in vertices)):
        if any(dims):
            yield dict(zip(vertices, dims))


def _search_size(dbq: DifferentialBiquiver, caps: dict[str, int], p: int) -> int:
    total = 0
    for dims in _dimension_vectors(dbq.vertices, caps):
        entries = sum(dims[a.target] * dims[a.source] for a in dbq.biquiver.solid_arrows)
        total += p**entries
    return total


def _representations(dbq: DifferentialBiquiver, dims: dict[str, int], fld: Field):
    arrows = dbq.biquiver.solid_arrows
    shapes = [(dims[a.target], dims[a.source]) for a in arrows]
    sizes = [r * c for r, c in shapes]
    for values in itertools.product(fld.elements(), repeat=sum(sizes)):
        action, start = {}, 0
        for arrow, (r, c), size in zip(arrows, shapes, sizes):
            chunk = values[start : start + size]
            action[arrow.name] = from_entries(
                [list(chunk[k * c : (k + 1) * c]) for k in range(r)], (r, c), fld.domain
            )
            start += size
        rep = DbqRep(dbq, dict(dims), action, fld, check=False)
        if rep.satisfies_relations():
            yield rep


def _combine(matrices: list, coeffs: tuple, zero):
    total = zero
    for m, c in zip(matrices, coeffs):
        if c:
            total = total + m * c
    return total


def _combinations(basis: list[DbqMorphism], fld: Field):
    """Every linear combination of ``basis`` with its vertex part."""
    parts = [f.vertex_part() for f in basis]
    for coeffs in itertools.product(fld.elements(), repeat=len(basis)):
        yield coeffs, tuple(
            _combine([p[k] for p in parts], coeffs, parts[0][k] * fld.zero)
            for k in range(len(parts[0]))
        )


def _is_nilpotent(m) -> bool:
    n = m.shape[0]
    if n == 0:
        return True
    power = m
    for _ in range(n - 1):
        power = power * m
    return is_zero_matrix(power)


def is_indecomposable(dbq: DifferentialBiquiver, rep: DbqRep) -> bool:
    """Whether every endomorphism has a vertex part that is invertible or nilpotent."""
    basis = morphism_space(dbq, rep, rep)
    if not basis:
        return False
    for _, parts in _combinations(basis, rep.field):
        invertible = all(is_invertible(m) for m in parts)
        nilpotent = all(_is_nilpotent(m) for m in parts)
        if not (invertible or nilpotent):
            return False
    return True


def isomorphic(dbq: DifferentialBiquiver, first: DbqRep, second: DbqRep) -> bool:
    """Search Hom(first, second) for a morphism with invertible vertex part."""
    if first.dimension_vector != second.dimension_vector:
        return False
    basis = morphism_space(dbq, first, second)
    if not basis:
        return False
    for coeffs, parts in _combinations(basis, first.field):
        if all(is_invertible(m) for m in parts):
            candidate = DbqMorphism(
                first,
                second,
                {v: m for v, m in zip(dbq.vertices, parts)},
                {
                    name: _combine(
                        [f.dashed[name] for f in basis], coeffs, basis[0].dashed[name] * first.field.zero
                    )
                    for name in basis[0].dashed
                },
            )
            return is_isomorphism(dbq, candidate)
    return False


def enumerate_indecomposables(
    dbq: DifferentialBiquiver, characteristic: int, caps: dict[str, int], budget: int = ORACLE_BUDGET
) -> OracleResult:
    """Count isomorphism classes of indecomposable representations within ``caps``.

    Args:
        dbq: The differential biquiver.
        characteristic: The prime p; one of ``config.ORACLE_PRIMES``.
        caps: The largest dimension to try at each vertex. Missing vertices are 0.
        budget: The largest number of representations to enumerate.

    Raises:
        SearchSpaceError: when the caps need more than ``budget`` representations.
    """
    # Check that a valid characteristic has been requested
    if characteristic not in ORACLE_PRIMES:
        raise ValueError(f"Characteristic must be one of {ORACLE_PRIMES}, got {characteristic}")

    size = _search_size(dbq, caps, characteristic)
    if size > budget:
        raise SearchSpaceError(
            f"Enumerating {dbq.name} within {caps} over GF({characteristic}) needs "
            f"{size} representations; the budget is {budget}"
        )

    fld = Field(characteristic)
    result = OracleResult(characteristic, dict(caps))
    for dims in _dimension_vectors(dbq.vertices, caps):
        for rep in _representations(dbq, dims, fld):
            result.examined += 1
            if not is_indecomposable(dbq, rep):
                continue
            if any(isomorphic(dbq, known, rep) for known in result.representatives):
                continue
            rep.name = f"X{len(result.representatives) + 1}"
            result.representatives.append(rep)

    logger.info(
        f"{dbq.name}: {result.count} indecomposables over GF({characteristic}) within {caps}"
    )
    return result

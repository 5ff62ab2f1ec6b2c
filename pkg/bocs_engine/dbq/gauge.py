"""Comparison of differential biquivers up to rescaling arrows by signs.

Rescaling every arrow x by s_x in {1, -1} is an isomorphism of differential biquivers.
Two differentials agree up to such a rescaling when a system over GF(2) is solvable:
for each term w of d(x) with the same absolute coefficient on both sides,
e_x + sum(e_y for y in w) equals 0 when the signs agree and 1 when they differ.
Relation generators may be rescaled as a whole.
"""

from __future__ import annotations

from bocs_engine.dbq.differential import CompatibleIdeal, DifferentialBiquiver
from bocs_engine.dbq.mixed import MixedElement
from bocs_engine.errors import InconsistentSystemError
from bocs_engine.linalg import Field, solve
from bocs_engine.linalg.matrices import column, entries, from_entries
from bocs_engine.logger import logger

SIGNS = Field(2)


def _compare(left, right, unknowns, index, own) -> list[tuple[list[int], int]] | None:
    """Equations for one pair of parallel elements, or None if they cannot match."""
    if set(left.paths()) != set(right.paths()):
        return None
    equations = []
    for word in left.paths():
        a, b = left.coefficient(word), right.coefficient(word)
        if abs(a) != abs(b):
            return None
        row = [0] * len(unknowns)
        for name in word:
            row[index[name]] += 1
        if own is not None:
            row[index[own]] += 1
        equations.append((row, 0 if a == b else 1))
    return equations


def gauge_signs(first: DifferentialBiquiver, second: DifferentialBiquiver) -> dict[str, int] | None:
    """Signs s_x turning ``first`` into ``second``, or None when no rescaling does.

    Both must have the same vertices, arrows and number of relation generators, with the
    generators listed in the same order.
    """
    arrows = [a.name for a in first.biquiver.arrows]
    if (
        first.vertices != second.vertices
        or sorted(map(str, first.biquiver.arrows)) != sorted(map(str, second.biquiver.arrows))
        or len(first.ideal) != len(second.ideal)
    ):
        return None

    relations = [f"relation {k}" for k in range(len(first.ideal))]
    unknowns = arrows + relations
    index = {name: k for k, name in enumerate(unknowns)}

    equations = []
    pairs = [(first.d(x), second.d(x), x) for x in arrows]
    pairs += list(zip(first.ideal, second.ideal, relations))
    for left, right, own in pairs:
        found = _compare(left, right, unknowns, index, own)
        if found is None:
            logger.debug(f"Terms of {own} differ beyond signs")
            return None
        equations.extend(found)

    if not equations:
        return {x: 1 for x in arrows}
    domain = SIGNS.domain
    system = from_entries(
        [[SIGNS(x) for x in row] for row, _ in equations], (len(equations), len(unknowns)), domain
    )
    rhs = column([SIGNS(v) for _, v in equations], domain)
    try:
        solution = solve(system, rhs).particular
    except InconsistentSystemError:
        return None
    values = [row[0] for row in entries(solution)]
    return {x: (-1 if values[index[x]] else 1) for x in arrows}


def gauge_equivalent(first: DifferentialBiquiver, second: DifferentialBiquiver) -> bool:
    return gauge_signs(first, second) is not None


def rescale(dbq: DifferentialBiquiver, signs: dict[str, int]) -> DifferentialBiquiver:
    """Replace each arrow x by s_x x."""
    def _apply(element: MixedElement) -> MixedElement:
        terms = {}
        for word, coeff in element.items():
            sign = 1
            for name in word:
                sign *= signs.get(name, 1)
            terms[word] = coeff * sign
        return MixedElement(terms, element.source, element.target)

    differential = {x: _apply(dx).scale(signs.get(x, 1)) for x, dx in dbq.differential.items()}
    return DifferentialBiquiver(
        dbq.biquiver,
        differential,
        CompatibleIdeal([_apply(g) for g in dbq.ideal]),
        dbq.name,
    )

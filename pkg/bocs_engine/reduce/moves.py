"""The three reduction moves on a differential biquiver.

* regularisation removes a solid arrow ``a`` with ``d(a) = lambda v + rest`` together with
  the dashed arrow ``v``;
* minimal edge reduction of a solid arrow ``a: i -> j`` with ``d(a) = 0`` adds a vertex
  for the image of ``a`` and replaces every arrow by a block matrix of new arrows;
* elimination removes a solid arrow that a relation generator expresses through others.
"""

from __future__ import annotations

from dataclasses import dataclass

from sympy.polys.domains import QQ

from bocs_engine.dbq import (
    DASHED,
    BiArrow,
    BiQuiver,
    CompatibleIdeal,
    DifferentialBiquiver,
    MixedElement,
    ideal_member,
    letter,
)
from bocs_engine.errors import MoveError
from bocs_engine.logger import logger


@dataclass(frozen=True)
class Superfluous:
    """A non-regular arrow: ``d(arrow) = coefficient * dashed + remainder``."""

    arrow: str
    dashed: str
    coefficient: object
    remainder: MixedElement


@dataclass(frozen=True)
class Eliminable:
    """A relation generator ``coefficient * arrow + remainder`` with ``arrow`` not in the remainder."""

    generator: int
    arrow: str
    coefficient: object
    remainder: MixedElement


# ------------------------------ Helpers ------------------------------ #


def _drop(dbq: DifferentialBiquiver, removed: dict[str, MixedElement], name: str) -> DifferentialBiquiver:
    """Substitute ``removed`` everywhere and delete those arrows."""
    quiver = dbq.biquiver

    def _image(x: str):
        return removed.get(x)

    arrows = [a for a in quiver.arrows if a.name not in removed]
    differential = {
        x: dx.expand(_image) for x, dx in dbq.differential.items() if x not in removed
    }
    generators = [g.expand(_image) for g in dbq.ideal]
    return DifferentialBiquiver(
        BiQuiver(list(quiver.vertices), arrows),
        differential,
        CompatibleIdeal([g for g in generators if not g.is_zero()]),
        name,
    )


def _zero_like(dbq: DifferentialBiquiver, name: str) -> MixedElement:
    arrow = dbq.biquiver.arrow(name)
    return MixedElement.zero(arrow.source, arrow.target)


# ------------------------------ Regularisation ------------------------------ #


def superfluous_match(dbq: DifferentialBiquiver, name: str) -> Superfluous | None:
    """The regularisation data of one solid arrow, if it is non-regular."""
    quiver = dbq.biquiver
    arrow = quiver.arrow(name)
    if not arrow.solid:
        return None
    dx = dbq.d(name)
    for word, coeff in dx.items():
        if len(word) != 1 or quiver.degree(word[0]) != DASHED:
            continue
        v = word[0]
        remainder = MixedElement(
            {w: c for w, c in dx.items() if w != word}, dx.source, dx.target
        )
        if v in remainder.arrows():
            continue
        return Superfluous(name, v, coeff, remainder)
    return None


def find_superfluous(dbq: DifferentialBiquiver) -> Superfluous | None:
    """The first non-regular solid arrow in arrow order, if any."""
    for arrow in dbq.biquiver.solid_arrows:
        match = superfluous_match(dbq, arrow.name)
        if match is not None:
            return match
    return None


def regularise(dbq: DifferentialBiquiver, match: Superfluous) -> DifferentialBiquiver:
    """Delete ``match.arrow`` and ``match.dashed``, setting the dashed arrow to
    ``-remainder / coefficient`` and the solid arrow to zero everywhere."""
    replacement = match.remainder.scale(-QQ.one / match.coefficient)
    removed = {match.dashed: replacement, match.arrow: _zero_like(dbq, match.arrow)}
    logger.debug(f"Regularising {match.arrow} against {match.dashed}")
    return _drop(dbq, removed, dbq.name)


# ------------------------------ Elimination ------------------------------ #


def eliminable_match(dbq: DifferentialBiquiver, name: str | None = None) -> Eliminable | None:
    """The first generator of the form ``lambda x + r`` with x a solid arrow not in r.

    With ``name`` only that arrow is considered.
    """
    quiver = dbq.biquiver
    for k, generator in enumerate(dbq.ideal):
        for word, coeff in generator.items():
            if len(word) != 1 or (name is not None and word[0] != name):
                continue
            if quiver.degree(word[0]) == DASHED:
                continue
            remainder = MixedElement(
                {w: c for w, c in generator.items() if w != word},
                generator.source,
                generator.target,
            )
            if word[0] in remainder.arrows():
                continue
            return Eliminable(k, word[0], coeff, remainder)
    return None


def eliminate_relation_arrow(dbq: DifferentialBiquiver, match: Eliminable | None = None) -> DifferentialBiquiver | None:
    """Remove an arrow that a relation generator writes in terms of other arrows."""
    match = match or eliminable_match(dbq)
    if match is None:
        return None
    replacement = match.remainder.scale(-QQ.one / match.coefficient)
    kept = [g for k, g in enumerate(dbq.ideal) if k != match.generator]
    trimmed = DifferentialBiquiver(dbq.biquiver, dict(dbq.differential), CompatibleIdeal(kept), dbq.name)
    logger.debug(f"Eliminating {match.arrow} through relation {dbq.ideal.generators[match.generator]}")
    return _drop(trimmed, {match.arrow: replacement}, dbq.name)


# ------------------------------ Minimal edge reduction ------------------------------ #


def fresh_vertex(vertices: list[str]) -> str:
    """The smallest integer label from ``len(vertices) + 1`` upwards that is unused."""
    n = len(vertices) + 1
    while str(n) in vertices:
        n += 1
    return str(n)


def _unique(candidate: str, taken: set[str]) -> str:
    while candidate in taken:
        candidate += "'"
    return candidate


def clone_name(name: str, target: str, source: str, taken: set[str]) -> str:
    """``{name}_{target}{source}``, with underscores between long labels and primes on clashes."""
    if len(target) == 1 and len(source) == 1:
        return _unique(f"{name}_{target}{source}", taken)
    return _unique(f"{name}_{target}_{source}", taken)


class _Block:
    """A matrix of mixed elements between the split bases of two old vertices."""

    def __init__(self, rows: list[str], cols: list[str], entries=None):
        self.rows = rows
        self.cols = cols
        self.entries = entries or [
            [MixedElement.zero(c, r) for c in cols] for r in rows
        ]

    def __add__(self, other: _Block) -> _Block:
        return _Block(
            self.rows,
            self.cols,
            [
                [x + y for x, y in zip(row, other_row)]
                for row, other_row in zip(self.entries, other.entries)
            ],
        )

    def __mul__(self, other: _Block) -> _Block:
        result = _Block(self.rows, other.cols)
        for r in range(len(self.rows)):
            for c in range(len(other.cols)):
                total = result.entries[r][c]
                for k in range(len(self.cols)):
                    left, right = self.entries[r][k], other.entries[k][c]
                    if not left.is_zero() and not right.is_zero():
                        total = total + left * right
                result.entries[r][c] = total
        return result

    def scale(self, coeff) -> _Block:
        return _Block(self.rows, self.cols, [[x.scale(coeff) for x in row] for row in self.entries])


@dataclass
class EdgeReduction:
    """The result of a minimal edge reduction.

    Attributes:
        dbq: The reduced differential biquiver.
        fresh: The new vertex.
        source: Source i of the reduced arrow.
        target: Target j of the reduced arrow.
        images: The block F(x) of new arrows for every old arrow x.
    """

    dbq: DifferentialBiquiver
    fresh: str
    source: str
    target: str
    images: dict[str, _Block]


def minimal_edge_reduce(dbq: DifferentialBiquiver, name: str) -> EdgeReduction:
    """Reduce the solid arrow ``name: i -> j`` with zero differential.

    The vertex i is split with basis (new, i) and j with basis (j, new). Each other arrow
    x becomes the block F(x) whose entry at (r, c) is a new arrow c -> r, except the
    entry at (target(x), source(x)), which keeps the name x. The differential of the new
    arrows is read off from

        d F(x) = F(d x) - Omega_t F(x) + (-1)^|x| F(x) Omega_s

    where Omega_i has the dashed arrow ``{a}_s: new --> i`` and Omega_j the dashed arrow
    ``{a}_t: j --> new`` in their off-diagonal slot.

    Raises:
        MoveError: if the arrow is dashed, a loop, or has a nonzero differential.
    """
    quiver = dbq.biquiver
    a = quiver.arrow(name)
    # Check that a valid arrow has been requested
    if not a.solid:
        raise MoveError(f"{name} is dashed; only solid arrows can be reduced")
    if a.source == a.target:
        raise MoveError(f"{name} is a loop; loops cannot be reduced")
    if not dbq.d(name).is_zero():
        raise MoveError(f"d({name}) = {dbq.d(name)} is not zero")

    i, j = a.source, a.target
    new = fresh_vertex(quiver.vertices)
    vertices = list(quiver.vertices)
    vertices.insert(vertices.index(i) + 1, new)

    def basis(v: str) -> list[str]:
        if v == i:
            return [new, i]
        if v == j:
            return [j, new]
        return [v]

    taken = {x.name for x in quiver.arrows}
    arrows: list[BiArrow] = []
    images: dict[str, _Block] = {}
    for x in quiver.arrows:
        rows, cols = basis(x.target), basis(x.source)
        block = _Block(rows, cols)
        if x.name == name:
            block.entries[rows.index(new)][cols.index(new)] = MixedElement.path((), new, new)
            images[x.name] = block
            continue
        for r, row_vertex in enumerate(rows):
            for c, col_vertex in enumerate(cols):
                if (row_vertex, col_vertex) == (x.target, x.source):
                    clone = x.name
                else:
                    clone = clone_name(x.name, row_vertex, col_vertex, taken)
                    taken.add(clone)
                arrows.append(BiArrow(clone, col_vertex, row_vertex, x.degree))
                block.entries[r][c] = MixedElement.path((clone,), col_vertex, row_vertex)
        images[x.name] = block

    iota = _unique(f"{name}_t", taken)
    taken.add(iota)
    pi = _unique(f"{name}_s", taken)
    arrows += [BiArrow(iota, j, new, DASHED), BiArrow(pi, new, i, DASHED)]

    def omega(v: str) -> _Block:
        block = _Block(basis(v), basis(v))
        if v == i:
            block.entries[1][0] = MixedElement.path((pi,), new, i)
        elif v == j:
            block.entries[1][0] = MixedElement.path((iota,), j, new)
        return block

    def image_of(element: MixedElement) -> _Block:
        total = _Block(basis(element.target), basis(element.source))
        for word, coeff in element.items():
            if word:
                product = images[word[0]]
                for letter_name in word[1:]:
                    product = product * images[letter_name]
            else:
                product = _Block(basis(element.source), basis(element.source))
                for k, v in enumerate(product.rows):
                    product.entries[k][k] = MixedElement.path((), v, v)
            total = total + product.scale(coeff)
        return total

    differential: dict[str, MixedElement] = {}
    for x in quiver.arrows:
        if x.name == name:
            continue
        block = images[x.name]
        sign = -1 if x.degree % 2 else 1
        rhs = image_of(dbq.d(x.name)) + (omega(x.target) * block).scale(-1) + (block * omega(x.source)).scale(sign)
        for r, row in enumerate(block.entries):
            for c, entry in enumerate(row):
                (clone,) = entry.paths()[0]
                value = rhs.entries[r][c]
                if not value.is_zero():
                    differential[clone] = value

    generators = []
    for g in dbq.ideal:
        for row in image_of(g).entries:
            generators.extend(entry for entry in row if not entry.is_zero())

    reduced = DifferentialBiquiver(
        BiQuiver(vertices, arrows), differential, CompatibleIdeal(generators), dbq.name
    )
    logger.debug(
        f"Reduced {name}: {i} -> {j} through new vertex {new}; "
        f"{reduced.counts()[0]} vertices, {reduced.counts()[1]} arrows"
    )
    return EdgeReduction(reduced, new, i, j, images)


# ------------------------------ Candidates ------------------------------ #


def reducible(dbq: DifferentialBiquiver, name: str) -> bool:
    """Whether ``name`` is a solid non-loop with zero differential outside the ideal."""
    arrow = dbq.biquiver.arrow(name)
    if not arrow.solid or arrow.source == arrow.target or not dbq.d(name).is_zero():
        return False
    return not (len(dbq.ideal) and ideal_member(dbq.biquiver, letter(dbq.biquiver, name), dbq.ideal.generators))


def live_solid_arrows(dbq: DifferentialBiquiver) -> list[str]:
    """Solid arrows that are not known to lie in the relation ideal."""
    return [
        a.name
        for a in dbq.biquiver.solid_arrows
        if not (len(dbq.ideal) and ideal_member(dbq.biquiver, letter(dbq.biquiver, a.name), dbq.ideal.generators))
    ]


def free_loop(dbq: DifferentialBiquiver) -> str | None:
    """A solid loop whose one-dimensional representations form a family of non-isomorphic ones.

    This holds for a loop l at v when no term of d(l) is made only of l and one dashed
    loop at v, and no relation generator has a term that is a power of l.
    """
    quiver = dbq.biquiver
    for arrow in quiver.solid_arrows:
        if arrow.source != arrow.target:
            continue
        v = arrow.source
        own = {arrow.name} | {x.name for x in quiver.between(v, v, DASHED)}
        if any(set(word) <= own for word in dbq.d(arrow.name).paths()):
            continue
        if any(set(word) == {arrow.name} for g in dbq.ideal for word in g.paths()):
            continue
        return arrow.name
    return None

"""Line-oriented text formats for bocses, algebras and move scripts.

A bocs file::

    bocs d3
    order 1 2 3
    solid a : 1 -> 2
    dashed phi : 1 => 2
    diff c = - b*phi
    rel b*a

An algebra file uses ``algebra``, ``vertices``, ``arrow`` and ``rel``. Words are
written right-to-left with ``*`` (``b*a`` means a, then b); a term may start with an
integer or fraction coefficient. ``#`` starts a comment.
"""

from __future__ import annotations

import re

from bocs_engine.dbq import (
    DASHED,
    SOLID,
    BiArrow,
    BiQuiver,
    CompatibleIdeal,
    DifferentialBiquiver,
    MixedElement,
)
from bocs_engine.errors import ParseError
from bocs_engine.linalg import parse_scalar
from bocs_engine.pathalg import AlgebraPresentation, Arrow, PathElement, Quiver
from bocs_engine.reduce import ReductionMove

NAME = re.compile(r"[A-Za-z][A-Za-z0-9_']*$")
ARROW_LINE = re.compile(r"^(\S+)\s*:\s*(\S+)\s*(->|=>|-->)\s*(\S+)$")
TERM = re.compile(r"\s*([+-]?)\s*([^+-]+)")
NUMBER = re.compile(r"\d+(/\d+)?$")


def _lines(text: str):
    """Yield (line number, column offset, content) for non-empty lines without comments."""
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].rstrip()
        stripped = content.lstrip()
        if stripped:
            yield number, len(content) - len(stripped) + 1, stripped


def _split_keyword(content: str) -> tuple[str, str, int]:
    keyword, _, rest = content.partition(" ")
    return keyword, rest.strip(), len(keyword) + 1 + (len(rest) - len(rest.lstrip()))


def _name(token: str, line: int, column: int) -> str:
    if not NAME.match(token):
        raise ParseError(f"'{token}' is not a valid name", line, column)
    return token


def parse_element(
    text: str,
    quiver: Quiver,
    endpoints: tuple[str, str] | None = None,
    line: int = 0,
    column: int = 1,
    cls=PathElement,
):
    """Read a combination of words such as ``psi*a - 3/2*b*phi``.

    Args:
        text: The expression.
        quiver: The quiver the words are paths in.
        endpoints: (source, target) the element must have. Inferred from the first word
            when missing.
        line: Line number for error messages.
        column: Column of ``text`` in its line.
        cls: ``PathElement`` or ``MixedElement``.

    Raises:
        ParseError: on syntax errors, unknown arrows or words that are not paths.
    """
    if text.strip() == "0":
        if endpoints is None:
            raise ParseError("Cannot infer the endpoints of 0", line, column)
        return cls.zero(*endpoints)

    terms: dict[tuple[str, ...], object] = {}
    found = endpoints
    position = 0
    for match in TERM.finditer(text):
        if match.start() != position or not match.group(2).strip():
            raise ParseError(f"Cannot read '{text[position:].strip()}'", line, column + position)
        position = match.end()
        start = column + match.start(2)
        sign = -1 if match.group(1) == "-" else 1
        coeff = sign
        word: list[str] = []
        vertex = None
        for factor in (f.strip() for f in match.group(2).split("*")):
            if NUMBER.match(factor) and not word:
                coeff = coeff * parse_scalar(factor, line, start)
            elif factor.startswith("e_") and not quiver.has_arrow(factor) and factor[2:] in quiver.vertices:
                vertex = factor[2:]
            elif NAME.match(factor):
                if not quiver.has_arrow(factor):
                    raise ParseError(f"Unknown arrow '{factor}'", line, start)
                word.append(factor)
            else:
                raise ParseError(f"Cannot read the factor '{factor}'", line, start)
        if word:
            ends = quiver.path_endpoints(tuple(word))
            if ends is None:
                raise ParseError(f"'{'*'.join(word)}' is not a path", line, start)
        elif vertex is not None:
            ends = (vertex, vertex)
        else:
            raise ParseError("A term needs a word or an idempotent e_v", line, start)
        if found is None:
            found = ends
        elif ends != found:
            raise ParseError(
                f"'{'*'.join(word) or 'e_' + vertex}' runs {ends[0]}->{ends[1]}, expected "
                f"{found[0]}->{found[1]}",
                line,
                start,
            )
        key = tuple(word)
        terms[key] = terms.get(key, 0) + coeff
    if position != len(text) or found is None:
        raise ParseError(f"Cannot read '{text}'", line, column)
    return cls(terms, found[0], found[1])


# ------------------------------ Bocs files ------------------------------ #


def parse_bocs(text: str) -> DifferentialBiquiver:
    """Read a bocs file. Degrees, d^2 = 0 and compatibility are left to ``validate``."""
    name = "bocs"
    vertices: list[str] | None = None
    arrows: list[BiArrow] = []
    diffs: list[tuple[str, str, int, int]] = []
    rels: list[tuple[str, int, int]] = []

    for number, offset, content in _lines(text):
        keyword, rest, shift = _split_keyword(content)
        column = offset + shift
        if keyword == "bocs":
            name = rest or name
        elif keyword in ("order", "vertices"):
            vertices = rest.split()
        elif keyword in ("solid", "dashed"):
            if vertices is None:
                raise ParseError("Arrows must come after the 'order' line", number, offset)
            match = ARROW_LINE.match(rest)
            if not match:
                raise ParseError(f"Cannot read the arrow '{rest}'", number, column)
            arrow_name, source, link, target = match.groups()
            for vertex in (source, target):
                if vertex not in vertices:
                    raise ParseError(f"Unknown vertex '{vertex}'", number, column)
            degree = SOLID if keyword == "solid" else DASHED
            if (link == "->") != (degree == SOLID):
                raise ParseError(f"'{link}' does not match a {keyword} arrow", number, column)
            arrows.append(BiArrow(_name(arrow_name, number, column), source, target, degree))
        elif keyword == "diff":
            arrow_name, equals, expression = rest.partition("=")
            if not equals:
                raise ParseError("Expected 'diff NAME = EXPRESSION'", number, column)
            skip = len(arrow_name) + 1 + len(expression) - len(expression.lstrip())
            diffs.append((arrow_name.strip(), expression.strip(), number, column + skip))
        elif keyword == "rel":
            rels.append((rest, number, column))
        else:
            raise ParseError(f"Unknown keyword '{keyword}'", number, offset)

    if vertices is None:
        raise ParseError("Missing 'order' line", 1, 1)
    try:
        quiver = BiQuiver(vertices, arrows)
    except ValueError as error:
        raise ParseError(str(error), 1, 1) from error

    differential: dict[str, MixedElement] = {}
    for arrow_name, expression, number, column in diffs:
        if not quiver.has_arrow(arrow_name):
            raise ParseError(f"Differential given for unknown arrow '{arrow_name}'", number, column)
        if arrow_name in differential:
            raise ParseError(f"Second differential for '{arrow_name}'", number, column)
        arrow = quiver.arrow(arrow_name)
        differential[arrow_name] = parse_element(
            expression, quiver, (arrow.source, arrow.target), number, column, MixedElement
        )

    generators = [parse_element(r, quiver, None, number, column, MixedElement) for r, number, column in rels]
    for generator, (_, number, column) in zip(generators, rels):
        dashed = [x for x in generator.arrows() if quiver.degree(x) == DASHED]
        if dashed:
            raise ParseError(f"Relations may only use solid arrows, found {dashed}", number, column)
    return DifferentialBiquiver(quiver, differential, CompatibleIdeal(generators), name)


def emit_bocs(dbq: DifferentialBiquiver) -> str:
    quiver = dbq.biquiver
    lines = [f"bocs {dbq.name}", "order " + " ".join(quiver.vertices)]
    for arrow in quiver.arrows:
        kind, link = ("solid", "->") if arrow.solid else ("dashed", "=>")
        lines.append(f"{kind} {arrow.name} : {arrow.source} {link} {arrow.target}")
    for arrow in quiver.arrows:
        if arrow.name in dbq.differential:
            lines.append(f"diff {arrow.name} = {dbq.differential[arrow.name]}")
    lines += [f"rel {g}" for g in dbq.ideal]
    return "\n".join(lines) + "\n"


# ------------------------------ Algebra files ------------------------------ #


def parse_algebra(text: str) -> AlgebraPresentation:
    """Read an algebra file: ``algebra``, ``vertices``, ``arrow`` and ``rel`` lines."""
    name = "A"
    vertices: list[str] | None = None
    arrows: list[Arrow] = []
    rels: list[tuple[str, int, int]] = []

    for number, offset, content in _lines(text):
        keyword, rest, shift = _split_keyword(content)
        column = offset + shift
        if keyword == "algebra":
            name = rest or name
        elif keyword in ("vertices", "order"):
            vertices = rest.split()
        elif keyword == "arrow":
            if vertices is None:
                raise ParseError("Arrows must come after the 'vertices' line", number, offset)
            match = ARROW_LINE.match(rest)
            if not match or match.group(3) != "->":
                raise ParseError(f"Cannot read the arrow '{rest}'", number, column)
            arrow_name, source, _, target = match.groups()
            for vertex in (source, target):
                if vertex not in vertices:
                    raise ParseError(f"Unknown vertex '{vertex}'", number, column)
            arrows.append(Arrow(_name(arrow_name, number, column), source, target))
        elif keyword == "rel":
            rels.append((rest, number, column))
        else:
            raise ParseError(f"Unknown keyword '{keyword}'", number, offset)

    if vertices is None:
        raise ParseError("Missing 'vertices' line", 1, 1)
    try:
        quiver = Quiver(vertices, arrows)
    except ValueError as error:
        raise ParseError(str(error), 1, 1) from error
    relations = [parse_element(r, quiver, None, number, column) for r, number, column in rels]
    try:
        return AlgebraPresentation(quiver, relations, name)
    except ValueError as error:
        raise ParseError(str(error), rels[0][1] if rels else 1, 1) from error


def emit_algebra(presentation: AlgebraPresentation) -> str:
    quiver = presentation.quiver
    lines = [f"algebra {presentation.name}", "vertices " + " ".join(quiver.vertices)]
    lines += [f"arrow {a.name} : {a.source} -> {a.target}" for a in quiver.arrows]
    lines += [f"rel {r}" for r in presentation.relations]
    return "\n".join(lines) + "\n"


# ------------------------------ Move scripts ------------------------------ #


def parse_script(text: str) -> list[ReductionMove]:
    """One move per line: ``reduce a``, ``regularise b_52``, ``regularise *``,
    ``eliminate d_45`` or ``auto``, optionally followed by ``@ VERTICES ARROWS``."""
    moves = []
    for number, offset, content in _lines(text):
        try:
            moves.append(ReductionMove.from_line(content))
        except ValueError as error:
            raise ParseError(str(error), number, offset) from error
    return moves


def emit_script(moves: list[ReductionMove]) -> str:
    return "".join(f"{move}\n" for move in moves)

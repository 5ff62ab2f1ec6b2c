from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Arrow:
    """A named arrow ``source -> target``."""

    name: str
    source: str
    target: str

    def __str__(self) -> str:
        return f"{self.name}: {self.source} -> {self.target}"


@dataclass
class Quiver:
    """A finite quiver with an ordered vertex set.

    The vertex order is total and fixed. For algebras it is the order used to define
    standard modules.

    Attributes:
        vertices: Ordered vertex labels.
        arrows: The arrows, in declaration order.
    """

    vertices: list[str] = field(default_factory=list)
    arrows: list[Arrow] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.vertices = [str(v) for v in self.vertices]

        # Check that vertex labels are unique
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"Repeated vertex labels in {self.vertices}")

        # Check that arrow names are unique
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError(f"Repeated arrow names in {names}")

        # Check that arrows only use declared vertices
        for arrow in self.arrows:
            if arrow.source not in self.vertices or arrow.target not in self.vertices:
                raise ValueError(f"Arrow {arrow} uses an undeclared vertex")

        self._by_name = {a.name: a for a in self.arrows}
        self._position = {v: k for k, v in enumerate(self.vertices)}

    def arrow(self, name: str) -> Arrow:
        try:
            return self._by_name[name]
        except KeyError:
            raise ValueError(f"Unknown arrow '{name}'")

    def has_arrow(self, name: str) -> bool:
        return name in self._by_name

    def position(self, vertex: str) -> int:
        return self._position[vertex]

    def arrows_from(self, vertex: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == vertex]

    def arrows_into(self, vertex: str) -> list[Arrow]:
        return [a for a in self.arrows if a.target == vertex]

    def path_endpoints(self, path: tuple[str, ...]) -> tuple[str, str] | None:
        """(source, target) of a nonempty path, or None if it is not composable.

        Paths are written right-to-left: ``("b", "a")`` is ``a`` followed by ``b``.
        """
        if not path:
            raise ValueError("Trivial paths carry their vertex separately")
        arrows = [self.arrow(name) for name in path]
        for left, right in zip(arrows, arrows[1:]):
            if right.target != left.source:
                return None
        return arrows[-1].source, arrows[0].target

    def paths_of_length(self, length: int) -> list[tuple[tuple[str, ...], str, str]]:
        """All (path, source, target) triples with exactly ``length`` arrows."""
        if length == 0:
            return [((), v, v) for v in self.vertices]
        shorter = self.paths_of_length(length - 1)
        longer = []
        for path, source, target in shorter:
            for arrow in self.arrows_from(target):
                longer.append(((arrow.name,) + path, source, arrow.target))
        return sorted(longer)


def compose(p: tuple[str, ...], q: tuple[str, ...], quiver: Quiver) -> tuple[str, ...] | None:
    """The path ``p`` after ``q``, or None when ``source(p) != target(q)``.

    An empty tuple acts as a unit. Use ``PathElement`` multiplication when the vertex of
    a trivial path matters.
    """
    if not p or not q:
        return p or q
    if quiver.arrow(q[0]).target != quiver.arrow(p[-1]).source:
        return None
    return p + q

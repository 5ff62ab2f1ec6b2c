from __future__ import annotations

from dataclasses import dataclass

from bocs_engine.pathalg.quiver import Arrow, Quiver

SOLID = 0
DASHED = 1


@dataclass(frozen=True)
class BiArrow(Arrow):
    """An arrow of degree 0 (solid) or 1 (dashed)."""

    degree: int = SOLID

    def __post_init__(self) -> None:
        # Check that a valid degree has been requested
        if self.degree not in (SOLID, DASHED):
            raise ValueError(f"Arrow {self.name} has degree {self.degree}; use 0 or 1")

    @property
    def solid(self) -> bool:
        return self.degree == SOLID

    def __str__(self) -> str:
        link = "->" if self.solid else "-->"
        return f"{self.name}: {self.source} {link} {self.target}"


class BiQuiver(Quiver):
    """A quiver whose arrows are solid or dashed.

    The vertex order is significant: a biquiver is directed when every arrow goes from
    an earlier vertex to a later one (or is a loop).
    """

    arrows: list[BiArrow]

    @property
    def solid_arrows(self) -> list[BiArrow]:
        return [a for a in self.arrows if a.solid]

    @property
    def dashed_arrows(self) -> list[BiArrow]:
        return [a for a in self.arrows if not a.solid]

    def degree(self, name: str) -> int:
        return self.arrow(name).degree

    def word_degree(self, word: tuple[str, ...]) -> int:
        return sum(self.arrow(name).degree for name in word)

    def is_directed(self) -> bool:
        return all(
            self.position(a.source) <= self.position(a.target) for a in self.arrows
        )

    def solid_quiver(self) -> Quiver:
        return Quiver(list(self.vertices), [Arrow(a.name, a.source, a.target) for a in self.solid_arrows])

    def counts(self) -> tuple[int, int]:
        """(number of vertices, number of arrows)."""
        return len(self.vertices), len(self.arrows)

    def between(self, source: str, target: str, degree: int | None = None) -> list[BiArrow]:
        return [
            a
            for a in self.arrows
            if a.source == source and a.target == target and (degree is None or a.degree == degree)
        ]

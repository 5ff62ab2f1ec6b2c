"""Words in solid and dashed arrows, graded by the number of dashed letters."""

from __future__ import annotations

from typing import Callable

from bocs_engine.dbq.biquiver import BiQuiver
from bocs_engine.pathalg.elements import Path, PathElement


class MixedElement(PathElement):
    """A linear combination of parallel words in a biquiver.

    Words are written right-to-left like paths: the last letter is applied first. The
    empty word is the idempotent at ``source == target``.
    """

    __slots__ = ()

    def degrees(self, biquiver: BiQuiver) -> set[int]:
        return {biquiver.word_degree(word) for word in self.paths()}

    def degree(self, biquiver: BiQuiver) -> int | None:
        """The common degree of all terms, or None for zero or inhomogeneous elements."""
        degrees = self.degrees(biquiver)
        return degrees.pop() if len(degrees) == 1 else None

    def expand(
        self,
        image: Callable[[str], PathElement | None],
        source: str | None = None,
        target: str | None = None,
    ) -> MixedElement:
        """Replace every letter ``x`` by ``image(x)`` and multiply out.

        ``image`` returns None for letters that stay unchanged. The endpoints of the
        result default to those of ``self``.
        """
        result: dict[Path, object] = {}
        for word, coeff in self.items():
            terms = {(): coeff}
            for name in reversed(word):
                replacement = image(name)
                if replacement is None:
                    terms = {(name,) + p: c for p, c in terms.items()}
                    continue
                grown: dict[Path, object] = {}
                for p, c in terms.items():
                    for r, rc in replacement.items():
                        grown[r + p] = grown.get(r + p, 0) + rc * c
                terms = {p: c for p, c in grown.items() if c}
                if not terms:
                    break
            for p, c in terms.items():
                result[p] = result.get(p, 0) + c
        return MixedElement(
            result,
            self.source if source is None else source,
            self.target if target is None else target,
        )

    def substitute(self, name: str, replacement: PathElement) -> MixedElement:
        return self.expand(lambda x: replacement if x == name else None)

    def rename(self, names: dict[str, str]) -> MixedElement:
        return MixedElement(
            {tuple(names.get(x, x) for x in word): c for word, c in self.items()},
            self.source,
            self.target,
        )


def as_mixed(element: PathElement) -> MixedElement:
    return MixedElement(element.terms, element.source, element.target)


def letter(biquiver: BiQuiver, name: str, coeff=1) -> MixedElement:
    arrow = biquiver.arrow(name)
    return MixedElement.path((name,), arrow.source, arrow.target, coeff)


def splits(word: Path) -> list[tuple[Path, Path, Path]]:
    """All ways of writing ``word`` as ``left + middle + right`` with a nonempty middle."""
    return [
        (word[:i], word[i:j], word[j:])
        for i in range(len(word))
        for j in range(i + 1, len(word) + 1)
    ]

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar

from bocs_engine.reduce import ReductionRun, Terminal


@dataclass
class TypeVerdict:
    """The representation type certified by a reduction run.

    Attributes:
        count: Number of indecomposables when the type is finite, otherwise None.
        reason: Why the run is inconclusive, or a note on how the count was found.
        run: The reduction run behind the verdict, when there was one.
    """

    count: int | None = None
    reason: str = ""
    run: ReductionRun | None = None

    kind: ClassVar[str] = "verdict"

    @property
    def finite(self) -> bool:
        return self.kind == "finite"

    def __str__(self) -> str:
        if self.finite:
            return f"finite: {self.count} indecomposables"
        return f"inconclusive: {self.reason}"


class Finite(TypeVerdict):
    kind = "finite"


class Inconclusive(TypeVerdict):
    """A loop or the run limits stopped the reduction; tame and wild are not told apart."""

    kind = "inconclusive"


def verdict_from_run(result: ReductionRun, offset: int = 0) -> TypeVerdict:
    """Finite with ``vertices - offset`` indecomposables for a terminal run."""
    verdict = result.verdict
    if isinstance(verdict, Terminal):
        return Finite(len(verdict.dbq.vertices) - offset, run=result)
    return Inconclusive(reason=str(verdict), run=result)

from bocs_engine.pathalg.algebra import (
    AlgebraBasis,
    AlgebraPresentation,
    algebra_basis,
    multiply,
    normal_form,
)
from bocs_engine.pathalg.elements import Path, PathElement
from bocs_engine.pathalg.quiver import Arrow, Quiver, compose

__all__ = [
    "AlgebraBasis",
    "AlgebraPresentation",
    "Arrow",
    "Path",
    "PathElement",
    "Quiver",
    "algebra_basis",
    "compose",
    "multiply",
    "normal_form",
]

"""Minimal projective resolutions and Ext dimensions."""

from __future__ import annotations

from dataclasses import dataclass, field

import pandas as pd

from bocs_engine.config import RESOLUTION_CAP
from bocs_engine.errors import ResolutionCapError
from bocs_engine.findim.modules import (
    FDModule,
    ModuleMap,
    direct_sum,
    hom_space,
    kernel,
    top_and_radical,
)
from bocs_engine.findim.standard import map_from_projective, projective, standard_module
from bocs_engine.linalg import rank
from bocs_engine.linalg.matrices import entries, from_entries, independent_indices
from bocs_engine.logger import logger
from bocs_engine.pathalg import AlgebraBasis


@dataclass
class Resolution:
    """A minimal projective resolution ``... -> P_1 -> P_0 -> module -> 0``.

    Attributes:
        module: The resolved module.
        terms: The vertices of the indecomposable summands of each P_n, in order.
        projectives: The modules P_n.
        augmentation: The cover P_0 -> module.
        differentials: d_n: P_n -> P_(n-1), for n = 1, 2, ...
    """

    module: FDModule
    terms: list[list[str]] = field(default_factory=list)
    projectives: list[FDModule] = field(default_factory=list)
    augmentation: ModuleMap | None = None
    differentials: list[ModuleMap] = field(default_factory=list)

    @property
    def length(self) -> int:
        return max(len(self.terms) - 1, 0)

    def differential(self, n: int) -> ModuleMap | None:
        if 1 <= n <= len(self.differentials):
            return self.differentials[n - 1]
        return None

    def __str__(self) -> str:
        parts = [" + ".join(f"P{v}" for v in term) for term in self.terms]
        return " -> ".join(reversed(parts + [self.module.name]))


def _lift_top(module: FDModule) -> list[tuple[str, list]]:
    """Vectors of ``module`` whose images span its top, vertex by vertex."""
    _, (_, inclusion) = top_and_radical(module)
    domain = module.field.domain
    lifts = []
    for v in module.vertices:
        size = module.dims[v]
        standard = [[domain.one if k == r else domain.zero for k in range(size)] for r in range(size)]
        chosen = independent_indices(standard, domain, start=inclusion.image_vectors(v))
        lifts.extend((v, standard[k]) for k in chosen)
    return lifts


def _projective_cover(
    module: FDModule, basis: AlgebraBasis, cache: dict[str, FDModule]
) -> tuple[list[str], FDModule, ModuleMap]:
    lifts = _lift_top(module)
    vertices = [v for v, _ in lifts]
    summands = []
    for v in vertices:
        if v not in cache:
            cache[v] = projective(basis, v, module.field)
        summands.append(cache[v])
    cover = direct_sum(summands, name=" + ".join(f"P({v})" for v in vertices))

    # Assemble the summand maps side by side
    pieces = [map_from_projective(p, v, basis, module, vec) for p, (v, vec) in zip(summands, lifts)]
    components = {}
    for w in module.vertices:
        rows = [[] for _ in range(module.dims[w])]
        for piece in pieces:
            for r, block_row in enumerate(entries(piece.components[w])):
                rows[r].extend(block_row)
        components[w] = from_entries(rows, (module.dims[w], cover.dims[w]), module.field.domain)
    return vertices, cover, ModuleMap(cover, module, components)


def minimal_resolution(module: FDModule, basis: AlgebraBasis, cap: int = RESOLUTION_CAP) -> Resolution:
    """Resolve ``module`` by projective covers of successive kernels.

    Args:
        module: The module to resolve.
        basis: The normal-form basis of its algebra.
        cap: The largest allowed length of the resolution.

    Raises:
        ResolutionCapError: when the kernel at step ``cap`` is still nonzero.
    """
    # Check that a valid cap has been requested
    if cap < 1:
        raise ValueError(f"Resolution cap must be at least 1, got {cap}")

    resolution = Resolution(module)
    if module.total == 0:
        return resolution

    cache: dict[str, FDModule] = {}
    current, inclusion = module, None
    for _ in range(cap + 1):
        vertices, cover, epi = _projective_cover(current, basis, cache)
        resolution.terms.append(vertices)
        resolution.projectives.append(cover)
        if inclusion is None:
            resolution.augmentation = epi
        else:
            resolution.differentials.append(epi.then(inclusion))

        syzygy, inclusion = kernel(epi)
        if syzygy.total == 0:
            logger.debug(f"Resolution of {module.name}: {resolution}")
            return resolution
        current = syzygy

    raise ResolutionCapError(
        f"The resolution of {module.name} does not terminate within length {cap}"
    )


# ------------------------------ Ext ------------------------------ #


def _coboundary_rank(resolution: Resolution, target: FDModule, n: int) -> int:
    """Rank of Hom(P_n, target) -> Hom(P_(n+1), target), f -> f o d_(n+1)."""
    d = resolution.differential(n + 1)
    if d is None or n >= len(resolution.projectives):
        return 0
    images = [d.then(f).flatten() for f in hom_space(resolution.projectives[n], target)]
    if not images or not images[0]:
        return 0
    return rank(from_entries(images, (len(images), len(images[0])), target.field.domain))


def ext_dim(m: FDModule, n_module: FDModule, degree: int, basis: AlgebraBasis, resolution: Resolution | None = None) -> int:
    """dim Ext^degree(m, n_module) from the Hom complex of a minimal resolution of ``m``."""
    if degree < 0:
        return 0
    resolution = resolution or minimal_resolution(m, basis)
    if degree >= len(resolution.projectives):
        return 0
    cochains = len(hom_space(resolution.projectives[degree], n_module))
    cocycles = cochains - _coboundary_rank(resolution, n_module, degree)
    coboundaries = _coboundary_rank(resolution, n_module, degree - 1) if degree else 0
    return cocycles - coboundaries


def ext_table(basis: AlgebraBasis, degree: int) -> pd.DataFrame:
    """dim Ext^degree(Delta(i), Delta(j)) for all pairs of vertices."""
    vertices = basis.quiver.vertices
    deltas = {v: standard_module(basis, v) for v in vertices}
    resolutions = {v: minimal_resolution(deltas[v], basis) for v in vertices}
    rows = [
        [ext_dim(deltas[i], deltas[j], degree, basis, resolutions[i]) for j in vertices]
        for i in vertices
    ]
    return pd.DataFrame(
        rows, index=pd.Index(vertices, name="Delta"), columns=pd.Index(vertices, name="Delta")
    )

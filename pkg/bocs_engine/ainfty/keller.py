"""Cross-checks of a stated bocs against homological data of its algebra.

For a quasi-hereditary algebra the bocs attached to its standard modules has, for each
pair of vertices (i, j):

    solid arrows i -> j          dim Ext^1(Delta(i), Delta(j))
    relation generators i -> j   dim Ext^2(Delta(i), Delta(j))
    dashed arrows i --> j        dim Hom(Delta(i), Delta(j)) - (1 if i == j)
"""

from __future__ import annotations

from dataclasses import dataclass, field

import pandas as pd

from bocs_engine.ainfty.complex import HomComplex, build_hom_complex
from bocs_engine.ainfty.transfer import AInftyProducts
from bocs_engine.dbq import DifferentialBiquiver
from bocs_engine.findim import ext_dim, hom_space, minimal_resolution, standard_module
from bocs_engine.logger import logger
from bocs_engine.pathalg import AlgebraBasis


@dataclass
class CountReport:
    """Expected and claimed counts for every ordered pair of vertices.

    Attributes:
        rows: One dict per (i, j, kind) with the expected and claimed numbers.
    """

    rows: list[dict] = field(default_factory=list)

    @property
    def mismatches(self) -> list[dict]:
        return [r for r in self.rows if r["expected"] != r["claimed"]]

    @property
    def clean(self) -> bool:
        return not self.mismatches

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.rows, columns=["source", "target", "kind", "expected", "claimed"])


def _claimed(dbq: DifferentialBiquiver, i: str, j: str) -> dict[str, int]:
    quiver = dbq.biquiver
    return {
        "solid": len(quiver.between(i, j, 0)),
        "relation": sum(1 for r in dbq.ideal if (r.source, r.target) == (i, j)),
        "dashed": len(quiver.between(i, j, 1)),
    }


def verify_bocs_counts(basis: AlgebraBasis, claimed: DifferentialBiquiver) -> CountReport:
    """Compare arrow and relation counts of ``claimed`` with Ext and Hom between standards."""
    vertices = basis.quiver.vertices
    deltas = {v: standard_module(basis, v) for v in vertices}
    resolutions = {v: minimal_resolution(deltas[v], basis) for v in vertices}

    report = CountReport()
    for i in vertices:
        for j in vertices:
            expected = {
                "solid": ext_dim(deltas[i], deltas[j], 1, basis, resolutions[i]),
                "relation": ext_dim(deltas[i], deltas[j], 2, basis, resolutions[i]),
                "dashed": len(hom_space(deltas[i], deltas[j])) - (1 if i == j else 0),
            }
            stated = _claimed(claimed, i, j)
            for kind in ("solid", "relation", "dashed"):
                report.rows.append(
                    {
                        "source": i,
                        "target": j,
                        "kind": kind,
                        "expected": expected[kind],
                        "claimed": stated[kind],
                    }
                )

    for row in report.mismatches:
        logger.warning(
            f"{claimed.name}: {row['kind']} {row['source']}->{row['target']} expected "
            f"{row['expected']}, found {row['claimed']}"
        )
    return report


def standard_complex(basis: AlgebraBasis) -> HomComplex:
    """The Hom complex of the minimal resolutions of all standard modules, in vertex order."""
    vertices = basis.quiver.vertices
    resolutions = [minimal_resolution(standard_module(basis, v), basis) for v in vertices]
    return build_hom_complex(resolutions, labels=list(vertices))


def standard_products(basis: AlgebraBasis) -> AInftyProducts:
    """Transferred products on Ext between the standard modules."""
    return AInftyProducts.from_complex(standard_complex(basis))

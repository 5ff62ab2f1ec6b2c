"""Representation type of Delta-filtered modules, and the homological checks behind a bocs."""

from __future__ import annotations

from dataclasses import dataclass, field

import pandas as pd

from bocs_engine.ainfty import CountReport, verify_bocs_counts
from bocs_engine.config import MAX_ARROWS, MAX_STEPS
from bocs_engine.dbq import DifferentialBiquiver
from bocs_engine.findim import HeredityCheck, delta_multiplicities, ext_table, is_quasi_hereditary
from bocs_engine.logger import logger
from bocs_engine.pathalg import AlgebraBasis
from bocs_engine.pipelines.verdicts import TypeVerdict, verdict_from_run
from bocs_engine.reduce import ReductionMove, run


def filtered_type(
    dbq: DifferentialBiquiver,
    max_steps: int = MAX_STEPS,
    max_arrows: int = MAX_ARROWS,
    script: list[ReductionMove] | None = None,
) -> TypeVerdict:
    """Reduce ``dbq`` to a verdict on its representation type.

    For the bocs of a quasi-hereditary algebra a finite verdict counts the
    indecomposable Delta-filtered modules.
    """
    result = run(dbq, max_steps, max_arrows, script)
    verdict = verdict_from_run(result)
    logger.info(f"{dbq.name}: {verdict}")
    return verdict


@dataclass
class StandardizationReport:
    """Homological data of a quasi-hereditary algebra.

    Attributes:
        name: Name of the algebra.
        heredity: The heredity chain test for the vertex order.
        multiplicities: [P(i):Delta(j)], or None when the order is not quasi-hereditary.
        ext: dim Ext^n(Delta(i), Delta(j)) for n = 0, 1, 2.
        counts: Comparison with a stated bocs, when one was given.
    """

    name: str
    heredity: HeredityCheck
    multiplicities: pd.DataFrame | None = None
    ext: dict[int, pd.DataFrame] = field(default_factory=dict)
    counts: CountReport | None = None

    @property
    def consistent(self) -> bool:
        return bool(self.heredity) and (self.counts is None or self.counts.clean)


def standardize(
    basis: AlgebraBasis, against: DifferentialBiquiver | None = None, degrees: tuple[int, ...] = (0, 1, 2)
) -> StandardizationReport:
    """Test heredity, tabulate Ext between standard modules and check a stated bocs.

    Args:
        basis: A basis of the algebra, with vertices in the quasi-hereditary order.
        against: A bocs claimed to belong to the algebra. Its solid arrows, relations and
            dashed arrows are compared with Ext^1, Ext^2 and the radical of Hom.
        degrees: The degrees of the Ext tables.
    """
    report = StandardizationReport(basis.presentation.name, is_quasi_hereditary(basis))
    if not report.heredity:
        logger.warning(
            f"{report.name}: heredity fails at vertex {report.heredity.failed_at}; "
            f"skipping standard modules"
        )
        return report

    report.multiplicities = delta_multiplicities(basis)
    report.ext = {n: ext_table(basis, n) for n in degrees}
    if against is not None:
        report.counts = verify_bocs_counts(basis, against)
    return report

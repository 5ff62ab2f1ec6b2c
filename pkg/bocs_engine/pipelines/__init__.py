from bocs_engine.pipelines.families import SchurFamily, TwoSimple, schur_an, two_simple
from bocs_engine.pipelines.filtered import StandardizationReport, filtered_type, standardize
from bocs_engine.pipelines.p1 import module_count_from_p1, p1_construct, radical_paths
from bocs_engine.pipelines.verdicts import Finite, Inconclusive, TypeVerdict, verdict_from_run

__all__ = [
    "Finite",
    "Inconclusive",
    "SchurFamily",
    "StandardizationReport",
    "TwoSimple",
    "TypeVerdict",
    "filtered_type",
    "module_count_from_p1",
    "p1_construct",
    "radical_paths",
    "schur_an",
    "standardize",
    "two_simple",
    "verdict_from_run",
]

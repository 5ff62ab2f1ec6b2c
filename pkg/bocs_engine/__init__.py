__version__ = "0.3.1"

from bocs_engine.dbq import DifferentialBiquiver, right_algebra_dim, validate
from bocs_engine.findim import is_quasi_hereditary, standard_module
from bocs_engine.pathalg import AlgebraPresentation, algebra_basis
from bocs_engine.pipelines import filtered_type, module_count_from_p1, schur_an, standardize, two_simple
from bocs_engine.reduce import ar_quiver, run
from bocs_engine.shell import FixtureRegistry, parse_algebra, parse_bocs


def set_data_path(path):
    """Set the path to the settings folder holding fixtures.json, fixtures/ and scripts/."""
    from pathlib import Path
    from bocs_engine.config import BocsPATHS

    BocsPATHS.settings = Path(path).resolve()
    BocsPATHS.fixtures = BocsPATHS.settings / "fixtures"
    BocsPATHS.scripts = BocsPATHS.settings / "scripts"


__all__ = [
    "AlgebraPresentation",
    "DifferentialBiquiver",
    "FixtureRegistry",
    "algebra_basis",
    "ar_quiver",
    "filtered_type",
    "is_quasi_hereditary",
    "module_count_from_p1",
    "parse_algebra",
    "parse_bocs",
    "right_algebra_dim",
    "run",
    "schur_an",
    "set_data_path",
    "standard_module",
    "standardize",
    "two_simple",
    "validate",
]

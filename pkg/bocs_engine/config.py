from pathlib import Path


class BocsPATHS:
    """Class to store the paths to the settings, fixtures and test folders."""

    project = Path(__file__).resolve().parent.parent
    package = project / "bocs_engine"
    settings = package / "settings"
    fixtures = settings / "fixtures"
    scripts = settings / "scripts"
    tests = project / "tests"
    test_files = tests / "files"


# ------------------------------ Path algebras ------------------------------ #

LENGTH_CAP: int = 30

RESOLUTION_CAP: int = 10

# ------------------------------ Reduction limits ------------------------------ #

MAX_STEPS: int = 200

MAX_ARROWS: int = 5000

# Upper bound on the intermediate bocses visited while planning the regularisations
# that reproduce the counts given in a move script
PLAN_NODES: int = 20_000

# ------------------------------ Enumeration oracle ------------------------------ #

ORACLE_PRIMES: tuple[int, ...] = (2, 3, 5)

# Upper bound on the number of matrix tuples the oracle may visit
ORACLE_BUDGET: int = 250_000

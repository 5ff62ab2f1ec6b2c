import pytest

from bocs_engine.pathalg import AlgebraPresentation, Arrow, PathElement, Quiver, algebra_basis
from bocs_engine.shell import FixtureRegistry


@pytest.fixture(scope="session")
def registry() -> FixtureRegistry:
    return FixtureRegistry()


@pytest.fixture(scope="session")
def sl2(registry):
    return registry["sl2"]


@pytest.fixture(scope="session")
def sl2_basis(sl2):
    return algebra_basis(sl2.algebra)


@pytest.fixture(scope="session")
def a3(registry):
    return registry["a3_regular"]


@pytest.fixture(scope="session")
def a3_basis(a3):
    return algebra_basis(a3.algebra)


@pytest.fixture(scope="session")
def dual_numbers() -> AlgebraPresentation:
    """k[x]/(x^2) as a one-loop quiver."""
    quiver = Quiver(["1"], [Arrow("x", "1", "1")])
    return AlgebraPresentation(quiver, [PathElement.path(("x", "x"), "1", "1")], "dual")


def path(quiver: Quiver, *word: str, coeff=1) -> PathElement:
    """The path ``word`` (right-to-left) as an element."""
    source, target = quiver.path_endpoints(word)
    return PathElement.path(word, source, target, coeff)

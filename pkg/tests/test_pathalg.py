import pytest

from bocs_engine.errors import NotFiniteDimensionalError
from bocs_engine.pathalg import (
    AlgebraPresentation,
    Arrow,
    PathElement,
    Quiver,
    algebra_basis,
    compose,
    multiply,
    normal_form,
)
from bocs_engine.pipelines import schur_an
from tests.conftest import path


def test_quiver_rejects_repeated_vertices():
    with pytest.raises(ValueError):
        Quiver(["1", "1"], [])


def test_quiver_rejects_undeclared_vertex():
    with pytest.raises(ValueError):
        Quiver(["1"], [Arrow("a", "1", "2")])


def test_path_endpoints_read_right_to_left(sl2):
    quiver = sl2.algebra.quiver
    assert quiver.path_endpoints(("b", "a")) == ("1", "1")
    assert quiver.path_endpoints(("a", "a")) is None
    assert compose(("b",), ("a",), quiver) == ("b", "a")
    assert compose(("a",), ("a",), quiver) is None


def test_path_element_arithmetic_cancels():
    x = PathElement.path(("b", "a"), "1", "1", 3)
    assert (x - x).is_zero()
    assert (x + x).coefficient(("b", "a")) == 6
    assert str(-x) == "-3*b*a"


def test_adding_elements_with_other_endpoints_fails():
    with pytest.raises(ValueError):
        PathElement.path(("a",), "1", "2") + PathElement.path(("b",), "2", "1")


def test_relation_with_an_arrow_is_rejected(sl2):
    quiver = sl2.algebra.quiver
    with pytest.raises(ValueError):
        AlgebraPresentation(quiver, [PathElement.path(("a",), "1", "2")])


def test_sl2_block_has_dimension_five(sl2_basis):
    assert sl2_basis.dimension == 5
    assert sl2_basis.between("1", "1") == [(), ("b", "a")]
    assert sl2_basis.between("2", "2") == [()]


def test_multiplication_uses_relations(sl2, sl2_basis):
    quiver = sl2.algebra.quiver
    a, b = path(quiver, "a"), path(quiver, "b")
    assert multiply(a, b, sl2_basis).is_zero()
    assert multiply(b, a, sl2_basis) == path(quiver, "b", "a")
    assert multiply(a, multiply(b, a, sl2_basis), sl2_basis).is_zero()


def test_normal_form_of_a_relation_is_zero(sl2, sl2_basis):
    relation = sl2.algebra.relations[0]
    assert normal_form(relation, sl2_basis).is_zero()


def test_path_algebra_of_a3(a3_basis):
    assert a3_basis.dimension == 6
    assert a3_basis.between("1", "3") == [("b", "a")]


def test_dual_numbers(dual_numbers):
    basis = algebra_basis(dual_numbers)
    assert basis.dimension == 2


def test_free_loop_is_not_finite_dimensional():
    presentation = AlgebraPresentation(Quiver(["1"], [Arrow("x", "1", "1")]), [], "k[x]")
    with pytest.raises(NotFiniteDimensionalError):
        algebra_basis(presentation, cap=5)


def test_mazorchuk_algebra(registry):
    basis = algebra_basis(registry["mazorchuk"].algebra)
    assert basis.dimension == 21
    assert len(basis.starting_at("1")) == 11


@pytest.mark.parametrize("n", [2, 3, 4])
def test_schur_block_dimensions(n):
    member = schur_an(n)
    assert algebra_basis(member.presentation).dimension == member.expected_algebra_dim
    assert algebra_basis(member.dbq.solid_algebra()).dimension == member.expected_borel_dim


def test_cap_must_allow_relations(sl2):
    with pytest.raises(ValueError):
        algebra_basis(sl2.algebra, cap=1)


def _basis_elements(basis, source):
    return [PathElement.path(p, source, target) for p, target in basis.starting_at(source)]


@pytest.mark.parametrize("name", ["sl2", "mazorchuk", "r4", "h4"])
def test_multiplication_is_associative(registry, name):
    basis = algebra_basis(registry[name].algebra)
    for source in basis.quiver.vertices:
        for x in _basis_elements(basis, source):
            for y in _basis_elements(basis, x.target):
                xy = multiply(y, x, basis)
                for z in _basis_elements(basis, y.target):
                    assert multiply(z, xy, basis) == multiply(multiply(z, y, basis), x, basis)

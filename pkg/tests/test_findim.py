import pytest

from bocs_engine.errors import ResolutionCapError
from bocs_engine.findim import (
    FDModule,
    delta_multiplicities,
    ext_dim,
    ext_table,
    hom_space,
    is_quasi_hereditary,
    minimal_resolution,
    projective,
    reorder,
    simple_module,
    standard_module,
    top_and_radical,
)
from bocs_engine.linalg import RATIONALS, matrix
from bocs_engine.pathalg import algebra_basis


def test_projectives_of_sl2(sl2_basis):
    assert projective(sl2_basis, "1").dimension_vector == (2, 1)
    assert projective(sl2_basis, "2").dimension_vector == (1, 1)


def test_standard_modules_of_sl2(sl2_basis):
    assert standard_module(sl2_basis, "1").dimension_vector == (1, 0)
    assert standard_module(sl2_basis, "2").dimension_vector == (1, 1)


def test_module_must_satisfy_relations(sl2):
    with pytest.raises(ValueError):
        FDModule(
            sl2.algebra,
            {"1": 1, "2": 1},
            {"a": matrix([[1]], RATIONALS), "b": matrix([[1]], RATIONALS)},
        )


def test_module_checks_matrix_shapes(sl2):
    with pytest.raises(ValueError):
        FDModule(sl2.algebra, {"1": 1, "2": 1}, {"a": matrix([[1, 0]], RATIONALS)})


def test_hom_from_a_projective_is_its_vertex_space(sl2_basis):
    p1, p2 = projective(sl2_basis, "1"), projective(sl2_basis, "2")
    assert len(hom_space(p1, p2)) == p2.dims["1"]
    assert len(hom_space(p2, p1)) == p1.dims["2"]
    assert all(f.is_homomorphism() for f in hom_space(p1, p1))


def test_top_and_radical_of_projective(sl2_basis):
    top, (radical, inclusion) = top_and_radical(projective(sl2_basis, "1"))
    assert top == {"1": 1, "2": 0}
    assert radical.dimension_vector == (1, 1)
    assert inclusion.is_homomorphism()


def test_resolution_of_a_simple(sl2, sl2_basis):
    resolution = minimal_resolution(simple_module(sl2.algebra, "1"), sl2_basis)
    assert resolution.terms == [["1"], ["2"]]
    assert resolution.length == 1


def test_dual_numbers_have_infinite_global_dimension(dual_numbers):
    basis = algebra_basis(dual_numbers)
    with pytest.raises(ResolutionCapError):
        minimal_resolution(simple_module(dual_numbers, "1"), basis, cap=3)


def test_ext_between_sl2_standard_modules(sl2_basis):
    delta1, delta2 = standard_module(sl2_basis, "1"), standard_module(sl2_basis, "2")
    assert ext_dim(delta1, delta2, 1, sl2_basis) == 1
    assert ext_dim(delta2, delta1, 1, sl2_basis) == 0
    assert ext_dim(delta1, delta1, 0, sl2_basis) == 1
    assert ext_dim(delta1, delta2, 2, sl2_basis) == 0


def test_ext_table_as_frame(sl2_basis):
    table = ext_table(sl2_basis, 1)
    assert list(table.index) == ["1", "2"]
    assert table.loc["1", "2"] == 1
    assert table.to_numpy().sum() == 1


def test_sl2_block_is_quasi_hereditary(sl2_basis):
    check = is_quasi_hereditary(sl2_basis)
    assert check
    assert check.failed_at is None
    assert [step.vertex for step in check.steps] == ["2", "1"]


def test_reversed_order_is_not_quasi_hereditary(sl2):
    check = is_quasi_hereditary(algebra_basis(reorder(sl2.algebra, ["2", "1"])))
    assert not check
    assert check.failed_at == "1"


def test_delta_multiplicities(sl2_basis):
    table = delta_multiplicities(sl2_basis)
    assert table.loc["1"].tolist() == [1, 1]
    assert table.loc["2"].tolist() == [0, 1]


@pytest.mark.parametrize("name", ["d3", "d4", "r4", "h4", "mazorchuk"])
def test_fixture_algebras_are_quasi_hereditary(registry, name):
    assert is_quasi_hereditary(algebra_basis(registry[name].algebra))


@pytest.mark.parametrize(
    "name, vertex, terms",
    [
        ("d3", "1", [["1"], ["2", "3"], ["3"]]),
        ("d3", "2", [["2"], ["3"]]),
        ("d3", "3", [["3"]]),
        ("r4", "1", [["1"], ["2"]]),
        ("r4", "2", [["2"], ["3"], ["4"]]),
        ("r4", "3", [["3"], ["4"]]),
        ("r4", "4", [["4"]]),
        ("h4", "1", [["1"], ["2"], ["4"]]),
        ("h4", "2", [["2"], ["3", "4"]]),
        ("h4", "3", [["3"]]),
        ("h4", "4", [["4"]]),
        ("d4", "1", [["1"], ["2"], ["3", "4"], ["4"]]),
        ("d4", "2", [["2"], ["3", "4"], ["4"]]),
        ("d4", "3", [["3"], ["4"]]),
        ("d4", "4", [["4"]]),
    ],
)
def test_standard_module_resolutions(registry, name, vertex, terms):
    basis = algebra_basis(registry[name].algebra)
    resolution = minimal_resolution(standard_module(basis, vertex), basis)
    assert resolution.terms == terms
    assert resolution.length == len(terms) - 1

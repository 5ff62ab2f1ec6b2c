import pytest

from bocs_engine.ainfty import (
    AInftyProducts,
    choose_splitting,
    merkulov_lambda,
    standard_complex,
    standard_products,
    verify_bocs_counts,
)
from bocs_engine.findim import ext_dim, standard_module
from bocs_engine.pathalg import algebra_basis
from bocs_engine.pipelines import two_simple


@pytest.fixture(scope="module")
def sl2_complex(sl2_basis):
    return standard_complex(sl2_basis)


def test_complex_is_labelled_by_vertex(sl2_complex):
    assert sl2_complex.labels == ["1", "2"]


def test_differential_squares_to_zero(sl2_complex):
    for source in range(2):
        for target in range(2):
            for degree in sl2_complex.degrees(source, target):
                for f in sl2_complex.basis(source, target, degree):
                    assert sl2_complex.differential(sl2_complex.differential(f)).is_zero()


def test_cohomology_is_ext(sl2_basis, sl2_complex):
    data = choose_splitting(sl2_complex)
    deltas = [standard_module(sl2_basis, v) for v in ("1", "2")]
    for source in range(2):
        for target in range(2):
            for degree in (0, 1):
                expected = ext_dim(deltas[source], deltas[target], degree, sl2_basis)
                assert data.cohomology_dim(source, target, degree) == expected


def test_identity_class_acts_on_ext(sl2_basis):
    products = standard_products(sl2_basis)
    (unit,) = products.data.harmonic(0, 0, 0)
    (extension,) = products.data.harmonic(0, 1, 1)
    assert any(products.m([extension, unit]))


def test_non_composable_string_gives_zero(sl2_complex):
    data = choose_splitting(sl2_complex)
    (extension,) = data.harmonic(0, 1, 1)
    assert merkulov_lambda(data, [extension, extension]).is_zero()


def test_lambda_needs_two_inputs(sl2_complex):
    data = choose_splitting(sl2_complex)
    with pytest.raises(ValueError):
        merkulov_lambda(data, data.harmonic(0, 1, 1))


def test_products_from_complex(sl2_complex):
    products = AInftyProducts.from_complex(sl2_complex)
    assert products.data.cohomology_dim(0, 1, 1) == 1


def test_sl2_bocs_counts_are_clean(sl2, sl2_basis):
    report = verify_bocs_counts(sl2_basis, sl2.dbq)
    assert report.clean
    frame = report.to_frame()
    assert list(frame.columns) == ["source", "target", "kind", "expected", "claimed"]
    assert len(frame) == 2 * 2 * 3


def test_wrong_bocs_is_reported(sl2_basis):
    report = verify_bocs_counts(sl2_basis, two_simple(2, 1).dbq)
    assert not report.clean
    (mismatch,) = report.mismatches
    assert (mismatch["source"], mismatch["target"], mismatch["kind"]) == ("1", "2", "solid")
    assert (mismatch["expected"], mismatch["claimed"]) == (1, 2)


@pytest.mark.slow
@pytest.mark.parametrize("name", ["d3", "d4", "r4", "h4"])
def test_fixture_bocs_counts_are_clean(registry, name):
    fixture = registry[name]
    assert fixture.check_counts
    assert verify_bocs_counts(algebra_basis(fixture.algebra), fixture.dbq).clean


@pytest.fixture(scope="module")
def d4_products(registry):
    return standard_products(algebra_basis(registry["d4"].algebra))


@pytest.mark.slow
def test_d4_has_five_extensions_between_standards(d4_products):
    data = d4_products.data
    assert sum(data.cohomology_dim(i, j, 1) for i in range(4) for j in range(i + 1, 4)) == 5
    assert all(data.cohomology_dim(j, i, 1) == 0 for i in range(4) for j in range(i, 4))


@pytest.mark.slow
def test_d4_triple_product_vanishes(d4_products):
    data = d4_products.data
    (a,) = data.harmonic(0, 1, 1)
    (b,) = data.harmonic(1, 2, 1)
    (d,) = data.harmonic(2, 3, 1)
    assert data.cohomology_dim(0, 3, 2) == 1
    assert not any(d4_products.m([d, b, a]))

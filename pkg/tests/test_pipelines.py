import logging

import pytest

from bocs_engine.dbq import enumerate_indecomposables, regular_bocs, validate
from bocs_engine.findim import reorder
from bocs_engine.pathalg import AlgebraPresentation, Arrow, Quiver, algebra_basis
from bocs_engine.pipelines import (
    Finite,
    Inconclusive,
    filtered_type,
    module_count_from_p1,
    p1_construct,
    radical_paths,
    schur_an,
    standardize,
    two_simple,
)
from bocs_engine.pipelines import filtered as filtered_module
from bocs_engine.reduce import LoopEncountered, Terminal


@pytest.fixture
def a2():
    """The path algebra of 1 -> 2."""
    quiver = Quiver(["1", "2"], [Arrow("a", "1", "2")])
    return algebra_basis(AlgebraPresentation(quiver, [], "A2"))


# ------------------------------ Families ------------------------------ #


def test_two_simple_rejects_negative_counts():
    with pytest.raises(ValueError, match="non-negative"):
        two_simple(-1, 0)


@pytest.mark.parametrize(
    "s, t, kind",
    [(0, 3, "finite"), (1, 1, "finite"), (2, 0, "tame"), (3, 1, "wild")],
)
def test_two_simple_members(s, t, kind):
    member = two_simple(s, t)
    assert member.expected_type == kind
    assert member.expected_dim == 2 + s + t + s * t
    assert member.dbq.counts() == (2, s + t)
    assert validate(member.dbq)


def test_two_simple_arrow_names():
    names = [a.name for a in two_simple(2, 1).dbq.biquiver.arrows]
    assert names == ["a1", "a2", "phi"]


def test_schur_family_starts_at_two():
    with pytest.raises(ValueError):
        schur_an(1)


def test_schur_family_member():
    member = schur_an(3)
    assert member.expected_algebra_dim == 9
    assert member.expected_borel_dim == 6
    assert member.expected_right_dim == 14
    assert algebra_basis(member.presentation).dimension == 9
    assert validate(member.dbq)


# ------------------------------ P1 construction ------------------------------ #


def test_radical_paths_of_sl2(sl2_basis):
    assert radical_paths(sl2_basis) == [(("b", "a"), "1", "1"), (("a",), "1", "2"), (("b",), "2", "1")]


def test_p1_construct_shape(a2):
    two_sided = p1_construct(a2)
    one_sided = p1_construct(a2, two_sided=False)

    assert two_sided.vertices == ["1", "2", "1'", "2'"]
    assert [a.name for a in two_sided.biquiver.arrows] == ["x_a", "phi_a", "psi_a"]
    assert one_sided.counts() == (4, 2)
    assert validate(two_sided)


def test_p1_differential_dualises_multiplication(sl2_basis):
    dbq = p1_construct(sl2_basis)
    # b*a is the only nonzero product of radical paths
    assert not dbq.d("x_ba").is_zero()
    assert dbq.d("x_a").is_zero()
    assert dbq.d("x_b").is_zero()
    assert validate(dbq)


def test_semisimple_algebra_needs_no_reduction(mocker):
    spy = mocker.patch("bocs_engine.pipelines.p1.run")
    basis = algebra_basis(AlgebraPresentation(Quiver(["1", "2"], []), [], "kxk"))

    verdict = module_count_from_p1(basis)

    assert isinstance(verdict, Finite)
    assert verdict.count == 2
    assert verdict.reason == "semisimple"
    spy.assert_not_called()


@pytest.mark.parametrize("two_sided", [True, False])
def test_dual_numbers_have_two_indecomposables(dual_numbers, two_sided):
    verdict = module_count_from_p1(algebra_basis(dual_numbers), two_sided=two_sided)
    assert verdict.finite
    assert verdict.count == 2
    assert str(verdict) == "finite: 2 indecomposables"


def test_a2_has_three_indecomposables(a2):
    verdict = module_count_from_p1(a2)
    assert verdict.count == 3
    assert isinstance(verdict.run.verdict, Terminal)
    assert len(verdict.run.verdict.dbq.vertices) == 5


def test_p1_count_agrees_with_the_oracle(dual_numbers, a2):
    for presentation, caps in ((dual_numbers, {"1": 2}), (a2.presentation, {"1": 2, "2": 2})):
        oracle = enumerate_indecomposables(regular_bocs(presentation), 2, caps)
        assert module_count_from_p1(algebra_basis(presentation)).count == oracle.count


@pytest.mark.slow
@pytest.mark.parametrize("name, count", [("d3", 9), ("d4", 20)])
def test_borel_subalgebras_are_representation_finite(registry, name, count):
    verdict = module_count_from_p1(algebra_basis(registry[name].dbq.solid_algebra()))
    assert verdict.finite
    assert verdict.count == count


# ------------------------------ Filtered modules ------------------------------ #


def test_filtered_type_of_sl2(sl2):
    verdict = filtered_type(sl2.dbq)
    assert verdict.finite
    assert verdict.count == 3


def test_filtered_type_of_regular_a3(a3):
    assert filtered_type(a3.dbq).count == 6


def test_kronecker_is_inconclusive():
    verdict = filtered_type(two_simple(2, 0).dbq)
    assert isinstance(verdict, Inconclusive)
    assert verdict.count is None
    assert isinstance(verdict.run.verdict, LoopEncountered)
    assert str(verdict).startswith("inconclusive: loop")


@pytest.mark.parametrize("s", range(4))
@pytest.mark.parametrize("t", range(4))
def test_two_simple_type(s, t):
    verdict = filtered_type(two_simple(s, t).dbq)
    assert verdict.finite == (s <= 1)
    if verdict.finite:
        assert verdict.count == 2 + s


def test_step_limit_is_inconclusive(a3):
    verdict = filtered_type(a3.dbq, max_steps=1)
    assert not verdict.finite
    assert "1 steps" in verdict.reason


@pytest.mark.slow
@pytest.mark.parametrize("name", ["r4", "h4"])
def test_filtered_type_of_four_simple_blocks(registry, name):
    fixture = registry[name]
    verdict = filtered_type(fixture.dbq, script=fixture.script)
    assert verdict.count == fixture.expected["terminal_vertices"]


@pytest.mark.slow
@pytest.mark.parametrize("name", ["d3", "d4"])
def test_filtered_type_with_relations(registry, name):
    assert filtered_type(registry[name].dbq).finite


# ------------------------------ Standardization ------------------------------ #


def test_standardize_sl2(sl2, sl2_basis):
    report = standardize(sl2_basis, sl2.dbq)

    assert report.consistent
    assert report.counts.clean
    assert sorted(report.ext) == [0, 1, 2]
    assert report.multiplicities.loc["1"].tolist() == [1, 1]
    assert report.ext[0].loc["1", "2"] == 1
    assert report.ext[0].loc["2", "1"] == 0
    assert report.ext[1].loc["1", "2"] == 1
    assert report.ext[2].to_numpy().sum() == 0


def test_standardize_without_a_bocs_skips_counts(sl2_basis, mocker):
    spy = mocker.spy(filtered_module, "verify_bocs_counts")
    report = standardize(sl2_basis, degrees=(1,))
    assert report.counts is None
    assert list(report.ext) == [1]
    spy.assert_not_called()


def test_standardize_reports_wrong_bocs(sl2_basis):
    report = standardize(sl2_basis, two_simple(2, 1).dbq)
    assert not report.consistent
    assert not report.counts.clean


def test_standardize_stops_when_order_fails(sl2, caplog):
    basis = algebra_basis(reorder(sl2.algebra, ["2", "1"]))
    with caplog.at_level(logging.WARNING):
        report = standardize(basis)

    assert not report.consistent
    assert report.multiplicities is None
    assert report.ext == {}
    assert "heredity fails at vertex 1" in caplog.text

import random

import pytest

from bocs_engine.dbq import (
    DASHED,
    BiArrow,
    BiQuiver,
    CompatibleIdeal,
    DbqMorphism,
    DbqRep,
    DifferentialBiquiver,
    MixedElement,
    compose,
    enumerate_indecomposables,
    gauge_equivalent,
    gauge_signs,
    identity_morphism,
    inverse_morphism,
    is_isomorphism,
    is_morphism,
    letter,
    morphism_space,
    regular_bocs,
    rescale,
    right_algebra_dim,
    validate,
)
from bocs_engine.errors import SearchSpaceError
from bocs_engine.linalg import RATIONALS, Field, matrix
from bocs_engine.pipelines import schur_an, two_simple


def test_biarrow_degree_must_be_zero_or_one():
    with pytest.raises(ValueError):
        BiArrow("x", "1", "2", 2)


def test_differential_for_unknown_arrow_is_rejected():
    quiver = BiQuiver(["1", "2"], [BiArrow("a", "1", "2")])
    with pytest.raises(ValueError):
        DifferentialBiquiver(quiver, {"b": MixedElement.zero("1", "2")})


def test_relations_use_solid_arrows_only(sl2):
    quiver = sl2.dbq.biquiver
    with pytest.raises(ValueError):
        DifferentialBiquiver(quiver, {}, CompatibleIdeal([letter(quiver, "phi")]))


def test_mixed_element_degree(registry):
    quiver = registry["r4"].dbq.biquiver
    dc = registry["r4"].dbq.d("c")
    assert dc.degree(quiver) == DASHED
    assert len(dc) == 2
    assert (dc + letter(quiver, "c")).degree(quiver) is None


def test_substitute_multiplies_out(registry):
    dbq = registry["r4"].dbq
    quiver = dbq.biquiver
    replaced = dbq.d("c").substitute("a", letter(quiver, "a", 2))
    assert replaced.coefficient(("psi", "a")) == 2
    assert replaced.coefficient(("b", "phi")) == -1


def test_leibniz_rule_on_a_word(registry):
    dbq = registry["mazorchuk"].dbq
    quiver = dbq.biquiver
    word = letter(quiver, "b") * letter(quiver, "a")
    assert dbq.leibniz_extend(word).is_zero()
    assert dbq.leibniz_extend(letter(quiver, "c")) == letter(quiver, "b") * letter(quiver, "phi")


@pytest.mark.parametrize("name", ["sl2", "a3_regular", "mazorchuk", "d3", "d4", "r4", "h4"])
def test_fixtures_validate(registry, name):
    report = validate(registry[name].dbq)
    assert report
    assert report.directed
    assert report.compatible


def test_wrong_degree_is_a_violation(sl2):
    quiver = sl2.dbq.biquiver
    broken = DifferentialBiquiver(quiver, {"phi": letter(quiver, "a")}, name="broken")
    report = validate(broken)
    assert not report
    assert "degree" in report.violations[0]


def test_d_squared_must_vanish():
    quiver = BiQuiver(
        ["1", "2", "3"],
        [
            BiArrow("a", "1", "2"),
            BiArrow("b", "2", "3"),
            BiArrow("c", "1", "3"),
            BiArrow("phi", "1", "2", DASHED),
            BiArrow("psi", "2", "3", DASHED),
        ],
    )
    # d^2(c) = d(b)*phi = psi*phi
    broken = DifferentialBiquiver(
        quiver,
        {"b": letter(quiver, "psi"), "c": letter(quiver, "b") * letter(quiver, "phi")},
    )
    report = validate(broken)
    assert not report
    assert "d^2(c)" in report.violations[0]


def test_incompatible_relation_is_a_violation():
    quiver = BiQuiver(
        ["1", "2", "3"],
        [BiArrow("a", "1", "2"), BiArrow("b", "2", "3"), BiArrow("phi", "1", "2", DASHED)],
    )
    # d(b*a) = b*phi, and there is no earlier relation to absorb it
    broken = DifferentialBiquiver(
        quiver,
        {"a": letter(quiver, "phi")},
        CompatibleIdeal([letter(quiver, "b") * letter(quiver, "a")]),
    )
    report = validate(broken)
    assert not report.valid
    assert not report.compatible
    assert report.violations == ["d(b*a) = b*phi is not in the ideal of the earlier relations"]


def test_gauge_equivalence_detects_sign_changes(registry):
    dbq = registry["h4"].dbq
    flipped = rescale(dbq, {"phi": -1})
    assert flipped.d("c").coefficient(("b", "phi")) == 1
    assert gauge_signs(dbq, flipped) is not None
    assert gauge_equivalent(flipped, dbq)


def test_gauge_cannot_fix_different_supports(registry):
    assert not gauge_equivalent(registry["h4"].dbq, registry["r4"].dbq)


@pytest.fixture(scope="module")
def sl2_reps(sl2):
    dbq = sl2.dbq
    connected = DbqRep(dbq, {"1": 1, "2": 1}, {"a": matrix([[1]], RATIONALS)}, name="M")
    split = DbqRep(dbq, {"1": 1, "2": 1}, {"a": matrix([[0]], RATIONALS)}, name="N")
    return dbq, connected, split


def test_morphism_spaces_of_sl2(sl2_reps):
    dbq, connected, split = sl2_reps
    assert len(morphism_space(dbq, connected, connected)) == 2
    assert len(morphism_space(dbq, split, split)) == 3
    assert all(is_morphism(dbq, f) for f in morphism_space(dbq, connected, split))


def test_identity_is_a_unit_for_composition(sl2_reps):
    dbq, connected, _ = sl2_reps
    for f in morphism_space(dbq, connected, connected):
        assert compose(dbq, identity_morphism(connected), f) == f
        assert compose(dbq, f, identity_morphism(connected)) == f


def _combination(dbq, m, n, rng):
    """A random combination of a basis of the morphisms ``m -> n``."""
    total = DbqMorphism(m, n, {})
    for f in morphism_space(dbq, m, n):
        c = m.field(rng.randint(-3, 3))
        vertex = {v: total.vertex[v] + f.vertex[v] * c for v in dbq.vertices}
        dashed = {a: total.dashed[a] + f.dashed[a] * c for a in total.dashed}
        total = DbqMorphism(m, n, vertex, dashed)
    return total


@pytest.mark.parametrize("seed", range(4))
def test_composition_is_associative(registry, seed):
    dbq = registry["mazorchuk"].dbq
    rng = random.Random(seed)
    one = matrix([[1]], RATIONALS)

    def member(name):
        action = {"a": one, "b": one, "c": matrix([[rng.randint(-3, 3)]], RATIONALS)}
        return DbqRep(dbq, {"1": 1, "2": 1, "3": 1}, action, name=name)

    u, v, w, x = (member(name) for name in "UVWX")
    f, g, h = _combination(dbq, u, v, rng), _combination(dbq, v, w, rng), _combination(dbq, w, x, rng)

    assert all(is_morphism(dbq, k) for k in (f, g, h))
    assert compose(dbq, h, compose(dbq, g, f)) == compose(dbq, compose(dbq, h, g), f)


def test_inverse_of_an_isomorphism(sl2_reps):
    dbq, connected, _ = sl2_reps
    f = DbqMorphism(
        connected,
        connected,
        {"1": matrix([[2]], RATIONALS), "2": matrix([[2]], RATIONALS)},
        {"phi": matrix([[5]], RATIONALS)},
    )
    assert is_morphism(dbq, f)
    assert is_isomorphism(dbq, f)
    g = inverse_morphism(dbq, f)
    assert compose(dbq, g, f) == identity_morphism(connected)


@pytest.fixture(scope="module")
def dual_reps(dual_numbers):
    """Two presentations of k[x]/(x^2) over GF(2) that differ by swapping the basis."""
    dbq = regular_bocs(dual_numbers)
    field = Field(2)
    m = DbqRep(dbq, {"1": 2}, {"x": matrix([[0, 0], [1, 0]], field)}, field=field, name="M")
    n = DbqRep(dbq, {"1": 2}, {"x": matrix([[0, 1], [0, 0]], field)}, field=field, name="N")
    return dbq, m, n


def test_swap_is_an_isomorphism_over_gf2(dual_reps):
    dbq, m, n = dual_reps
    f = DbqMorphism(m, n, {"1": matrix([[0, 1], [1, 0]], Field(2))})

    assert is_morphism(dbq, f)
    assert is_isomorphism(dbq, f)
    g = inverse_morphism(dbq, f)
    assert compose(dbq, g, f) == identity_morphism(m)
    assert compose(dbq, f, g) == identity_morphism(n)


def test_morphism_equality_ignores_matrix_storage(dual_reps):
    dbq, m, _ = dual_reps
    product = compose(dbq, identity_morphism(m), identity_morphism(m))
    assert product == identity_morphism(m)
    assert product != DbqMorphism(m, m, {})


@pytest.mark.parametrize("lam", [1, 3, -2])
def test_mazorchuk_family_collapses_to_one_module(registry, lam):
    dbq = registry["mazorchuk"].dbq
    one = matrix([[1]], RATIONALS)

    def member(c, name):
        action = {"a": one, "b": one, "c": matrix([[c]], RATIONALS)}
        return DbqRep(dbq, {"1": 1, "2": 1, "3": 1}, action, name=name)

    m, n = member(lam, "M"), member(0, "N")
    f = DbqMorphism(m, n, {v: one for v in dbq.vertices}, {"phi": matrix([[-lam]], RATIONALS)})

    assert is_morphism(dbq, f)
    assert is_isomorphism(dbq, f)
    assert compose(dbq, inverse_morphism(dbq, f), f) == identity_morphism(m)
    assert not is_morphism(dbq, DbqMorphism(m, n, {v: one for v in dbq.vertices}))


def test_no_isomorphism_between_connected_and_split(sl2_reps):
    dbq, connected, split = sl2_reps
    for f in morphism_space(dbq, split, connected):
        assert not is_isomorphism(dbq, f)


def test_oracle_counts_sl2_indecomposables(sl2):
    result = enumerate_indecomposables(sl2.dbq, 2, {"1": 2, "2": 2})
    assert result.count == 3
    assert sorted(result.dimension_vectors()) == [(0, 1), (1, 0), (1, 1)]


def test_oracle_on_regular_bocs_counts_modules(a3):
    result = enumerate_indecomposables(regular_bocs(a3.algebra), 3, {"1": 1, "2": 1, "3": 1})
    assert result.count == 6


def test_oracle_on_dual_numbers_identifies_isomorphic_modules(dual_numbers):
    result = enumerate_indecomposables(regular_bocs(dual_numbers), 2, {"1": 2})
    assert result.count == 2
    assert sorted(result.dimension_vectors()) == [(1,), (2,)]


def test_oracle_respects_budget(sl2):
    with pytest.raises(SearchSpaceError):
        enumerate_indecomposables(sl2.dbq, 5, {"1": 3, "2": 3}, budget=100)


def test_oracle_rejects_other_characteristics(sl2):
    with pytest.raises(ValueError):
        enumerate_indecomposables(sl2.dbq, 7, {"1": 1, "2": 1})


def test_right_algebra_of_fixtures(sl2, a3):
    assert right_algebra_dim(sl2.dbq) == 5
    assert right_algebra_dim(a3.dbq) == 6


@pytest.mark.parametrize("s", range(4))
@pytest.mark.parametrize("t", range(4))
def test_two_simple_right_algebra_dimension(s, t):
    member = two_simple(s, t)
    assert right_algebra_dim(member.dbq) == 2 + s + t + s * t


@pytest.mark.parametrize("n, expected", [(2, 5), (3, 14), pytest.param(4, 30, marks=pytest.mark.slow)])
def test_schur_right_algebra_dimension(n, expected):
    assert right_algebra_dim(schur_an(n).dbq) == expected

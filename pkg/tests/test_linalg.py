import pytest
from sympy.polys.domains import QQ

from bocs_engine.errors import InconsistentSystemError, ParseError
from bocs_engine.linalg import (
    RATIONALS,
    Field,
    entries,
    format_scalar,
    identity,
    independent_indices,
    inverse,
    is_zero_matrix,
    kernel_basis,
    matrices_equal,
    matrix,
    parse_scalar,
    rank,
    rref,
    solve,
    zeros,
)


def test_rational_arithmetic_is_exact():
    a = parse_scalar("3/4")
    assert a + (-a) == 0
    assert a * RATIONALS.inverse(a) == 1
    assert format_scalar(a) == "3/4"
    assert format_scalar(parse_scalar("-2")) == "-2"


def test_parse_scalar_rejects_garbage():
    with pytest.raises(ParseError) as error:
        parse_scalar("3/0", 4, 7)
    assert error.value.line == 4
    assert error.value.column == 7


def test_field_rejects_composite_characteristic():
    with pytest.raises(ValueError):
        Field(4)


def test_prime_field_conversion():
    gf3 = Field(3)
    assert gf3(4) == gf3(1)
    assert gf3.is_zero(gf3(6))
    assert len(gf3.elements()) == 3
    with pytest.raises(ZeroDivisionError):
        gf3.inverse(gf3(3))


def test_rref_of_rank_one_matrix():
    reduction = rref(matrix([[1, 2], [2, 4]], RATIONALS))
    assert reduction.rank == 1
    assert reduction.pivots == (0,)
    assert entries(reduction.reduced) == [[1, 2], [0, 0]]


def test_rank_depends_on_characteristic():
    rows = [[1, 1], [1, -1]]
    assert rank(matrix(rows, RATIONALS)) == 2
    assert rank(matrix(rows, Field(2))) == 1


def test_solve_particular_and_kernel():
    m = matrix([[1, 1]], RATIONALS)
    solution = solve(m, matrix([[1]], RATIONALS))
    assert entries(m * solution.particular) == [[1]]
    assert len(solution.kernel) == 1
    assert is_zero_matrix(m * solution.kernel[0])


def test_solve_inconsistent():
    m = matrix([[1, 0], [1, 0]], RATIONALS)
    with pytest.raises(InconsistentSystemError):
        solve(m, matrix([[1], [2]], RATIONALS))


def test_kernel_basis_of_full_rank_matrix_is_empty():
    assert kernel_basis(matrix([[1, 0], [0, 1]], RATIONALS)) == []


def test_inverse():
    m = matrix([[2, 1], [1, 1]], RATIONALS)
    assert entries(m * inverse(m)) == [[1, 0], [0, 1]]
    with pytest.raises(InconsistentSystemError):
        inverse(matrix([[1, 1], [1, 1]], RATIONALS))


def test_independent_indices_greedy():
    one, zero = QQ(1), QQ(0)
    vectors = [[one, zero], [QQ(2), zero], [zero, one], [one, one]]
    assert independent_indices(vectors, QQ) == [0, 2]
    assert independent_indices(vectors, QQ, start=[[zero, one]]) == [0]


@pytest.mark.parametrize("field", [RATIONALS, Field(2)])
def test_matrices_equal_ignores_storage(field):
    m = matrix([[1, 1], [0, 1]], field)
    assert matrices_equal(zeros(1, 1, field), matrix([[0]], field))
    assert matrices_equal(m * inverse(m), identity(2, field))
    assert matrices_equal(zeros(0, 3, field), zeros(0, 3, field))
    assert not matrices_equal(zeros(0, 3, field), zeros(3, 0, field))
    assert not matrices_equal(identity(2, field), zeros(2, 2, field))

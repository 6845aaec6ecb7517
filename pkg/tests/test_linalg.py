import pytest

from sparseproj.linalg import (
    InconsistentSystem,
    matrix_rank,
    nullspace,
    solve_consistent,
)
from sparseproj.rat import rat


def R(rows):
    return [[rat(x) for x in row] for row in rows]


def test_rank():
    assert matrix_rank(R([[1, 2], [2, 4]])) == 1
    assert matrix_rank(R([[1, 0], [0, 1]])) == 2
    assert matrix_rank([]) == 0
    assert matrix_rank(R([[0, 0]])) == 0


def test_solve_rectangular_consistent():
    a = R([[1, 0], [0, 1], [1, 1]])
    b = [rat(2), rat(3), rat(5)]
    assert solve_consistent(a, b) == [rat(2), rat(3)]
    with pytest.raises(InconsistentSystem):
        solve_consistent(a, [rat(2), rat(3), rat(6)])


def test_solve_underdetermined_sets_free_to_zero():
    a = R([[1, 1, 0]])
    sol = solve_consistent(a, [rat(4)])
    assert sol[0] == 4 and not sol[1] and not sol[2]


def test_nullspace():
    a = R([[1, 2, 3]])
    basis = nullspace(a, 3)
    assert len(basis) == 2
    for vec in basis:
        assert sum(x * v for x, v in zip(a[0], vec)) == 0
    assert nullspace(R([[1, 0], [0, 1]]), 2) == []


def test_ratfun_entries():
    from sparseproj.mpoly import SparsePoly
    from sparseproj.ratfun import RatFun

    x = RatFun.from_poly(SparsePoly(1, {(1,): 1}))
    one = RatFun.from_const(1, 1)
    rows = [[x, one], [one, x]]
    assert matrix_rank(rows) == 2
    sol = solve_consistent(rows, [x * x + one, x + x])
    assert sol == [x, one]

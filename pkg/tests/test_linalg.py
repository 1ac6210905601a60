from fractions import Fraction

import pytest

from toric_cartier import linalg


def test_primitive_scales_to_coprime_integers():
    assert linalg.primitive((2, 4)) == (1, 2)
    assert linalg.primitive((Fraction(1, 2), Fraction(3, 4))) == (2, 3)
    assert linalg.primitive((0, -6, 9)) == (0, -2, 3)
    with pytest.raises(ValueError):
        linalg.primitive((0, 0))


def test_rank_and_kernel():
    assert linalg.rank([(1, 0), (0, 1)]) == 2
    assert linalg.rank([(1, 2), (2, 4)]) == 1
    ker = linalg.kernel_basis([(1, 2)], 2)
    assert len(ker) == 1
    assert linalg.dot((1, 2), ker[0]) == 0
    assert linalg.kernel_basis([], 2) == [(1, 0), (0, 1)]


def test_solve_unique_and_inconsistent():
    sol, free = linalg.solve([(0, 1), (3, -1)], [-2, -1])
    assert sol == (Fraction(-1), Fraction(-2))
    assert free == 0
    assert linalg.solve([(1, 0), (1, 0)], [0, 1]) is None


def test_nonneg_solve_feasible():
    # (1,1) = 1*(1,0) + 1*(0,1)
    x = linalg.nonneg_solve([(1, 0), (0, 1)], [1, 1])
    assert x == (1, 1)
    # origin as a convex combination of (1,0) and (-1,0)
    x = linalg.nonneg_solve([(1, -1), (0, 0), (1, 1)], [0, 0, 1])
    assert x is not None
    assert sum(x) == 1


def test_nonneg_solve_infeasible():
    # (-1,-1) is not a nonnegative combination of the unit vectors
    assert linalg.nonneg_solve([(1, 0), (0, 1)], [-1, -1]) is None
    # origin is not a convex combination of rays of a pointed cone
    assert linalg.nonneg_solve([(1, 1), (0, 3), (1, 1)], [0, 0, 1]) is None

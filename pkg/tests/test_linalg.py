from qmacd.linalg import nullspace, rref
from qmacd.qtfield import ONE, Q, T, ZERO


def test_rref_identity():
    rows, piv = rref([[ONE, Q], [T, ONE]], 2)
    assert piv == [0, 1]
    assert rows[0] == [ONE, ZERO] and rows[1] == [ZERO, ONE]


def test_nullspace_rank_one():
    a = [[ONE, Q], [T, Q * T]]
    (v,) = nullspace(a, 2)
    for row in a:
        assert sum((x * y for x, y in zip(row, v)), ZERO) == ZERO
    assert v[1] == ONE


def test_nullspace_full_rank_is_empty():
    assert nullspace([[ONE, ZERO], [ZERO, T]], 2) == []


def test_nullspace_zero_matrix():
    assert len(nullspace([[ZERO, ZERO, ZERO]], 3)) == 3

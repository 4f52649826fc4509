import random
from fractions import Fraction

from feec.linalg import inverse, nonsingular, rank, solve, solve_columns

Q = Fraction


def test_rank_basic():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[1, 0], [0, 1]]) == 2
    assert rank([]) == 0
    assert rank([[0, 0, 0]]) == 0
    assert rank([[Q(1, 2), Q(1, 3)], [Q(3, 2), Q(1)]]) == 1
    assert rank([[Q(1, 2), Q(1, 3)], [Q(1, 4), Q(1)]]) == 2


def test_rank_matches_row_reduction_oracle():
    rng = random.Random(5)

    def brute_rank(rows):
        m = [[Q(x) for x in row] for row in rows]
        rk = 0
        cols = len(m[0]) if m else 0
        for c in range(cols):
            piv = next((i for i in range(rk, len(m)) if m[i][c]), None)
            if piv is None:
                continue
            m[rk], m[piv] = m[piv], m[rk]
            for i in range(len(m)):
                if i != rk and m[i][c]:
                    f = m[i][c] / m[rk][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[rk])]
            rk += 1
        return rk

    for _ in range(30):
        rows = [
            [Q(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(5)] for _ in range(4)
        ]
        assert rank(rows) == brute_rank(rows)


def test_solve():
    x = solve([[2, 0], [0, 4]], [6, 8])
    assert x == [Q(3), Q(2)]
    assert solve([[1, 1], [1, 1]], [1, 2]) is None
    x = solve([[1, 1], [1, 1]], [2, 2])
    assert x is not None and x[0] + x[1] == 2


def test_solve_columns():
    cols = [[1, 0, 1], [0, 1, 1]]
    x = solve_columns(cols, [2, 3, 5])
    assert x == [Q(2), Q(3)]
    assert solve_columns(cols, [1, 1, 3]) is None
    assert solve_columns([], [0, 0]) == []
    assert solve_columns([], [1]) is None


def test_inverse():
    inv = inverse([[2, 1], [1, 1]])
    assert inv == [[Q(1), Q(-1)], [Q(-1), Q(2)]]
    assert inverse([[1, 2], [2, 4]]) is None
    assert nonsingular([[2, 1], [1, 1]])
    assert not nonsingular([[1, 2], [2, 4]])


def test_inverse_roundtrip_randomized():
    rng = random.Random(9)
    for _ in range(10):
        m = [[Q(rng.randint(-3, 3)) for _ in range(4)] for _ in range(4)]
        inv = inverse(m)
        if inv is None:
            assert rank(m) < 4
            continue
        for i in range(4):
            for j in range(4):
                s = sum(m[i][t] * inv[t][j] for t in range(4))
                assert s == (1 if i == j else 0)

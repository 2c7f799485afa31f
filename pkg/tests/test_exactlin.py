"""Exact linear algebra checks against an independent naive oracle."""

import random
from fractions import Fraction

from kronorbit.fields import GF, QQ
from kronorbit.matrix import (
    Matrix,
    cokernel_with_section,
    inverse,
    is_invertible,
    kernel_basis,
    rank,
    solve_right,
    tensor,
)


def naive_rank(rows):
    """Plain Gaussian elimination over Fraction; the textbook oracle."""
    work = [[Fraction(x) for x in row] for row in rows]
    if not work:
        return 0
    ncols = len(work[0])
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(work)):
            if work[i][col]:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(len(work)):
            if i != r and work[i][col]:
                factor = work[i][col] / work[r][col]
                work[i] = [a - factor * b for a, b in zip(work[i], work[r])]
        r += 1
    return r


def random_qq_matrix(rng, nrows, ncols, bound=6):
    return Matrix.from_rows(QQ, [[rng.randint(-bound, bound) for _ in range(ncols)] for _ in range(nrows)])


def test_rank_trivial_cases():
    assert rank(Matrix.zeros(QQ, 0, 0)) == 0
    assert rank(Matrix.identity(QQ, 3)) == 3
    assert rank(Matrix.from_rows(QQ, [[1, 2], [2, 4]])) == 1


def test_rank_matches_naive_oracle_on_random_matrices():
    rng = random.Random(1)
    for _ in range(200):
        nrows = rng.randint(1, 8)
        ncols = rng.randint(1, 8)
        rows = [[rng.randint(-5, 5) for _ in range(ncols)] for _ in range(nrows)]
        assert rank(Matrix.from_rows(QQ, rows)) == naive_rank(rows)


def test_kernel_basis_identity_and_zero():
    assert kernel_basis(Matrix.identity(QQ, 4)).ncols == 0
    k = kernel_basis(Matrix.zeros(QQ, 2, 3))
    assert k.ncols == 3
    assert k == Matrix.identity(QQ, 3)


def test_kernel_annihilated_and_rank_nullity():
    rng = random.Random(2)
    m = Matrix.from_rows(QQ, [[1, 1, 0]])
    k = kernel_basis(m)
    assert k.ncols == 2
    assert (m @ k).is_zero()
    for _ in range(60):
        m = random_qq_matrix(rng, rng.randint(1, 7), rng.randint(1, 7))
        k = kernel_basis(m)
        assert rank(m) + k.ncols == m.ncols
        assert (m @ k).is_zero()


def test_kernel_multimodular_path_agrees_with_bareiss():
    # sizes above the Bareiss cost limit take the certified mod-p route
    rng = random.Random(3)
    rows = [[rng.randint(-4, 4) for _ in range(120)] for _ in range(90)]
    m = Matrix.from_rows(QQ, rows)
    k = kernel_basis(m)
    assert (m @ k).is_zero()
    assert rank(m) + k.ncols == m.ncols
    assert rank(m) == naive_rank(rows)


def test_cokernel_with_section():
    surj = Matrix.from_rows(QQ, [[1, 0], [0, 1]])
    proj, _ = cokernel_with_section(surj)
    assert proj.nrows == 0

    zero_map = Matrix.zeros(QQ, 1, 1)
    proj, sec = cokernel_with_section(zero_map)
    assert proj == Matrix.identity(QQ, 1)

    m = Matrix.from_rows(QQ, [[1], [0]])
    proj, sec = cokernel_with_section(m)
    assert proj.nrows == 1
    assert (proj @ m).is_zero()
    assert rank(proj) == 1
    assert proj @ sec == Matrix.identity(QQ, 1)


def test_tensor_conventions():
    assert tensor(Matrix.identity(QQ, 2), Matrix.identity(QQ, 3)) == Matrix.identity(QQ, 6)
    rng = random.Random(4)
    a = random_qq_matrix(rng, 3, 2)
    one = Matrix.from_rows(QQ, [[1]])
    assert tensor(a, one) == a
    for _ in range(5):
        a = random_qq_matrix(rng, 3, 3)
        b = random_qq_matrix(rng, 3, 3)
        assert rank(tensor(a, b)) == rank(a) * rank(b)


def test_tensor_associativity():
    rng = random.Random(5)
    a = random_qq_matrix(rng, 2, 3)
    b = random_qq_matrix(rng, 2, 2)
    c = random_qq_matrix(rng, 3, 2)
    assert tensor(tensor(a, b), c) == tensor(a, tensor(b, c))


def test_prime_field_elimination():
    f5 = GF(5)
    m = Matrix.from_rows(f5, [[1, 2, 3], [2, 3, 1]])
    assert rank(m) == 2
    k = kernel_basis(m)
    assert k.ncols == 1
    assert (m @ k).is_zero()
    # rank drops mod 5 when a 2x2 minor is divisible by 5
    drop = Matrix.from_rows(f5, [[1, 2, 3], [2, 4, 1]])
    assert rank(drop) == 1


def test_prime_field_agrees_with_rational_rank_generically():
    # mod-p rank can only drop; over random small entries with p = 10007 it
    # matches the rational rank on this sample
    rng = random.Random(6)
    fp = GF(10007)
    for _ in range(40):
        nrows = rng.randint(1, 6)
        ncols = rng.randint(1, 6)
        rows = [[rng.randint(0, 9) for _ in range(ncols)] for _ in range(nrows)]
        assert rank(Matrix.from_rows(fp, rows)) == naive_rank(rows)


def test_solve_right_and_inverse():
    rng = random.Random(7)
    for _ in range(20):
        a = random_qq_matrix(rng, 4, 4)
        if not is_invertible(a):
            continue
        inv = inverse(a)
        assert a @ inv == Matrix.identity(QQ, 4)
        b = random_qq_matrix(rng, 4, 2)
        x = solve_right(a, b)
        assert a @ x == b


def test_scalar_serialization_round_trip():
    assert QQ.format_scalar(Fraction(3)) == "3"
    assert QQ.format_scalar(Fraction(-7, 2)) == "-7/2"
    assert QQ.parse_scalar("-7/2") == Fraction(-7, 2)
    f7 = GF(7)
    assert f7.format_scalar(5) == "5"
    assert f7.parse_scalar("5") == 5

import random
from itertools import permutations

import pytest

from intvalg import (
    EnumerationTooLarge, Matrix, ModRing, Poly, char_poly, det, divides, enumerate_matrices,
    enumeration_limit, make_fq, mat_eval, min_poly_field, monic_polys, nilpotency_index, parse_matrix,
    parse_poly, phi,
)

F2, F3, Z4, Z9 = make_fq(2), make_fq(3), ModRing(4), ModRing(9)


def leibniz_det(rows):
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        prod = sign
        for i in range(n):
            prod *= rows[i][perm[i]]
        total += prod
    return total


def char_values(M, xs):
    """det(x I - M) at integer points, by the permutation expansion."""
    n = M.n
    out = []
    for x in xs:
        rows = [[(x if i == j else 0) - M[i, j] for j in range(n)] for i in range(n)]
        out.append(leibniz_det(rows))
    return out


def test_mat_eval_examples():
    N = parse_matrix("0,1;0,0")
    assert mat_eval(parse_poly("X^2-X"), N) == parse_matrix("0,-1;0,0")
    M = parse_matrix("3,1;4,1")
    assert mat_eval(Poly.x(), M) == M
    for A in enumerate_matrices(2, F2):
        assert mat_eval(phi(2, 2), A).is_zero()


def test_char_poly_examples():
    assert char_poly(parse_matrix("1,2;3,4")) == parse_poly("X^2-5X-2")
    assert char_poly(Matrix.identity(2)) == parse_poly("X^2-2X+1")
    assert char_poly(parse_matrix("0,1;0,0")) == parse_poly("X^2")


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_char_poly_against_leibniz(n):
    rng = random.Random(n)
    for _ in range(25):
        M = Matrix([[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)])
        cp = char_poly(M)
        xs = range(-2, n + 1)
        assert [cp(x) for x in xs] == char_values(M, xs)
        assert det(M) == leibniz_det([list(r) for r in M.rows])


def test_char_poly_commutes_with_reduction():
    rng = random.Random(7)
    for _ in range(40):
        rows = [[rng.randint(0, 50) for _ in range(3)] for _ in range(3)]
        assert char_poly(Matrix(rows, Z9)) == char_poly(Matrix(rows)).to_ring(Z9)


@pytest.mark.parametrize("R", [F2, F3, Z4, make_fq(2, 2)], ids=repr)
def test_cayley_hamilton_exhaustive(R):
    count = 0
    for M in enumerate_matrices(2, R):
        assert mat_eval(char_poly(M), M).is_zero()
        count += 1
    assert count == R.order**4


def test_cayley_hamilton_random_m3_z9():
    rng = random.Random(2024)
    for _ in range(200):
        M = Matrix([[rng.randrange(9) for _ in range(3)] for _ in range(3)], Z9)
        assert mat_eval(char_poly(M), M).is_zero()


def test_min_poly_examples():
    assert min_poly_field(parse_matrix("0,1;0,0", F2)) == parse_poly("X^2", F2)
    assert min_poly_field(parse_matrix("0,1;1,1", F2)) == parse_poly("X^2+X+1", F2)
    assert min_poly_field(Matrix.identity(2, F3)) == parse_poly("X+2", F3)


@pytest.mark.parametrize("R", [F2, F3], ids=repr)
def test_min_poly_brute_force(R):
    for M in enumerate_matrices(2, R):
        mp = min_poly_field(M)
        assert divides(mp, char_poly(M))
        # least-degree monic annihilator, found by trying every candidate in order
        first = next(f for d in (1, 2) for f in monic_polys(R, d) if mat_eval(f, M).is_zero())
        assert mp == first


def test_enumerate_matrices_counts():
    assert sum(1 for _ in enumerate_matrices(2, F2)) == 16
    assert sum(1 for _ in enumerate_matrices(1, Z4)) == 4
    assert sum(1 for _ in enumerate_matrices(2, Z4)) == 256
    assert len(set(enumerate_matrices(2, F3))) == 81
    first = list(enumerate_matrices(2, F2))[:3]
    assert [str(M) for M in first] == ["0,0;0,0", "1,0;0,0", "0,1;0,0"]
    with enumeration_limit(100):
        with pytest.raises(EnumerationTooLarge):
            list(enumerate_matrices(2, Z4))


def test_nilpotency_examples():
    assert nilpotency_index(parse_matrix("0,1;0,0", Z4)) == 2
    assert nilpotency_index(parse_matrix("2,2;2,2", Z4)) == 2
    assert nilpotency_index(Matrix.identity(2, Z4)) is None


def test_nilpotency_bound_on_nil_ideal():
    # entries in 2Z/4Z: any product of two such matrices vanishes
    for p in (2, 3):
        R = ModRing(p * p)
        for M in enumerate_matrices(2, R):
            if all(x % p == 0 for x in M.flat()):
                k = nilpotency_index(M, nu_max=2)
                assert k is not None and k <= 2


def test_matrix_text_and_ring_checks():
    M = parse_matrix("1,2;3,4", Z4)
    assert str(M) == "1,2;3,0"
    assert (M * M).flat() == (3, 2, 3, 2)
    assert M.trace() == 1 and M.transpose() == parse_matrix("1,3;2,4", Z4)
    with pytest.raises(ValueError):
        parse_matrix("1,2;3")

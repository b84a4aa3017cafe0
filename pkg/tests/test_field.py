import random
from itertools import permutations

import pytest

from balanced_mds.field import (
    FieldMatrix,
    PrimeField,
    SingularMatrixError,
    determinant,
    is_prime,
    smallest_prime_above,
    solve_linear,
)


def trial_division_is_prime(n: int) -> bool:
    """Independent primality oracle."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def cofactor_det(rows: list[list[int]], q: int) -> int:
    """Independent determinant oracle: Leibniz expansion over permutations."""
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        # parity via inversion count
        inversions = sum(
            1 for i in range(n) for j in range(i + 1, n) if seen[i] > seen[j]
        )
        sign = -1 if inversions % 2 else 1
        prod = sign
        for i in range(n):
            prod *= rows[i][perm[i]]
        total += prod
    return total % q


GF5 = PrimeField(5)
GF7 = PrimeField(7)


def test_primality_against_trial_division():
    for n in range(1000):
        assert is_prime(n) == trial_division_is_prime(n), n


def test_smallest_prime_above_examples():
    assert smallest_prime_above(35) == 37
    assert smallest_prime_above(1) == 2
    assert smallest_prime_above(6) == 7
    assert smallest_prime_above(3) == 5


def test_smallest_prime_above_matches_oracle():
    for m in range(1, 200):
        q = smallest_prime_above(m)
        assert q > m
        assert trial_division_is_prime(q)
        assert all(not trial_division_is_prime(x) for x in range(m + 1, q))


def test_prime_field_rejects_composites_and_tiny():
    with pytest.raises(ValueError):
        PrimeField(1)
    with pytest.raises(ValueError):
        PrimeField(35)


def test_add_examples():
    assert (GF7.element(3) + GF7.element(5)).value == 1
    for x in range(7):
        assert (GF7.zero + GF7.element(x)).value == x
    gf2 = PrimeField(2)
    assert (gf2.one + gf2.one).value == 0


def test_mul_examples():
    assert (GF7.element(3) * GF7.element(5)).value == 1
    for x in range(7):
        assert (GF7.one * GF7.element(x)).value == x
    assert (GF5.element(2) * GF5.element(3)).value == 1


def test_inverse_examples():
    assert GF7.element(3).inverse().value == 5
    assert GF7.one.inverse().value == 1
    assert PrimeField(37).element(2).inverse().value == 19
    with pytest.raises(ZeroDivisionError):
        GF7.zero.inverse()


def test_field_mismatch_rejected():
    with pytest.raises(ValueError):
        GF5.element(1) + GF7.element(1)
    with pytest.raises(ValueError):
        GF5.element(2) * GF7.element(2)


def test_field_axioms_random():
    rng = random.Random(42)
    for q in (2, 5, 37, 101):
        fld = PrimeField(q)
        for _ in range(50):
            a = fld.element(rng.randrange(q))
            b = fld.element(rng.randrange(q))
            c = fld.element(rng.randrange(q))
            assert (a + b) + c == a + (b + c)
            assert a + b == b + a
            assert (a * b) * c == a * (b * c)
            assert a * b == b * a
            assert a * (b + c) == a * b + a * c
            assert a + fld.zero == a
            assert a * fld.one == a
            assert a + (-a) == fld.zero
            if a.value != 0:
                assert a * a.inverse() == fld.one


def test_determinant_examples():
    assert determinant(FieldMatrix.from_ints(GF5, [[1, 2], [3, 4]])).value == 3
    ident = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    assert determinant(FieldMatrix.from_ints(GF5, ident)).value == 1
    assert determinant(FieldMatrix.from_ints(GF5, [[1, 1], [1, 1]])).value == 0
    with pytest.raises(ValueError):
        determinant(FieldMatrix.from_ints(GF5, [[1, 2, 3], [4, 0, 1]]))


def test_determinant_against_cofactor_oracle():
    rng = random.Random(7)
    for q in (5, 7):
        fld = PrimeField(q)
        for order in (1, 2, 3, 4):
            for _ in range(25):
                rows = [[rng.randrange(q) for _ in range(order)] for _ in range(order)]
                assert determinant(FieldMatrix.from_ints(fld, rows)).value == cofactor_det(rows, q)


def test_solve_examples():
    a = FieldMatrix.from_ints(GF5, [[1, 0], [0, 1]])
    assert [e.value for e in solve_linear(a, [GF5.element(2), GF5.element(3)])] == [2, 3]
    a = FieldMatrix.from_ints(GF5, [[1, 1], [0, 1]])
    assert [e.value for e in solve_linear(a, [GF5.element(3), GF5.element(2)])] == [1, 2]
    a = FieldMatrix.from_ints(GF7, [[2, 0], [0, 3]])
    assert [e.value for e in solve_linear(a, [GF7.one, GF7.one])] == [4, 5]


def test_solve_roundtrip_random():
    rng = random.Random(11)
    fld = PrimeField(37)
    for order in range(1, 7):
        for _ in range(20):
            rows = [[rng.randrange(37) for _ in range(order)] for _ in range(order)]
            a = FieldMatrix.from_ints(fld, rows)
            b = [fld.element(rng.randrange(37)) for _ in range(order)]
            if determinant(a).value == 0:
                with pytest.raises(SingularMatrixError):
                    solve_linear(a, b)
                continue
            x = solve_linear(a, b)
            # A x must reproduce b exactly
            for r in range(order):
                acc = fld.zero
                for c in range(order):
                    acc = acc + a.entries[r][c] * x[c]
                assert acc == b[r]


def test_solve_shape_errors_distinct_from_singular():
    a = FieldMatrix.from_ints(GF5, [[1, 1], [1, 1]])
    with pytest.raises(SingularMatrixError):
        solve_linear(a, [GF5.one, GF5.one])
    with pytest.raises(ValueError) as exc:
        solve_linear(a, [GF5.one])
    assert not isinstance(exc.value, SingularMatrixError)

"""GF(2) matrices: products, rank, column-space containment, exports."""

import random

import pytest

from boolweyl.gf2lin import (
    Gf2Matrix,
    colspace_contains,
    identity,
    mat_add,
    mat_apply,
    mat_mul,
    matrix_from_text,
    matrix_to_dot,
    matrix_to_text,
    rank,
    solve_right,
    transpose,
    zero_matrix,
)


def random_matrix(rng, side):
    return Gf2Matrix(tuple(rng.getrandbits(side) for _ in range(side)))


def test_matrix_validation():
    with pytest.raises(ValueError):
        Gf2Matrix((1, 2, 3))  # side 3 not a power of two
    with pytest.raises(ValueError):
        Gf2Matrix((4, 0))  # row out of range for side 2


def test_identity_and_zero():
    eye = identity(4)
    z = zero_matrix(4)
    rng = random.Random(0)
    for _ in range(10):
        a = random_matrix(rng, 4)
        assert mat_mul(a, eye) == a
        assert mat_mul(eye, a) == a
        assert mat_mul(a, z) == z
        assert mat_add(a, a) == z


def test_mat_mul_matches_entrywise_definition():
    rng = random.Random(1)
    for side in (2, 4, 8):
        for _ in range(20):
            a = random_matrix(rng, side)
            b = random_matrix(rng, side)
            prod = mat_mul(a, b)
            for r in range(side):
                for c in range(side):
                    want = 0
                    for k in range(side):
                        want ^= a.entry(r, k) & b.entry(k, c)
                    assert prod.entry(r, c) == want


def test_mat_mul_associative():
    rng = random.Random(2)
    for _ in range(25):
        a, b, c = (random_matrix(rng, 8) for _ in range(3))
        assert mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c))


def test_mat_apply():
    eye = identity(4)
    rng = random.Random(3)
    for _ in range(10):
        v = rng.getrandbits(4)
        assert mat_apply(eye, v) == v
        assert mat_apply(zero_matrix(4), v) == 0
    a = random_matrix(rng, 8)
    b = random_matrix(rng, 8)
    for _ in range(10):
        v = rng.getrandbits(8)
        assert mat_apply(mat_mul(a, b), v) == mat_apply(a, mat_apply(b, v))
    with pytest.raises(ValueError):
        mat_apply(eye, 1 << 5)


def span_size(rows, side):
    span = {0}
    for row in rows:
        span |= {row ^ v for v in span}
    return len(span)


def test_rank_matches_span_size():
    rng = random.Random(4)
    for side in (2, 4, 8):
        for _ in range(25):
            a = random_matrix(rng, side)
            assert (1 << rank(a)) == span_size(a.rows, side)
    assert rank(identity(4)) == 4
    assert rank(Gf2Matrix((0b11, 0b11))) == 1
    assert rank(zero_matrix(8)) == 0


def test_rank_submultiplicative():
    rng = random.Random(5)
    for _ in range(30):
        a = random_matrix(rng, 8)
        b = random_matrix(rng, 8)
        assert rank(mat_mul(a, b)) <= min(rank(a), rank(b))


def brute_colspace_contains(t, s):
    side = t.side
    for packed in range(1 << (side * side)):
        r = Gf2Matrix(
            tuple((packed >> (i * side)) & ((1 << side) - 1) for i in range(side))
        )
        if mat_mul(t, r) == s:
            return True
    return False


def test_colspace_trivial_cases():
    rng = random.Random(6)
    for _ in range(10):
        s = random_matrix(rng, 4)
        assert colspace_contains(identity(4), s)
    assert not colspace_contains(zero_matrix(2), identity(2))
    assert colspace_contains(zero_matrix(2), zero_matrix(2))


def test_colspace_matches_brute_force_n1():
    rng = random.Random(7)
    for _ in range(100):
        t = random_matrix(rng, 2)
        s = random_matrix(rng, 2)
        assert colspace_contains(t, s) == brute_colspace_contains(t, s)


def test_solve_right_produces_witness():
    rng = random.Random(8)
    for side in (2, 4, 8):
        for _ in range(40):
            t = random_matrix(rng, side)
            r = random_matrix(rng, side)
            s = mat_mul(t, r)
            witness = solve_right(t, s)
            assert witness is not None
            assert mat_mul(t, witness) == s


def test_colspace_preorder():
    rng = random.Random(9)
    for _ in range(30):
        a = random_matrix(rng, 4)
        b = random_matrix(rng, 4)
        c = random_matrix(rng, 4)
        assert colspace_contains(a, a)
        if colspace_contains(a, b) and colspace_contains(b, c):
            assert colspace_contains(a, c)


def test_shape_mismatch():
    with pytest.raises(ValueError):
        mat_mul(identity(2), identity(4))
    with pytest.raises(ValueError):
        colspace_contains(identity(2), identity(4))


def test_transpose():
    rng = random.Random(10)
    a = random_matrix(rng, 8)
    assert transpose(transpose(a)) == a
    for r in range(8):
        for c in range(8):
            assert transpose(a).entry(c, r) == a.entry(r, c)


def test_text_round_trip():
    a = Gf2Matrix((0b01, 0b11))
    text = matrix_to_text(a)
    assert text == "10\n11"
    assert matrix_from_text(text) == a


def test_dot_output():
    a = Gf2Matrix((0b10, 0b00))  # single entry (0, 1): edge from {1} to {}
    dot = matrix_to_dot(a)
    assert 'n0 [label="{}"];' in dot
    assert 'n1 [label="{1}"];' in dot
    assert "n1 -> n0;" in dot
    assert dot.count("->") == 1

"""Boolean ring: transforms, bases, products, covering parity."""

import itertools
import random

import pytest
from hypothesis import given, strategies as st

from boolweyl import ring
from boolweyl.ring import (
    RingElem,
    convert_ring_basis,
    k_cover_parity,
    mask_from_indices,
    odd_parity,
    ring_add,
    ring_eval,
    ring_from_json,
    ring_from_support,
    ring_monomial,
    ring_mul,
    ring_one,
    ring_text,
    ring_to_json,
    ring_zero,
    subset_sum_transform,
    superset_sum_transform,
)


def brute_subset_sum(vec):
    n_points = len(vec)
    return [
        sum(vec[a] for a in range(n_points) if a & ~b == 0) & 1 for b in range(n_points)
    ]


def brute_superset_sum(vec):
    n_points = len(vec)
    return [
        sum(vec[b] for b in range(n_points) if a & ~b == 0) & 1 for a in range(n_points)
    ]


def test_odd_parity():
    assert odd_parity(0) == 0
    assert odd_parity(0b010) == 1
    assert odd_parity(0b101) == 0


def test_mask_helpers():
    assert mask_from_indices([1, 3], 3) == 0b101
    assert ring.indices_from_mask(0b101) == (1, 3)
    assert ring.mask_str(0) == "{}"
    assert ring.mask_str(0b101) == "{1,3}"
    with pytest.raises(ValueError):
        mask_from_indices([4], 3)


def test_subset_sum_transform_small():
    assert subset_sum_transform([1, 0]) == [1, 1]
    assert subset_sum_transform([0, 1]) == [0, 1]


def test_superset_sum_transform_small():
    assert superset_sum_transform([1, 0]) == [1, 0]
    assert superset_sum_transform([0, 1]) == [1, 1]


def test_transform_length_validation():
    with pytest.raises(ValueError):
        subset_sum_transform([1, 0, 1])
    with pytest.raises(ValueError):
        superset_sum_transform([])


@pytest.mark.parametrize("n", [1, 2, 3])
def test_transforms_match_brute_force(n):
    size = 1 << n
    for packed in range(1 << size):
        vec = [(packed >> i) & 1 for i in range(size)]
        assert subset_sum_transform(vec) == brute_subset_sum(vec)
        assert superset_sum_transform(vec) == brute_superset_sum(vec)


@given(st.lists(st.integers(0, 1), min_size=16, max_size=16))
def test_transforms_are_involutions(vec):
    assert subset_sum_transform(subset_sum_transform(vec)) == vec
    assert superset_sum_transform(superset_sum_transform(vec)) == vec


def m_bits(f: RingElem) -> int:
    return convert_ring_basis(f, "M").bits


def test_monomial_semantics_from_definitions():
    # m^a(b) = [a == b], x^a(b) = [a subset b], w^a(b) = [b subset comp(a)]
    for n in (1, 2, 3):
        size = 1 << n
        for a in range(size):
            for b in range(size):
                assert ring_eval(ring_monomial("M", a, n), b) == (1 if a == b else 0)
                assert ring_eval(ring_monomial("X", a, n), b) == (1 if a & ~b == 0 else 0)
                comp = a ^ (size - 1)
                assert ring_eval(ring_monomial("W", a, n), b) == (1 if b & ~comp == 0 else 0)


def test_monomial_coefficient_vectors():
    assert ring_monomial("M", 0, 1).bits == 0b01
    assert ring_monomial("X", 0b11, 2).bits == 0b1000
    with pytest.raises(ValueError):
        ring_monomial("M", 0b100, 2)


def test_convert_m_to_x_example():
    # the point indicator of {1} at n=2 is x{1} + x{1,2}
    f = convert_ring_basis(ring_monomial("M", 0b01, 2), "X")
    assert f.support() == (0b01, 0b11)
    # and at n=1 the point indicator of {1} is the single monomial x{1}
    g = convert_ring_basis(ring_monomial("M", 1, 1), "X")
    assert g.support() == (1,)


def test_convert_round_trips():
    rng = random.Random(7)
    for n in (1, 2, 3, 4):
        for _ in range(50):
            f = RingElem(n, rng.choice(ring.RING_BASES), rng.getrandbits(1 << n))
            for target in ring.RING_BASES:
                g = convert_ring_basis(f, target)
                assert convert_ring_basis(g, f.basis) == f
                assert m_bits(g) == m_bits(f)


def test_ring_mul_monomials():
    # x{1} x{2} = x{1,2}
    f = ring_mul(ring_monomial("X", 0b01, 2), ring_monomial("X", 0b10, 2))
    assert f.basis == "X" and f.support() == (0b11,)
    # m{1} m{2} = 0
    g = ring_mul(ring_monomial("M", 0b01, 2), ring_monomial("M", 0b10, 2))
    assert g.is_zero()


def test_ring_mul_idempotent_and_pointwise():
    rng = random.Random(3)
    for n in (1, 2, 3, 4):
        for _ in range(50):
            f = RingElem(n, rng.choice(ring.RING_BASES), rng.getrandbits(1 << n))
            g = RingElem(n, rng.choice(ring.RING_BASES), rng.getrandbits(1 << n))
            assert m_bits(ring_mul(f, f)) == m_bits(f)
            prod = ring_mul(f, g)
            assert prod.basis == f.basis
            for point in range(1 << n):
                assert ring_eval(prod, point) == (ring_eval(f, point) & ring_eval(g, point))


def test_ring_mul_unit_and_commutative_associative():
    rng = random.Random(11)
    n = 3
    one = ring_one(n)
    for _ in range(40):
        f = RingElem(n, rng.choice(ring.RING_BASES), rng.getrandbits(1 << n))
        g = RingElem(n, rng.choice(ring.RING_BASES), rng.getrandbits(1 << n))
        h = RingElem(n, rng.choice(ring.RING_BASES), rng.getrandbits(1 << n))
        assert m_bits(ring_mul(f, one)) == m_bits(f)
        assert m_bits(ring_mul(f, g)) == m_bits(ring_mul(g, f))
        assert m_bits(ring_mul(ring_mul(f, g), h)) == m_bits(ring_mul(f, ring_mul(g, h)))


def test_ring_mul_dimension_mismatch():
    with pytest.raises(ValueError):
        ring_mul(ring_one(2), ring_one(3))


def test_ring_eval_examples():
    assert ring_eval(ring_one(2), 0b11) == 1
    assert ring_eval(ring_monomial("M", 0b11, 2), 0b01) == 0
    # x{1} w{2} at point {1}, n=2: {1} is inside the complement of {2}
    f = ring_mul(ring_monomial("X", 0b01, 2), ring_monomial("W", 0b10, 2))
    assert ring_eval(f, 0b01) == 1
    assert m_bits(f) == m_bits(ring_monomial("M", 0b01, 2))


def test_ring_add_is_xor():
    f = ring_monomial("X", 0b01, 2)
    assert ring_add(f, f).is_zero()
    assert ring_add(f, ring_zero(2)) == f


def brute_k_cover(cover_sets, a, k):
    count = 0
    for combo in itertools.product(cover_sets, repeat=k):
        union = 0
        for c in combo:
            union |= c
        if union == a:
            count += 1
    return count & 1


def test_k_cover_examples():
    assert k_cover_parity([0], 0, 3, 2) == 1
    # C = {{1},{1,2}}, a={1,2}, k=2: three covering pairs
    assert k_cover_parity([0b01, 0b11], 0b11, 2, 2) == 1
    assert brute_k_cover([0b01, 0b11], 0b11, 2) == 1
    assert k_cover_parity([0b01], 0b11, 2, 2) == 0
    with pytest.raises(ValueError):
        k_cover_parity([0], 0, 0, 2)


def test_k_cover_matches_brute_force_and_membership():
    rng = random.Random(19)
    for n in (1, 2, 3):
        size = 1 << n
        for _ in range(20):
            family = [c for c in range(size) if rng.getrandbits(1)]
            for k in (1, 2, 3):
                for a in range(size):
                    got = k_cover_parity(family, a, k, n)
                    assert got == brute_k_cover(family, a, k)
                    assert got == (1 if a in family else 0)


def test_text_and_json_round_trip():
    f = ring_from_support(2, "X", [0b01, 0b11])
    assert ring_text(f) == "x{1} + x{1,2}"
    assert ring_text(ring_zero(2)) == "0"
    assert ring_text(ring_one(2)) == "1"
    assert ring_text(ring_monomial("M", 0, 2)) == "m{}"
    data = ring_to_json(f)
    assert data == {"n": 2, "basis": "X", "support": [[1], [1, 2]]}
    assert ring_from_json(data) == f


def test_dimension_bounds():
    with pytest.raises(ValueError):
        RingElem(0, "M", 0)
    with pytest.raises(ValueError):
        RingElem(17, "M", 0)
    with pytest.raises(ValueError):
        RingElem(2, "Q", 0)
    with pytest.raises(ValueError):
        RingElem(1, "M", 0b100)

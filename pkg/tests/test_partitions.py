import pytest

from shufflemac.arith import ONE, q, t
from shufflemac.partitions import (
    EMPTY,
    NotContained,
    Partition,
    SkewShape,
    a_coef,
    b_coef,
    c_coef,
    c_prime_coef,
    content,
    contents,
    corners,
    d_coef,
    n_coef,
    partitions_of,
    phi_coef,
    psi_prime,
)

P = Partition

# number of partitions of n, n = 0..10
PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_partition_counts():
    assert [len(partitions_of(n)) for n in range(11)] == PARTITION_COUNTS


def test_partitions_listed_in_reverse_dominance_compatible_order():
    for n in range(1, 7):
        ps = partitions_of(n)
        for i, lam in enumerate(ps):
            for mu in ps[i + 1 :]:
                assert not mu.dominates(lam) or mu == lam


def test_invalid_partition():
    with pytest.raises(ValueError):
        P((1, 2))


def test_parse():
    assert P.parse("3,1,1") == P((3, 1, 1))
    assert P.parse("") == EMPTY
    assert SkewShape.parse("2,1/1") == SkewShape(P((2, 1)), P((1,)))


def test_conjugate_and_n():
    lam = P((4, 2, 1))
    assert lam.conjugate() == P((3, 2, 1, 1))
    assert lam.n() == 0 * 4 + 1 * 2 + 2 * 1
    assert n_coef(lam) == lam.n()


def test_skew_shape_reading_order_and_contents():
    shape = SkewShape(P((2, 1)), P((1,)))
    assert shape.boxes() == [(1, 2), (2, 1)]
    assert contents(shape) == [q, 1 / t]
    assert content(shape, 2) == 1 / t
    with pytest.raises(NotContained):
        SkewShape(P((1,)), P((2,)))


def test_corners_of_rectangle():
    outer, inner = corners(P((2, 2)))
    assert outer == {(3, 3)} and inner == {(1, 3), (3, 1)}


def test_b_is_c_over_c_prime():
    for n in range(1, 5):
        for lam in partitions_of(n):
            assert b_coef(lam) == c_coef(lam) / c_prime_coef(lam)


def test_single_box_values():
    one = P((1,))
    assert b_coef(one) == (1 - t) / (1 - q)
    assert psi_prime(one, EMPTY) == ONE


def test_a_coefficient_example():
    want = (1 + q) * (1 + t) * (q - t) ** 2 / ((1 - t) * (1 - q * t**2))
    assert a_coef(P((2, 1)), P((1,))) == want


def test_psi_prime_vanishes_off_vertical_strips():
    assert psi_prime(P((2,)), EMPTY) == 0 * ONE


def test_phi_and_d_are_defined_on_small_shapes():
    for lam in partitions_of(3):
        assert d_coef(lam) != 0 * ONE
        for mu in partitions_of(2):
            if lam.contains(mu):
                phi_coef(lam, mu)

import random
from fractions import Fraction

import pytest

from shufflemac.arith import ONE, fast_eval, product, q, t, var, xs
from shufflemac.partitions import EMPTY, Partition, SkewShape, d_coef, partitions_of
from shufflemac.shuffle import (
    InvalidArity,
    ShuffleElement,
    element_E,
    element_H,
    element_S,
    evaluate_skew,
    f_basis,
    iota,
    limits_check,
    shuffle_many,
    shuffle_product,
    shuffle_product_at,
    wheel_check,
    zeta,
)
from shufflemac.symfunc import classical_basis, power_sum

P = Partition


def test_zeta_kernel():
    z = var("x1")
    assert zeta(z) == (1 - q * z) * (1 - z / t) / ((1 - z) * (1 - q / t * z))


def test_unit_and_arity():
    E2 = element_E(2, 1)
    assert ShuffleElement.one() * E2 == E2
    assert (E2 * element_S(1)).arity == 3
    with pytest.raises(InvalidArity):
        E2 + element_S(1)


def test_degree_one_generators():
    for a in (1, 2, 3):
        assert element_E(1, a).value == ONE


@pytest.mark.parametrize(
    "F,G",
    [
        (element_E(1, 1), element_H(2, 2)),
        (element_S(2), element_E(1, 3)),
        (element_H(1, 1), element_S(1)),
    ],
)
def test_symbolic_product_matches_numeric_subset_sum(F, G):
    """Oracle: the symbolic product agrees with the independent numeric recursion."""
    prod = shuffle_product(F, G)
    rng = random.Random(5)
    for _ in range(3):
        vals = [Fraction(rng.randint(2, 999), rng.randint(2, 999)) for _ in range(prod.arity)]
        qv, tv = Fraction(rng.randint(2, 99), 7), Fraction(rng.randint(2, 99), 11)
        assert prod.at(vals, qv, tv) == shuffle_product_at([F, G], vals, qv, tv)


def test_products_are_symmetric():
    assert shuffle_many([element_S(1), element_E(2, 2)]).is_symmetric()


def test_wheel_conditions():
    assert wheel_check(element_E(3, 1))
    assert wheel_check(element_S(1) * element_E(2, 2))
    x = xs(3)
    bad = 1 / product((x[i] - q / t * x[j] for i in range(3) for j in range(3) if i != j), ONE)
    assert not wheel_check(ShuffleElement(3, bad))


def test_limits():
    assert limits_check(element_E(2, 1))
    assert limits_check(element_S(2))


def test_ev_of_f_basis_is_dual_to_d():
    for lam in partitions_of(3):
        for mu in partitions_of(3):
            got = evaluate_skew(f_basis(lam), SkewShape(mu))
            want = 1 / d_coef(lam) if lam == mu else 0 * ONE
            assert got == want


def test_ev_of_unit():
    assert evaluate_skew(ShuffleElement.one(), SkewShape(P((1,)), P((1,)))) == ONE


def test_iota_images():
    for k in (1, 2, 3):
        assert iota(element_E(k, 1)).to("m") == classical_basis("e", k).to("m")
    for k in (1, 2):
        want = power_sum(P((k,)))
        got = iota(element_S(k)).to("p")
        assert got[P((k,))] == (1 - q) ** k / (t - q) ** k * want[P((k,))]

import pytest

from shufflemac.arith import ONE, q, t, var, xs
from shufflemac.cauchy import kernel, kernel_projection, kernel_skew_matches, slices_equal
from shufflemac.correspondence import (
    EnumerationTooLarge,
    domain_wall_conic,
    domain_wall_shuffle,
    skew_algebraic,
    skew_algebraic_full,
    skew_example_coefficients,
    skew_lattice,
    skew_lattice_full,
    trace_L_from_S,
    trace_L_lattice,
    trace_shuffle,
)
from shufflemac.partitions import EMPTY, NotContained, Partition
from shufflemac.vertex import ModelSpec, trace_T

P = Partition


@pytest.mark.parametrize("n,m", [(1, 0), (0, 1), (1, 1)])
def test_trace_equals_shuffle_formula_n2(n, m):
    spec = ModelSpec(n, m)
    assert trace_T(spec, xs(2)).to_rf() == trace_shuffle(spec, 2).to_rf()


def test_l1_value():
    assert trace_L_lattice(1) == (1 - t) / (t - q)
    assert trace_L_lattice(2) == trace_L_from_S(2)


def test_conic_domain_wall_is_e_or_h():
    spec = ModelSpec(1, 1)
    for k in (0, 1, 2):
        assert domain_wall_conic(spec, k, 2) == domain_wall_shuffle(spec, k, 2)


def test_worked_example_coefficients():
    got = skew_example_coefficients()
    assert got["z0^2"] == ONE
    assert got["w1*w2"] == (1 - t) ** 2 * (2 + q + t + 2 * q * t) / ((1 + q) * (1 + t) * (q - t) ** 2)


def test_skew_modes_agree_small():
    for mu, nu in [(P((2, 1)), P((1,))), (P((2, 2)), P((1,))), (P((1,)), EMPTY)]:
        for nv in (1, 2):
            assert skew_lattice(mu, nu, nv) == skew_algebraic(mu, nu, nv)


def test_skew_trivial_cases():
    assert skew_lattice(P((2,)), P((2,)), 2).poly == ONE
    w = [var(f"w{i}") for i in (1, 2, 3)]
    assert skew_lattice(P((1,)), EMPTY, 3).poly == w[0] + w[1] + w[2]


def test_full_identity_with_z():
    mu, nu = P((2,)), P((1,))
    assert skew_lattice_full(mu, nu, 1, 1) == skew_algebraic_full(mu, nu, 1, 1)


def test_guards():
    with pytest.raises(EnumerationTooLarge):
        skew_lattice(P((7,)), EMPTY, 1)
    with pytest.raises(NotContained):
        skew_lattice(P((1,)), P((2,)), 1)


def test_kernel_forms_agree():
    for k in (0, 1, 2):
        ref = kernel(k, "exp")
        assert slices_equal(ref, kernel(k, "mon"))
        assert slices_equal(ref, kernel(k, "mac"))
    assert kernel(0, "mac")[EMPTY].value == ONE


def test_kernel_skew():
    assert kernel_skew_matches(P((2,)), EMPTY)
    assert kernel_skew_matches(P((1, 1)), EMPTY)
    assert kernel_skew_matches(P((2, 1)), P((1,)))


def test_kernel_trace_relation_degree_one():
    c = (t - q) / (1 - q)
    T1 = trace_T(ModelSpec(1, 1), xs(1)).to_rf()
    assert c * T1 == kernel_projection(1, 1, 1)

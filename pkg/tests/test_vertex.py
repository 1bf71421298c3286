from fractions import Fraction
from itertools import product as iproduct

import pytest

from shufflemac.arith import ONE, ZERO, as_rf, q, t, var, xs
from shufflemac.vertex import (
    BoundaryData,
    LatticeTensor,
    ModelSpec,
    domain_wall,
    fermionic_dw,
    ik_det,
    partition_function,
    rcheck_matrix,
    subset_formula,
    trace_counts,
    trace_T,
    verify_exchange,
    vertex_weight,
)

x1, x2, y1, y2 = (var(n) for n in ("x1", "x2", "y1", "y2"))


def test_model_spec():
    spec = ModelSpec(1, 2)
    assert spec.dim == 4
    assert [spec.is_fermionic(c) for c in spec.colours] == [False, False, True, True]
    assert spec.rank(0) > spec.rank(3)
    assert spec.content((0, 2, 2)) == (1, 0, 2, 0)
    with pytest.raises(ValueError):
        ModelSpec(-1, 0)


@pytest.mark.parametrize("n,m", [(1, 0), (0, 1), (1, 1)])
def test_allowed_vertices(n, m):
    # distinct labels pass straight through; equal labels turn into any equal pair
    spec = ModelSpec(n, m)
    for a, b, c, d in iproduct(spec.colours, repeat=4):
        w = as_rf(vertex_weight(spec, a, b, c, d, x1, y1))
        allowed = (c, d) == (b, a) if a != b else c == d
        assert bool(w) == allowed


def test_all_zero_vertex_has_weight_one():
    assert as_rf(vertex_weight(ModelSpec(1, 1), 0, 0, 0, 0, x1, y1)) == ONE


def test_rcheck_at_one_is_identity():
    for spec in (ModelSpec(1, 0), ModelSpec(1, 1), ModelSpec(0, 2)):
        R = rcheck_matrix(spec, ONE)
        assert R.equals(LatticeTensor.identity(2, spec.dim))


def test_rcheck_inverse_numeric():
    spec = ModelSpec(1, 1)
    R = rcheck_matrix(spec, Fraction(3, 7), Fraction(5, 2))
    assert (R @ R.inverse(spec)).equals(LatticeTensor.identity(2, spec.dim))


def test_boundary_parse():
    b = BoundaryData.parse("10,10,11,11")
    assert b == BoundaryData((1, 0), (1, 0), (1, 1), (1, 1))


def test_six_vertex_two_configurations():
    got = partition_function(ModelSpec(1, 0), BoundaryData.parse("10,10,11,11"), [x1, x2], [y1, y2])
    want = t * (1 - x1 / y2) * (1 - x2 / y1) * (1 - t) * x2 / y2 / (
        (1 - t * x1 / y2) * (1 - t * x2 / y1) * (1 - t * x2 / y2)
    ) + (1 - t) ** 3 * x1 / y2 * x2 / y1 / ((1 - t * x1 / y1) * (1 - t * x1 / y2) * (1 - t * x2 / y1))
    assert got == want


def test_coloured_two_configurations():
    got = partition_function(ModelSpec(1, 1), BoundaryData.parse("02,02,12,12"), [x1, x2], [y1, y2])
    den = (1 - t * x1 / y1) * (1 - t * x2 / y1) * (1 - t * x1 / y2) * (1 - t * x2 / y2)
    want = (
        (1 - t) * x1 / y1 * (1 - x2 / y1) * t * (1 - x1 / y2) * (x2 / y2 - t)
        + (1 - t) ** 4 * x1 / y1 * x2 / y1 * x1 / y2
    ) / den
    assert got == want


def test_colour_mismatch_gives_zero():
    got = partition_function(ModelSpec(1, 0), BoundaryData.parse("10,10,11,10"), [x1, x2], [y1, y2])
    assert as_rf(got) == ZERO


@pytest.mark.parametrize("M", [1, 2])
def test_domain_walls(M):
    x, y = xs(M), xs(M, "y")
    assert domain_wall(ModelSpec(1, 0), 1, M, x, y) == ik_det(x, y)
    assert domain_wall(ModelSpec(0, 1), 1, M, x, y) == fermionic_dw(x, y)
    assert ik_det(x, y) == subset_formula(x, y)


def test_single_site_domain_wall():
    # one vertex: 0 enters from left and top, colour 1 leaves right and bottom
    assert domain_wall(ModelSpec(1, 0), 1, 1, [x1], [y1]) == (1 - t) * x1 / (y1 - t * x1)


def test_trace_is_symmetric():
    T = trace_T(ModelSpec(1, 1), xs(2)).to_rf()
    assert T.subs({"x1": x2, "x2": x1}) == T


def test_trace_counts():
    got = trace_counts(ModelSpec(0, 2), 2)
    assert got == {(2, 0, 0): 1, (1, 1, 0): 3, (1, 0, 1): 3, (0, 2, 0): 2, (0, 0, 2): 2, (0, 1, 1): 4}


def test_single_site_trace():
    T = trace_T(ModelSpec(1, 0), xs(1))
    assert T.coefficient((1, 0)) == ONE
    assert T.coefficient((0, 1)) == (1 - t) / (q - t)
    assert T.monomial_name((2, 1)) == "z0^2*z1"


@pytest.mark.parametrize("which", ["YBE", "unitarity", "Fprop"])
def test_operator_identities_six_vertex(which):
    res = verify_exchange(ModelSpec(1, 0), 3, which, trials=2, seed=4)
    assert res, res.describe()

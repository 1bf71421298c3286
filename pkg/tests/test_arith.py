from fractions import Fraction

import pytest

from shufflemac.arith import (
    ONE,
    ZERO,
    MPoly,
    PoleAtPoint,
    RationalFunction,
    ZeroDenominator,
    check_identity,
    exact_check,
    parse_rational,
    q,
    t,
    var,
    xs,
)


def test_canonical_form_is_gcd_reduced_with_monic_denominator():
    x = var("x1")
    r = (x**2 - 1) / (2 * x - 2)
    assert r == (x + 1) / 2
    assert r.den == MPoly(1)
    s = (x - q) / (3 * q - 3 * x)
    assert s == RationalFunction(-1, 3)


def test_field_operations():
    a = (q - t) / (1 - q * t)
    assert a * a.inverse() == ONE
    assert a - a == ZERO
    assert (a + 1) ** 2 == a**2 + 2 * a + 1
    with pytest.raises(ZeroDivisionError):
        a / ZERO


def test_zero_denominator_type():
    with pytest.raises(ZeroDenominator):
        RationalFunction(1, 0)


def test_json_roundtrip():
    r = (q * t**2 - 1) / (q - t) + var("x1") / 3
    assert RationalFunction.from_json(r.to_json()) == r
    assert r.to_json()["den"]["vars"] == ["q", "t"]


def test_parse_rational_matches_str():
    r = (1 - t) * (2 + q + t + 2 * q * t) / (1 - q * t**2)
    assert parse_rational(str(r)) == r
    assert parse_rational("-3/7") == RationalFunction(Fraction(-3, 7))


def test_subs_and_pole():
    r = 1 / (q - t)
    assert r.subs({"q": 2}) == 1 / (2 - t)
    with pytest.raises((PoleAtPoint, ZeroDivisionError)):
        r.subs({"q": t})


def test_xs_names():
    assert [str(v) for v in xs(3, "y")] == ["y1", "y2", "y3"]


def test_check_identity_detects_difference():
    x1, x2 = xs(2)
    lhs = (x1 + x2) ** 2
    assert check_identity(lhs, x1**2 + 2 * x1 * x2 + x2**2, trials=5, seed=1)
    bad = check_identity(lhs, x1**2 + x2**2, trials=5, seed=1)
    assert not bad
    d = bad.describe()
    assert d["equal"] is False and "counterexample" in d


def test_check_identity_is_deterministic():
    x1 = var("x1")
    a = check_identity(x1, x1 + 1, trials=3, seed=9).describe()
    b = check_identity(x1, x1 + 1, trials=3, seed=9).describe()
    assert a == b


def test_check_identity_skips_poles():
    # both sides agree wherever defined
    r = (q**2 - t**2) / (q - t)
    assert check_identity(r, q + t, trials=4, seed=3)


def test_exact_check_mode():
    assert exact_check(q + t, t + q).mode == "exact"
    assert not exact_check(q, t)

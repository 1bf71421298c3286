import pytest

from shufflemac.arith import ONE, ZERO, product, q, t, var
from shufflemac.partitions import EMPTY, Partition, partitions_of
from shufflemac.symfunc import (
    DegreeMismatch,
    SymFunc,
    cauchy_kernel,
    classical_basis,
    macdonald_P,
    macdonald_Q,
    pieri_multiply,
    plethystic_substitute,
    power_sum,
    restrict_to_alphabet,
    scalar_product,
    skew_macdonald,
)

P = Partition
W = [var(f"w{i}") for i in range(1, 4)]


def _det(rows):
    if len(rows) == 1:
        return rows[0][0]
    return sum(
        ((-1) ** j * rows[0][j] * _det([r[:j] + r[j + 1 :] for r in rows[1:]]) for j in range(len(rows))),
        ZERO,
    )


def schur_bialternant(lam: Partition, n: int):
    """Independent oracle: s_lambda(w1..wn) as a ratio of alternants."""
    parts = [lam[i] for i in range(n)]
    num = _det([[W[j] ** (parts[i] + n - 1 - i) for j in range(n)] for i in range(n)])
    den = _det([[W[j] ** (n - 1 - i) for j in range(n)] for i in range(n)])
    return num / den


@pytest.mark.parametrize("lam", [lam for d in range(1, 5) for lam in partitions_of(d) if lam.length <= 3], ids=str)
def test_q_equals_t_gives_schur(lam):
    got = restrict_to_alphabet(macdonald_P(lam), 3).poly.subs({"q": t})
    assert got == schur_bialternant(lam, 3)


def test_two_row_example():
    w1, w2 = W[:2]
    want = w1**2 + w2**2 + (1 - t) * (1 + q) / (1 - q * t) * w1 * w2
    assert restrict_to_alphabet(macdonald_P(P((2,))), 2).poly == want


def test_single_column_is_elementary():
    for k in range(1, 5):
        assert macdonald_P(P((1,) * k)).to("m") == classical_basis("e", k).to("m")


def test_too_few_variables_gives_zero():
    assert restrict_to_alphabet(macdonald_P(P((1, 1, 1))), 2).poly == ZERO
    assert restrict_to_alphabet(macdonald_P(P((1,))), 0).poly == ZERO


def test_p_and_q_are_dual():
    for lam in partitions_of(3):
        for mu in partitions_of(3):
            want = ONE if lam == mu else ZERO
            assert scalar_product(macdonald_P(lam), macdonald_Q(mu)) == want


def test_basis_changes_roundtrip():
    f = power_sum(P((2, 1)))
    assert f.to("m").to("P").to("p") == f


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        SymFunc(2, "m", {P((3,)): 1})


def test_pieri_single_box():
    prod = pieri_multiply(1, P((1,)))
    assert set(prod.to("P").coeffs) == {P((2,)), P((1, 1))}


def test_skew_by_empty_and_by_self():
    lam = P((2, 1))
    assert skew_macdonald(lam, EMPTY).to("m") == macdonald_P(lam).to("m")
    assert restrict_to_alphabet(skew_macdonald(lam, lam), 1).poly == ONE


def test_skew_example_in_two_variables():
    w1, w2 = W[:2]
    want = w1**2 + (1 - t) * (2 + q + t + 2 * q * t) / (1 - q * t**2) * w1 * w2 + w2**2
    assert restrict_to_alphabet(skew_macdonald(P((2, 1)), P((1,))), 2).poly == want


def test_cauchy_resolutions_agree_low_degree():
    ref = cauchy_kernel(3, 2, 2, "exp")
    assert cauchy_kernel(3, 2, 2, "mg") == ref
    assert cauchy_kernel(3, 2, 2, "PQ") == ref


def test_plethystic_substitution_of_p1():
    # p_1 -> w1 - z1 - (q - t)/(1 - t) z0
    got = plethystic_substitute(power_sum(P((1,))), 1, 1)
    want = var("w1") - var("z1") - (q - t) / (1 - t) * var("z0")
    assert got == want


def test_finite_alphabet_json_is_sorted_and_serializable():
    import json

    data = restrict_to_alphabet(macdonald_P(P((2,))), 2).to_json()
    json.dumps(data)
    exps = [tuple(term["exps"]) for term in data["terms"]]
    assert exps == sorted(exps, reverse=True)

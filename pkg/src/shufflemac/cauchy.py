"""The mixed Cauchy kernel K(x;y): shuffle elements in x tensored with symmetric functions in y.

A degree-k slice is stored as ``{lambda: ShuffleElement}``, meaning
``sum_lambda p_lambda(y) (x) element``.  Each of the three expansions below
is converted into this power-sum form so that they can be compared.
"""
from __future__ import annotations

from math import factorial
from typing import Mapping

from .arith import ONE, ZERO, RationalFunction, product, q, t
from .partitions import Partition, SkewShape, a_tilde_coef, c_prime_coef, partitions_of
from .shuffle import ShuffleElement, _S_product, element_E, evaluate_skew, f_basis, shuffle_many
from .symfunc import SymFunc, _m_to_p, macdonald_P, plethysm_image, skew_macdonald

KernelSlice = dict[Partition, ShuffleElement]


def _accumulate(out: KernelSlice, lam: Partition, el: ShuffleElement) -> None:
    out[lam] = out[lam] + el if lam in out else el


def _clean(out: KernelSlice) -> KernelSlice:
    return {lam: el for lam, el in out.items() if el.value}


def kernel_exp(k: int) -> KernelSlice:
    """Exponential form: sum over lambda of prod_r c_r^{m_r}/m_r! p_lambda(y) S_lambda."""

    def c(r: int) -> RationalFunction:
        return (1 - t**r) / (1 - q**r) * ((t - q) / (1 - q)) ** r / r

    out: KernelSlice = {}
    for lam in partitions_of(k):
        coef = ONE
        for r, m in lam.multiplicities().items():
            coef = coef * c(r) ** m / factorial(m)
        el = _S_product(lam) if k else ShuffleElement.one()
        out[lam] = el.scale(coef)
    return _clean(out)


def kernel_mon(k: int) -> KernelSlice:
    """Monomial form: ((1-t)/(1-q))^k sum_lambda m_lambda(y) E_lambda(1/t)."""
    pref = ((1 - t) / (1 - q)) ** k
    conv = _m_to_p(k)
    out: KernelSlice = {}
    for lam in partitions_of(k):
        el = shuffle_many(element_E(r, 2) for r in lam.parts).scale(pref)
        for mu, c in conv[lam].items():
            _accumulate(out, mu, el.scale(c))
    return _clean(out)


def kernel_mac(k: int) -> KernelSlice:
    """Macdonald form: sum_lambda q^{n(lambda')}(1-t)^k / c'_lambda P_lambda(y) F_lambda."""
    out: KernelSlice = {}
    for lam in partitions_of(k):
        coef = q ** lam.conjugate().n() * (1 - t) ** k / c_prime_coef(lam)
        el = f_basis(lam).scale(coef) if k else ShuffleElement.one().scale(coef)
        for mu, c in macdonald_P(lam).to("powersum").items():
            _accumulate(out, mu, el.scale(c))
    return _clean(out)


FORMS = {"exp": kernel_exp, "mon": kernel_mon, "mac": kernel_mac}


def kernel(k: int, form: str = "exp") -> KernelSlice:
    try:
        return FORMS[form](k)
    except KeyError:
        raise ValueError(f"unknown kernel form {form!r}") from None


def slices_equal(a: Mapping[Partition, ShuffleElement], b: Mapping[Partition, ShuffleElement]) -> bool:
    keys = set(a) | set(b)
    for lam in keys:
        x = a[lam].value if lam in a else ZERO
        y = b[lam].value if lam in b else ZERO
        if x != y:
            return False
    return True


def kernel_skew(mu: Partition, nu: Partition) -> SymFunc:
    """a~_{mu,nu} ev_{mu/nu}(K) in the power-sum basis."""
    shape = SkewShape(mu, nu)
    k = shape.size
    pref = a_tilde_coef(mu, nu)
    coeffs = {lam: pref * evaluate_skew(el, shape) for lam, el in kernel_exp(k).items()}
    return SymFunc(k, "powersum", coeffs)


def kernel_skew_matches(mu: Partition, nu: Partition) -> bool:
    return kernel_skew(mu, nu) == skew_macdonald(mu, nu).to("powersum")


def kernel_projection(k: int, n: int, m: int, form: str = "exp") -> RationalFunction:
    """pi_{w,z}(K_k): p_r(y) -> p_r(w) - p_r(z) - (q^r-t^r)/(1-t^r) z0^r."""
    total = ZERO
    for lam, el in kernel(k, form).items():
        total = total + product((plethysm_image(r, n, m) for r in lam.parts), ONE) * el.value
    return total


def kernel_to_json(sl: KernelSlice) -> dict:
    return {str(lam) or "empty": el.to_json() for lam, el in sorted(sl.items())}

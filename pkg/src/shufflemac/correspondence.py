"""Bridges between the lattice traces, the shuffle algebra and skew Macdonald functions."""
from __future__ import annotations

from .arith import ONE, ZERO, RationalFunction, as_rf, q, t, var, xs
from .partitions import EMPTY, Partition, SkewShape, a_coef
from .shuffle import ShuffleElement, element_E, element_H, element_S, shuffle_exp, shuffle_many
from .symfunc import FiniteAlphabetPoly, plethysm_image, plethystic_substitute, skew_macdonald
from .vertex import LoopPolynomial, ModelSpec, compositions, domain_wall, skew_trace, trace_L, trace_T

MAX_LATTICE_N = 6


class EnumerationTooLarge(ValueError):
    """The lattice is too big for exact enumeration."""


def loop_prefactor() -> RationalFunction:
    return (1 - 1 / t) / (1 - q / t)


def trace_shuffle_term(spec: ModelSpec, l: tuple[int, ...]) -> ShuffleElement:
    """Shuffle-side value of the block of colour content l (without the (-1) per fermion).

    Ordered product E(1/t) over fermionic colours from n+m down to n+1,
    then H(1/t) over bosonic colours from n down to 1, then E(t/q) for
    colour 0.
    """
    n, m = spec.n, spec.m
    factors = [element_E(l[k], 2) for k in range(n + m, n, -1)]
    factors += [element_H(l[k], 2) for k in range(n, 0, -1)]
    factors.append(element_E(l[0], 3))
    N = sum(l)
    return shuffle_many(factors).scale(loop_prefactor() ** (N - l[0]))


def trace_shuffle(spec: ModelSpec, N: int) -> LoopPolynomial:
    """The shuffle-product formula for T_N as a loop polynomial in x1..xN."""
    out = {}
    for l in compositions(N, spec.dim):
        sign = (-1) ** sum(l[spec.n + 1 :])
        out[l] = trace_shuffle_term(spec, l).value * sign
    return LoopPolynomial(spec, out)


def trace_generating(spec: ModelSpec, v_cut: int) -> dict[int, RationalFunction]:
    """v^N coefficients of exp_*(sum_k (1/k)(1-t^k)/(1-q^k) pi(p_k) S_k v^k).

    Coefficients are rational functions in x1..xN and the loop weights.
    """

    def coef(k: int) -> RationalFunction:
        return (1 - t**k) / (1 - q**k) / k * plethysm_image(k, spec.n, spec.m)

    return {N: el.value for N, el in shuffle_exp(coef, v_cut).items()}


def domain_wall_shuffle(spec: ModelSpec, k: int, M: int) -> ShuffleElement:
    """The conic domain wall D^{(k)}_M(x) written with shuffle generators."""
    if k == 0:
        return element_E(M, 3)
    pref = loop_prefactor() ** M
    if spec.is_fermionic(k):
        return element_E(M, 2).scale(pref)
    return element_H(M, 2).scale(pref)


def domain_wall_conic(spec: ModelSpec, k: int, M: int) -> ShuffleElement:
    """D^{(k)}_M(x; qx) by lattice enumeration, as a shuffle element."""
    if M == 0:
        return ShuffleElement.one()
    return ShuffleElement(M, domain_wall(spec, k, M, xs(M), "conic"))


def trace_L_lattice(N: int) -> RationalFunction:
    return trace_L(xs(N))


def trace_L_from_S(N: int) -> RationalFunction:
    return (1 - t**N) / (1 - q**N) * element_S(N).value


def trace_L_from_domain_walls(N: int) -> RationalFunction:
    spec = ModelSpec(1, 1)
    total = ShuffleElement(N, ZERO)
    for j in range(1, N + 1):
        term = domain_wall_conic(spec, 1, N - j) * domain_wall_conic(spec, 2, j)
        total = total + term.scale((-1) ** j * j)
    return total.value


# skew Macdonald functions ---------------------------------------------------


def _shape(mu, nu) -> SkewShape:
    mu = mu if isinstance(mu, Partition) else Partition(tuple(mu))
    nu = nu if isinstance(nu, Partition) else Partition(tuple(nu or ()))
    return SkewShape(mu, nu)


def skew_lattice_full(mu, nu, n: int, m: int) -> RationalFunction:
    """a_{mu,nu} ev_{mu/nu}(T_N) as a polynomial in z0..zn, w1..wm."""
    shape = _shape(mu, nu)
    if shape.size > MAX_LATTICE_N:
        raise EnumerationTooLarge(f"N = {shape.size} exceeds {MAX_LATTICE_N}")
    T = skew_trace(ModelSpec(n, m), shape)
    return a_coef(shape.outer, shape.inner) * T.to_rf()


def skew_algebraic_full(mu, nu, n: int, m: int) -> RationalFunction:
    """P_{mu/nu}[w - z - (q-t)/(1-t) z0]."""
    shape = _shape(mu, nu)
    if shape.size == 0:
        return ONE
    return plethystic_substitute(skew_macdonald(shape.outer, shape.inner), n, m)


def _drop_z(poly: RationalFunction, n: int) -> RationalFunction:
    return poly.subs({f"z{i}": 0 for i in range(n + 1)})


def skew_lattice(mu, nu, nvars: int) -> FiniteAlphabetPoly:
    """P_{mu/nu}(w_1..w_nvars) from the conic lattice at the box contents."""
    return FiniteAlphabetPoly(nvars, _drop_z(skew_lattice_full(mu, nu, 0, nvars), 0))


def skew_algebraic(mu, nu, nvars: int) -> FiniteAlphabetPoly:
    return FiniteAlphabetPoly(nvars, _drop_z(skew_algebraic_full(mu, nu, 0, nvars), 0))


def skew_example_coefficients() -> dict[str, RationalFunction]:
    """ev of T_2 at the contents of (2,1)/(1) for n=0, m=2, keyed by monomial."""
    T = skew_trace(ModelSpec(0, 2), SkewShape(Partition((2, 1)), Partition((1,))))
    return {T.monomial_name(l): as_rf(c) for l, c in T.coeffs.items()}

"""The trigonometric shuffle algebra on symmetric rational functions.

An element of arity ``k`` is a symmetric rational function of
``x1..xk`` with coefficients in Q(q,t).  The product is the subset form

    (F*G)(x) = sum_{|S|=k} F(x_S) G(x_{S^c}) prod_{i in S, j notin S} zeta(x_i/x_j).

The module also provides the distinguished families E_k, H_k, S_k, shuffle
exponentials, the wheel and limit conditions, the evaluation
representation on Young diagrams, the F_lambda basis and the isomorphism
to symmetric functions.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial
from typing import Callable, Iterable, Mapping, Sequence

from .arith import (
    ONE,
    ZERO,
    EvalPoint,
    PoleAtPoint,
    RationalFunction,
    ZeroDenominator,
    as_rf,
    fast_eval,
    product,
    q,
    t,
    var,
)
from .linalg import SingularSystem, solve
from .partitions import (
    EMPTY,
    Partition,
    SkewShape,
    c_coef,
    d_coef,
    partitions_of,
)
from .symfunc import SymFunc

__all__ = [
    "InvalidArity",
    "PoleNotCancelled",
    "SingularSystem",
    "ShuffleElement",
    "q_param",
    "zeta",
    "shuffle_product",
    "shuffle_many",
    "element_E",
    "element_H",
    "element_S",
    "shuffle_exp",
    "exp_coefficients",
    "quadratic_EH_rhs",
    "quadratic_EH_identity",
    "wheel_check",
    "limits_check",
    "evaluate_skew",
    "rep_matrix",
    "f_basis",
    "iota",
]


class InvalidArity(ValueError):
    """Arity outside the range where the object is defined."""


class PoleNotCancelled(ArithmeticError):
    """Evaluation at box contents hit a pole that the wheel conditions should have removed."""


def _x(i: int) -> str:
    return f"x{i}"


@dataclass(frozen=True)
class ShuffleElement:
    arity: int
    value: RationalFunction

    def __post_init__(self):
        if self.arity < 0:
            raise InvalidArity("arity must be non-negative")
        object.__setattr__(self, "value", as_rf(self.value))

    @classmethod
    def one(cls) -> "ShuffleElement":
        return cls(0, ONE)

    @property
    def names(self) -> list[str]:
        return [_x(i) for i in range(1, self.arity + 1)]

    def __add__(self, other: "ShuffleElement") -> "ShuffleElement":
        if self.arity != other.arity:
            raise InvalidArity("cannot add elements of different arity")
        return ShuffleElement(self.arity, self.value + other.value)

    def __sub__(self, other: "ShuffleElement") -> "ShuffleElement":
        return self + other.scale(-1)

    def scale(self, c) -> "ShuffleElement":
        return ShuffleElement(self.arity, self.value * as_rf(c))

    def __mul__(self, other: "ShuffleElement") -> "ShuffleElement":
        return shuffle_product(self, other)

    def __eq__(self, other):
        return (
            isinstance(other, ShuffleElement)
            and self.arity == other.arity
            and self.value == other.value
        )

    def __hash__(self):
        return hash((self.arity, self.value))

    def __repr__(self):
        return f"ShuffleElement({self.arity}, {self.value})"

    def rename(self, names: Sequence[str]) -> RationalFunction:
        """The value with x1..xk replaced by the given variables."""
        if list(names) == self.names:
            return self.value
        return self.value.subs({_x(i + 1): var(n) for i, n in enumerate(names)})

    def at(self, values: Sequence[Fraction], qv: Fraction, tv: Fraction) -> Fraction:
        mapping = {_x(i + 1): v for i, v in enumerate(values)}
        mapping["q"] = qv
        mapping["t"] = tv
        return fast_eval(self.value, mapping)

    def is_symmetric(self) -> bool:
        k = self.arity
        for i in range(1, k):
            swap = {_x(i): var(_x(i + 1)), _x(i + 1): var(_x(i))}
            if self.value.subs(swap) != self.value:
                return False
        return True

    def to_json(self) -> dict:
        return {"arity": self.arity, "num": self.value.num.to_json(), "den": self.value.den.to_json()}


def q_param(a: int) -> RationalFunction:
    """q_1 = q, q_2 = 1/t, q_3 = t/q."""
    if a == 1:
        return q
    if a == 2:
        return 1 / t
    if a == 3:
        return t / q
    raise ValueError("a must be 1, 2 or 3")


def zeta(ratio) -> RationalFunction:
    x = as_rf(ratio)
    return (1 - q * x) * (1 - x / t) / ((1 - x) * (1 - q * x / t))


@lru_cache(maxsize=None)
def _zeta_pair(i: int, j: int) -> RationalFunction:
    xi, xj = var(_x(i)), var(_x(j))
    return (xj - q * xi) * (t * xj - xi) / ((xj - xi) * (t * xj - q * xi))


def _zeta_num(a: Fraction, b: Fraction, qv: Fraction, tv: Fraction) -> Fraction:
    """zeta(a/b) for numbers."""
    den = (b - a) * (tv * b - qv * a)
    if not den:
        raise PoleAtPoint("zeta pole")
    return (b - qv * a) * (tv * b - a) / den


def shuffle_product(F: ShuffleElement, G: ShuffleElement) -> ShuffleElement:
    k, l = F.arity, G.arity
    if k == 0:
        return G.scale(F.value)
    if l == 0:
        return F.scale(G.value)
    n = k + l
    idx = list(range(1, n + 1))
    total = ZERO
    for S in combinations(idx, k):
        Sc = [j for j in idx if j not in S]
        term = F.rename([_x(i) for i in S]) * G.rename([_x(j) for j in Sc])
        for i in S:
            for j in Sc:
                term = term * _zeta_pair(i, j)
        total = total + term
    return ShuffleElement(n, total)


def shuffle_many(factors: Iterable[ShuffleElement]) -> ShuffleElement:
    acc = ShuffleElement.one()
    for f in factors:
        acc = shuffle_product(acc, f)
    return acc


def shuffle_product_at(
    factors: Sequence[ShuffleElement], values: Sequence[Fraction], qv: Fraction, tv: Fraction
) -> Fraction:
    """Numeric value of F_1 * ... * F_r at the point ``values``.

    Recurses over subsets with numeric zeta factors and never forms the
    symbolic product.
    """
    if not factors:
        return Fraction(1)
    head, rest = factors[0], factors[1:]
    k = head.arity
    n = len(values)
    if k + sum(f.arity for f in rest) != n:
        raise InvalidArity("point has the wrong number of coordinates")
    total = Fraction(0)
    for S in combinations(range(n), k):
        Sc = [j for j in range(n) if j not in S]
        z = Fraction(1)
        for i in S:
            for j in Sc:
                z *= _zeta_num(values[i], values[j], qv, tv)
        if not z:
            continue
        total += (
            head.at([values[i] for i in S], qv, tv)
            * shuffle_product_at(rest, [values[j] for j in Sc], qv, tv)
            * z
        )
    return total


# distinguished elements -------------------------------------------------


@lru_cache(maxsize=None)
def element_E(k: int, a: int) -> ShuffleElement:
    if k < 0:
        raise InvalidArity("k must be non-negative")
    qa = q_param(a)
    x = [var(_x(i)) for i in range(1, k + 1)]
    val = product(
        (
            (x[i] - qa * x[j]) * (x[i] - x[j] / qa)
            / ((x[i] - q / t * x[j]) * (x[i] - t / q * x[j]))
            for i in range(k)
            for j in range(i + 1, k)
        ),
        ONE,
    )
    return ShuffleElement(k, val)


def _bc(a: int) -> tuple[int, int]:
    """The cyclic completion (a, b, c) of a."""
    return {1: (2, 3), 2: (3, 1), 3: (1, 2)}[a]


def _perm_sign(p: Sequence[int]) -> int:
    s = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            s = -s
    return s


@lru_cache(maxsize=None)
def element_H(k: int, a: int) -> ShuffleElement:
    """Izergin-type determinant element.

    The product of all A_ij = (x_i - q_b x_j)(x_j - q_c x_i) times the
    determinant of 1/A_ij is expanded as a signed sum of polynomials, so
    only one division happens at the end.
    """
    if k < 0:
        raise InvalidArity("k must be non-negative")
    if k == 0:
        return ShuffleElement.one()
    b, c = _bc(a)
    qa, qb, qc = q_param(a), q_param(b), q_param(c)
    x = [var(_x(i)) for i in range(1, k + 1)]
    A = [[(x[i] - qb * x[j]) * (x[j] - qc * x[i]) for j in range(k)] for i in range(k)]
    numer = ZERO
    for sigma in permutations(range(k)):
        term = product(
            (A[i][j] for i in range(k) for j in range(k) if j != sigma[i]), ONE
        )
        numer = numer + term * _perm_sign(sigma)
    denom = product(
        ((x[i] - x[j]) * (x[i] - q / t * x[j]) for i in range(k) for j in range(k) if i != j),
        ONE,
    )
    pref = (qa * q / t) ** (k * (k - 1) // 2)
    return ShuffleElement(k, pref * numer / denom)


@lru_cache(maxsize=None)
def element_S(k: int) -> ShuffleElement:
    if k < 1:
        raise InvalidArity("S_k is defined for k >= 1 only")
    x = [var(_x(i)) for i in range(1, k + 1)]
    r = q / t
    pref = (1 - q) ** k * (1 - 1 / t) ** k / ((t - q) ** k * (1 - t ** (-k)))
    total = ZERO
    for sigma in permutations(range(k)):
        y = [x[s] for s in sigma]
        num = sum((r**j * y[j] / y[0] for j in range(k)), ZERO)
        den = product((1 - r * y[j] / y[j - 1] for j in range(1, k)), ONE)
        z = product((zeta(y[i] / y[j]) for i in range(k) for j in range(i + 1, k)), ONE)
        total = total + num / den * z
    return ShuffleElement(k, pref * total)


# shuffle exponentials ---------------------------------------------------


@lru_cache(maxsize=None)
def _S_product(lam: Partition) -> ShuffleElement:
    # ascending order of parts, fixed for determinism
    return shuffle_many(element_S(r) for r in sorted(lam.parts))


def shuffle_exp(
    terms: Mapping[int, object] | Callable[[int], object],
    v_cut: int,
    base: Callable[[int], ShuffleElement] | None = None,
) -> dict[int, ShuffleElement]:
    """Coefficients of v^N, N <= v_cut, in exp_*(sum_r coeff_r v^r B_r).

    ``base`` defaults to S_r.  The base family must commute under the
    shuffle product, which holds for every element used here.
    """
    coef = terms if callable(terms) else (lambda r: terms.get(r, 0))
    out = {0: ShuffleElement.one()}
    for N in range(1, v_cut + 1):
        acc = ShuffleElement(N, ZERO)
        for lam in partitions_of(N):
            c = ONE
            for r, m in lam.multiplicities().items():
                c = c * as_rf(coef(r)) ** m / factorial(m)
            if not c:
                continue
            if base is None:
                elem = _S_product(lam)
            else:
                elem = shuffle_many(base(r) for r in sorted(lam.parts))
            acc = acc + elem.scale(c)
        out[N] = acc
    return out


def exp_coefficients(family: str, a: int) -> Callable[[int], RationalFunction]:
    """The coefficient of v^r S_r in the exponent of E(v;q_a) or H(v;q_a)."""
    qa = q_param(a)

    def c(r: int) -> RationalFunction:
        val = (1 - qa**r) / (1 - q**r) * (t - q) ** r / (1 - qa) ** r / r
        if family == "E" and r % 2 == 0:
            val = -val
        return val

    if family not in ("E", "H"):
        raise ValueError("family must be 'E' or 'H'")
    return c


def quadratic_EH_terms(k: int, a: int) -> list[tuple[RationalFunction, list[ShuffleElement]]]:
    """Right side of the quadratic identity as (coefficient, factors) pairs."""
    b, c = _bc(a)
    qb, qc = q_param(b), q_param(c)
    out = []
    for r in range(k + 1):
        coef = (
            qc ** (k - r)
            * ((1 - qb) / (1 - qb * qc)) ** (k - r)
            * ((1 - qc) / (1 - qb * qc)) ** r
        )
        out.append((coef, [element_E(k - r, b), element_E(r, c)]))
    return out


def quadratic_EH_rhs(k: int, a: int) -> ShuffleElement:
    acc = ShuffleElement(k, ZERO)
    for coef, factors in quadratic_EH_terms(k, a):
        acc = acc + shuffle_many(factors).scale(coef)
    return acc


def combination_at(
    terms: Sequence[tuple[RationalFunction, Sequence[ShuffleElement]]], pt: EvalPoint, k: int
) -> Fraction:
    """Numeric value of sum_i c_i * (product of factors_i) at an evaluation point."""
    a = pt.assignment
    xsv = [a[_x(i)] for i in range(1, k + 1)]
    total = Fraction(0)
    for coef, factors in terms:
        cv = fast_eval(as_rf(coef), {"q": a["q"], "t": a["t"]})
        if cv:
            total += cv * shuffle_product_at(list(factors), xsv, a["q"], a["t"])
    return total


def quadratic_EH_identity(k: int, a: int, trials: int = 5, seed: int = 0, exact: bool | None = None):
    """Check H_k(q_a) against the E*E expansion.

    Exact comparison by default for k <= 2, randomized evaluation otherwise.
    """
    from .arith import check_identity, exact_check

    if exact is None:
        exact = k <= 2
    lhs = element_H(k, a)
    if exact:
        return exact_check(lhs.value, quadratic_EH_rhs(k, a).value)
    terms = quadratic_EH_terms(k, a)
    names = ["q", "t"] + lhs.names
    return check_identity(
        lambda pt: fast_eval(lhs.value, pt.assignment),
        lambda pt: combination_at(terms, pt, k),
        trials=trials,
        seed=seed,
        variables=names,
    )


# wheel and limit conditions ---------------------------------------------


def wheel_check(F: ShuffleElement) -> bool:
    """True iff F has the allowed pole shape and its numerator obeys the wheel conditions."""
    k = F.arity
    if k < 3:
        return True
    x = [var(_x(i)) for i in range(1, k + 1)]
    clear = product((x[i] - q / t * x[j] for i in range(k) for j in range(k) if i != j), ONE)
    f = F.value * clear
    # the denominator may only contain a monomial in x times a constant in q,t
    if len(as_rf(f.den).coefficients_in(F.names)) != 1:
        return False
    for i, j, l in permutations(range(k), 3):
        xi = x[i]
        for third in (xi / t, q * xi):
            sub = f.subs({_x(j + 1): q / t * xi, _x(l + 1): third})
            if not sub.is_zero():
                return False
    return True


def _laurent_range(p: RationalFunction, name: str) -> tuple[int, int, dict]:
    coeffs = p.coefficients_in([name])
    degs = sorted(e[0] for e in coeffs)
    return degs[0], degs[-1], {e[0]: c for e, c in coeffs.items()}


def limits_check(F: ShuffleElement) -> bool:
    """For each r, the limits xi->0 and xi->oo of F(xi x_1..xi x_r, x_{r+1}..) exist and agree."""
    k = F.arity
    v = var("v")
    for r in range(1, k + 1):
        g = F.value.subs({_x(i): v * var(_x(i)) for i in range(1, r + 1)})
        if g.is_zero():
            continue
        n_lo, n_hi, n_c = _laurent_range(as_rf(g.num), "v")
        d_lo, d_hi, d_c = _laurent_range(as_rf(g.den), "v")
        if n_lo < d_lo or n_hi > d_hi:
            return False
        at0 = n_c[n_lo] / d_c[d_lo] if n_lo == d_lo else ZERO
        atinf = n_c[n_hi] / d_c[d_hi] if n_hi == d_hi else ZERO
        if at0 != atinf:
            return False
    return True


# evaluation representation ----------------------------------------------


def evaluate_skew(F: ShuffleElement, shape: SkewShape) -> RationalFunction:
    """ev_{lambda/mu}(F) via the two-step substitution.

    First x_i -> q^(a-1) y_b for the i-th box (row b, column a) in reading
    order, with y_b symbolic; after normalization y_b -> t^(1-b).
    """
    boxes = shape.boxes()
    if len(boxes) != F.arity:
        raise InvalidArity(f"arity {F.arity} does not match {len(boxes)} boxes")
    if not boxes:
        return F.value
    step1 = {_x(i + 1): q ** (col - 1) * var(f"y{row}") for i, (row, col) in enumerate(boxes)}
    rows = sorted({row for row, _ in boxes})
    step2 = {f"y{row}": t ** (1 - row) for row in rows}
    try:
        mid = F.value.subs(step1)
    except ZeroDenominator as exc:
        raise PoleNotCancelled(f"pole on the q-strings of {shape}") from exc
    try:
        return mid.subs(step2)
    except ZeroDenominator as exc:
        raise PoleNotCancelled(f"pole at the contents of {shape}") from exc


def _skews_from(mu: Partition, k: int) -> list[Partition]:
    return [lam for lam in partitions_of(mu.size + k) if lam.contains(mu)]


@dataclass
class EvalRepMatrix:
    arity: int
    entries: dict[tuple[Partition, Partition], RationalFunction]

    def entry(self, lam: Partition, mu: Partition) -> RationalFunction:
        return self.entries.get((lam, mu), ZERO)

    def compose(self, other: "EvalRepMatrix", degree_cut: int) -> "EvalRepMatrix":
        """Matrix product self . other: apply ``other`` first."""
        out: dict[tuple[Partition, Partition], RationalFunction] = {}
        for (nu, mu), g in other.entries.items():
            if nu.size + self.arity > degree_cut:
                continue
            for lam in _skews_from(nu, self.arity):
                f = self.entry(lam, nu)
                if f:
                    out[(lam, mu)] = out.get((lam, mu), ZERO) + f * g
        return EvalRepMatrix(self.arity + other.arity, {k: v for k, v in out.items() if v})


def rep_matrix(F: ShuffleElement, degree_cut: int) -> EvalRepMatrix:
    k = F.arity
    entries = {}
    for size in range(0, degree_cut - k + 1):
        for mu in partitions_of(size):
            for lam in _skews_from(mu, k):
                val = d_coef(lam, mu) * evaluate_skew(F, SkewShape(lam, mu))
                if val:
                    entries[(lam, mu)] = val
    return EvalRepMatrix(k, entries)


@lru_cache(maxsize=None)
def _E_basis(k: int) -> tuple[tuple[Partition, ShuffleElement], ...]:
    return tuple(
        (mu, shuffle_many(element_E(r, 1) for r in sorted(mu.parts))) for mu in partitions_of(k)
    )


@lru_cache(maxsize=None)
def _E_eval_matrix(k: int) -> tuple[tuple[RationalFunction, ...], ...]:
    basis = _E_basis(k)
    return tuple(
        tuple(evaluate_skew(E, SkewShape(nu)) for _, E in basis) for nu in partitions_of(k)
    )


@lru_cache(maxsize=None)
def f_basis(lam: Partition) -> ShuffleElement:
    """F_lambda: ev_mu(F_lambda) = delta_{lambda,mu} / d_lambda, solved in the E_mu(q) basis."""
    k = lam.size
    if k == 0:
        return ShuffleElement.one()
    rows = partitions_of(k)
    rhs = [ONE / d_coef(lam) if nu == lam else ZERO for nu in rows]
    coeffs = solve([list(r) for r in _E_eval_matrix(k)], rhs)
    acc = ShuffleElement(k, ZERO)
    for c, (_, E) in zip(coeffs, _E_basis(k)):
        if c:
            acc = acc + E.scale(c)
    return acc


def f_expansion(F: ShuffleElement) -> dict[Partition, RationalFunction]:
    """Coefficients of F in the F_lambda basis: d_lambda ev_lambda(F)."""
    return {
        lam: d_coef(lam) * evaluate_skew(F, SkewShape(lam)) for lam in partitions_of(F.arity)
    }


def iota(F: ShuffleElement, degree: int | None = None) -> SymFunc:
    """The image of F under the isomorphism to symmetric functions, in the P basis."""
    k = F.arity if degree is None else degree
    if k != F.arity:
        raise InvalidArity("degree must equal the arity")
    coeffs = {}
    for lam, c in f_expansion(F).items():
        coeffs[lam] = c * c_coef(lam) / (q ** lam.conjugate().n() * (1 - t) ** k)
    return SymFunc(k, "macdonaldP", coeffs)

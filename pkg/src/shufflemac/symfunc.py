"""Symmetric functions of fixed degree with coefficients in Q(q,t).

Three bases are supported: monomial (``m``), power sum (``p``) and
Macdonald ``P``.  Products and scalar products are taken in the power-sum
basis.  Macdonald polynomials come from Gram-Schmidt on the monomials in
reverse lexicographic order, which extends the dominance order.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Mapping

from .arith import ONE, ZERO, RationalFunction, as_rf, product, q, t, var
from .partitions import EMPTY, NotContained, Partition, b_coef, partitions_of

BASES = ("monomial", "powersum", "macdonaldP")
_ALIASES = {"m": "monomial", "p": "powersum", "P": "macdonaldP"}


class DegreeMismatch(ValueError):
    """Operands live in different graded pieces."""


def _basis(name: str) -> str:
    name = _ALIASES.get(name, name)
    if name not in BASES:
        raise ValueError(f"unknown basis {name!r}")
    return name


class SymFunc:
    """Homogeneous symmetric function: degree, basis and coefficients."""

    __slots__ = ("degree", "basis", "coeffs")

    def __init__(self, degree: int, basis: str, coeffs: Mapping[Partition, object]):
        self.degree = degree
        self.basis = _basis(basis)
        clean = {}
        for lam, c in coeffs.items():
            if lam.size != degree:
                raise DegreeMismatch(f"{lam} has weight {lam.size}, expected {degree}")
            c = as_rf(c)
            if c:
                clean[lam] = c
        self.coeffs = clean

    @classmethod
    def basis_element(cls, basis: str, lam: Partition) -> "SymFunc":
        return cls(lam.size, basis, {lam: ONE})

    def __getitem__(self, lam: Partition) -> RationalFunction:
        return self.coeffs.get(lam, ZERO)

    def items(self):
        return self.coeffs.items()

    def to(self, basis: str) -> "SymFunc":
        basis = _basis(basis)
        if basis == self.basis:
            return self
        if self.basis == "macdonaldP":
            return _p_from_P(self).to(basis) if basis == "powersum" else _m_from_P(self)
        if self.basis == "powersum" and basis == "monomial":
            return _change(self, _p_to_m(self.degree), "monomial")
        if self.basis == "monomial" and basis == "powersum":
            return _change(self, _m_to_p(self.degree), "powersum")
        # target is P
        return _P_from_m(self.to("monomial"))

    def _check(self, other: "SymFunc"):
        if self.degree != other.degree:
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree} differ")

    def __add__(self, other: "SymFunc") -> "SymFunc":
        self._check(other)
        other = other.to(self.basis)
        out = dict(self.coeffs)
        for lam, c in other.items():
            out[lam] = out.get(lam, ZERO) + c
        return SymFunc(self.degree, self.basis, out)

    def __neg__(self):
        return SymFunc(self.degree, self.basis, {k: -c for k, c in self.items()})

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def scale(self, c) -> "SymFunc":
        c = as_rf(c)
        return SymFunc(self.degree, self.basis, {k: v * c for k, v in self.items()})

    def __mul__(self, other):
        if not isinstance(other, SymFunc):
            return self.scale(other)
        a, b = self.to("powersum"), other.to("powersum")
        out: dict[Partition, RationalFunction] = {}
        for la, ca in a.items():
            for lb, cb in b.items():
                key = Partition(tuple(sorted(la.parts + lb.parts, reverse=True)))
                out[key] = out.get(key, ZERO) + ca * cb
        return SymFunc(self.degree + other.degree, "powersum", out)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.degree != other.degree:
            return not self.coeffs and not other.coeffs
        return self.coeffs == other.to(self.basis).coeffs

    __hash__ = None

    def __repr__(self):
        inner = ", ".join(f"{k}: {v}" for k, v in self.items())
        return f"SymFunc(deg={self.degree}, {self.basis}, {{{inner}}})"

    def to_json(self) -> dict:
        return {str(k): str(v) for k, v in self.items()}


def one() -> SymFunc:
    return SymFunc(0, "monomial", {EMPTY: ONE})


def zero(degree: int) -> SymFunc:
    return SymFunc(degree, "monomial", {})


def _change(f: SymFunc, matrix, basis: str) -> SymFunc:
    out: dict[Partition, RationalFunction] = {}
    for lam, c in f.items():
        for mu, a in matrix[lam].items():
            out[mu] = out.get(mu, ZERO) + c * a
    return SymFunc(f.degree, basis, out)


# integer/rational change of basis between p and m ----------------------


def _count_assignments(parts: tuple[int, ...], bins: tuple[int, ...]) -> int:
    @lru_cache(maxsize=None)
    def go(i: int, rest: tuple[int, ...]) -> int:
        if i == len(parts):
            return int(all(r == 0 for r in rest))
        total = 0
        for j, r in enumerate(rest):
            if r >= parts[i]:
                total += go(i + 1, rest[:j] + (r - parts[i],) + rest[j + 1 :])
        return total

    return go(0, bins)


@lru_cache(maxsize=None)
def _p_to_m(d: int) -> dict[Partition, dict[Partition, Fraction]]:
    """Coefficient of m_mu in p_lam: ways to distribute the parts of lam."""
    out = {}
    for lam in partitions_of(d):
        row = {}
        for mu in partitions_of(d):
            c = _count_assignments(lam.parts, mu.parts)
            if c:
                row[mu] = Fraction(c)
        out[lam] = row
    return out


@lru_cache(maxsize=None)
def _m_to_p(d: int) -> dict[Partition, dict[Partition, Fraction]]:
    parts = partitions_of(d)
    fwd = _p_to_m(d)
    n = len(parts)
    # rows of A: p_lam in terms of m; we want A^{-1}
    a = [[fwd[lam].get(mu, Fraction(0)) for mu in parts] for lam in parts]
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        s = a[col][col]
        a[col] = [v / s for v in a[col]]
        inv[col] = [v / s for v in inv[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    # p = A m, hence m_mu = sum_lam (A^-1)[mu][lam] p_lam
    return {
        parts[i]: {parts[j]: inv[i][j] for j in range(n) if inv[i][j] != 0} for i in range(n)
    }


# scalar product and Macdonald polynomials ------------------------------


@lru_cache(maxsize=None)
def z_qt(lam: Partition) -> RationalFunction:
    """<p_lam, p_lam> = lam! prod_r r (1-q^r)/(1-t^r)."""
    return lam.factorial() * product(r * (1 - q**r) / (1 - t**r) for r in lam.parts)


def z_int(lam: Partition) -> int:
    return lam.factorial() * product(lam.parts, 1)


def scalar_product(f: SymFunc, h: SymFunc) -> RationalFunction:
    if f.degree != h.degree:
        raise DegreeMismatch(f"degrees {f.degree} and {h.degree} differ")
    a, b = f.to("powersum"), h.to("powersum")
    return sum((c * b[lam] * z_qt(lam) for lam, c in a.items()), ZERO)


@lru_cache(maxsize=None)
def _gram_m(d: int) -> dict[tuple[Partition, Partition], RationalFunction]:
    conv = _m_to_p(d)
    parts = partitions_of(d)
    g = {}
    for i, a in enumerate(parts):
        for b in parts[i:]:
            val = sum(
                (c * conv[b].get(nu, 0) * z_qt(nu) for nu, c in conv[a].items() if nu in conv[b]),
                ZERO,
            )
            g[a, b] = g[b, a] = val
    return g


@lru_cache(maxsize=None)
def _macdonald_table(d: int) -> dict[Partition, dict[Partition, RationalFunction]]:
    parts = partitions_of(d)
    gram = _gram_m(d)

    def inner(u: dict, v: dict) -> RationalFunction:
        return sum((cu * cv * gram[a, b] for a, cu in u.items() for b, cv in v.items()), ZERO)

    table: dict[Partition, dict[Partition, RationalFunction]] = {}
    norms: dict[Partition, RationalFunction] = {}
    for lam in reversed(parts):
        vec = {lam: ONE}
        m_lam = {lam: ONE}
        for mu, pmu in table.items():
            coef = inner(m_lam, pmu) / norms[mu]
            if coef:
                for nu, c in pmu.items():
                    vec[nu] = vec.get(nu, ZERO) - coef * c
        vec = {k: v for k, v in vec.items() if v}
        table[lam] = vec
        norms[lam] = inner(vec, vec)
    return table


def macdonald_P(lam: Partition) -> SymFunc:
    return SymFunc(lam.size, "monomial", _macdonald_table(lam.size)[lam])


def macdonald_Q(lam: Partition) -> SymFunc:
    return macdonald_P(lam).scale(b_coef(lam))


def _m_from_P(f: SymFunc) -> SymFunc:
    table = _macdonald_table(f.degree)
    out: dict[Partition, RationalFunction] = {}
    for lam, c in f.items():
        for mu, a in table[lam].items():
            out[mu] = out.get(mu, ZERO) + c * a
    return SymFunc(f.degree, "monomial", out)


def _p_from_P(f: SymFunc) -> SymFunc:
    return _m_from_P(f).to("powersum")


def _P_from_m(f: SymFunc) -> SymFunc:
    table = _macdonald_table(f.degree)
    rest = dict(f.coeffs)
    out = {}
    for lam in partitions_of(f.degree):
        c = rest.get(lam)
        if not c:
            continue
        out[lam] = c
        for mu, a in table[lam].items():
            rest[mu] = rest.get(mu, ZERO) - c * a
    return SymFunc(f.degree, "macdonaldP", out)


# classical families -----------------------------------------------------


def classical_basis(kind: str, j: int) -> SymFunc:
    """e_j, g_j or g*_j in the power-sum basis."""
    coeffs = {}
    for lam in partitions_of(j):
        base = Fraction(1, z_int(lam))
        if kind == "e":
            coeffs[lam] = as_rf((-1) ** (j + lam.length) * base)
        elif kind in ("g", "g*"):
            c = base * product((1 - t**r) / (1 - q**r) for r in lam.parts)
            coeffs[lam] = c if kind == "g" else (-1) ** lam.length * c
        else:
            raise ValueError(f"unknown family {kind!r}")
    return SymFunc(j, "powersum", coeffs)


def multiplicative(kind: str, lam: Partition) -> SymFunc:
    """e_lam, g_lam or g*_lam as a product of the one-row families."""
    acc = one()
    for r in lam.parts:
        acc = acc * classical_basis(kind, r)
    return acc


def power_sum(lam: Partition) -> SymFunc:
    return SymFunc.basis_element("powersum", lam)


def monomial(lam: Partition) -> SymFunc:
    return SymFunc.basis_element("monomial", lam)


# Pieri, Littlewood-Richardson, skew ------------------------------------


def pieri_multiply(j: int, mu: Partition) -> SymFunc:
    return (classical_basis("e", j) * macdonald_P(mu)).to("macdonaldP")


def lr_coefficients(lam: Partition, nu: Partition) -> dict[Partition, RationalFunction]:
    prod = (macdonald_P(lam) * macdonald_P(nu)).to("macdonaldP")
    return dict(prod.items())


def skew_macdonald(mu: Partition, nu: Partition) -> SymFunc:
    if not mu.contains(nu):
        raise NotContained(f"{nu} is not contained in {mu}")
    k = mu.size - nu.size
    out = {}
    for lam in partitions_of(k):
        f = lr_coefficients(lam, nu).get(mu)
        if f:
            out[lam] = b_coef(lam) * b_coef(nu) / b_coef(mu) * f
    return SymFunc(k, "macdonaldP", out)


# finite alphabets ------------------------------------------------------


class FiniteAlphabetPoly:
    """A symmetric polynomial in ``prefix1..prefixN`` (q,t in coefficients)."""

    __slots__ = ("nvars", "poly", "prefix")

    def __init__(self, nvars: int, poly, prefix: str = "w"):
        self.nvars = nvars
        self.poly = as_rf(poly)
        self.prefix = prefix

    @property
    def names(self) -> list[str]:
        return [f"{self.prefix}{i}" for i in range(1, self.nvars + 1)]

    def coefficients(self) -> dict[tuple[int, ...], RationalFunction]:
        return self.poly.coefficients_in(self.names)

    def is_symmetric(self) -> bool:
        names = self.names
        for i in range(len(names) - 1):
            swap = {names[i]: var(names[i + 1]), names[i + 1]: var(names[i])}
            if self.poly.subs(swap) != self.poly:
                return False
        return True

    def __eq__(self, other):
        if isinstance(other, FiniteAlphabetPoly):
            return self.poly == other.poly
        return self.poly == as_rf(other)

    __hash__ = None

    def __repr__(self):
        return f"FiniteAlphabetPoly({self.nvars}, {self.poly})"

    def to_json(self) -> dict:
        return {
            "vars": self.names,
            "terms": [
                {"exps": [int(e) for e in k], "coef": str(v)}
                for k, v in sorted(self.coefficients().items(), reverse=True)
            ],
        }


def monomial_poly(lam: Partition, names: list[str]) -> RationalFunction:
    if lam.length > len(names):
        return ZERO
    padded = lam.parts + (0,) * (len(names) - lam.length)
    gens = [var(n) for n in names]
    return sum(
        (product(g**e for g, e in zip(gens, alpha) if e) for alpha in set(permutations(padded))),
        ZERO,
    )


def power_sum_poly(lam: Partition, names: list[str]) -> RationalFunction:
    gens = [var(n) for n in names]
    return product(sum((g**r for g in gens), ZERO) for r in lam.parts)


def evaluate_on(f: SymFunc, names: list[str]) -> RationalFunction:
    """Restriction to the finite alphabet ``names``."""
    if f.basis == "powersum":
        return sum((c * power_sum_poly(lam, names) for lam, c in f.items()), ZERO)
    g = f.to("monomial")
    return sum((c * monomial_poly(lam, names) for lam, c in g.items()), ZERO)


def restrict_to_alphabet(f: SymFunc, nvars: int, prefix: str = "w") -> FiniteAlphabetPoly:
    names = [f"{prefix}{i}" for i in range(1, nvars + 1)]
    return FiniteAlphabetPoly(nvars, evaluate_on(f, names), prefix)


def plethysm_image(r: int, n: int, m: int) -> RationalFunction:
    """Image of p_r under p_r -> p_r(w) - p_r(z_1..z_n) - (q^r-t^r)/(1-t^r) z_0^r."""
    w = sum((var(f"w{i}") ** r for i in range(1, m + 1)), ZERO)
    z = sum((var(f"z{i}") ** r for i in range(1, n + 1)), ZERO)
    return w - z - (q**r - t**r) / (1 - t**r) * var("z0") ** r


def plethystic_substitute(f: SymFunc, n: int, m: int) -> RationalFunction:
    g = f.to("powersum")
    return sum(
        (c * product(plethysm_image(r, n, m) for r in lam.parts) for lam, c in g.items()),
        ZERO,
    )


def cauchy_kernel(
    degree_cut: int, nx: int, ny: int, resolution: str = "exp"
) -> RationalFunction:
    """Truncated Cauchy kernel in x1..x_nx and y1..y_ny.

    ``resolution`` selects the expansion: ``exp`` (power sums), ``mg``
    (sum m_lam(x) g_lam(y)) or ``PQ`` (sum P_lam(x) Q_lam(y)).
    """
    xn = [f"x{i}" for i in range(1, nx + 1)]
    yn = [f"y{i}" for i in range(1, ny + 1)]
    total = ZERO
    for k in range(degree_cut + 1):
        for lam in partitions_of(k):
            if resolution == "exp":
                c = product((1 - t**r) / (1 - q**r) for r in lam.parts) / z_int(lam)
                total += c * power_sum_poly(lam, xn) * power_sum_poly(lam, yn)
            elif resolution == "mg":
                total += monomial_poly(lam, xn) * evaluate_on(multiplicative("g", lam), yn)
            elif resolution == "PQ":
                total += evaluate_on(macdonald_P(lam), xn) * evaluate_on(macdonald_Q(lam), yn)
            else:
                raise ValueError(f"unknown resolution {resolution!r}")
    return total


def symfunc_from_items(degree: int, basis: str, items: Iterable[tuple[Partition, object]]) -> SymFunc:
    out: dict[Partition, RationalFunction] = {}
    for lam, c in items:
        out[lam] = out.get(lam, ZERO) + as_rf(c)
    return SymFunc(degree, basis, out)

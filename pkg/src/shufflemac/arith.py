"""Exact polynomial and rational-function arithmetic over Q.

Every scalar in the package is a :class:`RationalFunction` in a fixed,
global set of variables.  Polynomials are backed by FLINT's sparse
multivariate polynomials (``fmpq_mpoly``) in one shared context, so the
canonical form only depends on the variable order fixed in
:data:`VARIABLES`:

    q < t < v < x1..x8 < y1..y8 < z0..z8 < w1..w8

with a lexicographic monomial order (``q`` most significant).  A rational
function is kept with ``gcd(num, den) = 1`` and a monic denominator.

Numeric evaluation for identity testing (:func:`eval_at`,
:func:`check_identity`) deliberately does not go through FLINT; it walks
the exponent dictionaries with :class:`fractions.Fraction` so that the
randomized checks are independent of the symbolic normal form.
"""
from __future__ import annotations

import ast
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Union

import flint

MAX_INDEX = 8

VARIABLES: tuple[str, ...] = (
    ("q", "t", "v")
    + tuple(f"x{i}" for i in range(1, MAX_INDEX + 1))
    + tuple(f"y{i}" for i in range(1, MAX_INDEX + 1))
    + tuple(f"z{i}" for i in range(0, MAX_INDEX + 1))
    + tuple(f"w{i}" for i in range(1, MAX_INDEX + 1))
)
_INDEX = {name: i for i, name in enumerate(VARIABLES)}
_CTX = flint.fmpq_mpoly_ctx.get(VARIABLES, "lex")
_GENS = _CTX.gens()
_NV = len(VARIABLES)

SAMPLE_RANGE = (2, 10**6)


class ZeroDenominator(ZeroDivisionError):
    """A rational function was built with denominator 0."""


class PoleAtPoint(ArithmeticError):
    """The denominator vanishes at the requested evaluation point."""


def _fmpq(c) -> flint.fmpq:
    if isinstance(c, Fraction):
        return flint.fmpq(c.numerator, c.denominator)
    return flint.fmpq(c)


def _to_fraction(c) -> Fraction:
    return Fraction(int(c.p), int(c.q))


def _raw(value) -> flint.fmpq_mpoly:
    if isinstance(value, flint.fmpq_mpoly):
        return value
    if isinstance(value, MPoly):
        return value._p
    if isinstance(value, (int, Fraction, flint.fmpq, flint.fmpz)):
        return _CTX.constant(_fmpq(value))
    raise TypeError(f"cannot interpret {value!r} as a polynomial")


class MPoly:
    """Sparse multivariate polynomial with rational coefficients."""

    __slots__ = ("_p",)

    def __init__(self, value=0):
        self._p = _raw(value)

    @classmethod
    def var(cls, name: str) -> "MPoly":
        return cls(_GENS[_INDEX[name]])

    @classmethod
    def from_terms(cls, terms: Mapping[tuple[int, ...], object], names: Iterable[str]) -> "MPoly":
        idx = [_INDEX[n] for n in names]
        out = {}
        for exps, c in terms.items():
            full = [0] * _NV
            for i, e in zip(idx, exps):
                full[i] = e
            key = tuple(full)
            out[key] = out.get(key, 0) + _fmpq(c)
        return cls(_CTX.from_dict({k: c for k, c in out.items() if c != 0}))

    def __add__(self, other):
        if isinstance(other, RationalFunction):
            return NotImplemented
        return MPoly(self._p + _raw(other))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, RationalFunction):
            return NotImplemented
        return MPoly(self._p - _raw(other))

    def __rsub__(self, other):
        return MPoly(_raw(other) - self._p)

    def __mul__(self, other):
        if isinstance(other, RationalFunction):
            return NotImplemented
        return MPoly(self._p * _raw(other))

    __rmul__ = __mul__

    def __neg__(self):
        return MPoly(-self._p)

    def __pow__(self, e: int):
        return MPoly(self._p**e)

    def __eq__(self, other):
        try:
            return self._p == _raw(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(str(self._p))

    def __repr__(self):
        return f"MPoly({self._p})"

    def __str__(self):
        return str(self._p)

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def terms(self) -> dict[tuple[int, ...], Fraction]:
        """Exponent vectors over the full universe mapped to coefficients."""
        return {k: _to_fraction(c) for k, c in self._p.to_dict().items()}

    def variables(self) -> tuple[str, ...]:
        degs = self._p.degrees()
        return tuple(VARIABLES[i] for i, d in enumerate(degs) if d > 0)

    def degree(self, name: str) -> int:
        return max(self._p.degrees()[_INDEX[name]], 0)

    def to_json(self) -> dict:
        used = self.variables()
        idx = [_INDEX[n] for n in used]
        terms = []
        for exps, c in self._p.to_dict().items():
            terms.append({"exps": [int(exps[i]) for i in idx], "coef": str(_to_fraction(c))})
        return {"vars": list(used), "terms": terms}

    @classmethod
    def from_json(cls, data: Mapping) -> "MPoly":
        terms = {tuple(t["exps"]): Fraction(t["coef"]) for t in data["terms"]}
        return cls.from_terms(terms, data["vars"])


def _normalize(n: flint.fmpq_mpoly, d: flint.fmpq_mpoly):
    if d.is_zero():
        raise ZeroDenominator("denominator is zero")
    if n.is_zero():
        return n, _CTX.constant(1)
    if not d.is_constant():
        g = n.gcd(d)
        if not g.is_one():
            n = n / g
            d = d / g
    lc = d.leading_coefficient()
    if lc != 1:
        n = n / lc
        d = d / lc
    return n, d


Scalar = Union[int, Fraction, "RationalFunction", MPoly]


class RationalFunction:
    """Quotient of two polynomials, gcd-reduced with a monic denominator."""

    __slots__ = ("_n", "_d")

    def __init__(self, num=0, den=1):
        if isinstance(num, RationalFunction) and den == 1:
            self._n, self._d = num._n, num._d
            return
        if isinstance(num, RationalFunction) or isinstance(den, RationalFunction):
            r = as_rf(num) / as_rf(den)
            self._n, self._d = r._n, r._d
            return
        self._n, self._d = _normalize(_raw(num), _raw(den))

    @classmethod
    def _make(cls, n, d) -> "RationalFunction":
        r = cls.__new__(cls)
        r._n, r._d = n, d
        return r

    @classmethod
    def var(cls, name: str) -> "RationalFunction":
        return cls._make(_GENS[_INDEX[name]], _CTX.constant(1))

    @property
    def num(self) -> MPoly:
        return MPoly(self._n)

    @property
    def den(self) -> MPoly:
        return MPoly(self._d)

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self._n.is_zero():
            return o
        if o._n.is_zero():
            return self
        if self._d == o._d:
            return RationalFunction._make(*_normalize(self._n + o._n, self._d))
        if self._d.is_constant() and o._d.is_constant():
            return RationalFunction._make(*_normalize(self._n * o._d + o._n * self._d, self._d * o._d))
        g = self._d.gcd(o._d)
        a = self._d / g
        b = o._d / g
        return RationalFunction._make(*_normalize(self._n * b + o._n * a, self._d * b))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._make(-self._n, self._d)

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self._n.is_zero() or o._n.is_zero():
            return ZERO
        n1, d1, n2, d2 = self._n, self._d, o._n, o._d
        if not d2.is_constant() and not n1.is_constant():
            g = n1.gcd(d2)
            if not g.is_one():
                n1, d2 = n1 / g, d2 / g
        if not d1.is_constant() and not n2.is_constant():
            g = n2.gcd(d1)
            if not g.is_one():
                n2, d1 = n2 / g, d1 / g
        n, d = n1 * n2, d1 * d2
        lc = d.leading_coefficient()
        if lc != 1:
            n, d = n / lc, d / lc
        return RationalFunction._make(n, d)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self._n.is_zero():
            raise ZeroDenominator("inverse of zero")
        n, d = self._d, self._n
        lc = d.leading_coefficient()
        return RationalFunction._make(n / lc, d / lc)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RationalFunction._make(self._n**e, self._d**e)

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self._n == o._n and self._d == o._d

    def __hash__(self):
        return hash((str(self._n), str(self._d)))

    def __bool__(self):
        return not self._n.is_zero()

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        if self._d.is_one():
            return str(self._n)
        n = str(self._n)
        if len(self._n.to_dict()) > 1:
            n = f"({n})"
        return f"{n}/({self._d})"

    # inspection -------------------------------------------------------
    def is_zero(self) -> bool:
        return self._n.is_zero()

    def is_polynomial(self) -> bool:
        return self._d.is_one()

    def is_constant(self) -> bool:
        return self._n.is_constant() and self._d.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        zero = (0,) * _NV
        n = self._n.to_dict().get(zero, flint.fmpq(0))
        return _to_fraction(flint.fmpq(n) / self._d.to_dict()[zero])

    def variables(self) -> tuple[str, ...]:
        dn, dd = self._n.degrees(), self._d.degrees()
        return tuple(VARIABLES[i] for i in range(_NV) if dn[i] > 0 or dd[i] > 0)

    def normalize(self) -> "RationalFunction":
        return RationalFunction._make(*_normalize(self._n, self._d))

    def to_json(self) -> dict:
        return {"num": MPoly(self._n).to_json(), "den": MPoly(self._d).to_json()}

    @classmethod
    def from_json(cls, data: Mapping) -> "RationalFunction":
        return cls(MPoly.from_json(data["num"]), MPoly.from_json(data["den"]))

    # substitution -----------------------------------------------------
    def subs(self, mapping: Mapping[str, Scalar]) -> "RationalFunction":
        """Simultaneous substitution of variables by scalars."""
        if not mapping:
            return self
        vals = {_INDEX[k]: as_rf(v) for k, v in mapping.items()}
        if all(v._d.is_one() for v in vals.values()):
            args = [vals[i]._n if i in vals else _GENS[i] for i in range(_NV)]
            n = self._n.compose(*args) if not self._n.is_constant() else self._n
            d = self._d.compose(*args) if not self._d.is_constant() else self._d
            return RationalFunction._make(*_normalize(n, d))
        pn, en = _subs_poly(self._n, vals)
        pd, ed = _subs_poly(self._d, vals)
        n, d = pn, pd
        for i, v in vals.items():
            k = ed.get(i, 0) - en.get(i, 0)
            if k > 0:
                n = n * v._d**k
            elif k < 0:
                d = d * v._d ** (-k)
        return RationalFunction._make(*_normalize(n, d))

    def coefficients_in(self, names: Iterable[str]) -> dict[tuple[int, ...], "RationalFunction"]:
        """Expand as a polynomial in ``names`` with coefficients free of them."""
        names = tuple(names)
        idx = [_INDEX[n] for n in names]
        dd = self._d.degrees()
        if any(dd[i] > 0 for i in idx):
            raise ValueError("denominator depends on the expansion variables")
        groups: dict[tuple[int, ...], dict] = {}
        for exps, c in self._n.to_dict().items():
            key = tuple(exps[i] for i in idx)
            rest = list(exps)
            for i in idx:
                rest[i] = 0
            groups.setdefault(key, {})[tuple(rest)] = c
        return {k: RationalFunction(_CTX.from_dict(g), self._d) for k, g in sorted(groups.items(), reverse=True)}


def _subs_poly(p: flint.fmpq_mpoly, vals: dict[int, "RationalFunction"]):
    """p with variables replaced by fractions, as (numerator, {var: den power})."""
    if p.is_constant():
        return p, {}
    degs = p.degrees()
    idx = [i for i in vals if degs[i] > 0]
    if not idx:
        return p, {}
    groups: dict[tuple[int, ...], dict] = {}
    for exps, c in p.to_dict().items():
        key = tuple(exps[i] for i in idx)
        rest = list(exps)
        for i in idx:
            rest[i] = 0
        groups.setdefault(key, {})[tuple(rest)] = c
    pw_n: dict[tuple[int, int], flint.fmpq_mpoly] = {}
    pw_d: dict[tuple[int, int], flint.fmpq_mpoly] = {}

    def pn(i, e):
        if (i, e) not in pw_n:
            pw_n[i, e] = vals[i]._n**e
        return pw_n[i, e]

    def pd(i, e):
        if (i, e) not in pw_d:
            pw_d[i, e] = vals[i]._d**e
        return pw_d[i, e]

    total = _CTX.constant(0)
    for key, g in groups.items():
        term = _CTX.from_dict(g)
        for i, e in zip(idx, key):
            term = term * pn(i, e) * pd(i, degs[i] - e)
        total = total + term
    return total, {i: degs[i] for i in idx}


def _coerce(value) -> RationalFunction | None:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, (int, Fraction, MPoly, flint.fmpq_mpoly, flint.fmpq)):
        return RationalFunction._make(_raw(value), _CTX.constant(1))
    return None


def as_rf(value) -> RationalFunction:
    r = _coerce(value)
    if r is None:
        raise TypeError(f"cannot interpret {value!r} as a rational function")
    return r


def var(name: str) -> RationalFunction:
    return RationalFunction.var(name)


ZERO = RationalFunction._make(_CTX.constant(0), _CTX.constant(1))
ONE = RationalFunction._make(_CTX.constant(1), _CTX.constant(1))
q = var("q")
t = var("t")


def xs(k: int, prefix: str = "x") -> list[RationalFunction]:
    return [var(f"{prefix}{i}") for i in range(1, k + 1)]


def product(items: Iterable, start=None):
    acc = ONE if start is None else start
    for it in items:
        acc = acc * it
    return acc


# parsing -------------------------------------------------------------

_BINOPS = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
    ast.Div: lambda a, b: a / b,
}


def parse_rational(text: str) -> RationalFunction:
    """Parse an arithmetic expression such as ``"(1-q)/t^2"``."""
    tree = ast.parse(text.replace("^", "**").replace("−", "-"), mode="eval")

    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return as_rf(node.value)
        if isinstance(node, ast.Name):
            if node.id not in _INDEX:
                raise ValueError(f"unknown variable {node.id!r}")
            return var(node.id)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = walk(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                e = node.right
                sign = 1
                if isinstance(e, ast.UnaryOp) and isinstance(e.op, ast.USub):
                    sign, e = -1, e.operand
                if not (isinstance(e, ast.Constant) and isinstance(e.value, int)):
                    raise ValueError("exponents must be integer literals")
                return walk(node.left) ** (sign * e.value)
            op = _BINOPS.get(type(node.op))
            if op is not None:
                return op(walk(node.left), walk(node.right))
        raise ValueError(f"unsupported expression: {text!r}")

    return walk(tree)


# numeric evaluation --------------------------------------------------


@dataclass(frozen=True)
class EvalPoint:
    assignment: dict[str, Fraction]
    seed: int
    regenerations: int = 0


def _eval_poly(p: flint.fmpq_mpoly, values: list[Fraction | None]) -> Fraction:
    total = Fraction(0)
    for exps, c in p.to_dict().items():
        term = _to_fraction(c)
        for i, e in enumerate(exps):
            if e:
                v = values[i]
                if v is None:
                    raise KeyError(f"variable {VARIABLES[i]} is not assigned")
                term *= v ** int(e)
        total += term
    return total


def eval_at(r: Scalar, pt: EvalPoint | Mapping[str, Fraction]) -> Fraction:
    """Exact value of ``r`` at a point; raises PoleAtPoint on a zero denominator."""
    r = as_rf(r)
    assignment = pt.assignment if isinstance(pt, EvalPoint) else pt
    values: list[Fraction | None] = [None] * _NV
    for k, v in assignment.items():
        values[_INDEX[k]] = Fraction(v)
    den = _eval_poly(r._d, values)
    if den == 0:
        raise PoleAtPoint(f"denominator vanishes at {dict(assignment)}")
    return _eval_poly(r._n, values) / den


def fast_eval(r: RationalFunction, values: Mapping[str, Fraction]) -> Fraction:
    """FLINT-backed evaluation, used inside numeric pipelines."""
    args = [flint.fmpq(0)] * _NV
    for k, v in values.items():
        args[_INDEX[k]] = _fmpq(v)
    den = r._d(*args)
    if den == 0:
        raise PoleAtPoint(f"denominator vanishes at {dict(values)}")
    return _to_fraction(r._n(*args) / den)


def _degenerate(assignment: Mapping[str, Fraction]) -> bool:
    qv, tv = assignment.get("q"), assignment.get("t")
    for v in (qv, tv):
        if v is not None and v == 1:
            return True
    if qv is not None and tv is not None and (qv == tv or qv * tv == 1):
        return True
    return False


def random_point(names: Iterable[str], rng: random.Random, seed: int = 0) -> EvalPoint:
    names = sorted(set(names) | {"q", "t"}, key=_INDEX.__getitem__)
    regen = 0
    while True:
        a = {n: Fraction(rng.randint(*SAMPLE_RANGE)) for n in names}
        if not _degenerate(a):
            return EvalPoint(a, seed, regen)
        regen += 1


@dataclass
class IdentityCheck:
    """Outcome of a randomized identity test; truthy iff no counterexample."""

    equal: bool
    trials: int
    seed: int
    point: EvalPoint | None = None
    lhs_value: Fraction | None = None
    rhs_value: Fraction | None = None
    poles_skipped: int = 0
    mode: str = "randomized"

    def __bool__(self):
        return self.equal

    def describe(self) -> dict:
        d = {"equal": self.equal, "mode": self.mode, "trials": self.trials, "seed": self.seed}
        if self.point is not None:
            d["counterexample"] = {k: str(v) for k, v in self.point.assignment.items()}
            d["lhs"] = str(self.lhs_value)
            d["rhs"] = str(self.rhs_value)
        return d


Evaluable = Union[RationalFunction, Callable[[EvalPoint], Fraction]]

MAX_POLE_RETRIES = 50


def check_identity(
    lhs: Evaluable | Scalar,
    rhs: Evaluable | Scalar,
    trials: int = 5,
    seed: int = 0,
    variables: Iterable[str] | None = None,
) -> IdentityCheck:
    """Randomized identity test (Schwartz-Zippel style).

    ``lhs``/``rhs`` are rational functions or callables taking an
    :class:`EvalPoint`.  Points where either side has a pole are skipped and
    resampled (bounded).  Deterministic given ``seed``.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    names = set(variables or ())
    sides = []
    for side in (lhs, rhs):
        if callable(side) and not isinstance(side, RationalFunction):
            sides.append(side)
        else:
            r = as_rf(side)
            names |= set(r.variables())
            sides.append(lambda pt, r=r: eval_at(r, pt))
    rng = random.Random(seed)
    skipped = 0
    done = 0
    while done < trials:
        pt = random_point(names, rng, seed)
        try:
            a = sides[0](pt)
            b = sides[1](pt)
        except PoleAtPoint:
            skipped += 1
            if skipped > MAX_POLE_RETRIES:
                raise
            continue
        if a != b:
            return IdentityCheck(False, done + 1, seed, pt, a, b, skipped)
        done += 1
    return IdentityCheck(True, trials, seed, poles_skipped=skipped)


def exact_check(lhs: Scalar, rhs: Scalar) -> IdentityCheck:
    """Structural equality of canonical forms, reported like check_identity."""
    ok = as_rf(lhs) == as_rf(rhs)
    return IdentityCheck(ok, 0, 0, mode="exact")

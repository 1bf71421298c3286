"""Coloured vertex model for U_t(sl_{n+1|m}).

Colours are integers ``0..n+m``; ``1..n`` are bosonic, ``n+1..n+m``
fermionic, and ``0`` compares as the greatest colour.  A lattice has rows
with spectral parameters ``x`` (top to bottom) and columns with ``y``
(left to right).  Boundary labels: ``alpha`` on the left and ``delta`` on
the right of each row, ``beta`` on top and ``gamma`` at the bottom of each
column.

Every Boltzmann weight has the form ``poly(x, y) / (y - t x)``, so a
partition function is computed as a sum of products of numerator
polynomials divided once by ``prod_{r,c} (y_c - t x_r)``.

All routines are generic in the scalar type: pass rational functions for
symbolic results, or Fractions together with numeric ``tv``/``qv`` for fast
randomized checks.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product as iproduct
from typing import Iterable, Sequence

from .arith import ONE, ZERO, PoleAtPoint, RationalFunction, as_rf, product, q, t, var
from .linalg import determinant, inverse

Colours = tuple[int, ...]


class ContentMismatch(ValueError):
    """Two colour strings with different colour multisets."""


@dataclass(frozen=True)
class ModelSpec:
    n: int
    m: int

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise ValueError("n and m must be non-negative")

    @property
    def colours(self) -> range:
        return range(self.n + self.m + 1)

    @property
    def dim(self) -> int:
        return self.n + self.m + 1

    def rank(self, c: int) -> int:
        """Order key: 0 is the greatest colour."""
        return self.n + self.m + 1 if c == 0 else c

    def is_fermionic(self, c: int) -> bool:
        return c > self.n

    def strings(self, N: int) -> list[Colours]:
        return list(iproduct(self.colours, repeat=N))

    def content(self, s: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(1 for c in s if c == k) for k in self.colours)


def _tv(tv):
    return t if tv is None else tv


def _qv(qv):
    return q if qv is None else qv


# local weights -------------------------------------------------------------


def weight_numerator(spec: ModelSpec, left: int, top: int, bottom: int, right: int, x, y, tv=None):
    """Numerator of the vertex weight over the common denominator (y - t x); 0 if forbidden."""
    tv = _tv(tv)
    if left != top:
        if bottom != top or right != left:
            return 0
        if spec.rank(left) < spec.rank(top):
            return tv * (y - x)
        return y - x
    if bottom != right:
        return 0
    a, b = left, bottom
    if a == b:
        if a == 0 or not spec.is_fermionic(a):
            return y - tv * x
        return x - tv * y
    if spec.rank(a) < spec.rank(b):
        return (1 - tv) * y
    return (1 - tv) * x


def vertex_weight(spec: ModelSpec, left: int, top: int, bottom: int, right: int, x, y, tv=None):
    """Boltzmann weight of a single vertex with parameters x (row) and y (column)."""
    num = weight_numerator(spec, left, top, bottom, right, x, y, tv)
    if isinstance(num, int) and num == 0:
        return 0
    return num / (y - _tv(tv) * x)


def _transitions(spec: ModelSpec, h: int, u: int):
    """Allowed (bottom, right) given (left, top)."""
    if h != u:
        return [(u, h)]
    return [(b, b) for b in spec.colours]


# lattice enumeration --------------------------------------------------------


def _transfer(
    spec: ModelSpec,
    alpha: Sequence[int],
    beta: Sequence[int],
    x: Sequence,
    y: Sequence,
    tv=None,
    gamma: Sequence[int] | None = None,
    delta: Sequence[int] | None = None,
    count: bool = False,
    tables: list | None = None,
) -> dict[tuple[Colours, Colours], object]:
    """Row-by-row contraction.

    Returns ``{(gamma, delta): sum of numerator products}`` (or
    configuration counts).  Boundaries given as None are left free and
    tracked in the result.
    """
    R, C = len(x), len(y)
    if tables is None and not count:
        tables = weight_tables(spec, x, y, tv)
    states: dict[tuple[Colours, Colours], object] = {(tuple(beta), ()): 1}
    for r in range(R):
        new: dict[tuple[Colours, Colours], object] = {}
        for (cut, rights), w in states.items():
            partial = {(alpha[r], ()): w}
            for c in range(C):
                nxt: dict = {}
                u = cut[c]
                for (h, below), ww in partial.items():
                    if count:
                        moves = [(b, rt, 1) for b, rt in _transitions(spec, h, u)]
                    else:
                        moves = tables[r][c].get((h, u), ())
                    for bot, right, num in moves:
                        key = (right, below + (bot,))
                        val = ww * num
                        nxt[key] = nxt[key] + val if key in nxt else val
                partial = nxt
            for (h, below), ww in partial.items():
                if delta is not None and h != delta[r]:
                    continue
                key = (below, rights if delta is not None else rights + (h,))
                new[key] = new[key] + ww if key in new else ww
        states = new
    out = {}
    for (cut, rights), w in states.items():
        if gamma is not None and cut != tuple(gamma):
            continue
        d = tuple(delta) if delta is not None else rights
        out[(cut, d)] = w
    return out


def weight_tables(spec: ModelSpec, x: Sequence, y: Sequence, tv=None) -> list:
    """tables[r][c][(left, top)] = [(bottom, right, numerator), ...] with zero weights dropped."""
    out = []
    for xr in x:
        row = []
        for yc in y:
            cell = {}
            for h in spec.colours:
                for u in spec.colours:
                    moves = []
                    for bot, right in _transitions(spec, h, u):
                        num = weight_numerator(spec, h, u, bot, right, xr, yc, tv)
                        if (isinstance(num, int) and num == 0) or not num:
                            continue
                        moves.append((bot, right, num))
                    cell[(h, u)] = moves
            row.append(cell)
        out.append(row)
    return out


def _denominator(x: Sequence, y: Sequence, tv=None):
    tv = _tv(tv)
    d = 1
    for xr in x:
        for yc in y:
            d = d * (yc - tv * xr)
    if not d:
        raise PoleAtPoint("a vertex weight has a vanishing denominator")
    return d


def conic(x: Sequence, qv=None) -> list:
    qv = _qv(qv)
    return [qv * xi for xi in x]


def _resolve_y(x, y, qv=None):
    if isinstance(y, str):
        if y != "conic":
            raise ValueError("y must be a list or 'conic'")
        return conic(x, qv)
    return list(y)


@dataclass(frozen=True)
class BoundaryData:
    alpha: Colours
    beta: Colours
    gamma: Colours
    delta: Colours

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            object.__setattr__(self, name, tuple(getattr(self, name)))

    @classmethod
    def parse(cls, text: str) -> "BoundaryData":
        """``"10,10,11,11"``: alpha, beta, gamma, delta as digit strings."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 4:
            raise ValueError("boundary needs four colour strings")
        return cls(*(tuple(int(ch) for ch in p) for p in parts))


def partition_function(spec: ModelSpec, b: BoundaryData, x: Sequence, y, tv=None, qv=None):
    """Z_{alpha,gamma}^{beta,delta}(x; y) by exact enumeration."""
    y = _resolve_y(x, y, qv)
    if not (len(b.alpha) == len(b.delta) == len(x) and len(b.beta) == len(b.gamma) == len(y)):
        raise ValueError("boundary lengths do not match the lattice")
    res = _transfer(spec, b.alpha, b.beta, x, y, tv, gamma=b.gamma, delta=b.delta)
    num = res.get((b.gamma, b.delta), 0)
    if isinstance(num, int) and num == 0:
        return ZERO if _is_symbolic(x, y) else Fraction(0)
    return num / _denominator(x, y, tv)


def _is_symbolic(*seqs) -> bool:
    return any(isinstance(v, RationalFunction) for s in seqs for v in s)


def domain_wall(spec: ModelSpec, k: int, M: int, x: Sequence, y, tv=None, qv=None):
    """D_M^{(k)} = W_{(k^M)}^{(k^M)}."""
    if M == 0:
        return ONE
    x = list(x)[:M]
    y = _resolve_y(x, y, qv)[:M]
    zero = (0,) * M
    kk = (k,) * M
    return partition_function(spec, BoundaryData(zero, zero, kk, kk), x, y, tv)


def ik_det(x: Sequence, y: Sequence, tv=None):
    """Izergin-Korepin determinant formula for the bosonic domain wall."""
    tv = _tv(tv)
    M = len(x)
    if M == 0:
        return ONE
    pref = product((x[i] - y[j] for i in range(M) for j in range(M)), 1)
    pref = pref / product(
        ((x[i] - x[j]) * (y[j] - y[i]) for i in range(M) for j in range(i + 1, M)), 1
    )
    mat = [
        [(1 - tv) * x[i] / ((x[i] - y[j]) * (y[j] - tv * x[i])) for j in range(M)]
        for i in range(M)
    ]
    return pref * determinant(mat, one=1)


def fermionic_dw(x: Sequence, y: Sequence, tv=None):
    """Factorized fermionic domain wall."""
    tv = _tv(tv)
    M = len(x)
    if M == 0:
        return ONE
    num = (tv - 1) ** M
    for i in range(M):
        num = num * x[i]
        for j in range(i + 1, M):
            num = num * (x[j] - tv * x[i]) * (y[i] - tv * y[j])
    den = product((tv * x[i] - y[j] for i in range(M) for j in range(M)), 1)
    return num / den


def dw_formula(spec: ModelSpec, k: int, x: Sequence, y: Sequence, tv=None):
    if len(x) == 0 or k == 0:
        return ONE if _is_symbolic(x, y) or tv is None else 1
    if spec.is_fermionic(k):
        return fermionic_dw(x, y, tv)
    return ik_det(x, y, tv)


def subset_formula(x: Sequence, y: Sequence, tv=None):
    """Subset-sum side of the Izergin determinant identity."""
    tv = _tv(tv)
    k = len(x)
    total = 0
    for r in range(k + 1):
        sgn = (-1) ** r * tv ** (r * (r - 1) // 2)
        for S in combinations(range(k), r):
            Sc = [j for j in range(k) if j not in S]
            term = 1
            for i in S:
                for j in Sc:
                    term = term * (x[j] - tv * x[i]) / (x[j] - x[i])
                for j in range(k):
                    term = term * (y[j] - x[i]) / (y[j] - tv * x[i])
            total = total + sgn * term
    return total


# sparse operators -----------------------------------------------------------


class LatticeTensor:
    """Sparse operator on the N-fold tensor power of the colour space."""

    __slots__ = ("sites", "dim", "entries")

    def __init__(self, sites: int, dim: int, entries: dict[tuple[Colours, Colours], object]):
        self.sites = sites
        self.dim = dim
        self.entries = {k: v for k, v in entries.items() if v}

    @classmethod
    def identity(cls, sites: int, dim: int, one=1) -> "LatticeTensor":
        return cls(sites, dim, {(s, s): one for s in iproduct(range(dim), repeat=sites)})

    @classmethod
    def swap(cls, i: int, sites: int, dim: int) -> "LatticeTensor":
        """P_i exchanging tensor factors i and i+1 (1-based)."""
        out = {}
        for s in iproduct(range(dim), repeat=sites):
            r = list(s)
            r[i - 1], r[i] = r[i], r[i - 1]
            out[(tuple(r), s)] = 1
        return cls(sites, dim, out)

    def entry(self, row: Sequence[int], col: Sequence[int]):
        return self.entries.get((tuple(row), tuple(col)), 0)

    def __matmul__(self, other: "LatticeTensor") -> "LatticeTensor":
        by_row: dict[Colours, list] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        out: dict = {}
        for (r, mid), v in self.entries.items():
            for c, w in by_row.get(mid, ()):
                key = (r, c)
                val = v * w
                out[key] = out[key] + val if key in out else val
        return LatticeTensor(self.sites, self.dim, out)

    def scale_rows(self, factors: dict[Colours, object]) -> "LatticeTensor":
        return LatticeTensor(
            self.sites, self.dim, {(r, c): v * factors[r] for (r, c), v in self.entries.items() if r in factors}
        )

    def equals(self, other: "LatticeTensor") -> bool:
        keys = set(self.entries) | set(other.entries)
        return all(not (self.entry(*k) - other.entry(*k)) for k in keys)

    def mismatches(self, other: "LatticeTensor") -> list:
        keys = sorted(set(self.entries) | set(other.entries))
        return [k for k in keys if self.entry(*k) - other.entry(*k)]

    def blocks(self, spec: ModelSpec) -> dict[tuple[int, ...], list[Colours]]:
        out: dict = {}
        for s in iproduct(range(self.dim), repeat=self.sites):
            out.setdefault(spec.content(s), []).append(s)
        return out

    def inverse(self, spec: ModelSpec) -> "LatticeTensor":
        """Inverse by dense elimination on each colour-content block."""
        out = {}
        # keep the scalar type of the entries (RF, Fraction or fmpq)
        sample = next((v for v in self.entries.values() if not isinstance(v, int)), Fraction(1))
        one = sample / sample
        zero = one - one
        for _, states in sorted(self.blocks(spec).items()):
            mat = [[self.entry(r, c) for c in states] for r in states]
            mat = [[v * one if v else zero for v in row] for row in mat]
            inv = inverse(mat, one=one, zero=zero)
            for i, r in enumerate(states):
                for j, c in enumerate(states):
                    v = inv[i][j]
                    if v:
                        if isinstance(v, Fraction) and v.denominator == 1:
                            v = int(v)
                        out[(r, c)] = v
        return LatticeTensor(self.sites, self.dim, out)

    def to_json(self) -> dict:
        return {
            "sites": self.sites,
            "dim": self.dim,
            "entries": [
                {"row": "".join(map(str, r)), "col": "".join(map(str, c)), "value": str(v)}
                for (r, c), v in sorted(self.entries.items())
            ],
        }


def rcheck_matrix(spec: ModelSpec, ratio, tv=None) -> LatticeTensor:
    """Two-site Rcheck(x/y): entry ((a,c),(b,d)) is the weight with left a, top b, bottom c, right d."""
    out = {}
    for a, b, c, d in iproduct(spec.colours, repeat=4):
        w = vertex_weight(spec, a, b, c, d, ratio, 1, tv)
        if not (isinstance(w, int) and w == 0):
            out[((a, c), (b, d))] = w
    return LatticeTensor(2, spec.dim, out)


def r_matrix(spec: ModelSpec, ratio, tv=None) -> LatticeTensor:
    return LatticeTensor.swap(1, 2, spec.dim) @ rcheck_matrix(spec, ratio, tv)


def embed(op: LatticeTensor, i: int, sites: int) -> LatticeTensor:
    """Place a two-site operator on factors i, i+1 (1-based) of a ``sites``-fold product."""
    by_col: dict = {}
    for (r, c), v in op.entries.items():
        by_col.setdefault(c, []).append((r, v))
    out = {}
    for s in iproduct(range(op.dim), repeat=sites):
        for r, v in by_col.get((s[i - 1], s[i]), ()):
            row = s[: i - 1] + r + s[i + 1 :]
            out[(row, s)] = v
    return LatticeTensor(sites, op.dim, out)


def rcheck_i(spec: ModelSpec, i: int, sites: int, ratio, tv=None) -> LatticeTensor:
    return embed(rcheck_matrix(spec, ratio, tv), i, sites)


# permutation-indexed matrices ------------------------------------------------


def _first_descent(sigma: Sequence[int]) -> int | None:
    for i in range(len(sigma) - 1):
        if sigma[i] > sigma[i + 1]:
            return i
    return None


def _reduce(sigma: Sequence[int]) -> tuple[int, tuple[int, ...]] | None:
    """Write sigma = sigma' o s_i with one inversion fewer; returns (i 1-based, sigma')."""
    i = _first_descent(sigma)
    if i is None:
        return None
    sp = list(sigma)
    sp[i], sp[i + 1] = sp[i + 1], sp[i]
    return i + 1, tuple(sp)


def p_sigma(spec: ModelSpec, sigma: Sequence[int]) -> LatticeTensor:
    """P_sigma = P_{sigma'} P_i along the reduction sigma = sigma' o s_i."""
    N = len(sigma)
    red = _reduce(sigma)
    if red is None:
        return LatticeTensor.identity(N, spec.dim)
    i, sp = red
    return p_sigma(spec, sp) @ LatticeTensor.swap(i, N, spec.dim)


def rcheck_sigma(spec: ModelSpec, sigma: Sequence[int], x: Sequence, tv=None) -> LatticeTensor:
    N = len(sigma)
    red = _reduce(sigma)
    if red is None:
        return LatticeTensor.identity(N, spec.dim)
    i, sp = red
    z = x[sp[i]] / x[sp[i - 1]]
    return rcheck_i(spec, i, N, z, tv) @ rcheck_sigma(spec, sp, x, tv)


def _r_two_index(spec: ModelSpec, a: int, b: int, N: int, z, tv=None) -> LatticeTensor:
    """R_{a,b}(z): R_{a,a+1} = P_a Rcheck_a and R_{a,j+1} = P_j R_{a,j} P_j."""
    op = LatticeTensor.swap(a, N, spec.dim) @ rcheck_i(spec, a, N, z, tv)
    for j in range(a + 1, b):
        pj = LatticeTensor.swap(j, N, spec.dim)
        op = pj @ op @ pj
    return op


def r_sigma(spec: ModelSpec, sigma: Sequence[int], x: Sequence, tv=None) -> LatticeTensor:
    N = len(sigma)
    red = _reduce(sigma)
    if red is None:
        return LatticeTensor.identity(N, spec.dim)
    i, sp = red
    a, b = sp[i - 1], sp[i]
    z = x[b] / x[a]
    return _r_two_index(spec, a + 1, b + 1, N, z, tv) @ r_sigma(spec, sp, x, tv)


def f_matrix(spec: ModelSpec, x: Sequence, tv=None) -> LatticeTensor:
    """Supersymmetric F-matrix.

    Each basis row ``a`` receives exactly one term of the double sum: the
    permutation listing positions by increasing label (ties in position
    order), times the fermionic prefactor.
    """
    tv = _tv(tv)
    N = len(x)
    rows_by_sigma: dict[tuple[int, ...], list[Colours]] = {}
    for a in spec.strings(N):
        sigma = tuple(sorted(range(N), key=lambda j: (a[j], j)))
        rows_by_sigma.setdefault(sigma, []).append(a)
    out = {}
    for sigma, rows in rows_by_sigma.items():
        R = r_sigma(spec, sigma, x, tv)
        wanted = set(rows)
        for (r, c), v in R.entries.items():
            if r not in wanted:
                continue
            k = [r[s] for s in sigma]
            f = 1
            for i in range(N):
                for j in range(i + 1, N):
                    if k[i] == k[j] and spec.is_fermionic(k[i]):
                        xi, xj = x[sigma[i]], x[sigma[j]]
                        f = f * (xi + xj) / (xi - tv * xj)
            out[(r, c)] = v * f
    return LatticeTensor(N, spec.dim, out)


# tensors ----------------------------------------------------------------------


def w_tensor(spec: ModelSpec, x: Sequence, y="conic", tv=None, qv=None) -> LatticeTensor:
    """W_N(x; y) with entries W_gamma^delta; ``y='conic'`` means y_i = q x_i."""
    y = _resolve_y(x, y, qv)
    N = len(x)
    zero = (0,) * N
    res = _transfer(spec, zero, zero, x, y, tv)
    den = _denominator(x, y, tv)
    return LatticeTensor(N, spec.dim, {k: v / den for k, v in res.items()})


def z_tensor(spec: ModelSpec, x: Sequence, y: Sequence, tv=None) -> LatticeTensor:
    """Z_N(x;y) on 2N sites: entry (alpha+gamma, beta+delta)."""
    N = len(x)
    den = _denominator(x, y, tv)
    tables = weight_tables(spec, x, y, tv)
    out = {}
    for alpha in spec.strings(N):
        for beta in spec.strings(N):
            for (gamma, delta), v in _transfer(spec, alpha, beta, x, y, tv, tables=tables).items():
                out[(alpha + gamma, beta + delta)] = v / den
    return LatticeTensor(2 * N, spec.dim, out)


def w_tilde(spec: ModelSpec, x: Sequence, y="conic", tv=None, qv=None) -> LatticeTensor:
    """F(y) W(x;y) F(x)^{-1}."""
    yy = _resolve_y(x, y, qv)
    Fx = f_matrix(spec, x, tv)
    Fy = f_matrix(spec, yy, tv)
    return Fy @ w_tensor(spec, x, yy, tv) @ Fx.inverse(spec)


def w_tilde_element(spec: ModelSpec, alpha: Sequence[int], beta: Sequence[int], x: Sequence, y, tv=None, qv=None):
    """Closed product formula for the matrix element of F(y) W(x;y) F(x)^{-1}."""
    tv = _tv(tv)
    y = _resolve_y(x, y, qv)
    alpha, beta = tuple(alpha), tuple(beta)
    if spec.content(alpha) != spec.content(beta):
        raise ContentMismatch(f"{alpha} and {beta} have different colour content")
    P = {k: [i for i, a in enumerate(alpha) if a == k] for k in spec.colours}
    S = {k: [i for i, b in enumerate(beta) if b == k] for k in spec.colours}
    val = 1
    for k in spec.colours:
        val = val * dw_formula(spec, k, [x[i] for i in S[k]], [y[i] for i in P[k]], tv)
    for k1 in spec.colours:
        for k2 in spec.colours:
            if k2 <= k1:
                continue
            for j in S[k1]:
                for i in S[k2]:
                    val = val * (x[i] - tv * x[j]) / (x[i] - x[j])
                for i in P[k2]:
                    val = val * (y[i] - x[j]) / (y[i] - tv * x[j])
    for k in spec.colours:
        if not spec.is_fermionic(k) or k == 0:
            continue
        for a, b in combinations(P[k], 2):
            val = val * (y[a] + y[b]) / (y[a] - tv * y[b])
        for a, b in combinations(S[k], 2):
            val = val * (x[a] - tv * x[b]) / (x[a] + x[b])
    return val


def f_eigen_left(spec: ModelSpec, lam_minus: Sequence[int], x: Sequence, tv=None):
    tv = _tv(tv)
    val = 1
    for i, j in combinations(range(len(lam_minus)), 2):
        if lam_minus[i] == lam_minus[j] and spec.is_fermionic(lam_minus[i]):
            val = val * (x[i] + x[j]) / (x[i] - tv * x[j])
    return val


def f_eigen_right(spec: ModelSpec, lam_plus: Sequence[int], x: Sequence, tv=None):
    tv = _tv(tv)
    val = 1
    for i, j in combinations(range(len(lam_plus)), 2):
        if lam_plus[i] != lam_plus[j]:
            if lam_plus[j] > 0:
                val = val * tv
            val = val * (x[i] - x[j]) / (x[i] - tv * x[j])
        elif spec.is_fermionic(lam_plus[i]):
            val = val * (x[i] + x[j]) / (x[i] - tv * x[j])
    return val


# traces -----------------------------------------------------------------------


@dataclass
class LoopPolynomial:
    """Polynomial in z_0..z_n, w_1..w_m keyed by colour content (l_0, ..., l_{n+m})."""

    spec: ModelSpec
    coeffs: dict[tuple[int, ...], object]

    def coefficient(self, l: Sequence[int]):
        return self.coeffs.get(tuple(l), ZERO)

    def monomial_name(self, l: Sequence[int]) -> str:
        n = self.spec.n
        parts = []
        for k, e in enumerate(l):
            if not e:
                continue
            name = f"z{k}" if k <= n else f"w{k - n}"
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts) or "1"

    def to_rf(self) -> RationalFunction:
        n = self.spec.n
        total = ZERO
        for l, c in self.coeffs.items():
            mono = ONE
            for k, e in enumerate(l):
                if e:
                    mono = mono * var(f"z{k}" if k <= n else f"w{k - n}") ** e
            total = total + as_rf(c) * mono
        return total

    def map(self, fn) -> "LoopPolynomial":
        return LoopPolynomial(self.spec, {l: fn(c) for l, c in self.coeffs.items()})

    def to_json(self) -> dict:
        return {self.monomial_name(l): str(c) for l, c in sorted(self.coeffs.items(), reverse=True)}


def compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    if parts == 1:
        return [(total,)]
    return [(a,) + rest for a in range(total, -1, -1) for rest in compositions(total - a, parts - 1)]


def diagonal_blocks(spec: ModelSpec, x: Sequence, y="conic", tv=None, qv=None, count: bool = False) -> dict:
    """Sum of W_alpha^alpha over alpha of each colour content (numerators over the common denominator).

    Returns ``(blocks, denominator)``.
    """
    y = _resolve_y(x, y, qv)
    N = len(x)
    zero = (0,) * N
    tables = None if count else weight_tables(spec, x, y, tv)
    blocks: dict = {}
    for alpha in spec.strings(N):
        res = _transfer(spec, zero, zero, x, y, tv, gamma=alpha, delta=alpha, count=count, tables=tables)
        v = res.get((alpha, alpha), 0)
        l = spec.content(alpha)
        blocks[l] = blocks[l] + v if l in blocks else v
    den = 1 if count else _denominator(x, y, tv)
    return blocks, den


def _loop_sign(spec: ModelSpec, l: Sequence[int]) -> int:
    return (-1) ** sum(l[spec.n + 1 :])


def trace_T(spec: ModelSpec, x: Sequence, y="conic", tv=None, qv=None) -> LoopPolynomial:
    """Graded trace sum_alpha prod z (prod -w) <alpha|W_N(x)|alpha>."""
    blocks, den = diagonal_blocks(spec, x, y, tv, qv)
    out = {}
    for l, v in blocks.items():
        if isinstance(v, int) and v == 0:
            continue
        out[l] = _loop_sign(spec, l) * v / den
    return LoopPolynomial(spec, out)


def trace_counts(spec: ModelSpec, N: int) -> dict[tuple[int, ...], int]:
    """Number of admissible lattice configurations per loop monomial."""
    xs_ = [var(f"x{i}") for i in range(1, N + 1)]
    blocks, _ = diagonal_blocks(spec, xs_, [var(f"y{i}") for i in range(1, N + 1)], count=True)
    return {l: c for l, c in blocks.items() if c}


def trace_L(x: Sequence, tv=None, qv=None):
    """sum over alpha in {1,2}^N of (-1)^{m_2} m_2 <alpha|W_N(x)|alpha>, for n = m = 1."""
    spec = ModelSpec(1, 1)
    y = conic(x, qv)
    N = len(x)
    zero = (0,) * N
    total = 0
    for alpha in iproduct((1, 2), repeat=N):
        m2 = alpha.count(2)
        if not m2:
            continue
        res = _transfer(spec, zero, zero, x, y, tv, gamma=alpha, delta=alpha)
        v = res.get((alpha, alpha), 0)
        total = total + (-1) ** m2 * m2 * v
    return total / _denominator(x, y, tv)


def skew_trace(spec: ModelSpec, outer, inner=None) -> LoopPolynomial:
    """T_N evaluated at the box contents of a skew shape, via the two-step substitution.

    Row parameters are first set to q-strings q^(a-1) Y_b in symbolic
    row variables Y_b, the lattice is enumerated and normalized, and only
    then Y_b -> t^(1-b).
    """
    from .partitions import SkewShape
    from .shuffle import PoleNotCancelled
    from .arith import ZeroDenominator

    shape = outer if inner is None and isinstance(outer, SkewShape) else SkewShape(outer, inner)
    boxes = shape.boxes()
    x = [q ** (col - 1) * var(f"y{row}") for row, col in boxes]
    rows = sorted({row for row, _ in boxes})
    step2 = {f"y{row}": t ** (1 - row) for row in rows}
    if not boxes:
        return LoopPolynomial(spec, {spec.content(()): ONE})
    T = trace_T(spec, x)
    try:
        return T.map(lambda c: as_rf(c).subs(step2))
    except ZeroDenominator as exc:
        raise PoleNotCancelled(f"pole at the contents of {shape}") from exc


# randomized operator identities ------------------------------------------------

OPERATOR_IDENTITIES = ("YBE", "unitarity", "Zx", "Zy", "Wx1", "Wx2", "exW", "Wtilde", "Fprop", "eigen")


@dataclass
class ExchangeResult:
    which: str
    equal: bool
    trials: int
    counterexample: dict | None = None

    def __bool__(self):
        return self.equal

    def describe(self) -> dict:
        d = {"identity": self.which, "equal": self.equal, "trials": self.trials}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        return d


def _swap(seq: Sequence, i: int) -> list:
    s = list(seq)
    s[i - 1], s[i] = s[i], s[i - 1]
    return s


def _exchange_once(spec: ModelSpec, N: int, which: str, qv, tv, x, y) -> bool:
    d = spec.dim
    rc = lambda i, sites, z: rcheck_i(spec, i, sites, z, tv)
    if which == "YBE":
        a, b, c = x[:3]
        lhs = rc(1, 3, c / b) @ rc(2, 3, c / a) @ rc(1, 3, b / a)
        rhs = rc(2, 3, b / a) @ rc(1, 3, c / a) @ rc(2, 3, c / b)
        return lhs.equals(rhs)
    if which == "unitarity":
        a, b = x[:2]
        return (rc(1, 2, a / b) @ rc(1, 2, b / a)).equals(LatticeTensor.identity(2, d))
    ok = True
    if which in ("Zx", "Zy"):
        Z = z_tensor(spec, x, y, tv)
        for i in range(1, N):
            if which == "Zx":
                z = x[i] / x[i - 1]
                lhs = rc(i, 2 * N, z) @ Z
                rhs = z_tensor(spec, _swap(x, i), y, tv) @ rc(N + i, 2 * N, z)
            else:
                z = y[i - 1] / y[i]
                lhs = Z @ rc(i, 2 * N, z)
                rhs = rc(N + i, 2 * N, z) @ z_tensor(spec, x, _swap(y, i), tv)
            ok = ok and lhs.equals(rhs)
        return ok
    if which in ("Wx1", "Wx2"):
        W = w_tensor(spec, x, y, tv)
        for i in range(1, N):
            if which == "Wx1":
                rhs = w_tensor(spec, _swap(x, i), y, tv) @ rc(i, N, x[i] / x[i - 1])
            else:
                rhs = rc(i, N, y[i - 1] / y[i]) @ w_tensor(spec, x, _swap(y, i), tv)
            ok = ok and W.equals(rhs)
        return ok
    if which == "exW":
        W = w_tensor(spec, x, "conic", tv, qv)
        for i in range(1, N):
            R = rc(i, N, x[i] / x[i - 1])
            ok = ok and (R @ W).equals(w_tensor(spec, _swap(x, i), "conic", tv, qv) @ R)
        return ok
    if which == "Wtilde":
        W = w_tilde(spec, x, "conic", tv, qv)
        for i in range(1, N):
            P = LatticeTensor.swap(i, N, d)
            ok = ok and (P @ W).equals(w_tilde(spec, _swap(x, i), "conic", tv, qv) @ P)
        return ok
    if which == "Fprop":
        F = f_matrix(spec, x, tv)
        for sigma in permutations(range(N)):
            xs_ = [x[j] for j in sigma]
            rhs = p_sigma(spec, sigma) @ f_matrix(spec, xs_, tv) @ rcheck_sigma(spec, sigma, x, tv)
            ok = ok and F.equals(rhs)
        return ok
    if which == "eigen":
        F = f_matrix(spec, x, tv)
        for a in spec.strings(N):
            if list(a) == sorted(a):
                row = {c: v for (r, c), v in F.entries.items() if r == a}
                ok = ok and row == {a: f_eigen_left(spec, a, x, tv)}
            if list(a) == sorted(a, reverse=True):
                col = {r: v for (r, c), v in F.entries.items() if c == a}
                ok = ok and col == {a: f_eigen_right(spec, a, x, tv)}
        return ok
    raise ValueError(f"unknown identity {which!r}; choose from {', '.join(OPERATOR_IDENTITIES)}")


def verify_exchange(spec: ModelSpec, N: int, which: str, trials: int = 3, seed: int = 0) -> ExchangeResult:
    """Check an operator identity at ``trials`` random rational points."""
    import random

    import flint

    from .arith import SAMPLE_RANGE

    if which not in OPERATOR_IDENTITIES:
        raise ValueError(f"unknown identity {which!r}; choose from {', '.join(OPERATOR_IDENTITIES)}")
    if which == "YBE":
        N = max(N, 3)
    elif N < 2:
        raise ValueError("exchange relations need N >= 2")
    rng = random.Random(seed)
    done = skipped = 0
    while done < trials:
        draw = lambda: flint.fmpq(rng.randint(*SAMPLE_RANGE), rng.randint(*SAMPLE_RANGE))
        qv, tv = draw(), draw()
        x = [draw() for _ in range(N)]
        y = [draw() for _ in range(N)]
        try:
            good = _exchange_once(spec, N, which, qv, tv, x, y)
        except (PoleAtPoint, ZeroDivisionError):
            skipped += 1
            if skipped > 50:
                raise
            continue
        done += 1
        if not good:
            point = {"q": str(qv), "t": str(tv), "x": [str(v) for v in x], "y": [str(v) for v in y]}
            return ExchangeResult(which, False, done, point)
    return ExchangeResult(which, True, trials)

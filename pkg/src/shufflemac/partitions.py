"""Integer partitions, skew shapes, contents, corners and (q,t)-coefficients.

Boxes are addressed as ``(row, col)`` with rows counted from the top and
columns from the left, both starting at 1.  The content of the box in
column ``a`` and row ``b`` is ``q^(a-1) t^(1-b)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator

from .arith import ONE, RationalFunction, product, q, t


class NotContained(ValueError):
    """The inner partition of a skew shape is not contained in the outer one."""


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts if p != 0)
        if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {self.parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("", "0", "()", "[]", "empty"):
            return cls(())
        return cls(tuple(int(s) for s in text.replace(" ", "").strip("()[]").split(",") if s))

    def __str__(self):
        return ",".join(map(str, self.parts))

    def __repr__(self):
        return f"Partition({self.parts})"

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        """Row length with 0-based index; 0 beyond the last row."""
        return self.parts[i] if i < len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def multiplicities(self) -> dict[int, int]:
        m: dict[int, int] = {}
        for p in self.parts:
            m[p] = m.get(p, 0) + 1
        return m

    def factorial(self) -> int:
        """lambda! = prod_i m_i(lambda)!"""
        return product((factorial(k) for k in self.multiplicities().values()), 1)

    def n(self) -> int:
        return sum(i * p for i, p in enumerate(self.parts))

    def boxes(self) -> list[tuple[int, int]]:
        return [(i + 1, j + 1) for i, p in enumerate(self.parts) for j in range(p)]

    def arm(self, row: int, col: int) -> int:
        return self[row - 1] - col

    def leg(self, row: int, col: int) -> int:
        return self.conjugate()[col - 1] - row

    def contains(self, other: "Partition") -> bool:
        return all(self[i] >= p for i, p in enumerate(other.parts))

    def dominates(self, other: "Partition") -> bool:
        if self.size != other.size:
            return False
        a = b = 0
        for i in range(max(self.length, other.length)):
            a += self[i]
            b += other[i]
            if a < b:
                return False
        return True


EMPTY = Partition(())


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n in reverse lexicographic order, (n) first.

    Reverse lexicographic order is a linear extension of dominance.
    """
    return list(_partitions(n))


@lru_cache(maxsize=None)
def _partitions(n: int) -> tuple[Partition, ...]:
    def gen(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(Partition(p) for p in gen(n, n))


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = EMPTY

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise NotContained(f"{self.inner} is not contained in {self.outer}")

    @classmethod
    def parse(cls, text: str) -> "SkewShape":
        if "/" in text:
            a, b = text.split("/", 1)
            return cls(Partition.parse(a), Partition.parse(b))
        return cls(Partition.parse(text))

    def __str__(self):
        return f"{self.outer}/{self.inner}" if self.inner.parts else str(self.outer)

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def boxes(self) -> list[tuple[int, int]]:
        """Boxes (row, col) in reading order: rows top to bottom, left to right."""
        return [
            (i + 1, j + 1)
            for i in range(self.outer.length)
            for j in range(self.inner[i], self.outer[i])
        ]

    def rows(self) -> list[tuple[int, int, int]]:
        """Nonempty rows as (row, first column, last column)."""
        return [
            (i + 1, self.inner[i] + 1, self.outer[i])
            for i in range(self.outer.length)
            if self.outer[i] > self.inner[i]
        ]

    def is_vertical_strip(self) -> bool:
        return all(self.outer[i] - self.inner[i] <= 1 for i in range(self.outer.length))


def box_content(row: int, col: int) -> RationalFunction:
    return q ** (col - 1) * t ** (1 - row)


def content(shape: SkewShape, box_index: int) -> RationalFunction:
    """Content of the box at 1-based position ``box_index`` in reading order."""
    return box_content(*shape.boxes()[box_index - 1])


def contents(shape: SkewShape) -> list[RationalFunction]:
    return [box_content(*b) for b in shape.boxes()]


def corners(p: Partition) -> tuple[frozenset, frozenset]:
    """Outer corners o(p) and inner corners i(p) as sets of (row, col).

    The inner corners are the addable boxes.  The outer corners sit one step
    diagonally below-right of each removable box.  For the empty partition
    this gives o = {} and i = {(1, 1)}.
    """
    parts = p.parts
    outer = frozenset(
        (i + 2, parts[i] + 1) for i in range(len(parts)) if parts[i] > p[i + 1]
    )
    inner = frozenset(
        (i + 1, p[i] + 1) for i in range(len(parts) + 1) if i == 0 or p[i - 1] > p[i]
    )
    return outer, inner


# coefficient families --------------------------------------------------


@lru_cache(maxsize=None)
def c_coef(p: Partition) -> RationalFunction:
    return product(
        1 - q ** p.arm(i, j) * t ** (p.leg(i, j) + 1) for i, j in p.boxes()
    )


@lru_cache(maxsize=None)
def c_prime_coef(p: Partition) -> RationalFunction:
    return product(
        1 - q ** (p.arm(i, j) + 1) * t ** p.leg(i, j) for i, j in p.boxes()
    )


@lru_cache(maxsize=None)
def b_coef(p: Partition) -> RationalFunction:
    return c_coef(p) / c_prime_coef(p)


def n_coef(p: Partition) -> int:
    return p.n()


@lru_cache(maxsize=None)
def psi_prime(lam: Partition, mu: Partition) -> RationalFunction:
    """Pieri coefficient for the vertical strip lam/mu (0 otherwise)."""
    shape = SkewShape(lam, mu)
    if not shape.is_vertical_strip():
        return RationalFunction(0)
    acc = ONE
    ell = lam.length
    for i in range(1, ell + 1):
        if lam[i - 1] != mu[i - 1]:
            continue
        for j in range(i + 1, ell + 1):
            if lam[j - 1] != mu[j - 1] + 1:
                continue
            dm = mu[i - 1] - mu[j - 1]
            dl = lam[i - 1] - lam[j - 1]
            acc = acc * (
                (1 - q**dm * t ** (j - i - 1))
                * (1 - q**dl * t ** (j - i + 1))
                / ((1 - q**dm * t ** (j - i)) * (1 - q**dl * t ** (j - i)))
            )
    return acc


@lru_cache(maxsize=None)
def phi_coef(lam: Partition, mu: Partition) -> RationalFunction:
    k = lam.size - mu.size
    return (
        (1 - t) ** k
        * q ** (lam.conjugate().n() - mu.conjugate().n())
        * c_coef(mu)
        / c_coef(lam)
        * psi_prime(lam, mu)
    )


@lru_cache(maxsize=None)
def d_coef(lam: Partition, mu: Partition = EMPTY) -> RationalFunction:
    """The combinatorial factor d_{lam/mu}, built from the corners of lam."""
    shape = SkewShape(lam, mu)
    outer, inner = corners(lam)
    pref = (1 - q) * (1 - 1 / t) / (1 - q / t)
    acc = pref ** shape.size
    for b in shape.boxes():
        chi = box_content(*b)
        for o in sorted(outer):
            acc = acc * (1 - box_content(*o) / chi)
        for i in sorted(inner):
            acc = acc / (1 - box_content(*i) / chi)
    return acc


@lru_cache(maxsize=None)
def a_coef(mu: Partition, nu: Partition) -> RationalFunction:
    N = mu.size - nu.size
    return (
        (t - q) ** N
        / ((1 - q) ** N * (1 - t) ** N)
        * q ** (nu.conjugate().n() - mu.conjugate().n())
        * c_prime_coef(mu)
        * d_coef(mu, nu)
        / c_prime_coef(nu)
    )


@lru_cache(maxsize=None)
def a_tilde_coef(mu: Partition, nu: Partition) -> RationalFunction:
    k = mu.size - nu.size
    return (
        q ** (nu.conjugate().n() - mu.conjugate().n())
        * c_prime_coef(mu)
        * d_coef(mu, nu)
        / ((1 - t) ** k * c_prime_coef(nu))
    )


_COEFFICIENTS = {
    "c": c_coef,
    "c'": c_prime_coef,
    "b": b_coef,
    "n": n_coef,
    "psi'": psi_prime,
    "phi": phi_coef,
    "d": d_coef,
    "a": a_coef,
    "a~": a_tilde_coef,
}


def coefficient(kind: str, *args: Partition):
    """Dispatch by name: c, c', b, n, psi', phi, d, a, a~."""
    try:
        fn = _COEFFICIENTS[kind]
    except KeyError:
        raise ValueError(f"unknown coefficient family {kind!r}") from None
    return fn(*args)

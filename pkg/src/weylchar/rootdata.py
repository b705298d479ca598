"""Root data for type A_n: weights, dominance, partitions and irreducible characters.

Weights are stored in fundamental-weight coordinates.  Internally the
Freudenthal recursion runs in "partition coordinates": a weight with
fundamental coordinates ``(a_1, ..., a_n)`` corresponds to the vector
``x_i = a_i + ... + a_n`` (``x_{n+1} = 0``) of ``Z^{n+1}``, on which the Weyl
group acts by permutations.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import prod
from typing import Iterable, Iterator, Mapping


class RankMismatch(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Weight:
    coords: tuple[int, ...]

    def __init__(self, coords: Iterable[int]):
        coords = tuple(int(c) for c in coords)
        if not coords:
            raise ValueError("rank must be at least 1")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @classmethod
    def fundamental(cls, i: int, rank: int) -> "Weight":
        """The i-th fundamental weight, 1-indexed."""
        if not 1 <= i <= rank:
            raise ValueError(f"no fundamental weight {i} in rank {rank}")
        return cls(1 if j == i - 1 else 0 for j in range(rank))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def _check(self, other: "Weight"):
        if self.rank != other.rank:
            raise RankMismatch(f"rank {self.rank} vs rank {other.rank}")

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "Weight":
        return Weight(-a for a in self.coords)

    def __rmul__(self, k: int) -> "Weight":
        return Weight(k * a for a in self.coords)

    def to_partition_coords(self) -> tuple[int, ...]:
        out = [0]
        for a in reversed(self.coords):
            out.append(out[-1] + a)
        return tuple(reversed(out))

    @classmethod
    def from_partition_coords(cls, x: Iterable[int]) -> "Weight":
        x = tuple(x)
        return cls(x[i] - x[i + 1] for i in range(len(x) - 1))

    def boxes(self) -> int:
        """Number of boxes of the Young diagram, ``sum_i i * a_i``."""
        return sum((i + 1) * a for i, a in enumerate(self.coords))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.coords)) + ")"


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (trailing zeros stripped)."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"{parts} is not weakly decreasing")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def padded(self, length: int) -> tuple[int, ...]:
        if len(self) > length:
            raise ValueError(f"{tuple(self)} has more than {length} parts")
        return tuple(self) + (0,) * (length - len(self))

    def dominates(self, other: "Partition") -> bool:
        """Partition dominance ``self >= other`` (equal sizes assumed)."""
        a = b = 0
        for i in range(max(len(self), len(other))):
            a += self[i] if i < len(self) else 0
            b += other[i] if i < len(other) else 0
            if a < b:
                return False
        return True

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


# -- Cartan data ------------------------------------------------------------

def cartan_matrix(n: int) -> list[list[int]]:
    return [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]


def simple_root(i: int, n: int) -> Weight:
    """alpha_i in fundamental coordinates (row i of the Cartan matrix), 1-indexed."""
    return Weight(cartan_matrix(n)[i - 1])


def _solve(matrix: list[list[int]], rhs: list[int]) -> list[Fraction]:
    n = len(matrix)
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def root_coordinates(w: Weight) -> list[Fraction]:
    """Coefficients of ``w`` in the simple-root basis."""
    return _solve(cartan_matrix(w.rank), list(w.coords))


def height(w: Weight) -> Fraction:
    return sum(root_coordinates(w), Fraction(0))


def dominance_leq(mu: Weight, lam: Weight) -> bool:
    """``mu <= lam``: ``lam - mu`` is a nonnegative integral combination of simple roots."""
    if mu.rank != lam.rank:
        raise RankMismatch(f"rank {mu.rank} vs rank {lam.rank}")
    c = root_coordinates(lam - mu)
    return all(x >= 0 and x.denominator == 1 for x in c)


def highest_root(n: int) -> Weight:
    if n < 1:
        raise ValueError("rank must be at least 1")
    if n == 1:
        return Weight((2,))
    return Weight.fundamental(1, n) + Weight.fundamental(n, n)


def positive_roots(n: int) -> list[Weight]:
    """alpha_i + ... + alpha_j for 1 <= i <= j <= n."""
    roots = []
    for i in range(1, n + 1):
        acc = Weight.zero(n)
        for j in range(i, n + 1):
            acc = acc + simple_root(j, n)
            roots.append(acc)
    return roots


def mu_of_xi(xi: Iterable[int], n: int) -> Weight:
    xi = Partition(xi).padded(n + 1)
    return Weight(xi[i] - xi[i + 1] for i in range(n))


def partition_of_weight(w: Weight) -> Partition:
    """Dominant weight -> Young diagram with ``a_i`` columns of height ``i``."""
    if not w.is_dominant():
        raise ValueError(f"{w} is not dominant")
    return Partition(w.to_partition_coords())


def column_heights(w: Weight) -> Partition:
    """Conjugate of :func:`partition_of_weight`: ``a_i`` parts equal to ``i``."""
    return partition_of_weight(w).conjugate()


def partitions_of(r: int, max_parts: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of ``r`` with at most ``max_parts`` parts, reverse-lexicographic."""
    if max_part is None:
        max_part = r
    if r == 0:
        return [Partition()]
    if max_parts == 0:
        return []
    out = []
    for first in range(min(r, max_part), 0, -1):
        for rest in partitions_of(r - first, max_parts - 1, first):
            out.append(Partition((first,) + tuple(rest)))
    return out


def dominant_weights_of_size(boxes: int, n: int) -> list[Weight]:
    """Dominant weights whose Young diagram has ``boxes`` boxes (at most n rows)."""
    return [mu_of_xi(p, n) for p in partitions_of(boxes, n)]


def weyl_dimension(lam: Weight) -> int:
    x = lam.to_partition_coords()
    m = len(x)
    num = prod(x[i] - x[j] + j - i for i in range(m) for j in range(i + 1, m))
    den = prod(j - i for i in range(m) for j in range(i + 1, m))
    return num // den


# -- characters -------------------------------------------------------------

class Character:
    """Finite formal sum of weights with nonzero integer coefficients."""

    __slots__ = ("rank", "entries")

    def __init__(self, entries: Mapping[Weight, int], rank: int):
        clean = {}
        for w, m in entries.items():
            if w.rank != rank:
                raise RankMismatch(f"weight {w} in a rank-{rank} character")
            if m:
                clean[w] = int(m)
        self.rank = rank
        self.entries = clean

    @classmethod
    def of(cls, w: Weight) -> "Character":
        return cls({w: 1}, w.rank)

    def __eq__(self, other) -> bool:
        return isinstance(other, Character) and self.rank == other.rank and self.entries == other.entries

    def __add__(self, other: "Character") -> "Character":
        out = dict(self.entries)
        for w, m in other.entries.items():
            out[w] = out.get(w, 0) + m
        return Character(out, self.rank)

    def __sub__(self, other: "Character") -> "Character":
        return self + other.scale(-1)

    def scale(self, k: int) -> "Character":
        return Character({w: k * m for w, m in self.entries.items()}, self.rank)

    def __mul__(self, other: "Character") -> "Character":
        if self.rank != other.rank:
            raise RankMismatch(f"rank {self.rank} vs rank {other.rank}")
        out: dict[Weight, int] = defaultdict(int)
        for w1, m1 in self.entries.items():
            for w2, m2 in other.entries.items():
                out[w1 + w2] += m1 * m2
        return Character(out, self.rank)

    def dimension(self) -> int:
        return sum(self.entries.values())

    def __getitem__(self, w: Weight) -> int:
        return self.entries.get(w, 0)

    def __iter__(self) -> Iterator[tuple[Weight, int]]:
        return iter(sorted(self.entries.items()))

    def to_list(self) -> list[dict]:
        return [{"weight": list(w.coords), "mult": m} for w, m in self]

    def __repr__(self) -> str:
        return "Character(" + ", ".join(f"{w}:{m}" for w, m in self) + ")"


def _sorted_desc(x):
    return tuple(sorted(x, reverse=True))


@lru_cache(maxsize=None)
def _dominant_multiplicities(lam_x: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Freudenthal recursion on dominant weights, in partition coordinates."""
    m = len(lam_x)
    lam_p = Partition(lam_x)
    size = sum(lam_x)
    rho = tuple(m - 1 - i for i in range(m))
    dominant = [p.padded(m) for p in partitions_of(size, m) if lam_p.dominates(p)]
    # reverse-lex order is a linear extension of dominance: higher weights first
    dominant.sort(reverse=True)
    in_module = set(dominant)

    def norm_shift(x):
        return sum((a + r) ** 2 for a, r in zip(x, rho))

    top = norm_shift(lam_x)
    mult: dict[tuple[int, ...], int] = {}
    for mu in dominant:
        if mu == lam_x:
            mult[mu] = 1
            continue
        acc = 0
        for i in range(m):
            for j in range(i + 1, m):
                # positive root e_i - e_j
                k = 1
                while True:
                    nu = list(mu)
                    nu[i] += k
                    nu[j] -= k
                    rep = _sorted_desc(nu)
                    if rep not in in_module:
                        break
                    acc += mult[rep] * (nu[i] - nu[j])
                    k += 1
        den = top - norm_shift(mu)
        val, rem = divmod(2 * acc, den)
        if rem:
            raise ArithmeticError("non-integral Freudenthal multiplicity")
        mult[mu] = val
    return mult


def irr_character(lam: Weight) -> Character:
    """Character of the irreducible module V(lam) via Freudenthal's recursion."""
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    entries: dict[Weight, int] = {}
    for mu_x, mult in _dominant_multiplicities(lam.to_partition_coords()).items():
        if not mult:
            continue
        for perm in set(permutations(mu_x)):
            entries[Weight.from_partition_coords(perm)] = mult
    return Character(entries, lam.rank)


def sl2_string(m: int) -> Character:
    """Closed-form sl2 character, kept as an independent cross-check path."""
    return Character({Weight((m - 2 * j,)): 1 for j in range(m + 1)}, 1)


def adjoint_weights(n: int) -> Character:
    return irr_character(highest_root(n))

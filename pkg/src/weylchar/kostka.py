"""Kostka-Foulkes polynomials via the charge statistic on semistandard tableaux.

``kostka_poly(shape, content)`` is the classical ``K_{shape, content}(u)``.
``paper_kostka(lam, xi)`` is the coefficient of ``ch V(mu_xi)`` in the graded
character of the local Weyl module with highest weight ``lam``; the indexing
convention it uses was fixed by :func:`calibrate` (see ``CONVENTION``).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple

from .rootdata import (
    Partition,
    Weight,
    column_heights,
    irr_character,
    mu_of_xi,
    partition_of_weight,
    partitions_of,
    weyl_dimension,
)
from .series import ONE, ZERO, Series, sl2_kostka


class SizeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for row in self.rows:
            if any(row[i] > row[i + 1] for i in range(len(row) - 1)):
                raise ValueError(f"row {row} is not weakly increasing")
        for r in range(1, len(self.rows)):
            above, row = self.rows[r - 1], self.rows[r]
            if len(row) > len(above):
                raise ValueError("row lengths must weakly decrease")
            if any(row[c] <= above[c] for c in range(len(row))):
                raise ValueError("columns must strictly increase")

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    @property
    def content(self) -> tuple[int, ...]:
        top = max((max(r) for r in self.rows if r), default=0)
        counts = [0] * top
        for row in self.rows:
            for v in row:
                counts[v - 1] += 1
        return tuple(counts)

    def reading_word(self) -> tuple[int, ...]:
        """Rows read left to right, from the bottom row up."""
        return tuple(v for row in reversed(self.rows) for v in row)

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, r)) for r in self.rows)


def enum_ssyt(shape: Iterable[int], content: Iterable[int]) -> list[Tableau]:
    """All semistandard tableaux of a given shape and content.

    Letters are placed one value at a time as horizontal strips.  Output is
    sorted lexicographically by reading word.
    """
    shape = Partition(shape)
    content = tuple(int(c) for c in content)
    if any(c < 0 for c in content):
        raise ValueError("content entries must be nonnegative")
    if shape.size != sum(content):
        raise SizeMismatch(f"|shape| = {shape.size} but content sums to {sum(content)}")
    results = []

    def strips(inner: tuple[int, ...], count: int):
        # horizontal strips of size ``count`` added to ``inner`` staying inside ``shape``
        rows = len(shape)
        inner = inner + (0,) * (rows - len(inner))

        def rec(i, left, acc):
            if i == rows:
                if left == 0:
                    yield tuple(acc)
                return
            cap = shape[i] if i == 0 else min(shape[i], inner[i - 1])
            room = cap - inner[i]
            for add in range(min(room, left), -1, -1):
                yield from rec(i + 1, left - add, acc + [inner[i] + add])

        yield from rec(0, count, [])

    def grow(value: int, current: tuple[int, ...], rows: list[list[int]]):
        if value > len(content):
            if current == tuple(shape) + (0,) * (len(current) - len(shape)):
                results.append(Tableau(tuple(tuple(r) for r in rows if r)))
            return
        for nxt in strips(current, content[value - 1]):
            new_rows = [list(r) for r in rows] + [[] for _ in range(len(nxt) - len(rows))]
            for i, (a, b) in enumerate(zip(current + (0,) * (len(nxt) - len(current)), nxt)):
                new_rows[i].extend([value] * (b - a))
            grow(value + 1, nxt, new_rows)

    grow(1, (0,) * len(shape), [[] for _ in shape])
    results.sort(key=Tableau.reading_word)
    return results


def word_charge(word: Iterable[int]) -> int:
    """Lascoux-Schutzenberger charge of a word with partition content."""
    letters = list(word)
    if not letters:
        return 0
    top = max(letters)
    counts = [letters.count(v) for v in range(1, top + 1)]
    if any(counts[i] < counts[i + 1] for i in range(len(counts) - 1)):
        raise ValueError(f"content {counts} of {letters} is not a partition")
    alive = [True] * len(letters)
    total = 0
    while any(alive):
        # extract a standard subword: find 1, 2, 3, ... scanning leftwards cyclically
        picked = []
        pos = len(letters)
        index = 0
        letter = 1
        while True:
            n = len(letters)
            found = None
            wrapped = False
            for step in range(1, n + 1):
                p = pos - step
                if p < 0:
                    p += n
                    wrapped = True
                if alive[p] and letters[p] == letter:
                    found = p
                    break
            if found is None:
                break
            if letter > 1 and wrapped:
                index += 1
            total += index
            picked.append(found)
            alive[found] = False
            pos = found
            letter += 1
        if not picked:
            raise ValueError("charge extraction stalled")
    return total


def charge(t: Tableau) -> int:
    return word_charge(t.reading_word())


@lru_cache(maxsize=None)
def kostka_enumerated(shape: Partition, content: Partition) -> Series:
    """Sum of ``u**charge`` over an explicit list of tableaux."""
    degrees: dict[int, int] = {}
    for t in enum_ssyt(shape, content):
        c = charge(t)
        degrees[c] = degrees.get(c, 0) + 1
    return Series.from_degrees(degrees)


@lru_cache(maxsize=None)
def kostka_standard(shape: Partition) -> Series:
    """``K_{shape, 1^n}(u)`` by a transfer over standard tableaux.

    For a standard tableau the charge of its reading word is
    ``sum_r (n - r) [row(r+1) <= row(r)]``, so it suffices to track the
    current shape and the row holding the last letter.
    """
    n = shape.size
    if n == 0:
        return ONE
    start = ((1,), 0)
    states: dict[tuple, dict[int, int]] = {start: {0: 1}}
    for r in range(1, n):
        nxt: dict[tuple, dict[int, int]] = {}
        for (rows, last), poly in states.items():
            for i in range(len(rows) + 1):
                cur = rows[i] if i < len(rows) else 0
                if i >= len(shape) or cur >= shape[i]:
                    continue
                if i > 0 and rows[i - 1] <= cur:
                    continue
                new_rows = rows[:i] + (cur + 1,) + rows[i + 1:] if i < len(rows) else rows + (1,)
                bump = (n - r) if i <= last else 0
                bucket = nxt.setdefault((new_rows, i), {})
                for d, c in poly.items():
                    bucket[d + bump] = bucket.get(d + bump, 0) + c
        states = nxt
    total: dict[int, int] = {}
    for (rows, _), poly in states.items():
        if rows == tuple(shape):
            for d, c in poly.items():
                total[d] = total.get(d, 0) + c
    return Series.from_degrees(total)


def kostka_poly(shape: Iterable[int], content: Iterable[int]) -> Series:
    """``K_{shape, content}(u) = sum over SSYT of u**charge``."""
    shape, content = Partition(shape), Partition(content)
    if shape.size != content.size:
        raise SizeMismatch(f"|shape| = {shape.size} but |content| = {content.size}")
    if all(c == 1 for c in content):
        return kostka_standard(shape)
    return kostka_enumerated(shape, content)


def n_statistic(p: Iterable[int]) -> int:
    return sum(i * v for i, v in enumerate(Partition(p)))


def cocharge_kostka(shape: Iterable[int], content: Iterable[int]) -> Series:
    """``u**n(content) * K(1/u)``, the degree reflection of :func:`kostka_poly`."""
    return kostka_poly(shape, content).substitute_inverse(n_statistic(content))


# -- the local Weyl module convention ------------------------------------------

class Convention(NamedTuple):
    transpose_xi: bool      # shape is xi^tr (True) or xi (False)
    content: str            # "columns": a_i parts equal to i; "rows": the Young diagram of lam
    statistic: str          # "charge" or "cocharge"
    xi_size: str            # "boxes": |xi| = sum i*a_i;  "rank_sum": |xi| = sum a_i

    def describe(self) -> str:
        shape = "xi^tr" if self.transpose_xi else "xi"
        return f"K_{{{shape}, {self.content}(lam)}} by {self.statistic}, |xi| = {self.xi_size}"


ALL_CONVENTIONS = tuple(
    Convention(t, c, s, z)
    for t in (True, False)
    for c in ("columns", "rows")
    for s in ("charge", "cocharge")
    for z in ("boxes", "rank_sum")
)

# Winner of ``calibrate()``; tests re-run the calibration and compare.
CONVENTION = Convention(transpose_xi=True, content="columns", statistic="charge", xi_size="boxes")


def xi_size(lam: Weight, conv: Convention = CONVENTION) -> int:
    return lam.boxes() if conv.xi_size == "boxes" else sum(lam.coords)


def kostka_under(conv: Convention, lam: Weight, xi: Partition) -> Series:
    content = column_heights(lam) if conv.content == "columns" else partition_of_weight(lam)
    shape = xi.conjugate() if conv.transpose_xi else xi
    if shape.size != content.size:
        return ZERO
    if conv.statistic == "charge":
        return kostka_poly(shape, content)
    return cocharge_kostka(shape, content)


def local_weyl_terms(lam: Weight, conv: Convention = CONVENTION) -> list[tuple[Partition, Weight, Series]]:
    """``(xi, mu_xi, coefficient)`` for every admissible ``xi``, zero terms dropped."""
    n = lam.rank
    out = []
    for xi in partitions_of(xi_size(lam, conv), n + 1):
        k = kostka_under(conv, lam, xi)
        if not k.is_zero():
            out.append((xi, mu_of_xi(xi, n), k))
    return out


def paper_kostka(lam: Weight, xi: Iterable[int]) -> Series:
    """Coefficient of ``ch V(mu_xi)`` in the graded character of ``W_loc(lam, 0)``."""
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    xi = Partition(xi)
    n = lam.rank
    if len(xi) > n + 1:
        raise ValueError(f"{tuple(xi)} has more than {n + 1} parts")
    if xi.size != xi_size(lam):
        raise SizeMismatch(f"xi = {tuple(xi)} is not a partition of {xi_size(lam)}")
    return kostka_under(CONVENTION, lam, xi)


# -- calibration ------------------------------------------------------------

def _sl2_ok(conv: Convention, max_ell: int) -> bool:
    for ell in range(max_ell + 1):
        lam = Weight((ell,))
        if xi_size(lam, conv) != ell:
            continue  # both size rules agree in rank 1
        for k in range(ell // 2 + 1):
            if kostka_under(conv, lam, Partition((ell - k, k))) != sl2_kostka(ell, k):
                return False
    return True


def _dimension_ok(conv: Convention, n: int, max_r: int) -> bool:
    fundamentals = [weyl_dimension(Weight.fundamental(i, n)) for i in range(1, n + 1)]
    for total in range(max_r + 1):
        for r in _compositions(total, n):
            lam = Weight(r)
            expected = 1
            for d, ri in zip(fundamentals, r):
                expected *= d ** ri
            got = sum(k.at_one() * weyl_dimension(mu) for _, mu, k in local_weyl_terms(lam, conv))
            if got != expected:
                return False
    return True


def _theta_ok(conv: Convention, n: int) -> bool:
    from .rootdata import highest_root

    theta = highest_root(n)
    terms = {mu: k for _, mu, k in local_weyl_terms(theta, conv)}
    return terms == {theta: ONE, Weight.zero(n): Series([0, 1])}


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def calibrate(max_ell: int = 8, max_r: int = 4, ranks: tuple[int, ...] = (2,)) -> list[Convention]:
    """Conventions that reproduce the sl2 closed form, the rank-n local Weyl
    dimensions ``prod_i dim V(w_i)**r_i`` and ``W_loc(theta) = V(theta) + u``."""
    winners = []
    for conv in ALL_CONVENTIONS:
        if not _sl2_ok(conv, max_ell):
            continue
        if not all(_theta_ok(conv, n) for n in ranks):
            continue
        if not all(_dimension_ok(conv, n, max_r) for n in ranks):
            continue
        winners.append(conv)
    return winners


def local_weyl_dimension(lam: Weight) -> int:
    return sum(k.at_one() * irr_character(mu).dimension() for _, mu, k in local_weyl_terms(lam))

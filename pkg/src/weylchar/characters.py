"""Graded characters of local Weyl, global Weyl and projective modules.

A :class:`GradedCharacter` maps weights to :class:`~weylchar.series.Series`
in ``u``.  All the verification routines return a :class:`VerificationReport`
instead of raising on a mismatch, so callers can inspect the failing cell.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Any, Iterator, Mapping, Optional

from .kostka import local_weyl_terms, paper_kostka, xi_size
from .rootdata import (
    Character,
    RankMismatch,
    Weight,
    adjoint_weights,
    dominant_weights_of_size,
    height,
    irr_character,
    mu_of_xi,
    partitions_of,
)
from .series import ZERO, Series, compare, geometric_inverse_product, hilbert_A, product_trunc, sl2_kostka


class NonCharacter(ValueError):
    """Raised when a graded character is not a nonnegative sum of irreducibles."""


class GradedCharacter:
    __slots__ = ("rank", "trunc", "entries")

    def __init__(self, entries: Mapping[Weight, Series], rank: int, trunc: Optional[int] = None):
        clean = {}
        for w, s in entries.items():
            if w.rank != rank:
                raise RankMismatch(f"weight {w} in a rank-{rank} character")
            s = s.truncate(trunc)
            if not s.is_zero():
                clean[w] = s
        self.rank = rank
        self.trunc = trunc
        self.entries = clean

    @classmethod
    def from_character(cls, ch: Character, degree: int = 0, trunc: Optional[int] = None) -> "GradedCharacter":
        return cls({w: Series.monomial(degree, m) for w, m in ch.entries.items()}, ch.rank, trunc)

    def __getitem__(self, w: Weight) -> Series:
        return self.entries.get(w, Series(trunc=self.trunc))

    def __iter__(self) -> Iterator[tuple[Weight, Series]]:
        return iter(sorted(self.entries.items()))

    def __eq__(self, other) -> bool:
        return (isinstance(other, GradedCharacter) and self.rank == other.rank
                and self.trunc == other.trunc and self.entries == other.entries)

    def __repr__(self) -> str:
        body = ", ".join(f"{w}: {s}" for w, s in self)
        return f"GradedCharacter(rank={self.rank}, trunc={self.trunc}, {{{body}}})"

    def _merged_trunc(self, other: "GradedCharacter") -> Optional[int]:
        if self.rank != other.rank:
            raise RankMismatch(f"rank {self.rank} vs rank {other.rank}")
        if self.trunc is None:
            return other.trunc
        if other.trunc is None:
            return self.trunc
        return min(self.trunc, other.trunc)

    def __add__(self, other: "GradedCharacter") -> "GradedCharacter":
        trunc = self._merged_trunc(other)
        out = dict(self.entries)
        for w, s in other.entries.items():
            out[w] = out[w] + s if w in out else s
        return GradedCharacter(out, self.rank, trunc)

    def __sub__(self, other: "GradedCharacter") -> "GradedCharacter":
        return self + other.scale_series(Series([-1]))

    def scale_series(self, s: Series) -> "GradedCharacter":
        """Multiply every weight's series by ``s``."""
        trunc = product_trunc(self.lower_bound(), self.trunc, s.lower_bound(), s.trunc)
        out = {w: v * s for w, v in self.entries.items()}
        return GradedCharacter(out, self.rank, trunc)

    def lower_bound(self) -> float:
        if self.entries:
            return min(s.min_deg for s in self.entries.values())
        return float("inf") if self.trunc is None else self.trunc + 1

    def times_character(self, ch: Character) -> "GradedCharacter":
        if ch.rank != self.rank:
            raise RankMismatch(f"rank {self.rank} vs rank {ch.rank}")
        out: dict[Weight, Series] = {}
        for w1, s in self.entries.items():
            for w2, m in ch.entries.items():
                w = w1 + w2
                out[w] = out[w] + s * m if w in out else s * m
        return GradedCharacter(out, self.rank, self.trunc)

    def truncate(self, D: Optional[int]) -> "GradedCharacter":
        if D is None:
            return self
        trunc = D if self.trunc is None else min(self.trunc, D)
        return GradedCharacter(self.entries, self.rank, trunc)

    def slice(self, d: int) -> Character:
        """``ch_g`` of the degree-``d`` piece."""
        if self.trunc is not None and d > self.trunc:
            raise ValueError(f"degree {d} is beyond the truncation {self.trunc}")
        return Character({w: s.coeff(d) for w, s in self.entries.items()}, self.rank)

    def dimension_series(self) -> Series:
        total = Series(trunc=self.trunc)
        for s in self.entries.values():
            total = total + s
        return total

    def to_dict(self) -> dict:
        return {
            "kind": "graded_character",
            "rank": self.rank,
            "trunc": self.trunc,
            "entries": [{"weight": list(w.coords), "series": s.to_dict()} for w, s in self],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "GradedCharacter":
        entries = {Weight(e["weight"]): Series.from_dict(e["series"]) for e in data["entries"]}
        return cls(entries, data["rank"], data.get("trunc"))


def shift(c: GradedCharacter, r: int) -> GradedCharacter:
    trunc = None if c.trunc is None else c.trunc + r
    return GradedCharacter({w: s.shift(r) for w, s in c.entries.items()}, c.rank, trunc)


class MultiplicitySeries(dict):
    """Dominant weight -> Series of graded multiplicities."""

    def to_list(self) -> list[dict]:
        return [{"weight": list(w.coords), "series": s.to_dict()} for w, s in sorted(self.items())]

    def character(self, rank: int, trunc: Optional[int] = None) -> GradedCharacter:
        total = GradedCharacter({}, rank, trunc)
        for mu, s in self.items():
            total = total + GradedCharacter.from_character(irr_character(mu)).scale_series(s)
        return total


# -- module characters ---------------------------------------------------------

def _require_dominant(lam: Weight):
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")


def local_weyl_character(lam: Weight, r: int = 0) -> GradedCharacter:
    """Exact graded character of ``W_loc(lam, r)``."""
    _require_dominant(lam)
    total = GradedCharacter({}, lam.rank)
    for _, mu, k in local_weyl_terms(lam):
        total = total + GradedCharacter.from_character(irr_character(mu)).scale_series(k)
    return shift(total, r)


def global_weyl_character(lam: Weight, r: int, D: int) -> GradedCharacter:
    """Graded character of ``W(lam, r)`` up to degree ``D``: local character times ``H(A_lam)``."""
    _require_dominant(lam)
    if D < r:
        raise ValueError(f"truncation {D} is below the starting degree {r}")
    return local_weyl_character(lam, r).scale_series(hilbert_A(lam, max(D, D - r))).truncate(D)


def symmetric_algebra_character(n: int, D: int) -> GradedCharacter:
    """Graded character of ``S(g (x) tC[t])`` for ``g = sl_{n+1}``, up to ``u**D``.

    Expands the Euler product over adjoint weights ``beta`` and ``r >= 1`` of
    ``1 / (1 - e(beta) u**r)``, keeping only degrees ``<= D``.
    """
    if D < 0:
        raise ValueError("truncation degree must be nonnegative")
    # dense table: (weight, degree) -> coefficient
    table: dict[tuple[Weight, int], int] = {(Weight.zero(n), 0): 1}
    for beta, mult in adjoint_weights(n).entries.items():
        for r in range(1, D + 1):
            for _ in range(mult):
                table = _euler_factor(table, beta, r, D)
    entries: dict[Weight, dict[int, int]] = defaultdict(dict)
    for (w, d), c in table.items():
        entries[w][d] = c
    return GradedCharacter({w: Series.from_degrees(ds, D) for w, ds in entries.items()}, n, D)


def _euler_factor(table: dict, beta: Weight, r: int, D: int) -> dict:
    out = defaultdict(int)
    for (w, d), c in table.items():
        k = 0
        while d + r * k <= D:
            out[(w + k * beta, d + r * k)] += c
            k += 1
    return out


def projective_character(lam: Weight, r: int, D: int) -> GradedCharacter:
    """``u**r ch V(lam) ch_gr S(g (x) tC[t])`` up to ``u**D``."""
    _require_dominant(lam)
    n = lam.rank
    if D - r < 0:
        return GradedCharacter({}, n, D)
    sym = symmetric_algebra_character(n, D - r)
    return shift(sym.times_character(irr_character(lam)), r)


# -- decomposition -------------------------------------------------------------

def decompose(c: GradedCharacter) -> MultiplicitySeries:
    """Write ``c`` as a sum of ``ch V(mu)`` with Series coefficients.

    Repeatedly peels off the support weight of largest height (ties broken by
    coordinates), which is maximal in the dominance order.
    """
    result = MultiplicitySeries()
    rest = dict(c.entries)
    heights: dict[Weight, Any] = {}
    while rest:
        for w in rest:
            if w not in heights:
                heights[w] = height(w)
        top = max(rest, key=lambda w: (heights[w], w.coords))
        coeff = rest[top]
        if not top.is_dominant():
            raise NonCharacter(f"maximal weight {top} is not dominant")
        if not coeff.nonnegative():
            raise NonCharacter(f"negative multiplicity {coeff} for V{top}")
        result[top] = coeff
        for w, m in irr_character(top).entries.items():
            s = rest.get(w, Series(trunc=c.trunc)) - coeff * m
            s = s.truncate(c.trunc)
            if s.is_zero():
                rest.pop(w, None)
            else:
                rest[w] = s
    return result


# -- verification ----------------------------------------------------------------

@dataclass
class VerificationReport:
    identity: str
    statement: str
    truncation: int
    passed: bool
    label: str = "PROVED"
    first_mismatch: Optional[dict] = None
    cutoffs: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "statement": self.statement,
            "truncation": self.truncation,
            "pass": self.passed,
            "label": self.label,
            "first_mismatch": self.first_mismatch,
            "cutoffs": self.cutoffs,
            "checks": self.checks,
        }

    def summary(self) -> str:
        verdict = "pass" if self.passed else "FAIL"
        cut = ", ".join(f"cutoff {k} <= {v}" for k, v in self.cutoffs.items())
        line = f"{self.identity} [{self.label}] up to u^{self.truncation}: {verdict}"
        return line + (f", {cut}" if cut else "")


def compare_characters(lhs: GradedCharacter, rhs: GradedCharacter) -> Optional[dict]:
    """First mismatching ``(weight, degree)`` on the commonly known range, or None."""
    for w in sorted(set(lhs.entries) | set(rhs.entries)):
        cmp = compare(lhs[w], rhs[w])
        if not cmp.equal:
            d, a, b = cmp.first_mismatch
            return {"weight": list(w.coords), "degree": d, "lhs": a, "rhs": b}
    return None


def reciprocity_multiplicity(m: int, k: int) -> Series:
    """Graded multiplicity of ``V(m w)`` in ``W_loc((m+2k) w, 0)``, read off by decomposition."""
    mults = decompose(local_weyl_character(Weight((m + 2 * k,)), 0))
    return mults.get(Weight((m,)), ZERO)


def verify_reciprocity(m: int, D: int) -> VerificationReport:
    """``ch P(m w, 0) = sum_{k,s} n(m,k,s) ch W((m+2k) w, s)`` for sl2, up to ``u**D``."""
    lhs = projective_character(Weight((m,)), 0, D)
    rhs = GradedCharacter({}, 1, D)
    multiplicities = {}
    k = 0
    while True:
        mult = reciprocity_multiplicity(m, k)
        low = mult.valuation
        if low is None or low > D:
            break
        multiplicities[k] = str(mult)
        for s, c in mult.items():
            if s <= D:
                term = global_weyl_character(Weight((m + 2 * k,)), s, D)
                rhs = rhs + term.scale_series(Series([c]))
        k += 1
    mismatch = compare_characters(lhs, rhs)
    return VerificationReport(
        identity=f"reciprocity(m={m})",
        statement=("ch_gr P(m w, 0) = sum_{k,s} n(m,k,s) ch_gr W((m+2k) w, s), "
                   "n(m,k,s) = [W_loc((m+2k) w, 0) : V(m w, s)]  (BGG reciprocity, sl2)"),
        truncation=D,
        passed=mismatch is None,
        first_mismatch=mismatch,
        cutoffs={"k": k - 1},
        checks={"multiplicities": multiplicities},
    )


def verify_theorem2(D: int) -> VerificationReport:
    """Kostka product-sum identity for ``ch_gr S(sl2 (x) tC[t])`` and its dimension form."""
    lhs = symmetric_algebra_character(1, D)
    rhs = GradedCharacter({}, 1, D)
    dim_rhs = Series(trunc=D)
    last_m = -1
    m = 0
    while True:
        outer = sl2_kostka(2 * m, m)
        if outer.valuation is None or outer.valuation > D:
            break
        h = hilbert_A(Weight((2 * m,)), D)
        for r in range(m + 1):
            inner = sl2_kostka(2 * m, r)
            coeff = (outer * inner * h).truncate(D)
            if coeff.is_zero():
                continue
            rhs = rhs + GradedCharacter.from_character(irr_character(Weight((2 * m - 2 * r,)))).scale_series(coeff)
            dim_rhs = dim_rhs + coeff * (2 * m - 2 * r + 1)
        last_m = m
        m += 1
    dim_lhs = geometric_inverse_product([(r, 3) for r in range(1, D + 1)], D) if D > 0 else Series([1], 0, 0)
    char_mismatch = compare_characters(lhs, rhs)
    dim_cmp = compare(dim_lhs, dim_rhs)
    dim_mismatch = None
    if not dim_cmp.equal:
        d, a, b = dim_cmp.first_mismatch
        dim_mismatch = {"weight": None, "degree": d, "lhs": a, "rhs": b}
    return VerificationReport(
        identity="theorem2",
        statement=("ch_gr S(sl2 (x) tC[t]) = sum_{r,m} K_{2m,(m>=m)} K_{2m,(2m-r>=r)} H(A_{2m}) ch V(2m-2r); "
                   "dimensions: prod_r (1-u^r)^-3 = sum_{r,m} (2m-2r+1) K K H"),
        truncation=D,
        passed=char_mismatch is None and dim_mismatch is None,
        first_mismatch=char_mismatch or dim_mismatch,
        cutoffs={"m": last_m},
        checks={
            "character_identity": char_mismatch is None,
            "dimension_identity": dim_mismatch is None,
            "dimension_series": dim_lhs.to_dict(),
        },
    )


def _xi_for(lam: Weight, boxes: int) -> Optional[tuple[int, ...]]:
    """The partition ``xi`` with ``boxes`` boxes and ``mu_xi = lam``, if any."""
    n = lam.rank
    base = lam.to_partition_coords()
    extra, rem = divmod(boxes - sum(base), n + 1)
    if rem or extra < 0:
        return None
    return tuple(b + extra for b in base)


def verify_projective_expansion(lam: Weight, D: int) -> VerificationReport:
    """``ch P(lam, 0) = sum_mu K_{mu, xi_lam^tr}(u) ch_gr W_loc(mu, 0) H(A_mu)`` up to ``u**D``.

    Proved for sl2; for higher rank the report is only evidence.
    """
    _require_dominant(lam)
    n = lam.rank
    lhs = projective_character(lam, 0, D)
    rhs = GradedCharacter({}, n, D)
    base = sum(lam.to_partition_coords())
    level = 0
    used = []
    while True:
        boxes = base + (n + 1) * level
        contributed = False
        for mu in dominant_weights_of_size(boxes, n):
            xi = _xi_for(lam, mu.boxes())
            if xi is None:
                continue
            coeff = paper_kostka(mu, xi)
            if coeff.valuation is None or coeff.valuation > D:
                continue
            contributed = True
            used.append({"mu": list(mu.coords), "coefficient": str(coeff)})
            term = local_weyl_character(mu, 0).scale_series(hilbert_A(mu, D)).truncate(D)
            rhs = rhs + term.scale_series(coeff.truncate(D))
        if not contributed:
            break
        level += 1
    mismatch = compare_characters(lhs, rhs)
    return VerificationReport(
        identity=f"projective-expansion(rank={n}, lambda={list(lam.coords)})",
        statement=("ch_gr P(lam, 0) = sum_mu K_{mu, xi_lam^tr}(u) ch_gr W_loc(mu, 0) H(A_mu)  "
                   "(Weyl-flag expansion of the projective)"),
        truncation=D,
        passed=mismatch is None,
        label="PROVED" if n == 1 else "CONJECTURAL-EVIDENCE",
        first_mismatch=mismatch,
        cutoffs={"level": level - 1},
        checks={"terms": used},
    )

"""Sparse exact row reduction.

Vectors are dicts ``key -> number`` with sortable keys.  Rows are kept with
integer entries (rationals are cleared of denominators on entry) and every
elimination step is fraction-free: ``v <- p*v - c*row`` followed by division
by the content gcd.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Hashable, Iterable, Mapping


def integral(vec: Mapping[Hashable, int | Fraction]) -> dict:
    """Scale a rational vector to a primitive integer vector (same span)."""
    items = {k: v for k, v in vec.items() if v}
    if not items:
        return {}
    den = lcm(*(Fraction(v).denominator for v in items.values()))
    out = {k: int(Fraction(v) * den) for k, v in items.items()}
    return _primitive(out)


def _primitive(vec: dict) -> dict:
    g = 0
    for v in vec.values():
        g = gcd(g, v)
    if g > 1:
        vec = {k: v // g for k, v in vec.items()}
    lead = vec[min(vec)]
    if lead < 0:
        vec = {k: -v for k, v in vec.items()}
    return vec


class EchelonBasis:
    """Incrementally maintained echelon form; ``rank`` is the span dimension."""

    def __init__(self, vectors: Iterable[Mapping] = ()):
        self.rows: dict = {}     # pivot key -> primitive integer row with that leading key
        for v in vectors:
            self.add(v)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Mapping) -> dict:
        """Return a vector congruent to ``vec`` whose leading key is not a pivot."""
        v = integral(vec)
        while v:
            lead = min(v)
            row = self.rows.get(lead)
            if row is None:
                return v
            p, c = row[lead], v[lead]
            out = {k: p * x for k, x in v.items()}
            for k, x in row.items():
                y = out.get(k, 0) - c * x
                if y:
                    out[k] = y
                else:
                    out.pop(k, None)
            v = _primitive(out) if out else {}
        return v

    def add(self, vec: Mapping) -> bool:
        """Insert ``vec``; True when it enlarged the span."""
        v = self.reduce(vec)
        if not v:
            return False
        self.rows[min(v)] = v
        return True

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)


def rank(vectors: Iterable[Mapping]) -> int:
    return EchelonBasis(vectors).rank

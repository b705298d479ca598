"""Integer Laurent polynomials and truncated power series in one variable ``u``.

A :class:`Series` is either exact (``trunc is None``) or known only up to and
including the degree ``trunc``.  Arithmetic never invents coefficients: any
operation involving a truncated operand yields a truncated result.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, NamedTuple, Optional


@dataclass(frozen=True, init=False)
class Series:
    min_deg: int
    coeffs: tuple[int, ...]
    trunc: Optional[int]

    def __init__(self, coeffs: Iterable[int] = (), min_deg: int = 0, trunc: Optional[int] = None):
        cs = [int(c) for c in coeffs]
        if trunc is not None:
            keep = trunc - min_deg + 1
            cs = cs[:max(keep, 0)]
        lo = 0
        while lo < len(cs) and cs[lo] == 0:
            lo += 1
        hi = len(cs)
        while hi > lo and cs[hi - 1] == 0:
            hi -= 1
        cs = cs[lo:hi]
        object.__setattr__(self, "min_deg", min_deg + lo if cs else 0)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "trunc", trunc)

    # -- constructors -------------------------------------------------------

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1, trunc: Optional[int] = None) -> "Series":
        return cls([coeff], degree, trunc)

    @classmethod
    def from_dict(cls, data: dict) -> "Series":
        return cls(data["coeffs"], data["min_deg"], data.get("trunc"))

    @classmethod
    def from_degrees(cls, degrees: dict[int, int], trunc: Optional[int] = None) -> "Series":
        if not degrees:
            return cls(trunc=trunc)
        lo, hi = min(degrees), max(degrees)
        return cls([degrees.get(d, 0) for d in range(lo, hi + 1)], lo, trunc)

    # -- inspection ---------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.trunc is None

    def is_zero(self) -> bool:
        """True when every *known* coefficient vanishes."""
        return not self.coeffs

    @property
    def max_deg(self) -> Optional[int]:
        return self.min_deg + len(self.coeffs) - 1 if self.coeffs else None

    @property
    def valuation(self) -> Optional[int]:
        """Lowest degree with a nonzero coefficient, ``None`` for zero."""
        return self.min_deg if self.coeffs else None

    def lower_bound(self) -> float:
        """Every nonzero coefficient (known or not) sits at or above this degree."""
        if self.coeffs:
            return self.min_deg
        return float("inf") if self.trunc is None else self.trunc + 1

    def coeff(self, d: int) -> int:
        if self.trunc is not None and d > self.trunc:
            raise ValueError(f"coefficient of u^{d} is unknown (series truncated at {self.trunc})")
        i = d - self.min_deg
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def items(self):
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.min_deg + i, c

    def at_one(self) -> int:
        if self.trunc is not None:
            raise ValueError("cannot evaluate a truncated series at u=1")
        return sum(self.coeffs)

    def nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        trunc = _min_trunc(self.trunc, other.trunc)
        if not self.coeffs:
            return Series(other.coeffs, other.min_deg, trunc)
        if not other.coeffs:
            return Series(self.coeffs, self.min_deg, trunc)
        lo = min(self.min_deg, other.min_deg)
        hi = max(self.max_deg, other.max_deg)
        out = [0] * (hi - lo + 1)
        for s in (self, other):
            off = s.min_deg - lo
            for i, c in enumerate(s.coeffs):
                out[off + i] += c
        return Series(out, lo, trunc)

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series([-c for c in self.coeffs], self.min_deg, self.trunc)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Series([other * c for c in self.coeffs], self.min_deg, self.trunc)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        trunc = _product_trunc(self, other)
        if not self.coeffs or not other.coeffs:
            return Series(trunc=trunc)
        top = len(self.coeffs) + len(other.coeffs) - 1
        lo = self.min_deg + other.min_deg
        if trunc is not None:
            top = min(top, trunc - lo + 1)
        out = [0] * max(top, 0)
        for i, a in enumerate(self.coeffs):
            if not a or i >= top:
                continue
            for j, b in enumerate(other.coeffs[: top - i]):
                out[i + j] += a * b
        return Series(out, lo, trunc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Series":
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def shift(self, r: int) -> "Series":
        """Multiply by ``u**r``; the truncation degree moves with the series."""
        return Series(self.coeffs, self.min_deg + r, None if self.trunc is None else self.trunc + r)

    def truncate(self, D: Optional[int]) -> "Series":
        if D is None:
            return self
        return Series(self.coeffs, self.min_deg, _min_trunc(self.trunc, D))

    def substitute_inverse(self, n: int) -> "Series":
        """Return ``u**n * self(1/u)`` (degree reflection); exact series only."""
        if self.trunc is not None:
            raise ValueError("degree reflection needs an exact series")
        if not self.coeffs:
            return self
        return Series(reversed(self.coeffs), n - self.max_deg)

    # -- output -------------------------------------------------------------

    def to_dict(self) -> dict:
        """JSON form; ``trunc`` is present only for truncated series."""
        out = {"min_deg": self.min_deg, "coeffs": list(self.coeffs)}
        if self.trunc is not None:
            out["trunc"] = self.trunc
        return out

    def __str__(self) -> str:
        terms = []
        for d, c in self.items():
            mono = "1" if d == 0 else ("u" if d == 1 else f"u^{d}")
            if d == 0:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            text = "0"
        else:
            text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
            for sign, body in terms[1:]:
                text += f" {sign} {body}"
        if self.trunc is not None:
            text += f" + O(u^{self.trunc + 1})"
        return text


def _coerce(x):
    if isinstance(x, Series):
        return x
    if isinstance(x, int):
        return Series([x])
    return NotImplemented


def _min_trunc(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def product_trunc(lb_a: float, t_a: Optional[int], lb_b: float, t_b: Optional[int]) -> Optional[int]:
    """Truncation degree of a product, given each factor's lower support bound and truncation.

    Pessimistic: never above either operand's truncation, and a factor's
    lower bound caps what the other factor's unknown tail can reach.
    """
    bound = _min_trunc(t_a, t_b)
    for lb, t in ((lb_a, t_b), (lb_b, t_a)):
        if t is not None and lb != float("inf"):
            bound = _min_trunc(bound, int(lb) + t)
    return bound


def _product_trunc(a: Series, b: Series) -> Optional[int]:
    return product_trunc(a.lower_bound(), a.trunc, b.lower_bound(), b.trunc)


ZERO = Series()
ONE = Series([1])
U = Series([0, 1])


def add(a: Series, b: Series) -> Series:
    return a + b


def mul(a: Series, b: Series) -> Series:
    return a * b


class Comparison(NamedTuple):
    equal: bool
    upto: Optional[int]            # highest degree compared, None when both exact
    first_mismatch: Optional[tuple[int, int, int]]  # (degree, lhs, rhs)


def compare(a: Series, b: Series) -> Comparison:
    """Compare two series on the range of degrees known for both."""
    upto = _min_trunc(a.trunc, b.trunc)
    degrees = sorted({d for d, _ in a.items()} | {d for d, _ in b.items()})
    for d in degrees:
        if upto is not None and d > upto:
            break
        ca, cb = a.coeff(d), b.coeff(d)
        if ca != cb:
            return Comparison(False, upto, (d, ca, cb))
    return Comparison(True, upto, None)


# -- constructors used throughout ---------------------------------------------

def geometric_inverse_product(factors: Iterable[tuple[int, int]], D: int) -> Series:
    """Expand ``prod_j (1 - u**e_j)**(-m_j)`` up to and including ``u**D``."""
    if D < 0:
        raise ValueError("truncation degree must be nonnegative")
    out = [0] * (D + 1)
    out[0] = 1
    for e, m in factors:
        if e <= 0 or m <= 0:
            raise ValueError(f"bad factor (exponent={e}, multiplicity={m})")
        for _ in range(m):
            # in-place division by (1 - u^e)
            for d in range(e, D + 1):
                out[d] += out[d - e]
    return Series(out, 0, D)


def hilbert_A(lam, D: int) -> Series:
    """Hilbert series of the Young-subgroup invariants attached to a dominant weight."""
    coords = getattr(lam, "coords", lam)
    if any(r < 0 for r in coords):
        raise ValueError(f"weight {tuple(coords)} is not dominant")
    return geometric_inverse_product([(j, 1) for r in coords for j in range(1, r + 1)], D)


def q_integer(n: int) -> Series:
    if n < 0:
        raise ValueError("q-integers are only used for n >= 0")
    return Series([1] * n)


def q_factorial(n: int) -> Series:
    """``[n]_u!``, with the convention that it vanishes for negative ``n``."""
    if n < 0:
        return ZERO
    out = ONE
    for j in range(2, n + 1):
        out = out * q_integer(j)
    return out


def _exact_divide(num: Series, den: Series) -> Series:
    if not den.coeffs:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(num.coeffs)
    dc = den.coeffs
    lead = dc[-1]
    qlen = len(rem) - len(dc) + 1
    if qlen <= 0:
        if any(rem):
            raise ValueError("inexact polynomial division")
        return ZERO
    quo = [0] * qlen
    for i in range(qlen - 1, -1, -1):
        c = rem[i + len(dc) - 1]
        if c % lead:
            raise ValueError("inexact polynomial division")
        q = c // lead
        quo[i] = q
        if q:
            for j, b in enumerate(dc):
                rem[i + j] -= q * b
    if any(rem):
        raise ValueError("inexact polynomial division")
    return Series(quo, num.min_deg - den.min_deg)


def q_binomial(n: int, k: int) -> Series:
    if n < 0 or k < 0 or k > n:
        return ZERO
    return _exact_divide(q_factorial(n), q_factorial(k) * q_factorial(n - k))


def sl2_kostka(ell: int, k: int) -> Series:
    """Graded multiplicity of V((ell-2k)w) in the sl2 local Weyl module of highest weight ell*w.

    Closed form ``[ell]!/([ell-k]![k]!) - [ell]!/([ell-k+1]![k-1]!)``.
    """
    if k < 0 or 2 * k > ell:
        return ZERO
    return q_binomial(ell, k) - q_binomial(ell, k - 1)


def binomial_check(ell: int, k: int) -> int:
    """Value of the closed form at u=1 computed with ordinary binomials."""
    return comb(ell, k) - (comb(ell, k - 1) if k >= 1 else 0)

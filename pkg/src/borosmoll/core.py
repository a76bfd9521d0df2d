"""Boros-Moll numbers d_i(m) in exact arithmetic.

d_i(m) is the coefficient of x^i in the quartic-integral polynomial
P_m(x); 4^m * d_i(m) is always a nonnegative integer, so every value is
stored as that scaled integer.  Three independent routes to the same
numbers are provided (closed-form summation, the three-term recurrence
in m, and the two-term recurrence in i) so they can be cross-checked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import MPoly, poly_from_coeffs


@dataclass(frozen=True)
class BMValue:
    """d_i(m) stored exactly as ``scaled / 4**m``."""

    scaled: int
    m: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.scaled, 4**self.m)

    @property
    def is_positive(self) -> bool:
        return self.scaled > 0


# Growable Pascal triangle; row n holds [C(n,0), ..., C(n,n)].  Sweeps up
# to m touch rows up to 2m, so lookups beat recomputing binomials.
_PASCAL: list[list[int]] = [[1]]


def _binom_row(n: int) -> list[int]:
    while len(_PASCAL) <= n:
        prev = _PASCAL[-1]
        row = [1] * (len(prev) + 1)
        for k in range(1, len(prev)):
            row[k] = prev[k - 1] + prev[k]
        _PASCAL.append(row)
    return _PASCAL[n]


def bm_scaled(i: int, m: int) -> int:
    """4^m * d_i(m) by direct summation of the binomial closed form."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if i < 0 or i > m:
        return 0
    _binom_row(2 * m)
    total = 0
    for k in range(i, m + 1):
        total += (_PASCAL[2 * m - 2 * k][m - k] * _PASCAL[m + k][k] * _PASCAL[k][i]) << k
    return total


def bm_closed_form(i: int, m: int) -> BMValue:
    return BMValue(bm_scaled(i, m), m)


class BMTable:
    """Cached triangle of scaled Boros-Moll numbers.

    Rows are filled from the closed form and never mutated afterwards;
    ``value`` returns immutable ``BMValue`` records, so concurrent reads
    are safe once a row exists.
    """

    def __init__(self, m_max: int = 0):
        self._rows: list[list[int]] = []
        self.extend(m_max)

    @property
    def m_max(self) -> int:
        return len(self._rows) - 1

    def extend(self, m_max: int) -> None:
        for m in range(len(self._rows), m_max + 1):
            self._rows.append([bm_scaled(i, m) for i in range(m + 1)])

    def scaled(self, i: int, m: int) -> int:
        if m < 0 or i < 0 or i > m:
            return 0
        if m >= len(self._rows):
            self.extend(m)
        return self._rows[m][i]

    def value(self, i: int, m: int) -> BMValue:
        if m < 0:
            return BMValue(0, 0)
        return BMValue(self.scaled(i, m), m)

    def d(self, i: int, m: int) -> Fraction:
        """d_i(m) as an exact rational (0 outside 0 <= i <= m)."""
        if m < 0:
            return Fraction(0)
        return Fraction(self.scaled(i, m), 4**m)

    def row(self, m: int) -> list[Fraction]:
        return [self.d(i, m) for i in range(m + 1)]


def bm_recurrence_m(i: int, m: int, table: BMTable) -> BMValue:
    """d_i(m) from the Kauers-Paule three-term recurrence in m.

    Valid for m >= 2, 1 <= i <= m-1:
      d_i(m) = (8m^2-8m-4i^2+3)/(2m(m-i)) d_i(m-1)
               - (4m-5)(4m-3)(m-1+i)/(4m(m-1)(m-i)) d_i(m-2)
    """
    if m < 2 or i < 1 or i > m - 1:
        raise ValueError(f"recurrence in m needs m >= 2, 1 <= i <= m-1; got i={i}, m={m}")
    a = Fraction(8 * m * m - 8 * m - 4 * i * i + 3, 2 * m * (m - i))
    b = Fraction((4 * m - 5) * (4 * m - 3) * (m - 1 + i), 4 * m * (m - 1) * (m - i))
    val = a * table.d(i, m - 1) - b * table.d(i, m - 2)
    scaled = val * 4**m
    assert scaled.denominator == 1
    return BMValue(scaled.numerator, m)


def bm_recurrence_i(i: int, m: int, table: BMTable) -> BMValue:
    """d_i(m+1) from the two-term recurrence in i (d_{-1} = 0).

      d_i(m+1) = (m+i)/(m+1) d_{i-1}(m) + (4m+2i+3)/(2(m+1)) d_i(m)
    """
    if i < 0 or m < i:
        raise ValueError(f"recurrence in i needs i >= 0, m >= i; got i={i}, m={m}")
    val = (
        Fraction(m + i, m + 1) * table.d(i - 1, m)
        + Fraction(4 * m + 2 * i + 3, 2 * (m + 1)) * table.d(i, m)
    )
    scaled = val * 4 ** (m + 1)
    assert scaled.denominator == 1
    return BMValue(scaled.numerator, m + 1)


def bm_normalized(i: int, m: int, k: int, table: BMTable | None = None) -> Fraction:
    """d_i(m) / (i+k)!  (k = 0 and k = 2 give the coefficient sequences
    of the real-rooted companions of P_m)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    d = table.d(i, m) if table is not None else Fraction(bm_scaled(i, m), 4**m)
    return d / math.factorial(i + k)


def eval_P(m: int, x: Fraction | int) -> Fraction:
    """P_m(x) via the (x+1)-basis summation."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    x = Fraction(x)
    total = Fraction(0)
    xp1 = x + 1
    for k in range(m + 1):
        total += (math.comb(2 * m - 2 * k, m - k) * math.comb(m + k, k) << k) * xp1**k
    return total / 4**m


def eval_P_coeffs(m: int, x: Fraction | int, table: BMTable | None = None) -> Fraction:
    """P_m(x) via the coefficient expansion sum d_i(m) x^i."""
    x = Fraction(x)
    table = table if table is not None else BMTable(m)
    total = Fraction(0)
    for i in range(m, -1, -1):
        total = total * x + table.d(i, m)
    return total


def ratio_r0(m: int) -> Fraction:
    """d_0(m)/d_0(m-1) = (4m-1)/(2m) for m >= 1."""
    if m < 1:
        raise ValueError("m must be positive")
    return Fraction(4 * m - 1, 2 * m)


@dataclass(frozen=True)
class DiagonalForm:
    """Closed form for the diagonal d_i(i+j) at fixed offset j:

      d_i(i+j) = 2^(-i-2j) * (2i)! / ((i+j)! i!) * content * poly(i)

    The power-of-two exponent and the factorial factors are kept symbolic
    so ratios of diagonal values cancel exactly.
    """

    j: int
    content: Fraction
    poly: MPoly  # univariate in i, integer coefficients

    def w_value(self, i: int) -> Fraction:
        return self.content * self.poly.eval({"i": i})

    def value_at(self, i: int) -> Fraction:
        if i < 0:
            raise ValueError("i must be nonnegative")
        pre = Fraction(
            math.factorial(2 * i), math.factorial(i + self.j) * math.factorial(i) * 2 ** (i + 2 * self.j)
        )
        return pre * self.w_value(i)


def diagonal_closed_form(j: int) -> DiagonalForm:
    """Build the diagonal polynomial W_j with
    W_j(i) = sum_{t=0}^{j} 2^t C(2j-2t, j-t) (1/t!) prod_{s=1}^{j+t} (2i+s)."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    i = MPoly.var("i")
    acc: dict[int, Fraction] = {}
    total = MPoly.zero(("i",))
    parts: list[tuple[Fraction, MPoly]] = []
    for t in range(j + 1):
        prod = MPoly.const(1, ("i",))
        for s in range(1, j + t + 1):
            prod = prod * (2 * i + s)
        coeff = Fraction(math.comb(2 * j - 2 * t, j - t) * 2**t, math.factorial(t))
        parts.append((coeff, prod))
    # sum with rational weights, then clear to integer coefficients
    deg = max(p.degree_in("i") for _, p in parts)
    coeffs = [Fraction(0)] * (deg + 1)
    for c, p in parts:
        for expo, pc in p.terms.items():
            coeffs[expo[0]] += c * pc
    poly, content = poly_from_coeffs(coeffs, "i")
    return DiagonalForm(j, content, poly)

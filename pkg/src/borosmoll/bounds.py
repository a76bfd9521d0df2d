"""Ratio bounds for Boros-Moll numbers and their sandwich verification.

The central quantity is u_i(m) = d_{i-1}(m) d_{i+1}(m) / d_i(m)^2.  The
Chen-Gu inequality bounds it below by f_i(m) and Zhao's refinement
bounds it above by g_i(m); both bounds, their (i+k)-normalized variants,
the surd-valued ratio lower bound L(m,i) and the transposed ratio lower
bound R(i,m) are computed exactly and checked against table data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .core import BMTable
from .exact import ExtElem, RatFunc, SurdExpr, rat_to_str, surd_to_obj
from .seqprops import (
    HOLDS_STRICTLY,
    HOLDS_WEAKLY,
    INCONCLUSIVE,
    VIOLATED,
    CheckReport,
    _verdict_from_counts,
)


@dataclass(frozen=True)
class BoundEval:
    """One sandwich instance; on a pass, lower < actual < upper exactly.

    Either side may be a quadratic surd (the ratio lower bound L is one);
    comparisons then go through the exact surd sign.
    """

    which: str
    i: int
    m: int
    k: Optional[int]
    lower: Optional[Fraction | SurdExpr]
    actual: Fraction
    upper: Optional[Fraction | SurdExpr]

    @staticmethod
    def _gap_positive(hi, lo) -> bool:
        if isinstance(hi, SurdExpr) or isinstance(lo, SurdExpr):
            hi = hi if isinstance(hi, SurdExpr) else SurdExpr(hi)
            return (hi - lo).sign() > 0
        return hi > lo

    @property
    def passes(self) -> bool:
        ok = True
        if self.lower is not None:
            ok = ok and self._gap_positive(self.actual, self.lower)
        if self.upper is not None:
            ok = ok and self._gap_positive(self.upper, self.actual)
        return ok

    def to_obj(self) -> dict:
        def enc(x):
            if x is None:
                return None
            if isinstance(x, SurdExpr):
                return surd_to_obj(x)
            return rat_to_str(x)

        obj = {
            "which": self.which,
            "i": self.i,
            "m": self.m,
            "lower": enc(self.lower),
            "actual": enc(self.actual),
            "upper": enc(self.upper),
            "pass": self.passes,
        }
        if self.k is not None:
            obj["k"] = self.k
        return obj


def u_ratio(table: BMTable, i: int, m: int) -> Fraction:
    """u_i(m) = d_{i-1}(m) d_{i+1}(m) / d_i(m)^2 (zero convention above m)."""
    if m < 2 or i < 1 or i > m:
        raise ValueError(f"u_i(m) needs m >= 2, 1 <= i <= m; got i={i}, m={m}")
    return table.d(i - 1, m) * table.d(i + 1, m) / table.d(i, m) ** 2


def fg_bounds(i: int, m: int) -> tuple[Fraction, Fraction]:
    """(f_i(m), g_i(m)): the Chen-Gu lower and Zhao upper bound on u_i(m)."""
    if m < 2 or i < 1 or i > m - 1:
        raise ValueError(f"bounds need m >= 2, 1 <= i <= m-1; got i={i}, m={m}")
    f = Fraction((m - i) * i, (m - i + 1) * (i + 1))
    g = Fraction((m - i) * i * (m + i * i + 1), (m - i + 1) * (i + 1) * (m + i * i))
    return f, g


def k_scale(i: int, k: int) -> Fraction:
    return Fraction(i + k, i + k + 1)


def u_ratio_k(table: BMTable, i: int, m: int, k: int) -> Fraction:
    """(i+k)-normalized ratio u_{i,k}(m) = (i+k)/(i+k+1) * u_i(m)."""
    return k_scale(i, k) * u_ratio(table, i, m)


def fg_bounds_k(i: int, m: int, k: int) -> tuple[Fraction, Fraction]:
    f, g = fg_bounds(i, m)
    c = k_scale(i, k)
    return c * f, c * g


def f_formula(i: int, m: int) -> Fraction:
    """f_i(m) extended through i = m (where it vanishes)."""
    if m < 1 or i < 1 or i > m:
        raise ValueError(f"f needs 1 <= i <= m; got i={i}, m={m}")
    return Fraction((m - i) * i, (m - i + 1) * (i + 1))


def E_lower(i: int, m: int, k: Optional[int] = None) -> Fraction:
    """Certified positive lower bound for the rewritten Briggs gap:

      E = (f_{i+1} - 1) g_i - 1 + 1/g_i        (plain)
      E = (f_{i+1,k} - 1) g_{i,k} - 1 + 1/g_{i,k}   (normalized)

    Valid for m >= 2, 1 <= i <= m-1 (f_m(m) = 0 covers the boundary).
    """
    if m < 2 or i < 1 or i > m - 1:
        raise ValueError(f"E needs m >= 2, 1 <= i <= m-1; got i={i}, m={m}")
    f_next = f_formula(i + 1, m)
    _, g = fg_bounds(i, m)
    if k is not None:
        f_next = k_scale(i + 1, k) * f_next
        g = k_scale(i, k) * g
    return (f_next - 1) * g - 1 + 1 / g


def E_denominator(i: int, m: int, k: Optional[int] = None) -> int:
    den = i * (i + 1) * (i + 2) * (m - i) * (m - i + 1) * (m + i * i) * (m + i * i + 1)
    if k is not None:
        den *= (i + k) * (i + k + 1) * (i + k + 2)
    return den


def ratio_lower_L(m: int, i: int) -> SurdExpr:
    """Surd-valued lower bound for d_i(m+1)/d_i(m):

      L(m,i) = (4m^2+7m-2i^2+3) / (2(m+1)(m-i+1))
               + i * sqrt((4i^4+8i^2 m+5i^2+m)/(m+i^2)) / (2(m+1)(m-i+1))

    The two radicals of the original display are merged into the single
    rational radicand, keeping the value inside one quadratic extension.
    """
    if m < 1 or i < 1 or i > m:
        raise ValueError(f"L(m,i) needs m >= 1, 1 <= i <= m; got m={m}, i={i}")
    den = 2 * (m + 1) * (m - i + 1)
    base = Fraction(4 * m * m + 7 * m - 2 * i * i + 3, den)
    radicand = Fraction(4 * i**4 + 8 * i * i * m + 5 * i * i + m, m + i * i)
    return SurdExpr(base, Fraction(i, den), radicand)


def ratio_lower_L_ext(m_val: int, i_val: int) -> ExtElem:
    """L(m,i) in the two-radical extension with D1 = sqrt(m+i^2),
    D2 = sqrt(4i^4+8i^2 m+5i^2+m); used to cross-check the merged form."""
    d1 = Fraction(m_val + i_val * i_val)
    d2 = Fraction(4 * i_val**4 + 8 * i_val * i_val * m_val + 5 * i_val * i_val + m_val)
    den = 2 * (m_val + 1) * (m_val - i_val + 1)
    base = Fraction(4 * m_val * m_val + 7 * m_val - 2 * i_val * i_val + 3, den)
    # i/(den) * D2/D1 = i/(den*d1) * D1*D2
    c11 = Fraction(i_val, den) / d1
    zero = Fraction(0)
    return ExtElem(base, zero, zero, c11, d1, d2)


def transposed_lower_R(i: int, m: int) -> Fraction:
    """R(i,m) = (m-i+1) m^3 / ((m-i)(m+1)(m^2+1)), a lower bound for
    d_i(m)^2 / (d_i(m-1) d_i(m+1)) valid for i >= 0, m >= i+1."""
    if i < 0 or m < i + 1:
        raise ValueError(f"R(i,m) needs i >= 0, m >= i+1; got i={i}, m={m}")
    return Fraction((m - i + 1) * m**3, (m - i) * (m + 1) * (m * m + 1))


# -- sweeps -----------------------------------------------------------


def sandwich_evals(
    table: BMTable, m_max: int, k: Optional[int] = None, m_min: int = 2
) -> Iterator[BoundEval]:
    for m in range(m_min, m_max + 1):
        for i in range(1, m):
            if k is None:
                f, g = fg_bounds(i, m)
                u = u_ratio(table, i, m)
            else:
                f, g = fg_bounds_k(i, m, k)
                u = u_ratio_k(table, i, m, k)
            yield BoundEval("sandwich", i, m, k, f, u, g)


def check_sandwich(
    table: BMTable, m_max: int, k_max: Optional[int] = None, m_min: int = 2
) -> Iterator[CheckReport]:
    """One aggregated report per row (and per k when k_max is given)."""
    ks: list[Optional[int]] = [None] if k_max is None else list(range(k_max + 1))
    for k in ks:
        for m in range(m_min, m_max + 1):
            strict = equal = failed = 0
            witnesses = []
            for ev in sandwich_evals(table, m, k, m_min=m):
                lo_gap = ev.actual - ev.lower
                hi_gap = ev.upper - ev.actual
                if lo_gap > 0 and hi_gap > 0:
                    strict += 1
                elif lo_gap < 0 or hi_gap < 0:
                    failed += 1
                    witnesses.append((ev.i, ev.lower, ev.actual))
                else:
                    equal += 1
                    witnesses.append((ev.i, ev.actual, ev.actual))
            verdict = _verdict_from_counts(strict, equal, failed, strict + equal + failed)
            params = {"m": m} if k is None else {"m": m, "k": k}
            yield CheckReport("sandwich", params, (1, m - 1), verdict, witnesses)


def check_L_bound(table: BMTable, m_max: int, m_min: int = 2) -> Iterator[CheckReport]:
    """d_i(m+1)/d_i(m) > L(m,i) decided by exact surd sign."""
    for m in range(m_min, m_max + 1):
        strict = equal = failed = 0
        witnesses = []
        for i in range(1, m):
            actual = table.d(i, m + 1) / table.d(i, m)
            gap_sign = (SurdExpr(actual) - ratio_lower_L(m, i)).sign()
            if gap_sign > 0:
                strict += 1
            elif gap_sign == 0:
                equal += 1
                witnesses.append((i, actual, actual))
            else:
                failed += 1
                witnesses.append((i, actual, surd_to_obj(ratio_lower_L(m, i))))
        verdict = _verdict_from_counts(strict, equal, failed, strict + equal + failed)
        yield CheckReport("L-bound", {"m": m}, (1, m - 1), verdict, witnesses,
                          method="surd-sign")


def check_R_bound(table: BMTable, i_max: int, m_span: int) -> Iterator[CheckReport]:
    """d_i(m)^2/(d_i(m-1) d_i(m+1)) > R(i,m) for i >= 0, m >= i+1."""
    for i in range(0, i_max + 1):
        strict = equal = failed = 0
        witnesses = []
        for m in range(i + 1, i + m_span + 1):
            actual = table.d(i, m) ** 2 / (table.d(i, m - 1) * table.d(i, m + 1))
            bound = transposed_lower_R(i, m)
            if actual > bound:
                strict += 1
            elif actual == bound:
                equal += 1
                witnesses.append((m, actual, bound))
            else:
                failed += 1
                witnesses.append((m, actual, bound))
        verdict = _verdict_from_counts(strict, equal, failed, strict + equal + failed)
        yield CheckReport("R-bound", {"i": i}, (i + 1, i + m_span), verdict, witnesses)


def cg_upper_evals(table: BMTable, m_max: int) -> Iterator[BoundEval]:
    """Chen-Gu: d_i(m)^2/(d_{i-1} d_{i+1}) < (m-i+1)(i+1)/((m-i) i)."""
    for m in range(2, m_max + 1):
        for i in range(1, m):
            actual = table.d(i, m) ** 2 / (table.d(i - 1, m) * table.d(i + 1, m))
            upper = Fraction((m - i + 1) * (i + 1), (m - i) * i)
            yield BoundEval("cg-upper", i, m, None, None, actual, upper)


def zhao_lower_evals(table: BMTable, m_max: int) -> Iterator[BoundEval]:
    """Zhao: d_i(m)^2/(d_{i-1} d_{i+1}) > (m-i+1)(i+1)(m+i^2)/((m-i) i (m+i^2+1))."""
    for m in range(2, m_max + 1):
        for i in range(1, m):
            actual = table.d(i, m) ** 2 / (table.d(i - 1, m) * table.d(i + 1, m))
            lower = Fraction(
                (m - i + 1) * (i + 1) * (m + i * i), (m - i) * i * (m + i * i + 1)
            )
            yield BoundEval("zhao-lower", i, m, None, lower, actual, None)


def L_evals(table: BMTable, m_max: int) -> Iterator[BoundEval]:
    for m in range(2, m_max + 1):
        for i in range(1, m):
            actual = table.d(i, m + 1) / table.d(i, m)
            yield BoundEval("L", i, m, None, ratio_lower_L(m, i), actual, None)


def R_evals(table: BMTable, i_max: int, m_span: int) -> Iterator[BoundEval]:
    for i in range(0, i_max + 1):
        for m in range(i + 1, i + m_span + 1):
            actual = table.d(i, m) ** 2 / (table.d(i, m - 1) * table.d(i, m + 1))
            yield BoundEval("R", i, m, None, transposed_lower_R(i, m), actual, None)


def E_evals(table: BMTable, m_max: int, k: Optional[int] = None) -> Iterator[BoundEval]:
    for m in range(2, m_max + 1):
        for i in range(1, m):
            yield BoundEval("E", i, m, k, Fraction(0), E_lower(i, m, k), None)

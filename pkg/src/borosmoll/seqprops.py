"""Property engine over finite exact-rational sequences.

Checks are exact ternary comparisons (no epsilons anywhere): a property
holds strictly, holds weakly (some comparisons are equalities, none
fail), is violated (with witnesses), or is inconclusive (the window is
too short or a work budget was exceeded).

Boundary conventions: the neighbor below the window's first index is 0,
matching the a_{-1} = 0 convention of the log-concavity operator.  The
neighbor above the last index is 0 only when the sequence is flagged
``complete`` (it captures the entire support, e.g. a full coefficient
row); otherwise indices needing it are excluded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .exact import rat_to_str

HOLDS_STRICTLY = "holds-strictly"
HOLDS_WEAKLY = "holds-weakly"
VIOLATED = "violated"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Seq:
    """Finite window of an exact-rational sequence starting at ``offset``."""

    offset: int
    values: tuple[Fraction, ...]
    complete: bool = False

    def __post_init__(self):
        if not self.values:
            raise ValueError("empty sequence")
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))

    @staticmethod
    def of(values: Iterable, offset: int = 0, complete: bool = False) -> "Seq":
        return Seq(offset, tuple(Fraction(v) for v in values), complete)

    @property
    def last(self) -> int:
        return self.offset + len(self.values) - 1

    def __len__(self) -> int:
        return len(self.values)

    def get(self, n: int) -> Fraction:
        if not self.offset <= n <= self.last:
            raise IndexError(f"index {n} outside window [{self.offset}, {self.last}]")
        return self.values[n - self.offset]

    def get_ext(self, n: int) -> Optional[Fraction]:
        """Value with boundary conventions; None when unknown."""
        if n < self.offset:
            return Fraction(0)
        if n <= self.last:
            return self.values[n - self.offset]
        return Fraction(0) if self.complete else None

    def all_positive(self) -> bool:
        return all(v > 0 for v in self.values)


@dataclass
class CheckReport:
    """Outcome of one verification; verdicts derive solely from exact
    comparisons.  A violated verdict carries at least one witness."""

    property: str
    params: dict
    window: Optional[tuple[int, int]]
    verdict: str
    witnesses: list[tuple] = field(default_factory=list)
    method: str = ""
    note: str = ""

    def to_obj(self) -> dict:
        def enc(x):
            if isinstance(x, Fraction):
                return rat_to_str(x)
            if isinstance(x, (list, tuple)):
                return [enc(v) for v in x]
            if isinstance(x, dict):
                return {k: enc(v) for k, v in x.items()}
            return x

        return {
            "property": self.property,
            "params": enc(self.params),
            "window": list(self.window) if self.window else None,
            "verdict": self.verdict,
            "witnesses": [enc(w) for w in self.witnesses],
            "method": self.method,
            "note": self.note,
        }


def _verdict_from_counts(strict: int, equal: int, failed: int, checked: int) -> str:
    if checked == 0:
        return INCONCLUSIVE
    if failed:
        return VIOLATED
    return HOLDS_STRICTLY if equal == 0 else HOLDS_WEAKLY


def _ternary_check(
    prop: str,
    params: dict,
    indices: Sequence[int],
    lhs_rhs,
    method: str = "",
) -> CheckReport:
    """Generic strict-inequality check: lhs(n) > rhs(n) expected.

    Witnesses record every index where the strict inequality fails.
    """
    strict = equal = failed = 0
    witnesses: list[tuple] = []
    for n in indices:
        lhs, rhs = lhs_rhs(n)
        if lhs > rhs:
            strict += 1
        elif lhs == rhs:
            equal += 1
            witnesses.append((n, lhs, rhs))
        else:
            failed += 1
            witnesses.append((n, lhs, rhs))
    window = (min(indices), max(indices)) if indices else None
    verdict = _verdict_from_counts(strict, equal, failed, len(indices))
    return CheckReport(prop, params, window, verdict, witnesses, method)


def l_operator(s: Seq) -> Seq:
    """Log-concavity defect sequence {a_n^2 - a_{n-1} a_{n+1}}.

    The left neighbor below the first index is 0; the last index is kept
    only for complete sequences (where the right neighbor is a true 0).
    """
    out = []
    hi = s.last if s.complete else s.last - 1
    if hi < s.offset:
        raise ValueError("window too short for the defect operator")
    for n in range(s.offset, hi + 1):
        left = s.get_ext(n - 1)
        right = s.get_ext(n + 1)
        out.append(s.get(n) ** 2 - left * right)
    return Seq(s.offset, tuple(out), s.complete)


def check_k_log_concave(s: Seq, k: int) -> CheckReport:
    """Iterated log-concavity: every entry of L^j(s) positive, j = 1..k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    params = {"order": k, "offset": s.offset, "len": len(s)}
    current = s
    strict = equal = failed = 0
    witnesses: list[tuple] = []
    for j in range(1, k + 1):
        if not current.complete and len(current) < 2:
            return CheckReport(
                "klogconcave", params, (s.offset, s.last), INCONCLUSIVE,
                witnesses, note=f"window exhausted at iteration {j}",
            )
        current = l_operator(current)
        for idx in range(current.offset, current.last + 1):
            v = current.get(idx)
            if v > 0:
                strict += 1
            elif v == 0:
                equal += 1
                witnesses.append(((j, idx), v, Fraction(0)))
            else:
                failed += 1
                witnesses.append(((j, idx), v, Fraction(0)))
    verdict = _verdict_from_counts(strict, equal, failed, strict + equal + failed)
    return CheckReport("klogconcave", params, (s.offset, s.last), verdict, witnesses)


def briggs_sides(s: Seq, k: int) -> tuple[Fraction, Fraction]:
    """The two sides of the quartic Briggs comparison at index k."""
    a0 = s.get(k - 1)
    a1 = s.get(k)
    a2 = s.get_ext(k + 1)
    a3 = s.get_ext(k + 2)
    if a2 is None or a3 is None:
        raise IndexError(f"Briggs quadruple at {k} leaves the window")
    lhs = a1 * a1 * (a1 * a1 - a0 * a2)
    rhs = a0 * a0 * (a2 * a2 - a1 * a3)
    return lhs, rhs


def briggs_indices(s: Seq) -> list[int]:
    """Admissible Briggs indices: the first window index acts only as the
    left neighbor, so checks start at offset+1."""
    hi = s.last - 1 if s.complete else s.last - 2
    return list(range(s.offset + 1, hi + 1))


def check_briggs(s: Seq, params: Optional[dict] = None) -> CheckReport:
    """Briggs inequality a_k^2(a_k^2 - a_{k-1}a_{k+1}) > a_{k-1}^2(a_{k+1}^2 - a_k a_{k+2})."""
    indices = briggs_indices(s)
    if not indices:
        return CheckReport("briggs", params or {}, None, INCONCLUSIVE,
                           note="window too short")
    return _ternary_check(
        "briggs", params or {"offset": s.offset, "len": len(s)}, indices,
        lambda k: briggs_sides(s, k),
    )


def check_ratio_log_convex(s: Seq, params: Optional[dict] = None) -> CheckReport:
    """Strict log-convexity of the consecutive-ratio sequence:
    (a_n/a_{n-1})^2 < (a_{n-1}/a_{n-2})(a_{n+1}/a_n) at interior n."""
    if not s.all_positive():
        raise ValueError("ratio-log-convexity needs a positive sequence")
    indices = list(range(s.offset + 2, s.last))
    if not indices:
        return CheckReport("ratiologconvex", params or {}, None, INCONCLUSIVE,
                           note="window too short")

    def sides(n):
        # cross-multiplied: a_{n-1} a_{n+1} a_{n-1}^2 ... vs ...; compare
        # rhs > lhs with lhs the squared middle ratio
        lhs = (s.get(n) / s.get(n - 1)) ** 2
        rhs = (s.get(n - 1) / s.get(n - 2)) * (s.get(n + 1) / s.get(n))
        return rhs, lhs  # expected rhs > lhs

    return _ternary_check(
        "ratiologconvex", params or {"offset": s.offset, "len": len(s)},
        indices, sides,
    )


def check_log_convex_interior(s: Seq) -> CheckReport:
    """Strict log-convexity a_{n-1} a_{n+1} > a_n^2 on interior indices,
    with no boundary extension (definition-level helper)."""
    indices = list(range(s.offset + 1, s.last))
    if not indices:
        return CheckReport("logconvex", {}, None, INCONCLUSIVE, note="window too short")
    return _ternary_check(
        "logconvex", {"offset": s.offset, "len": len(s)}, indices,
        lambda n: (s.get(n - 1) * s.get(n + 1), s.get(n) ** 2),
    )


def check_log_concave_interior(s: Seq) -> CheckReport:
    """Strict log-concavity a_n^2 > a_{n-1} a_{n+1} on interior indices."""
    indices = list(range(s.offset + 1, s.last))
    if not indices:
        return CheckReport("logconcave", {}, None, INCONCLUSIVE, note="window too short")
    return _ternary_check(
        "logconcave", {"offset": s.offset, "len": len(s)}, indices,
        lambda n: (s.get(n) ** 2, s.get(n - 1) * s.get(n + 1)),
    )


DEFAULT_BIT_BUDGET = 20_000_000


def _pow_bits(x: Fraction, e: int) -> int:
    return e * (x.numerator.bit_length() + x.denominator.bit_length())


def check_nthroot_log_convex(
    s: Seq, params: Optional[dict] = None, bit_budget: int = DEFAULT_BIT_BUDGET
) -> CheckReport:
    """Strict log-convexity of {a_n^(1/n)} by exact cross-powering:

      a_{n+1}^(2n(n+2)) < a_n^((n+1)(n+2)) * a_{n+2}^(n(n+1))

    after clearing denominators.  Comparisons whose operand bit-size
    would exceed ``bit_budget`` make the verdict inconclusive.  Witnesses
    are (n, comparison sign, (a_n, a_{n+1}, a_{n+2})); sign < 0 is the
    strictly reversed (log-concave) direction.
    """
    if s.offset < 1:
        raise ValueError("n-th root sequence must start at n >= 1")
    if not s.all_positive():
        raise ValueError("n-th root check needs a positive sequence")
    indices = list(range(s.offset, s.last - 1))
    if not indices:
        return CheckReport("nthroot", params or {}, None, INCONCLUSIVE,
                           note="window too short")
    strict = equal = failed = 0
    witnesses: list[tuple] = []
    skipped: list[int] = []
    for n in indices:
        a0, a1, a2 = s.get(n), s.get(n + 1), s.get(n + 2)
        e1 = 2 * n * (n + 2)
        e0 = (n + 1) * (n + 2)
        e2 = n * (n + 1)
        work = (
            _pow_bits(a1, e1) + _pow_bits(a0, e0) + _pow_bits(a2, e2)
        )
        if work > bit_budget:
            skipped.append(n)
            continue
        lhs = a1.numerator**e1 * a0.denominator**e0 * a2.denominator**e2
        rhs = a1.denominator**e1 * a0.numerator**e0 * a2.numerator**e2
        # the compared powers are far too large to serialize: witnesses
        # carry the comparison sign and the three driving values instead
        if rhs > lhs:
            strict += 1
        elif rhs == lhs:
            equal += 1
            witnesses.append((n, 0, (a0, a1, a2)))
        else:
            failed += 1
            witnesses.append((n, -1, (a0, a1, a2)))
    if skipped:
        return CheckReport(
            "nthroot", params or {}, (indices[0], indices[-1]), INCONCLUSIVE,
            witnesses, note=f"bit budget exceeded at n={skipped!r}",
        )
    verdict = _verdict_from_counts(strict, equal, failed, len(indices))
    return CheckReport("nthroot", params or {"offset": s.offset, "len": len(s)},
                       (indices[0], indices[-1]), verdict, witnesses)


def toeplitz_det3(s: Seq, k: int) -> Fraction:
    """3x3 Toeplitz determinant on entries a_{k-1}..a_{k+3}; positivity is
    the determinant reformulation of the cubic Newton-type inequality."""
    a = []
    for n in range(k - 1, k + 4):
        v = s.get_ext(n)
        if v is None:
            raise IndexError(f"entry {n} unavailable for the 3x3 determinant at k={k}")
        a.append(v)
    am1, a0, a1, a2, a3 = a
    # rows: (a_{k+1} a_{k+2} a_{k+3}; a_k a_{k+1} a_{k+2}; a_{k-1} a_k a_{k+1})
    return (
        a1 * (a1 * a1 - a0 * a2)
        - a2 * (a0 * a1 - am1 * a2)
        + a3 * (a0 * a0 - am1 * a1)
    )


def check_toeplitz_det3(s: Seq, params: Optional[dict] = None) -> CheckReport:
    hi = s.last - 1 if s.complete else s.last - 3
    indices = list(range(s.offset + 1, hi + 1))
    if not indices:
        return CheckReport("turan3det", params or {}, None, INCONCLUSIVE,
                           note="window too short")
    return _ternary_check(
        "turan3det", params or {"offset": s.offset, "len": len(s)}, indices,
        lambda k: (toeplitz_det3(s, k), Fraction(0)),
    )


def elem_sym(xs: Sequence[Fraction]) -> Seq:
    """Elementary symmetric functions (e_0, ..., e_n) of a positive
    multiset, via the product expansion of prod (x + x_j)."""
    if not xs:
        raise ValueError("empty multiset")
    coeffs = [Fraction(1)]
    for x in xs:
        x = Fraction(x)
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for d, c in enumerate(coeffs):
            nxt[d] += c * x
            nxt[d + 1] += c
        coeffs = nxt
    # coeffs[d] is the coefficient of x^d = e_{n-d}; reverse to e_0..e_n
    return Seq(0, tuple(reversed(coeffs)), complete=True)

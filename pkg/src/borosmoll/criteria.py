"""Criterion-level checks.

Two generic meta-criteria drive the transposed-sequence results:

* log-concavity (or 2-log-convexity) together with ratio-log-convexity
  forces the Briggs inequality;
* the Sun-Zhao three-condition test on a two-term recurrence
  S_n = a(n) S_{n-1} + b(n) S_{n-2} forces ratio-log-convexity, and the
  Chen-Guo-Wang seed condition then lifts it to strict log-convexity of
  the n-th root sequence.

Both are verified pointwise in exact arithmetic, and their conclusions
are re-checked independently on the data: a window where the hypotheses
hold but the conclusion fails would falsify the implementation, never
the criterion, and is flagged as such.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Optional

from .core import BMTable, ratio_r0
from .exact import ExtElem, MPoly, RatFunc, SurdExpr, rat_to_str
from .seqprops import (
    HOLDS_STRICTLY,
    HOLDS_WEAKLY,
    INCONCLUSIVE,
    VIOLATED,
    CheckReport,
    Seq,
    briggs_indices,
    briggs_sides,
    check_briggs,
    check_log_concave_interior,
    check_ratio_log_convex,
    _verdict_from_counts,
)


@dataclass(frozen=True)
class RecurrenceSpec:
    """Two-term recurrence S_n = a(n) S_{n-1} + b(n) S_{n-2}, valid for
    n >= n0, with a(n) > 0 and b(n) < 0 on the validity range."""

    a: RatFunc
    b: RatFunc
    n0: int

    def a_at(self, n: int) -> Fraction:
        return self.a.eval({"n": n})

    def b_at(self, n: int) -> Fraction:
        return self.b.eval({"n": n})


@dataclass(frozen=True)
class GFunction:
    """Exactly evaluable separating function n -> g(n) (a quadratic surd)."""

    fn: Callable[[int], SurdExpr]
    description: str = ""

    def at(self, n: int) -> SurdExpr:
        return self.fn(n)


def bm_recurrence_spec(i: int) -> RecurrenceSpec:
    """The fixed-i recurrence for the transposed sequence d_i(n):
    a(n) = (8n^2-8n-4i^2+3)/(2n(n-i)),
    b(n) = -(4n-5)(4n-3)(n-1+i)/(4n(n-1)(n-i))."""
    n = RatFunc.var("n")
    a = (8 * n**2 - 8 * n + (3 - 4 * i * i)) / (2 * n * (n - i))
    b = -((4 * n - 5) * (4 * n - 3) * (n + (i - 1))) / (4 * n * (n - 1) * (n - i))
    return RecurrenceSpec(a, b, i + 2)


def bm_g_function(i: int) -> GFunction:
    """g(n): the ratio lower bound shifted by one,
    g(n) = (4n^2-2i^2-n)/(2n(n-i)) + i*sqrt(D2/D1)/(2n(n-i)) with
    D1 = i^2+n-1, D2 = 4i^4+8i^2 n-3i^2+n-1."""

    def fn(n: int) -> SurdExpr:
        den = 2 * n * (n - i)
        base = Fraction(4 * n * n - 2 * i * i - n, den)
        radicand = Fraction(4 * i**4 + 8 * i * i * n - 3 * i * i + n - 1, i * i + n - 1)
        return SurdExpr(base, Fraction(i, den), radicand)

    return GFunction(fn, description=f"ratio lower bound for i={i}")


def bm_deltas(i: int, n: int) -> tuple[Fraction, Fraction]:
    """Squared generators of the extension at integer (i, n)."""
    d1 = Fraction(i * i + n - 1)
    d2 = Fraction(4 * i**4 + 8 * i * i * n - 3 * i * i + n - 1)
    return d1, d2


def bm_g_ext(i: int, n: int) -> ExtElem:
    """g(n) as an extension element: c00 + c11 * D1*D2 with
    c11 = i / (2n(n-i)(i^2+n-1))."""
    d1, d2 = bm_deltas(i, n)
    den = 2 * n * (n - i)
    zero = Fraction(0)
    return ExtElem(
        Fraction(4 * n * n - 2 * i * i - n, den), zero, zero,
        Fraction(i, den) / d1, d1, d2,
    )


# -- generic Briggs criterion ------------------------------------------


def c_ratio(s: Seq, n: int) -> Fraction:
    """c_n = a_{n-1} a_{n+1} / a_n^2."""
    return s.get(n - 1) * s.get(n + 1) / s.get(n) ** 2


def briggs_via_c(s: Seq, n: int) -> tuple[Fraction, Fraction]:
    """Briggs at n, rewritten through c_n: (c_{n+1}-1) c_n^2 vs c_n - 1."""
    cn = c_ratio(s, n)
    cn1 = c_ratio(s, n + 1)
    return (cn1 - 1) * cn * cn, cn - 1


def check_two_log_convex(s: Seq) -> CheckReport:
    """Strict 2-log-convexity on interior indices: the log-convexity
    defect sequence is negative and itself strictly log-convex."""
    indices = list(range(s.offset + 2, s.last - 1))
    if not indices:
        return CheckReport("twologconvex", {}, None, INCONCLUSIVE, note="window too short")

    def sides(n):
        # defects t_j = a_j^2 - a_{j-1}a_{j+1} are negative; strict
        # 2-log-convexity asks t_n^2 < t_{n-1} t_{n+1}
        tm = s.get(n - 1) ** 2 - s.get(n - 2) * s.get(n)
        t0 = s.get(n) ** 2 - s.get(n - 1) * s.get(n + 1)
        tp = s.get(n + 1) ** 2 - s.get(n) * s.get(n + 2)
        return tm * tp, t0 * t0

    from .seqprops import _ternary_check

    return _ternary_check("twologconvex", {"offset": s.offset, "len": len(s)},
                          indices, sides)


def theorem41_check(s: Seq, mode: str = "logconcave",
                    params: Optional[dict] = None) -> CheckReport:
    """Criterion: strict log-concavity (or strict 2-log-convexity) plus
    strict ratio-log-convexity imply the Briggs inequality.

    The hypotheses and the conclusion are verified independently; a
    window with strict hypotheses and a failing conclusion indicates an
    implementation bug and is flagged distinctly.
    """
    if mode not in ("logconcave", "twologconvex"):
        raise ValueError(f"unknown mode {mode!r}")
    if len(s) < 5:
        return CheckReport("theorem41", params or {}, None, INCONCLUSIVE,
                           note="window too short")
    if not s.all_positive():
        raise ValueError("criterion needs a positive sequence")
    hyp1 = (check_log_concave_interior(s) if mode == "logconcave"
            else check_two_log_convex(s))
    hyp2 = check_ratio_log_convex(s)
    # conclusion window: offset+1 (log-concave route) or offset+2
    start = s.offset + 1 if mode == "logconcave" else s.offset + 2
    indices = [k for k in briggs_indices(s) if k >= start]
    from .seqprops import _ternary_check

    conclusion = _ternary_check("briggs", {}, indices, lambda k: briggs_sides(s, k))
    hyps_strict = hyp1.verdict == HOLDS_STRICTLY and hyp2.verdict == HOLDS_STRICTLY
    note = (f"hypotheses[{mode}]={hyp1.verdict}, ratio-log-convex={hyp2.verdict}, "
            f"conclusion={conclusion.verdict}")
    if hyps_strict and conclusion.verdict != HOLDS_STRICTLY:
        return CheckReport(
            "theorem41", params or {}, conclusion.window, VIOLATED,
            conclusion.witnesses, method=mode,
            note="IMPLEMENTATION FALSIFIED: hypotheses hold, conclusion fails; " + note,
        )
    if not hyps_strict:
        return CheckReport(
            "theorem41", params or {}, conclusion.window, INCONCLUSIVE,
            hyp1.witnesses + hyp2.witnesses, method=mode,
            note="hypotheses not strict; no conclusion asserted; " + note,
        )
    return CheckReport("theorem41", params or {}, conclusion.window,
                       conclusion.verdict, conclusion.witnesses, method=mode, note=note)


# -- Sun-Zhao conditions ------------------------------------------------


def sunzhao_pointwise(
    rec: RecurrenceSpec, g: GFunction, s: Seq, n: int
) -> CheckReport:
    """All Sun-Zhao conditions at a single integer n (exact arithmetic)."""
    a_n = rec.a_at(n)
    b_n = rec.b_at(n)
    a_n1 = rec.a_at(n + 1)
    b_n1 = rec.b_at(n + 1)
    gn = g.at(n)
    checks: list[tuple[str, int, int]] = []  # (name, sign, expected-min)

    # recurrence consistency and sign hypotheses
    rec_ok = s.get(n) == a_n * s.get(n - 1) + b_n * s.get(n - 2)
    checks.append(("recurrence", 0 if rec_ok else -1, 0))
    checks.append(("a-positive", (a_n > 0) - (a_n < 0), 1))
    checks.append(("b-negative", (b_n < 0) - (b_n > 0), 1))

    # condition (i): a(n)/2 <= g(n) <= S_n / S_{n-1}
    lower_sign = (gn - a_n / 2).sign()
    upper_sign = (SurdExpr(s.get(n) / s.get(n - 1)) - gn).sign()
    checks.append(("cond-i-lower", lower_sign, 0))
    checks.append(("cond-i-upper", upper_sign, 0))

    # conditions (ii) and (iii), evaluated in the two-radical extension
    gx = bm_g_ext_from(g, n)
    cond2 = 4 * gx**3 - 3 * a_n * gx**2 - a_n1 * b_n
    cond3 = gx**4 - a_n * gx**3 - (a_n1 * b_n) * gx - b_n * b_n1
    checks.append(("cond-ii", cond2.sign(), 0))
    checks.append(("cond-iii", cond3.sign(), 0))

    witnesses = [(n, name, sign) for name, sign, least in checks if sign < least]
    strict = all(sign > 0 for name, sign, _ in checks
                 if name.startswith("cond")) and rec_ok
    if witnesses:
        verdict = VIOLATED
    elif strict:
        verdict = HOLDS_STRICTLY
    else:
        verdict = HOLDS_WEAKLY
    return CheckReport(
        "sunzhao", {"n": n}, (n, n), verdict,
        witnesses, method="surd+extension",
        note="condition (i) upper verified on window only",
    )


def bm_g_ext_from(g: GFunction, n: int) -> ExtElem:
    """Lift the surd g(n) into the extension whose generators square to
    the radicand's numerator and denominator scaled appropriately."""
    gn = g.at(n)
    num = gn.radicand.numerator
    den = gn.radicand.denominator
    d1 = Fraction(den)
    d2 = Fraction(num)
    zero = Fraction(0)
    # base + coeff*sqrt(num/den) = base + (coeff/den) * D1 * D2
    return ExtElem(gn.base, zero, zero, gn.coeff / den, d1, d2)


def sunzhao_conditions(
    rec: RecurrenceSpec, g: GFunction, s: Seq, n_range: Iterator[int] | list[int]
) -> Iterator[CheckReport]:
    for n in n_range:
        yield sunzhao_pointwise(rec, g, s, n)


def sunzhao_cross_check(i: int, n: int, g1_poly: MPoly, g2_poly: MPoly) -> bool:
    """Condition (iii) two routes: the extension evaluation of h(g(n))
    must agree in sign with G1 + D1*D2*G2 at (i, n)."""
    rec = bm_recurrence_spec(i)
    g = bm_g_function(i)
    gx = bm_g_ext(i, n)
    a_n, b_n = rec.a_at(n), rec.b_at(n)
    a_n1, b_n1 = rec.a_at(n + 1), rec.b_at(n + 1)
    cond3 = gx**4 - a_n * gx**3 - (a_n1 * b_n) * gx - b_n * b_n1
    d1, d2 = bm_deltas(i, n)
    point = {"i": i, "n": n}
    surd = SurdExpr(g1_poly.eval(point), g2_poly.eval(point), d1 * d2)
    return cond3.sign() == surd.sign()


def delta_product_bound(i: int, n: int) -> CheckReport:
    """D1*D2 > 2i(i^2+n-1), decided by comparing squares; the squared
    residual factors as (i^2+n-1)(4i^2 n+i^2+n-1)."""
    if i < 1 or n < i + 2:
        raise ValueError(f"needs i >= 1, n >= i+2; got i={i}, n={n}")
    d1, d2 = bm_deltas(i, n)
    rhs = Fraction(2 * i) * (i * i + n - 1)
    diff = d1 * d2 - rhs * rhs
    expected = Fraction(i * i + n - 1) * (4 * i * i * n + i * i + n - 1)
    ok = diff == expected and diff > 0
    return CheckReport(
        "delta12", {"i": i, "n": n}, (n, n),
        HOLDS_STRICTLY if ok else VIOLATED,
        [] if ok else [(n, diff, expected)],
        method="squared-comparison",
    )


def delta_product_residual_identity() -> bool:
    """Symbolic form of the squared residual identity."""
    i = MPoly.var("i")
    n = MPoly.var("n")
    d1 = i**2 + n - 1
    d2 = 4 * i**4 + 8 * i**2 * n - 3 * i**2 + n - 1
    residual = d1 * d2 - (2 * i) ** 2 * d1**2
    return residual == d1 * (4 * i**2 * n + i**2 + n - 1)


# -- transposed i = 0 ---------------------------------------------------


def delta0_closed_form(m: int) -> Fraction:
    return -Fraction(8 * m * m + 5 * m - 2, 4 * m * m * (m + 1) ** 2 * (m + 2))


def delta0_from_ratios(r1: Fraction, r2: Fraction, r3: Fraction) -> Fraction:
    """delta_0(m) = r1^2 (1 - r2/r1) - r2^2 (1 - r3/r2) from consecutive
    first-column ratios r_j = d_0(m+j-1)/d_0(m+j-2)."""
    return r1 * r1 * (1 - r2 / r1) - r2 * r2 * (1 - r3 / r2)


def transposed_briggs_i0(table: BMTable, m_max: int, m_min: int = 1) -> CheckReport:
    """The first column satisfies the reversed Briggs inequality; the
    defect delta_0(m), computed from data ratios, matches its closed form
    and is negative."""
    witnesses = []
    strict = 0
    for m in range(m_min, m_max + 1):
        r1 = table.d(0, m) / table.d(0, m - 1)
        r2 = table.d(0, m + 1) / table.d(0, m)
        r3 = table.d(0, m + 2) / table.d(0, m + 1)
        delta = delta0_from_ratios(r1, r2, r3)
        closed = delta0_closed_form(m)
        # ratio route must agree with r0(m) = (4m-1)/(2m)
        ratios_ok = r1 == ratio_r0(m) and r2 == ratio_r0(m + 1) and r3 == ratio_r0(m + 2)
        # data-level reversed Briggs
        d = [table.d(0, m - 1), table.d(0, m), table.d(0, m + 1), table.d(0, m + 2)]
        lhs = d[1] ** 2 * (d[1] ** 2 - d[0] * d[2])
        rhs = d[0] ** 2 * (d[2] ** 2 - d[1] * d[3])
        if delta == closed and delta < 0 and lhs < rhs and ratios_ok:
            strict += 1
        else:
            witnesses.append((m, delta, closed))
    verdict = HOLDS_STRICTLY if not witnesses else VIOLATED
    return CheckReport("transposed-briggs-i0", {"m_min": m_min, "m_max": m_max},
                       (m_min, m_max), verdict, witnesses,
                       note="reversed inequality expected and confirmed")


# -- n-th root seed (Chen-Guo-Wang) --------------------------------------


def cgw_seed_sides(seed: Seq, N: int) -> tuple[int, int]:
    """Cross-powered seed comparison at N:
    S_{N+1}^(2N(N+2)) vs S_N^((N+1)(N+2)) S_{N+2}^(N(N+1)) (cleared)."""
    a0, a1, a2 = seed.get(N), seed.get(N + 1), seed.get(N + 2)
    e1 = 2 * N * (N + 2)
    e0 = (N + 1) * (N + 2)
    e2 = N * (N + 1)
    lhs = a1.numerator**e1 * a0.denominator**e0 * a2.denominator**e2
    rhs = a1.denominator**e1 * a0.numerator**e0 * a2.numerator**e2
    return lhs, rhs


def cgw_nthroot(seed: Seq, N: int, params: Optional[dict] = None) -> CheckReport:
    """Seed condition of the n-th-root log-convexity criterion at N.

    With ratio-log-convexity already verified on the window, a strict
    seed makes {S_n^(1/n)} strictly log-convex from N on.
    """
    if N < 1 or N + 2 > seed.last:
        raise ValueError("seed needs indices N..N+2 inside the window")
    if not seed.all_positive():
        raise ValueError("seed sequence must be positive")
    lhs, rhs = cgw_seed_sides(seed, N)
    if lhs < rhs:
        verdict = HOLDS_STRICTLY
        witnesses = []
    elif lhs == rhs:
        verdict = HOLDS_WEAKLY
        witnesses = [(N, Fraction(lhs), Fraction(rhs))]
    else:
        verdict = VIOLATED
        witnesses = [(N, Fraction(lhs), Fraction(rhs))]
    return CheckReport("cgw-seed", params or {"N": N}, (N, N + 2), verdict,
                       witnesses, method="cross-powering")


def r_seed_cubed(table: BMTable, i: int) -> Fraction:
    """The cube of the seed ratio d_i(i+2) / (d_i(i+1) d_i(i+3)^(1/3)):
    rational, so monotonicity and the < 1 test are exact."""
    return table.d(i, i + 2) ** 3 / (table.d(i, i + 1) ** 3 * table.d(i, i + 3))


def check_r_seed_decreasing(table: BMTable, i_max: int) -> CheckReport:
    """Strict decrease of the seed ratio along i, by cube comparison."""
    witnesses = []
    strict = 0
    for i in range(0, i_max):
        ri = r_seed_cubed(table, i)
        rn = r_seed_cubed(table, i + 1)
        if ri > rn:
            strict += 1
        else:
            witnesses.append((i, ri, rn))
    verdict = HOLDS_STRICTLY if not witnesses else VIOLATED
    return CheckReport("r-seed-decreasing", {"i_max": i_max}, (0, i_max),
                       verdict, witnesses, method="cube-comparison")

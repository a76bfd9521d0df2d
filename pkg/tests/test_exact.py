import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from borosmoll.exact import (
    ExtElem,
    MPoly,
    RatFunc,
    SurdExpr,
    divexact_univar,
    mpoly_equal,
    mpoly_eval,
    parse_mpoly,
    poly_from_coeffs,
    rat_from_str,
    rat_to_str,
    surd_sign,
    univar_coeffs,
)

i = MPoly.var("i")
m = MPoly.var("m")


class TestMPoly:
    def test_eval_simple(self):
        p = m**2 * (4 * m - i)
        assert mpoly_eval(p, {"i": 1, "m": 3}) == 99

    def test_eval_zero_poly(self):
        assert mpoly_eval(MPoly.zero(("i",)), {"i": F(7, 3)}) == 0

    def test_eval_missing_variable(self):
        with pytest.raises(ValueError):
            mpoly_eval(i + m, {"i": 1})

    def test_equal_and_not_equal(self):
        x = MPoly.var("x")
        assert mpoly_equal((x + 1) * (x - 1), x**2 - 1)
        assert not mpoly_equal(x + 1, x)

    def test_pow_and_subs(self):
        p = (i + 1) ** 3
        q = p.subs({"i": i - 1})
        assert q == i**3

    def test_shift_substitution_two_vars(self):
        u = MPoly.var("u")
        s = MPoly.var("s")
        p = m - i  # m = i+1+s, i = 1+u  =>  1+s
        shifted = p.subs({"i": u + 1, "m": u + s + 2})
        assert shifted == s + 1

    def test_serialization_round_trip(self):
        p = 3 * i**2 * m - 5 * i + 7
        text = p.to_text()
        assert parse_mpoly(text, ("i", "m")) == p

    def test_canonical_text_is_sorted(self):
        p = 1 + i + m + i * m
        # graded lex, descending: i*m first, then i, m, constant
        assert p.to_text() == "1*i^1*m^1 + 1*i^1 + 1*m^1 + 1"

    def test_zero_text(self):
        assert MPoly.zero(("i",)).to_text() == "0"
        assert parse_mpoly("0", ("i",)).is_zero


@st.composite
def small_polys(draw):
    n_terms = draw(st.integers(0, 5))
    terms = {}
    for _ in range(n_terms):
        e = (draw(st.integers(0, 3)), draw(st.integers(0, 3)))
        terms[e] = terms.get(e, 0) + draw(st.integers(-9, 9))
    return MPoly(("x", "y"), terms)


class TestMPolyProperties:
    @given(small_polys(), small_polys(), small_polys())
    @settings(max_examples=150, deadline=None)
    def test_distributive(self, p, q, r):
        assert (p + q) * r == p * r + q * r

    @given(small_polys(), small_polys())
    @settings(max_examples=150, deadline=None)
    def test_eval_is_ring_hom(self, p, q):
        point = {"x": F(3, 7), "y": F(-2, 5)}
        assert (p * q).eval(point) == p.eval(point) * q.eval(point)
        assert (p + q).eval(point) == p.eval(point) + q.eval(point)

    @given(small_polys())
    @settings(max_examples=100, deadline=None)
    def test_text_round_trip(self, p):
        assert parse_mpoly(p.to_text(), ("x", "y")) == p


class TestRatFunc:
    def test_equality_cross_multiplication(self):
        x = RatFunc.var("x")
        a = (x**2 - 1) / (x - 1)
        b = (x + 1) / 1
        assert a == b  # no GCD computed, equality still exact

    def test_arith_eval_consistency(self):
        x = RatFunc.var("x")
        y = RatFunc.var("y")
        expr = (x + y) / (x - y) - 2 * x / (x + y)
        pt = {"x": F(5, 2), "y": F(1, 3)}
        lhs = expr.eval(pt)
        direct = (pt["x"] + pt["y"]) / (pt["x"] - pt["y"]) - 2 * pt["x"] / (pt["x"] + pt["y"])
        assert lhs == direct

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            RatFunc(MPoly.var("x"), MPoly.zero(("x",)))

    def test_content_keeps_polys_integral(self):
        x = RatFunc.var("x")
        r = (x / 2 + x / 3) * 6
        assert r == 5 * x
        assert all(isinstance(c, int) for c in r.num.terms.values())

    @given(small_polys(), small_polys(), small_polys())
    @settings(max_examples=60, deadline=None)
    def test_equality_agrees_with_evaluation(self, p, q, r):
        # (p/r) + (q/r) == (p+q)/r, checked structurally and at points
        if r.is_zero:
            return
        lhs = RatFunc(p, r) + RatFunc(q, r)
        rhs = RatFunc(p + q, r)
        assert lhs == rhs
        rng = random.Random(42)
        hits = 0
        while hits < 3:
            pt = {"x": F(rng.randint(-20, 20), rng.randint(1, 7)),
                  "y": F(rng.randint(-20, 20), rng.randint(1, 7))}
            if r.eval(pt) == 0:
                continue
            hits += 1
            assert lhs.eval(pt) == rhs.eval(pt)


class TestSurdExpr:
    def test_sign_examples(self):
        assert surd_sign(SurdExpr(F(3), F(-2), F(2))) == 1   # 9 > 8
        assert surd_sign(SurdExpr(F(1), F(-1), F(2))) == -1  # 1 < 2
        assert surd_sign(SurdExpr(F(0), F(0), F(5))) == 0

    def test_sign_zero_cases(self):
        assert surd_sign(SurdExpr(F(-2), F(1), F(4))) == 0   # -2 + sqrt(4)
        assert surd_sign(SurdExpr(F(2), F(-1), F(4))) == 0

    def test_negative_radicand_rejected(self):
        with pytest.raises(ValueError):
            SurdExpr(F(1), F(1), F(-1))

    def test_mixed_radicands_rejected(self):
        a = SurdExpr(F(0), F(1), F(2))
        b = SurdExpr(F(0), F(1), F(3))
        with pytest.raises(ValueError):
            a + b

    def test_arithmetic(self):
        s = SurdExpr(F(1), F(1), F(2))  # 1 + sqrt(2)
        sq = s * s                       # 3 + 2 sqrt(2)
        assert sq.base == 3 and sq.coeff == 2
        assert (s**2).base == 3
        assert (s - s).sign() == 0

    def test_sign_matches_float_on_random_inputs(self):
        # exact sign agrees with double evaluation when the float margin
        # is comfortable
        rng = random.Random(20240817)
        checked = 0
        trials = 0
        while checked < 10_000 and trials < 100_000:
            trials += 1
            s = SurdExpr(
                F(rng.randint(-50, 50), rng.randint(1, 20)),
                F(rng.randint(-50, 50), rng.randint(1, 20)),
                F(rng.randint(0, 60), rng.randint(1, 10)),
            )
            approx = s.to_float()
            if abs(approx) <= 1e-6:
                continue
            checked += 1
            assert s.sign() == (1 if approx > 0 else -1)
        assert checked == 10_000


class TestExtElem:
    D1 = F(3)   # i=1, n=3: i^2+n-1
    D2 = F(18)  # 4i^4+8i^2 n-3i^2+n-1

    def one(self):
        return ExtElem.scalar(F(1), self.D1, self.D2)

    def test_defining_relations(self):
        d1 = ExtElem.delta1(self.D1, self.D2)
        d2 = ExtElem.delta2(self.D1, self.D2)
        sq = d1 * d1
        assert (sq.c00, sq.c10, sq.c01, sq.c11) == (self.D1, 0, 0, 0)
        prod = d1 * d2
        assert (prod.c00, prod.c10, prod.c01, prod.c11) == (0, 0, 0, 1)

    def test_difference_of_squares(self):
        d1 = ExtElem.delta1(self.D1, self.D2)
        p = (self.one() + d1) * (self.one() - d1)
        assert (p.c00, p.c10, p.c01, p.c11) == (1 - self.D1, 0, 0, 0)

    def test_mul_commutative_associative(self):
        rng = random.Random(5)

        def rand_elem():
            return ExtElem(*(F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(4)),
                           self.D1, self.D2)

        for _ in range(50):
            x, y, z = rand_elem(), rand_elem(), rand_elem()
            assert x * y == y * x
            assert (x * y) * z == x * (y * z)

    def test_sign_agrees_with_float(self):
        rng = random.Random(99)
        s1, s2 = math.sqrt(float(self.D1)), math.sqrt(float(self.D2))
        for _ in range(2000):
            coords = [F(rng.randint(-8, 8), rng.randint(1, 5)) for _ in range(4)]
            x = ExtElem(*coords, self.D1, self.D2)
            approx = (float(coords[0]) + float(coords[1]) * s1
                      + float(coords[2]) * s2 + float(coords[3]) * s1 * s2)
            if abs(approx) < 1e-9:
                continue
            assert x.sign() == (1 if approx > 0 else -1)

    def test_sign_with_rational_product_of_radicals(self):
        # d1*d2 = 36 is a perfect square: D1*D2 = 6 exactly
        x = ExtElem(F(6), F(0), F(0), F(-1), F(2), F(18))
        assert x.sign() == 0
        y = ExtElem(F(7), F(0), F(0), F(-1), F(2), F(18))
        assert y.sign() == 1

    def test_specialization_matches_surd_arithmetic(self):
        # (a + b D1)^2 computed in the extension vs SurdExpr directly
        a, b = F(2, 3), F(5, 7)
        x = ExtElem(a, b, F(0), F(0), self.D1, self.D2)
        sq = x * x
        surd = SurdExpr(a, b, self.D1) ** 2
        assert sq.c00 == surd.base and sq.c10 == surd.coeff

    def test_pow(self):
        d1 = ExtElem.delta1(self.D1, self.D2)
        assert d1**4 == ExtElem.scalar(self.D1**2, self.D1, self.D2)

    def test_symbolic_defining_relation(self):
        # D1 * D1 reduces to the squared generator as a rational function
        iv = RatFunc.var("i")
        nv = RatFunc.var("n")
        d1 = iv**2 + nv - 1
        d2 = 4 * iv**4 + 8 * iv**2 * nv - 3 * iv**2 + nv - 1
        D1 = ExtElem.delta1(d1, d2)
        sq = D1 * D1
        assert sq.c00 == d1
        assert sq.c10.is_zero and sq.c01.is_zero and sq.c11.is_zero
        D2 = ExtElem.delta2(d1, d2)
        prod = D1 * D2
        assert prod.c11 == RatFunc.const(1) and prod.c00.is_zero


class TestHelpers:
    def test_rat_str_round_trip(self):
        for x in (F(3, 2), F(-7, 5), F(0), F(12)):
            assert rat_from_str(rat_to_str(x)) == x

    def test_divexact(self):
        # (x^3 - 1) / (x - 1) = x^2 + x + 1
        q = divexact_univar([F(-1), F(0), F(0), F(1)], [F(-1), F(1)])
        assert q == [F(1), F(1), F(1)]

    def test_divexact_rejects_inexact(self):
        with pytest.raises(ValueError):
            divexact_univar([F(1), F(1)], [F(1), F(0), F(1)])
        with pytest.raises(ValueError):
            divexact_univar([F(1), F(0), F(1)], [F(1), F(1)])

    def test_univar_coeffs_and_back(self):
        x = MPoly.var("x")
        p = 4 * x**3 - 6 * x + 2
        coeffs = univar_coeffs(p, "x")
        poly, content = poly_from_coeffs(coeffs, "x")
        assert content * F(1) == F(2) and poly == 2 * x**3 - 3 * x + 1

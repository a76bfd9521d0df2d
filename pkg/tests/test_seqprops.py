import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from borosmoll.seqprops import (
    HOLDS_STRICTLY,
    HOLDS_WEAKLY,
    INCONCLUSIVE,
    VIOLATED,
    Seq,
    briggs_sides,
    check_briggs,
    check_k_log_concave,
    check_log_convex_interior,
    check_nthroot_log_convex,
    check_ratio_log_convex,
    check_toeplitz_det3,
    elem_sym,
    l_operator,
    toeplitz_det3,
)


def row_seq(table, m):
    return Seq.of(table.row(m), complete=True)


def transposed_seq(table, i, m_hi):
    return Seq.of([table.d(i, m) for m in range(i, m_hi + 1)], offset=i)


class TestLOperator:
    def test_row2_with_truncation(self):
        s = Seq.of([F(21, 8), F(15, 4), F(3, 2)])
        out = l_operator(s)
        assert out.values == (F(441, 64), F(162, 16))
        assert out.offset == 0

    def test_constant_sequence(self):
        out = l_operator(Seq.of([1, 1, 1]))
        assert out.values[1:] == (F(0),)

    def test_log_linear_gives_zero_interior(self):
        out = l_operator(Seq.of([1, 2, 4, 8]))
        assert out.values[1:] == (F(0), F(0))

    def test_complete_preserves_window(self):
        s = Seq.of([1, 3, 1], complete=True)
        out = l_operator(s)
        assert len(out) == 3 and out.complete
        assert out.values == (F(1), F(8), F(1))


class TestKLogConcave:
    def test_row7_is_strictly_2_and_3_log_concave(self, table):
        assert check_k_log_concave(row_seq(table, 7), 2).verdict == HOLDS_STRICTLY
        assert check_k_log_concave(row_seq(table, 7), 3).verdict == HOLDS_STRICTLY

    def test_geometric_is_weak(self):
        assert check_k_log_concave(Seq.of([1, 2, 4, 8]), 1).verdict == HOLDS_WEAKLY

    def test_window_exhaustion(self):
        assert check_k_log_concave(Seq.of([1, 2]), 4).verdict == INCONCLUSIVE

    def test_log_convex_row_violates(self):
        s = Seq.of([1, 1, 2, 6, 24])  # factorials: log-convex
        assert check_k_log_concave(s, 1).verdict == VIOLATED


class TestBriggs:
    def test_row2_sides_frozen(self, table):
        s = row_seq(table, 2)
        lhs, rhs = briggs_sides(s, 1)
        assert lhs == F(36450, 256) and rhs == F(3969, 256)
        assert check_briggs(s).verdict == HOLDS_STRICTLY

    def test_rows_up_to_200(self, table):
        for m in range(2, 201):
            assert check_briggs(row_seq(table, m)).verdict == HOLDS_STRICTLY

    def test_transposed_i0_fully_reversed(self, table):
        s = transposed_seq(table, 0, 80)
        rep = check_briggs(s)
        assert rep.verdict == VIOLATED
        # every admissible index is a strict reversal
        assert len(rep.witnesses) == len(list(range(1, 79)))
        assert all(lhs < rhs for _, lhs, rhs in rep.witnesses)

    def test_window_too_short(self):
        assert check_briggs(Seq.of([1, 2])).verdict == INCONCLUSIVE

    @given(c=st.fractions(min_value=F(1, 100), max_value=100))
    @settings(max_examples=40, deadline=None)
    def test_scale_invariance(self, table, c):
        s = row_seq(table, 6)
        scaled = Seq.of([c * v for v in s.values], complete=True)
        a, b = check_briggs(s), check_briggs(scaled)
        assert a.verdict == b.verdict


class TestRatioLogConvex:
    def test_transposed_positive_index(self, table):
        for i in (1, 2, 5):
            s = transposed_seq(table, i, i + 60)
            assert check_ratio_log_convex(s).verdict == HOLDS_STRICTLY

    def test_first_column_is_ratio_log_concave(self, table):
        s = transposed_seq(table, 0, 60)
        rep = check_ratio_log_convex(s)
        assert rep.verdict == VIOLATED
        assert all(lhs < rhs for _, lhs, rhs in rep.witnesses)

    def test_geometric_weak(self):
        assert check_ratio_log_convex(Seq.of([1, 2, 4, 8, 16])).verdict == HOLDS_WEAKLY

    def test_agrees_with_log_convexity_of_ratio_sequence(self, table):
        for i in (0, 1, 3):
            s = transposed_seq(table, i, i + 40)
            ratios = Seq.of(
                [s.get(n) / s.get(n - 1) for n in range(s.offset + 1, s.last + 1)],
                offset=s.offset + 1,
            )
            assert (check_ratio_log_convex(s).verdict
                    == check_log_convex_interior(ratios).verdict)

    def test_requires_positive(self):
        with pytest.raises(ValueError):
            check_ratio_log_convex(Seq.of([1, -1, 1, 1]))


class TestNthRoot:
    def test_i1_first_comparison(self, table):
        # n=1 reduces to 43^3 * 32 < 15^3 * 885 after clearing scales
        s = Seq.of([table.d(1, 1 + n) for n in range(1, 6)], offset=1)
        rep = check_nthroot_log_convex(s)
        assert rep.verdict == HOLDS_STRICTLY
        assert 43**3 * 32 < 15**3 * 885

    def test_i0_is_log_concave_direction(self, table):
        s = Seq.of([table.d(0, n) for n in range(1, 42)], offset=1)
        rep = check_nthroot_log_convex(s)
        assert rep.verdict == VIOLATED
        assert all(sign < 0 for _, sign, _ in rep.witnesses)

    def test_constant_one_gives_weak(self):
        rep = check_nthroot_log_convex(Seq.of([1] * 8, offset=1))
        assert rep.verdict == HOLDS_WEAKLY

    def test_budget_exhaustion_is_inconclusive(self, table):
        s = Seq.of([table.d(2, 2 + n) for n in range(1, 20)], offset=1)
        rep = check_nthroot_log_convex(s, bit_budget=50)
        assert rep.verdict == INCONCLUSIVE
        assert "budget" in rep.note

    def test_offset_must_be_positive(self):
        with pytest.raises(ValueError):
            check_nthroot_log_convex(Seq.of([1, 2, 3]))


class TestToeplitz:
    def test_all_ones_singular(self):
        assert toeplitz_det3(Seq.of([1] * 5, complete=True), 1) == 0

    def test_row7_positive(self, table):
        rep = check_toeplitz_det3(row_seq(table, 7))
        assert rep.verdict == HOLDS_STRICTLY

    def test_incomplete_window_index_range(self, table):
        # entries above an incomplete window are unknown, so the last
        # admissible determinant index is last-3
        s = transposed_seq(table, 1, 20)
        rep = check_toeplitz_det3(s)
        assert rep.window == (2, 17)
        assert rep.verdict == HOLDS_STRICTLY

    def test_cofactor_expansion_oracle(self, table):
        s = row_seq(table, 9)
        rng = random.Random(3)
        for k in range(1, 9):
            a = [s.get_ext(n) for n in range(k - 1, k + 4)]
            rows = [
                [a[2], a[3], a[4]],
                [a[1], a[2], a[3]],
                [a[0], a[1], a[2]],
            ]
            det = F(0)  # brute-force cofactor expansion along the top row
            for j in range(3):
                minor = [
                    [rows[1][c] for c in range(3) if c != j],
                    [rows[2][c] for c in range(3) if c != j],
                ]
                det += (-1) ** j * rows[0][j] * (
                    minor[0][0] * minor[1][1] - minor[0][1] * minor[1][0]
                )
            assert toeplitz_det3(s, k) == det


class TestElemSym:
    def test_small_example(self):
        s = elem_sym([F(1), F(2), F(3)])
        assert s.values == (F(1), F(6), F(11), F(6))

    def test_singleton(self):
        s = elem_sym([F(5, 3)])
        assert s.values == (F(1), F(5, 3))

    def test_briggs_on_1234(self):
        assert check_briggs(elem_sym([1, 2, 3, 4])).verdict == HOLDS_STRICTLY

    def test_random_multisets_support_both_conjectures(self):
        rng = random.Random(123)
        for _ in range(300):
            xs = [F(rng.randint(1, 30), rng.randint(1, 10))
                  for _ in range(rng.randint(2, 8))]
            s = elem_sym(xs)
            assert check_briggs(s).verdict == HOLDS_STRICTLY, xs
            assert check_toeplitz_det3(s).verdict == HOLDS_STRICTLY, xs

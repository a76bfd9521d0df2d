import math
from fractions import Fraction as F

import pytest

from borosmoll.core import (
    BMTable,
    bm_closed_form,
    bm_normalized,
    bm_recurrence_i,
    bm_recurrence_m,
    diagonal_closed_form,
    eval_P,
    eval_P_coeffs,
    ratio_r0,
)


def oracle_d(i: int, m: int) -> F:
    """Independent brute-force summation (math.comb, no shared code with
    the table's cached-triangle path)."""
    if i < 0 or i > m:
        return F(0)
    total = 0
    for k in range(i, m + 1):
        total += (
            2**k * math.comb(2 * m - 2 * k, m - k)
            * math.comb(m + k, k) * math.comb(k, i)
        )
    return F(total, 4**m)


class TestClosedForm:
    def test_first_rows_frozen(self):
        assert bm_closed_form(0, 1).value == F(3, 2)
        assert bm_closed_form(1, 1).value == F(1)
        assert bm_closed_form(0, 2).value == F(21, 8)
        assert bm_closed_form(1, 2).value == F(15, 4)
        assert bm_closed_form(2, 2).value == F(3, 2)

    def test_top_diagonal_single_term(self):
        # d_m(m) = 2^-m C(2m, m)
        assert bm_closed_form(3, 3).value == F(5, 2)
        for m in (1, 4, 9):
            assert bm_closed_form(m, m).value == F(math.comb(2 * m, m), 2**m)

    def test_out_of_range_is_zero(self):
        assert bm_closed_form(-1, 5).scaled == 0
        assert bm_closed_form(6, 5).scaled == 0

    def test_matches_oracle(self, table):
        for m in range(0, 26):
            for i in range(0, m + 1):
                assert table.d(i, m) == oracle_d(i, m)


class TestRecurrences:
    def test_recurrence_m_examples(self, table):
        assert bm_recurrence_m(1, 2, table).value == F(15, 4)
        assert bm_recurrence_m(1, 3, table).value == F(43, 4)

    def test_recurrence_m_rejects_bad_range(self, table):
        with pytest.raises(ValueError):
            bm_recurrence_m(0, 5, table)
        with pytest.raises(ValueError):
            bm_recurrence_m(5, 5, table)
        with pytest.raises(ValueError):
            bm_recurrence_m(1, 1, table)

    def test_recurrence_m_against_closed_form(self, table):
        for m in range(2, 61):
            for i in range(1, m):
                assert bm_recurrence_m(i, m, table).scaled == table.scaled(i, m)

    def test_recurrence_i_examples(self, table):
        assert bm_recurrence_i(0, 1, table).value == F(21, 8)
        assert bm_recurrence_i(1, 2, table).value == F(43, 4)

    def test_recurrence_i_against_closed_form(self, table):
        for m in range(0, 60):
            for i in range(0, m + 1):
                assert bm_recurrence_i(i, m, table).scaled == table.scaled(i, m + 1)

    def test_first_column_ratio(self, table):
        assert ratio_r0(2) == F(7, 4)
        for m in range(1, 40):
            assert table.d(0, m) / table.d(0, m - 1) == ratio_r0(m)


class TestNormalized:
    def test_examples(self, table):
        assert bm_normalized(1, 2, 0, table) == F(15, 4)
        assert bm_normalized(2, 2, 2, table) == F(1, 16)
        assert bm_normalized(0, 1, 1, table) == F(3, 2)

    def test_factorial_scaling(self, table):
        for (i, m, k) in [(3, 9, 0), (2, 7, 2), (5, 11, 4)]:
            assert bm_normalized(i, m, k, table) == table.d(i, m) / math.factorial(i + k)


class TestPolynomialEvaluation:
    def test_row_sum(self, table):
        assert eval_P(2, 1) == F(63, 8)

    def test_constant_term(self):
        assert eval_P(1, 0) == F(3, 2)

    def test_dual_forms_agree(self, table):
        x = F(3, 7)
        for m in range(0, 21):
            assert eval_P(m, x) == eval_P_coeffs(m, x, table)


class TestInvariants:
    def test_positivity_and_scale(self, table):
        for m in range(0, 80):
            for i in range(0, m + 1):
                n = table.scaled(i, m)
                assert n > 0  # 4^m d_i(m) is a positive integer inside the triangle
        assert table.scaled(5, 3) == 0

    def test_row_unimodality(self, table):
        for m in range(2, 201):
            row = table.row(m)
            peak = row.index(max(row))
            assert all(row[j] < row[j + 1] or row[j] == row[j + 1] for j in range(peak))
            assert all(row[j] >= row[j + 1] for j in range(peak, m))


class TestDiagonalForms:
    def test_w0_and_w1(self):
        w0 = diagonal_closed_form(0)
        assert w0.content * w0.poly.eval({"i": 0}) == 1
        w1 = diagonal_closed_form(1)
        # W_1 = 2 (2i+1)(2i+3)
        for iv in range(6):
            assert w1.w_value(iv) == 2 * (2 * iv + 1) * (2 * iv + 3)

    def test_first_diagonal_closed_form(self, table):
        # d_i(i+1) = (2i+3)(2i+1)(2i)! / (2^(i+1) (i+1) (i!)^2)
        for iv in range(0, 15):
            expect = F(
                (2 * iv + 3) * (2 * iv + 1) * math.factorial(2 * iv),
                2 ** (iv + 1) * (iv + 1) * math.factorial(iv) ** 2,
            )
            assert diagonal_closed_form(1).value_at(iv) == expect
            assert table.d(iv, iv + 1) == expect

    @pytest.mark.parametrize("j", [0, 1, 2, 3, 4])
    def test_specialization_against_closed_form(self, j, table):
        form = diagonal_closed_form(j)
        for iv in range(0, 31):
            assert form.value_at(iv) == table.d(iv, iv + j)

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apostolb import DEFAULT_RING, InvalidKernelError, KernelSpec, NotAUnitError, TruncationError, TruncSeries
from apostolb.fps import apostol_kernel, cos_sin_zt, exp_poly, extract_family, series_exp, series_invert, sinc_zt

from oracles import apostol_numbers, bernoulli_numbers

R = DEFAULT_RING
x, y, z = R.var("x"), R.var("y"), R.var("z")

coef = st.fractions(min_value=-4, max_value=4, max_denominator=5)


def series_of(values, order=6):
    return TruncSeries(list(values), order)


class TestArithmetic:
    def test_truncation_guard(self):
        s = TruncSeries([1, 2, 3])
        assert s[2] == R.const(3)
        with pytest.raises(TruncationError):
            s[3]

    @settings(max_examples=40)
    @given(st.lists(coef, min_size=7, max_size=7), st.lists(coef, min_size=7, max_size=7))
    def test_product_commutes(self, a, b):
        assert series_of(a) * series_of(b) == series_of(b) * series_of(a)

    @settings(max_examples=40)
    @given(st.lists(coef, min_size=7, max_size=7))
    def test_inverse(self, a):
        if a[0] == 0:
            a[0] = Fraction(1)
        s = series_of(a)
        assert s * series_invert(s) == TruncSeries.one(6)

    def test_invert_needs_unit(self):
        with pytest.raises(NotAUnitError):
            series_invert(TruncSeries([0, 1], 4))
        with pytest.raises(NotAUnitError):
            series_invert(TruncSeries([y, 1], 4))

    def test_shift_down_needs_zero_low_terms(self):
        assert TruncSeries([0, 1, 2], 2).shift_down(1) == TruncSeries([1, 2], 1)
        with pytest.raises(NotAUnitError):
            TruncSeries([1, 1], 2).shift_down(1)

    def test_exp_of_sum(self):
        a, b = exp_poly(x, 6), exp_poly(y, 6)
        assert a * b == exp_poly(x + y, 6)

    def test_exp_needs_zero_constant(self):
        with pytest.raises(NotAUnitError):
            series_exp(TruncSeries([1, 1], 3))

    def test_extract_members(self):
        s = exp_poly(x, 5)
        assert [extract_family(s, n) for n in range(4)] == [x ** n for n in range(4)]
        with pytest.raises(TruncationError):
            extract_family(s, 6)


class TestTrig:
    def test_pythagoras(self):
        c, s = cos_sin_zt(8)
        assert c * c + s * s == TruncSeries.one(8)

    def test_sinc(self):
        _, s = cos_sin_zt(8)
        assert sinc_zt(8).shift_up(1) * z == s


class TestKernel:
    def test_invalid(self):
        with pytest.raises(InvalidKernelError):
            KernelSpec(1, 0, 0)
        with pytest.raises(InvalidKernelError):
            KernelSpec(-1, 1, -1)

    def test_branch_label(self):
        assert KernelSpec(1, 1, -1).degenerate
        assert not KernelSpec(1, 1, 1).degenerate

    def test_bernoulli_numbers(self):
        k = apostol_kernel(KernelSpec(1, 1, -1), 12)
        assert [extract_family(k, n) for n in range(13)] == [R.const(b) for b in bernoulli_numbers(13)]

    @pytest.mark.parametrize("lam", [2, 3, Fraction(1, 2), -1, Fraction(5, 3)])
    @pytest.mark.parametrize("v", [1, 2, 3])
    def test_apostol_numbers_against_recurrence(self, lam, v):
        k = apostol_kernel(KernelSpec(v, lam, -1), 8)
        assert [extract_family(k, n) for n in range(9)] == [R.const(b) for b in apostol_numbers(9, lam, v)]

    def test_nonzero_branch_starts_at_t_v(self):
        k = apostol_kernel(KernelSpec(2, 1, 1), 6)
        assert k[0].is_zero() and k[1].is_zero()
        assert k[2] == R.const(Fraction(1, 4))

    def test_kernel_times_denominator(self):
        # (lam e^t + mu) * t/(lam e^t + mu) = t
        lam, mu = Fraction(3), Fraction(2)
        den = exp_poly(R.const(1), 7) * lam + TruncSeries([mu], 7)
        assert den * apostol_kernel(KernelSpec(1, lam, mu), 7) == TruncSeries.t(7)

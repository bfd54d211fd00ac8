"""Tests for signals, recurrence iteration, and the error metric."""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from lplab import (
    ApproxReport,
    Grid,
    InvalidArgumentError,
    LpCoefficients,
    LpModel,
    NumericOverflowError,
    Signal,
    iterate,
    mse,
    residuals,
)


class TestSignal:
    def test_rejects_empty(self):
        with pytest.raises(InvalidArgumentError):
            Signal([])

    def test_rejects_non_finite_naming_index(self):
        with pytest.raises(InvalidArgumentError, match="index 2"):
            Signal([1.0, 2.0, math.nan])

    def test_samples_are_read_only(self):
        signal = Signal([1.0, 2.0])
        with pytest.raises(ValueError):
            signal.samples[0] = 9.0

    def test_does_not_alias_caller_array(self):
        source = np.array([1.0, 2.0])
        signal = Signal(source)
        source[0] = 7.0
        assert signal.samples[0] == 1.0

    def test_grid_step_must_be_positive(self):
        with pytest.raises(InvalidArgumentError):
            Grid(start=0.0, step=0.0)


class TestLpTypes:
    def test_order_is_coefficient_count(self):
        assert LpCoefficients([0.5, 0.25, 0.125]).p == 3

    def test_rejects_empty_coefficients(self):
        with pytest.raises(InvalidArgumentError):
            LpCoefficients([])

    def test_model_checks_seed_length(self):
        with pytest.raises(InvalidArgumentError):
            LpModel(LpCoefficients([1.0, 2.0]), [1.0])

    def test_report_rejects_bad_method(self):
        with pytest.raises(InvalidArgumentError):
            ApproxReport(mse=0.0, residuals=Signal([0.0]), method="magic", order=1)

    def test_report_rejects_negative_bound(self):
        with pytest.raises(InvalidArgumentError):
            ApproxReport(
                mse=0.0, residuals=Signal([0.0]), method="dct-1", order=1, bound=-1.0
            )


class TestIterate:
    def test_constant_recurrence(self):
        model = LpModel(LpCoefficients([1.0]), [5.0])
        np.testing.assert_array_equal(iterate(model, 4).samples, [5.0, 5.0, 5.0, 5.0])

    def test_linear_ramp(self):
        model = LpModel(LpCoefficients([2.0, -1.0]), [0.0, 1.0])
        out = iterate(model, 5).samples
        np.testing.assert_array_equal(out, [0.0, 1.0, 2.0, 3.0, 4.0])
        # every term satisfies f(n) = 2 f(n-1) - f(n-2)
        for n in range(2, 5):
            assert out[n] == 2 * out[n - 1] - out[n - 2]

    def test_cosine_recurrence(self):
        model = LpModel(
            LpCoefficients([math.sqrt(2.0), -1.0]), [1.0, math.sqrt(2.0) / 2]
        )
        expected = [math.cos(n * math.pi / 4) for n in range(5)]
        np.testing.assert_allclose(iterate(model, 5).samples, expected, atol=1e-15)

    def test_count_below_order_rejected(self):
        model = LpModel(LpCoefficients([1.0, 0.0]), [1.0, 2.0])
        with pytest.raises(InvalidArgumentError):
            iterate(model, 1)

    def test_overflow_names_first_bad_index(self):
        model = LpModel(LpCoefficients([2.0]), [1e308])
        with pytest.raises(NumericOverflowError, match="index 1"):
            iterate(model, 5)

    @given(
        a=st.lists(st.floats(-1.5, 1.5), min_size=1, max_size=4),
        seed_extra=st.integers(0, 2**32 - 1),
        extra=st.integers(1, 6),
    )
    def test_shift_consistency(self, a, seed_extra, extra):
        rng = np.random.default_rng(seed_extra)
        p = len(a)
        model = LpModel(LpCoefficients(a), rng.uniform(-3, 3, size=p))
        count = p + extra
        long = iterate(model, count + 1).samples
        short = iterate(model, count).samples
        np.testing.assert_array_equal(long[:count], short)


class TestResiduals:
    def test_constant_signal(self):
        out = residuals(LpCoefficients([1.0]), Signal([3.0, 3.0, 3.0]))
        np.testing.assert_array_equal(out.samples, [0.0, 0.0])

    def test_linear_sequence_satisfies_recurrence(self):
        out = residuals(LpCoefficients([2.0, -1.0]), Signal([0.0, 1.0, 2.0, 3.0]))
        np.testing.assert_array_equal(out.samples, [0.0, 0.0])

    def test_ramp_under_identity_recurrence(self):
        out = residuals(LpCoefficients([1.0]), Signal([0.0, 1.0, 2.0]))
        np.testing.assert_array_equal(out.samples, [1.0, 1.0])

    def test_requires_signal_longer_than_order(self):
        with pytest.raises(InvalidArgumentError):
            residuals(LpCoefficients([1.0, 1.0]), Signal([1.0, 2.0]))


class TestMse:
    def test_identical_signals(self):
        assert mse(Signal([1.0, 2.0]), Signal([1.0, 2.0])) == 0.0

    def test_direct_formula(self):
        assert mse(Signal([1.0, 0.0]), Signal([0.0, 0.0])) == 0.5

    def test_constant_offset(self):
        assert mse(Signal([2.0, 2.0, 2.0]), Signal([1.0, 1.0, 1.0])) == 1.0

    def test_length_mismatch(self):
        with pytest.raises(InvalidArgumentError):
            mse(Signal([1.0]), Signal([1.0, 2.0]))

    @given(st.lists(st.floats(-1e6, 1e6), min_size=1, max_size=32))
    def test_nonnegative_and_zero_iff_identical(self, values):
        signal = Signal(values)
        assert mse(signal, signal) == 0.0
        shifted = Signal(np.asarray(values) + 1.0)
        assert mse(signal, shifted) > 0.0

"""Special-function accuracy, symmetry and error-estimate contracts."""

import math

import mpmath as mp
import numpy as np
import pytest

from casimirkg.errors import DomainError
from casimirkg.specfun import (
    EvalResult,
    _j0_large,
    _j0_series,
    bessel_i0,
    bessel_i0_scaled,
    bessel_j0,
    erf,
)

import oracles


def test_frozen_values_rederive():
    """Re-derive every frozen constant with mpmath at 40 digits."""
    with mp.workdps(40):
        zero = mp.findroot(lambda t: mp.besselj(0, t), 2.4)
        assert float(zero) == oracles.J0_FIRST_ZERO
        assert float(mp.besselj(0, 1)) == oracles.J0_AT_1
        assert float(mp.besselj(0, 2)) == oracles.J0_AT_2
        assert float(mp.besseli(0, 1)) == oracles.I0_AT_1
        assert float(mp.besseli(0, 2)) == oracles.I0_AT_2
        assert float(mp.besseli(0, 5)) == oracles.I0_AT_5
        assert float(mp.exp(-5) * mp.besseli(0, 5)) == oracles.I0_SCALED_AT_5
        assert float(mp.erf(1)) == oracles.ERF_AT_1
        assert float(mp.sqrt(mp.pi) * mp.erf(1)) == oracles.SQRT_PI_ERF_1
        assert float(mp.sqrt(mp.pi) / 2 * mp.erf(1)) == oracles.HALF_SQRT_PI_ERF_1


def test_longdouble_oracles_match_mpmath():
    """The fast test oracles themselves agree with mpmath well below 1e-13."""
    rng = np.random.default_rng(11)
    xs = np.concatenate(
        [rng.uniform(0, 10, 20), rng.uniform(10, 16, 10), rng.uniform(16, 200, 20),
         rng.uniform(200, 1e4, 20)]
    )
    with mp.workdps(30):
        for x in xs:
            assert abs(float(oracles.j0_oracle(x)) - float(mp.besselj(0, float(x)))) < 1e-15
        for x in rng.uniform(0, 700, 40):
            ref = mp.besseli(0, float(x))
            assert abs(float(oracles.i0_oracle(x)) - float(ref)) / float(ref) < 1e-15


class TestBesselJ0:
    def test_at_zero(self):
        assert bessel_j0(0.0).value == 1.0

    def test_first_zero(self):
        assert abs(bessel_j0(oracles.J0_FIRST_ZERO).value) <= 1e-12

    def test_at_one(self):
        assert abs(bessel_j0(1.0).value - oracles.J0_AT_1) <= 1e-12

    def test_accuracy_sampled(self):
        rng = np.random.default_rng(42)
        xs = np.concatenate([rng.uniform(0, 8, 300), rng.uniform(8, 1e4, 700)])
        ref = oracles.j0_oracle(xs)
        for x, r in zip(xs, ref):
            res = bessel_j0(float(x))
            assert abs(res.value - float(r)) <= 1e-12
            assert 0.0 <= res.est_error <= 1e-12

    def test_even_symmetry_exact(self):
        rng = np.random.default_rng(1)
        for x in rng.uniform(-50.0, 50.0, 1000):
            assert bessel_j0(float(x)).value == bessel_j0(float(-x)).value

    def test_bounded_by_one(self):
        rng = np.random.default_rng(2)
        for x in rng.uniform(-1e4, 1e4, 1000):
            assert abs(bessel_j0(float(x)).value) <= 1.0 + 1e-12

    def test_branch_overlap_window(self):
        """Series and rational-Hankel branches agree on [5, 8]."""
        for x in np.linspace(5.0, 8.0, 301):
            a, _ = _j0_series(float(x))
            b, _ = _j0_large(float(x))
            assert abs(a - b) <= 1e-11

    @pytest.mark.parametrize("bad", [float("nan"), float("inf"), -float("inf")])
    def test_nonfinite_rejected(self, bad):
        with pytest.raises(DomainError):
            bessel_j0(bad)


class TestBesselI0:
    def test_at_zero(self):
        assert bessel_i0(0.0).value == 1.0

    def test_frozen_points(self):
        assert abs(bessel_i0(1.0).value - oracles.I0_AT_1) <= 1e-12 * oracles.I0_AT_1
        assert abs(bessel_i0(5.0).value - oracles.I0_AT_5) <= 1e-12 * oracles.I0_AT_5

    def test_accuracy_sampled(self):
        rng = np.random.default_rng(43)
        xs = np.concatenate([rng.uniform(0, 15, 300), rng.uniform(15, 700, 700)])
        ref = oracles.i0_oracle(xs)
        for x, r in zip(xs, ref):
            res = bessel_i0(float(x))
            rf = float(r)
            assert abs(res.value - rf) <= 1e-12 * rf
            assert 0.0 <= res.est_error <= 1e-12 * res.value

    def test_even_symmetry_exact(self):
        rng = np.random.default_rng(3)
        for x in rng.uniform(-50.0, 50.0, 1000):
            assert bessel_i0(float(x)).value == bessel_i0(float(-x)).value

    def test_at_least_one(self):
        rng = np.random.default_rng(4)
        for x in rng.uniform(-700.0, 700.0, 500):
            assert bessel_i0(float(x)).value >= 1.0

    def test_overflow_redirects_to_scaled(self):
        with pytest.raises(OverflowError, match="bessel_i0_scaled"):
            bessel_i0(800.0)

    def test_near_overflow_threshold_finite(self):
        res = bessel_i0(713.0)
        assert math.isfinite(res.value) and res.value > 1e300

    def test_nonfinite_rejected(self):
        with pytest.raises(DomainError):
            bessel_i0(float("nan"))


class TestBesselI0Scaled:
    def test_at_zero(self):
        assert bessel_i0_scaled(0.0).value == 1.0

    def test_frozen_point(self):
        res = bessel_i0_scaled(5.0)
        assert abs(res.value - oracles.I0_SCALED_AT_5) <= 1e-12 * oracles.I0_SCALED_AT_5

    def test_large_argument_leading_asymptote(self):
        res = bessel_i0_scaled(700.0)
        leading = 1.0 / math.sqrt(2.0 * math.pi * 700.0)
        assert res.value > 0.0
        assert abs(res.value - leading) / leading < 1e-3

    def test_never_overflows(self):
        for x in (1e3, 1e6, 1e12, 1e300):
            res = bessel_i0_scaled(x)
            assert math.isfinite(res.value)

    def test_accuracy_sampled(self):
        rng = np.random.default_rng(44)
        xs = rng.uniform(0.0, 700.0, 500)
        ref = oracles.i0_scaled_oracle(xs)
        for x, r in zip(xs, ref):
            res = bessel_i0_scaled(float(x))
            assert abs(res.value - float(r)) <= 1e-12 * float(r)
            assert 0.0 <= res.est_error <= 1e-12

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            bessel_i0_scaled(-1.0)


class TestErf:
    def test_at_zero(self):
        assert erf(0.0).value == 0.0

    def test_at_one(self):
        assert abs(erf(1.0).value - oracles.ERF_AT_1) <= 1e-13

    def test_saturation(self):
        for x in (6.0, 10.0, 50.0):
            assert abs(erf(x).value - 1.0) <= 1e-13
            assert abs(erf(-x).value + 1.0) <= 1e-13

    def test_odd_symmetry_exact(self):
        rng = np.random.default_rng(5)
        for x in rng.uniform(-8.0, 8.0, 1000):
            assert erf(float(x)).value == -erf(float(-x)).value

    def test_accuracy_vs_libm(self):
        rng = np.random.default_rng(6)
        for x in rng.uniform(-6.5, 6.5, 2000):
            res = erf(float(x))
            assert abs(res.value - oracles.erf_oracle(float(x))) <= 1e-13
            assert 0.0 <= res.est_error <= 1e-12

    def test_monotone_on_grid(self):
        xs = np.linspace(-7.0, 7.0, 1001)
        values = [erf(float(x)).value for x in xs]
        assert all(b >= a for a, b in zip(values, values[1:]))

    def test_nonfinite_rejected(self):
        with pytest.raises(DomainError):
            erf(float("inf"))


def test_eval_result_invariants():
    """est_error is nonnegative and finite whenever the value is finite."""
    rng = np.random.default_rng(7)
    for x in rng.uniform(-100.0, 100.0, 200):
        for fn in (bessel_j0, bessel_i0, erf):
            res = fn(float(x))
            assert isinstance(res, EvalResult)
            assert math.isfinite(res.value)
            assert math.isfinite(res.est_error) and res.est_error >= 0.0

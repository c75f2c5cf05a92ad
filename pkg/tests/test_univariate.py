import math

import numpy as np
import pytest

from tritrig import DomainError, bernstein_limit_error, eval_A, make_univariate
from tritrig.exceptions import BasisIndexError, ConditioningWarning
from tritrig.univariate import bernstein, eval_all, univariate_coefficients

from conftest import ALPHAS


class TestCoefficients:
    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_order_one_closed_values(self, alpha):
        s, c = math.sin(alpha / 2), math.cos(alpha / 2)
        coeffs = make_univariate(1, alpha).coeffs
        assert coeffs == pytest.approx([1 / s**2, 2 * c / s**2, 1 / s**2], rel=1e-14)

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_order_two_middle_value(self, alpha):
        s, c = math.sin(alpha / 2), math.cos(alpha / 2)
        assert make_univariate(2, alpha).coeffs[2] == pytest.approx((2 + 4 * c**2) / s**4, rel=1e-14)

    @pytest.mark.parametrize("n", range(1, 8))
    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_symmetry_and_positivity(self, n, alpha):
        c = np.asarray(make_univariate(n, alpha).coeffs)
        assert len(c) == 2 * n + 1
        assert np.all(c > 0)
        np.testing.assert_array_equal(c, c[::-1])

    def test_order_one_endpoints_equal(self):
        c = make_univariate(1, 0.7).coeffs
        assert c[0] == c[2]

    @pytest.mark.parametrize("alpha", [0.0, -0.1, math.pi, 4.0, float("nan")])
    def test_invalid_alpha(self, alpha):
        with pytest.raises(DomainError):
            make_univariate(2, alpha)

    @pytest.mark.parametrize("n", [0, -1, 1.5])
    def test_invalid_order(self, n):
        with pytest.raises(DomainError):
            make_univariate(n, 1.0)

    def test_underflow_warns(self):
        with pytest.warns(ConditioningWarning):
            univariate_coefficients(200, 1e-3)


class TestEvaluation:
    def test_first_function_at_origin(self):
        assert eval_A(make_univariate(1, 1.0), 0, 0.0) == pytest.approx(1.0, abs=1e-15)

    def test_frozen_high_precision_value(self):
        # 50-digit evaluation of the closed formula, n=2, i=2, alpha=1, t=1/2
        assert eval_A(make_univariate(2, 1.0), 2, 0.5) == pytest.approx(0.36029424120711886613, rel=1e-14)

    @pytest.mark.parametrize("n", range(1, 6))
    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_partition_of_unity(self, n, alpha):
        basis = make_univariate(n, alpha)
        t = np.random.default_rng(n).uniform(0, alpha, 1000)
        values = eval_all(basis, t)
        assert np.max(np.abs(values.sum(axis=1) - 1)) <= 1e-12
        assert np.all(values >= 0)

    @pytest.mark.parametrize("n", [1, 2, 4])
    def test_endpoint_kronecker(self, n):
        basis = make_univariate(n, 1.3)
        start, end = eval_all(basis, 0.0), eval_all(basis, 1.3)
        np.testing.assert_allclose(start, np.eye(2 * n + 1)[0], atol=1e-15)
        np.testing.assert_allclose(end, np.eye(2 * n + 1)[-1], atol=1e-15)

    @pytest.mark.parametrize("t", [-0.01, 1.01, float("inf")])
    def test_out_of_range_parameter(self, t):
        with pytest.raises(DomainError):
            eval_A(make_univariate(2, 1.0), 1, t)

    def test_bad_index(self):
        with pytest.raises(BasisIndexError):
            eval_A(make_univariate(2, 1.0), 5, 0.3)

    def test_vectorized_shape(self):
        values = eval_all(make_univariate(3, 1.0), np.zeros((4, 5)))
        assert values.shape == (4, 5, 7)


class TestBernsteinLimit:
    def test_bernstein_helper_partition(self):
        assert bernstein(6, np.linspace(0, 1, 11)).sum(axis=1) == pytest.approx(np.ones(11))

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_endpoint_error_is_zero(self, n):
        assert bernstein_limit_error(n, 0.0, 2.0) == pytest.approx(0.0, abs=1e-15)

    def test_error_vanishes_as_alpha_shrinks(self):
        errs = [bernstein_limit_error(1, 0.5, a) for a in (1e-1, 1e-2, 1e-3)]
        assert errs[0] > errs[1] > errs[2]
        assert errs[2] < 1e-6

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_quadratic_decay(self, n):
        alphas = np.array([1e-2, 1e-3, 1e-4])
        s = np.linspace(0, 1, 101)
        errs = [bernstein_limit_error(n, s, a) for a in alphas]
        slope = np.polyfit(np.log(alphas), np.log(errs), 1)[0]
        assert slope == pytest.approx(2.0, abs=0.1)

    def test_fitted_tolerance_at_small_alpha(self):
        # observed constant for n=1 at s=0.3 is about 0.02 alpha^2
        assert bernstein_limit_error(1, 0.3, 1e-3) < 1e-7

from fractions import Fraction as F

import pytest
from hypothesis import given
import hypothesis.strategies as st

from loghankel.series import (
    EXACT,
    FLOAT,
    BackendMismatchError,
    SeriesDomainError,
    TruncatedSeries,
    as_series,
    series_add,
    series_compose,
    series_derivative,
    series_div,
    series_exp_zero,
    series_log_unit,
    series_mul,
    series_odd_part_reflect,
)

from conftest import rational_series


def S(*cs):
    return as_series(cs)


def test_coefficients_are_reduced_fractions():
    s = S(2, F(4, 6), "3/9")
    assert s.coeffs == (F(2), F(2, 3), F(1, 3))
    assert all(c.denominator > 0 for c in s)


def test_float_backend_rejects_nonfinite():
    with pytest.raises(FloatingPointError):
        TruncatedSeries((1, float("nan")), FLOAT)


def test_exact_backend_rejects_floats():
    with pytest.raises(TypeError):
        TruncatedSeries((1, 0.5), EXACT)


class TestAddMul:
    def test_cancellation(self):
        assert series_add(S(1, 1), S(1, -1)) == S(2, 0)

    def test_add_zero(self):
        f = S(0, 1, 3, F(1, 2))
        assert series_add(f, TruncatedSeries.zero(3)) == f

    def test_termwise(self):
        assert series_add(S(0, 1, 1, 0), S(0, 0, 1, 1)) == S(0, 1, 2, 1)

    def test_result_order_is_min(self):
        assert series_add(S(1, 1, 1), S(1, 1)).order == 1

    def test_difference_of_squares(self):
        assert series_mul(S(1, 1, 0), S(1, -1, 0)) == S(1, 0, -1)

    def test_mul_one(self):
        f = S(0, 1, 3, F(1, 2))
        assert series_mul(f, TruncatedSeries.one(3)) == f

    def test_binomial(self):
        a = S(0, 1, 1, 0, 0)
        assert series_mul(a, a) == S(0, 0, 1, 2, 1)

    def test_backend_mismatch(self):
        with pytest.raises(BackendMismatchError):
            series_add(S(1, 1), S(1, 1).to_float())
        with pytest.raises(BackendMismatchError):
            series_mul(S(1, 1), S(1, 1).to_float())


class TestDiv:
    def test_geometric(self):
        assert series_div(S(1, 0, 0, 0), S(1, -1, 0, 0)) == S(1, 1, 1, 1)

    def test_self(self):
        a = S(3, 1, -2, 5)
        assert series_div(a, a) == S(1, 0, 0, 0)

    def test_factorization(self):
        assert series_div(S(1, 0, -1), S(1, -1, 0)) == S(1, 1, 0)

    def test_zero_constant_divisor(self):
        with pytest.raises(SeriesDomainError):
            series_div(S(1, 1), S(0, 1))

    @given(rational_series())
    def test_reciprocal_property(self, a):
        if a[0] == 0:
            a = a + 1
        one = TruncatedSeries.one(a.order)
        assert series_mul(a, series_div(one, a)) == one


class TestLogExp:
    def test_mercator(self):
        assert series_log_unit(S(1, 1, 1, 1)) == S(0, 1, F(1, 2), F(1, 3))

    def test_log_one(self):
        assert series_log_unit(TruncatedSeries.one(5)) == TruncatedSeries.zero(5)

    def test_log_geometric_in_z2(self):
        # independent check by exponentiating back
        u = S(1, 0, 1, 0, 1)
        L = series_log_unit(u)
        assert L == S(0, 0, 1, 0, F(1, 2))
        assert series_exp_zero(L) == u

    def test_log_requires_unit(self):
        with pytest.raises(SeriesDomainError):
            series_log_unit(S(2, 1))

    def test_exp_zero(self):
        assert series_exp_zero(TruncatedSeries.zero(4)) == TruncatedSeries.one(4)

    def test_exp_z(self):
        assert series_exp_zero(S(0, 1, 0, 0)) == S(1, 1, F(1, 2), F(1, 6))

    def test_exp_requires_zero_constant(self):
        with pytest.raises(SeriesDomainError):
            series_exp_zero(S(1, 1))

    def test_exp_log_geometric_order_10(self):
        u = TruncatedSeries.from_coeffs([1] * 11, 10)
        assert series_exp_zero(series_log_unit(u)) == u

    @given(rational_series(max_order=30, unit=True))
    def test_exp_log_roundtrip(self, u):
        assert series_exp_zero(series_log_unit(u)) == u


class TestCompose:
    def test_substitute_z2(self):
        outer = S(1, 1, 1, 1, 1)
        assert series_compose(outer, S(0, 0, 1, 0, 0)) == S(1, 0, 1, 0, 1)

    @given(rational_series())
    def test_compose_identity(self, outer):
        z = TruncatedSeries.identity(outer.order)
        assert series_compose(outer, z) == outer

    def test_cayley_half_z(self):
        inner = S(0, F(1, 2), 0)
        cayley = series_div(S(1, 1, 0), S(1, -1, 0))
        got = series_compose(cayley, inner)
        # oracle: compose numerator and denominator separately, then divide
        oracle = series_div(series_add(TruncatedSeries.one(2), inner),
                            series_add(TruncatedSeries.one(2), -inner))
        assert got == oracle == S(1, 1, F(1, 2))

    def test_inner_constant_rejected(self):
        with pytest.raises(SeriesDomainError):
            series_compose(S(1, 1), S(1, 1))


class TestDerivativeReflect:
    def test_power_rule(self):
        assert series_derivative(S(0, 1, 0, 1)) == S(1, 0, 3)

    def test_constant(self):
        assert series_derivative(S(5, 0, 0)) == S(0, 0)

    def test_half_z2(self):
        assert series_derivative(S(0, 0, F(1, 2))) == S(0, 1)

    def test_reflect_parity(self):
        assert series_odd_part_reflect(S(0, 1, 1, 1)) == S(0, 2, 0, 2)

    def test_reflect_even(self):
        assert series_odd_part_reflect(S(0, 0, 1)) == S(0, 0, 0)

    def test_reflect_odd_doubles(self):
        f1 = S(0, 1, 0, 1, 0, 1)
        assert series_odd_part_reflect(f1) == f1 * 2


@st.composite
def _float_pairs(draw):
    order = draw(st.integers(1, 20))
    nums = st.integers(-10, 10)
    cs = draw(st.lists(nums, min_size=order + 1, max_size=order + 1))
    ds = draw(st.lists(nums, min_size=order + 1, max_size=order + 1))
    a = as_series([F(c, 10) for c in cs])
    b = as_series([F(d, 10) for d in ds])
    return a, b


@given(_float_pairs())
def test_float_backend_matches_exact(pair):
    a, b = pair
    u = TruncatedSeries((1,) + a.coeffs[1:])
    v = TruncatedSeries((0,) + b.coeffs[1:])
    for exact, floating in (
        (series_mul(a, b), series_mul(a.to_float(), b.to_float())),
        (series_log_unit(u), series_log_unit(u.to_float())),
        (series_exp_zero(v), series_exp_zero(v.to_float())),
        (series_div(a, u), series_div(a.to_float(), u.to_float())),
        (series_compose(a, v), series_compose(a.to_float(), v.to_float())),
    ):
        assert floating.backend == FLOAT
        assert max(abs(complex(x) - y) for x, y in zip(exact, floating)) <= 1e-12


def test_operators_follow_truncation_contract():
    a = S(1, 2, 3)
    assert (a + 1) == S(2, 2, 3)
    assert (1 - a) == S(0, -2, -3)
    assert (a * a).order == 2
    with pytest.raises(SeriesDomainError):
        a.truncate(5)

import math

import pytest
from mpmath import mp

from dawsonvoigt import (
    DomainError,
    EvalPoint,
    InvalidParamsError,
    OraclePrecision,
    dawson_oracle,
    dawson_oracle_quadrature,
    w_erfc,
    w_oracle,
)
from dawsonvoigt.cache import uniform_axis
from dawsonvoigt.reference import w_oracle_batch

# Spot abscissas for the two-method Dawson agreement check.
DAWSON_SPOTS = (0.1, 0.9241, 2.0, 5.0, 10.0, 15.0)

# Spot points for the quadrature-vs-erfc cross-check.
W_SPOTS = ((1.0, 1e-7), (0.5, 0.5), (5.0, 0.1), (15.0, 1e-6), (20.0, 20.0), (0.0, 2.0))


class TestOraclePrecision:
    def test_defaults_valid(self):
        p = OraclePrecision()
        assert p.working_digits >= 50
        assert p.target_rel_error >= 1e-30

    def test_invalid_rejected(self):
        with pytest.raises(InvalidParamsError):
            OraclePrecision(working_digits=49)
        with pytest.raises(InvalidParamsError):
            OraclePrecision(target_rel_error=1e-31)


class TestDawsonOracle:
    def test_zero(self):
        assert dawson_oracle(0.0) == 0

    def test_odd_sign(self):
        for x in (0.3, 1.7, 4.0):
            assert dawson_oracle(x) * dawson_oracle(-x) < 0

    def test_value_at_one_against_erfi_identity(self):
        # Independent identity: F(x) = (sqrt(pi)/2) exp(-x^2) erfi(x)
        with mp.workdps(60):
            expected = mp.sqrt(mp.pi) / 2 * mp.exp(-1) * mp.erfi(1)
            got = dawson_oracle(1.0)
            assert abs((got - expected) / expected) < mp.mpf("1e-45")

    def test_known_leading_digits_at_one(self):
        with mp.workdps(30):
            got = dawson_oracle(1.0)
            assert mp.nstr(got, 15) == "0.538079506912768"

    def test_two_methods_agree(self):
        # series vs direct quadrature of the defining integral, 1e-30
        with mp.workdps(60):
            for x in DAWSON_SPOTS:
                a = dawson_oracle(x)
                b = dawson_oracle_quadrature(x)
                assert abs((a - b) / a) < mp.mpf("1e-30"), f"x={x}"

    def test_domain_limit(self):
        with pytest.raises(DomainError):
            dawson_oracle(101.0)
        with pytest.raises(DomainError):
            dawson_oracle_quadrature(-101.0)
        with pytest.raises(DomainError):
            dawson_oracle(float("inf"))


class TestWOracle:
    def test_at_origin(self):
        # (1/sqrt(pi)) int_0^inf exp(-t^2/4) dt = 1 exactly
        v = w_oracle(EvalPoint(0.0, 0.0))
        with mp.workdps(60):
            assert abs(v.real - 1) < mp.mpf("1e-45")
            assert v.imag == 0

    def test_axis_limit_is_gaussian(self):
        with mp.workdps(60):
            for x in (0.5, 2.0, 5.0):
                v = w_oracle(EvalPoint(x, 0.0))
                expected = mp.exp(-mp.mpf(x) ** 2)
                assert abs((v.real - expected) / expected) < mp.mpf("1e-30"), f"x={x}"

    def test_against_erfc_route_near_axis(self):
        v = w_oracle(EvalPoint(1.0, 1e-7))
        ref = w_erfc(EvalPoint(1.0, 1e-7), digits=300)
        with mp.workdps(60):
            assert abs((v.real - ref.real) / ref.real) < mp.mpf("1e-25")

    def test_against_erfc_route_spot_set(self):
        with mp.workdps(60):
            for x, y in W_SPOTS:
                v = w_oracle(EvalPoint(x, y))
                ref = w_erfc(EvalPoint(x, y), digits=300)
                assert abs((v.real - ref.real) / ref.real) < mp.mpf("1e-25"), f"({x},{y})"
                if x != 0:
                    assert abs((v.imag - ref.imag) / ref.imag) < mp.mpf("1e-25"), f"({x},{y})"
                else:
                    assert v.imag == ref.imag == 0

    def test_pure_damping_line_matches_scaled_erfc(self):
        # K(0, y) = exp(y^2) erfc(y)
        with mp.workdps(60):
            for y in (1e-7, 1e-3, 1.0):
                v = w_oracle(EvalPoint(0.0, y))
                expected = mp.exp(mp.mpf(y) ** 2) * mp.erfc(mp.mpf(y))
                assert abs((v.real - expected) / expected) < mp.mpf("1e-25"), f"y={y}"

    def test_domain_limit(self):
        with pytest.raises(DomainError):
            w_oracle(EvalPoint(150.0, 150.0))

    @pytest.mark.slow
    def test_axis_consistency_grid(self):
        # w_oracle at y = 0 over 100 uniform points of [0, 15] against the
        # closed-form limits K = exp(-x^2), L = (2/sqrt(pi)) F(x).
        xs = uniform_axis(0.0, 15.0, 100)
        values = w_oracle_batch([(x, 0.0) for x in xs], jobs=2)
        with mp.workdps(60):
            tol = mp.mpf("1e-25")
            for x, v in zip(xs, values):
                k_expected = mp.exp(-mp.mpf(x) ** 2)
                assert abs((v.real - k_expected) / k_expected) < tol, f"K at x={x}"
                if x == 0.0:
                    assert v.imag == 0
                else:
                    l_expected = 2 / mp.sqrt(mp.pi) * dawson_oracle(x)
                    assert abs((v.imag - l_expected) / l_expected) < tol, f"L at x={x}"

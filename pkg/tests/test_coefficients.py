import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp

from dawsonvoigt import (
    ApproximationParams,
    InvalidParamsError,
    build_coefficients,
    default_params,
    high_accuracy_params,
)

SQRT_PI = math.sqrt(math.pi)


class TestParams:
    def test_default_values(self):
        p = default_params()
        assert (p.h, p.m_max, p.varsigma, p.n_terms) == (0.293, 12, 2.75, 23)

    def test_high_accuracy_values(self):
        p = high_accuracy_params()
        assert (p.h, p.m_max, p.varsigma, p.n_terms) == (0.25, 16, 2.75, 23)

    def test_presets_are_pure(self):
        assert default_params() == default_params()
        assert high_accuracy_params() == high_accuracy_params()
        assert high_accuracy_params().m_max > default_params().m_max

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(h=0.0, m_max=12, varsigma=2.75, n_terms=23),
            dict(h=-0.1, m_max=12, varsigma=2.75, n_terms=23),
            dict(h=float("nan"), m_max=12, varsigma=2.75, n_terms=23),
            dict(h=0.293, m_max=0, varsigma=2.75, n_terms=23),
            dict(h=0.293, m_max=12, varsigma=-1.0, n_terms=23),
            dict(h=0.293, m_max=12, varsigma=2.75, n_terms=0),
        ],
    )
    def test_invalid_params_rejected(self, kwargs):
        with pytest.raises(InvalidParamsError):
            ApproximationParams(**kwargs)


class TestBuildCoefficients:
    def test_lengths_match_m_max(self, coeffs):
        m = coeffs.params.m_max
        assert len(coeffs.alpha) == len(coeffs.beta) == len(coeffs.gamma) == m

    def test_beta_first_term_closed_form(self, coeffs):
        # oracle: the closed form evaluated at 50 significant digits
        with mp.workdps(50):
            expected = (mp.pi * mp.mpf("0.5") / (2 * 12 * mp.mpf(0.293))) ** 2
            assert expected == pytest.approx(4.9898e-2, rel=1e-4)
            assert coeffs.beta[0] == pytest.approx(float(expected), rel=1e-15)

    def test_beta_strictly_increasing(self, coeffs, coeffs_high):
        for cs in (coeffs, coeffs_high):
            assert all(b2 > b1 for b1, b2 in zip(cs.beta, cs.beta[1:]))

    def test_beta_ratio_of_odd_multiples(self, coeffs_high):
        # beta_m ~ (m - 1/2)^2, so beta_16 / beta_1 = (31/1)^2 = 961 exactly
        # in the closed forms; the double-precision ratio agrees to rounding.
        assert ((2 * 16 - 1) / 1) ** 2 == 961
        assert coeffs_high.beta[15] / coeffs_high.beta[0] == pytest.approx(961.0, rel=1e-14)

    def test_build_succeeds_for_both_presets(self, coeffs, coeffs_high):
        for cs in (coeffs, coeffs_high):
            assert all(map(math.isfinite, cs.alpha + cs.beta + cs.gamma))

    def test_bit_reproducible(self):
        a = build_coefficients(default_params())
        b = build_coefficients(default_params())
        assert a.alpha == b.alpha and a.beta == b.beta and a.gamma == b.gamma

    def test_split_exponential_consistency(self, coeffs):
        # Recompute alpha/gamma with the exponential factored as
        # exp(vs^2/4) * exp(-n^2 h^2); must agree with the single-exponential
        # form to 1e-14 relative (guards against accidental reassociation).
        p = coeffs.params
        h, m_max, vs, n_max = p.h, p.m_max, p.varsigma, p.n_terms
        scale = math.exp(vs * vs / 4.0)
        for i, m in enumerate(range(1, m_max + 1)):
            freq = math.pi * (m - 0.5) / (m_max * h)
            s = sum(
                math.exp(-n * n * h * h) * math.sin(freq * (n * h + vs / 2.0))
                for n in range(-n_max, n_max + 1)
            )
            c = sum(
                math.exp(-n * n * h * h) * math.cos(freq * (n * h + vs / 2.0))
                for n in range(-n_max, n_max + 1)
            )
            alpha_split = SQRT_PI * (m - 0.5) / (2.0 * m_max * m_max * h) * scale * s
            gamma_split = scale * c / (m_max * SQRT_PI)
            assert coeffs.alpha[i] == pytest.approx(alpha_split, rel=1e-14)
            assert coeffs.gamma[i] == pytest.approx(gamma_split, rel=1e-14)

    def test_overflow_detected_for_huge_varsigma(self):
        # exp(varsigma^2/4) leaves the double range for varsigma > ~53.3
        with pytest.raises(OverflowError):
            build_coefficients(ApproximationParams(h=0.293, m_max=12, varsigma=60.0, n_terms=23))

    @given(
        h=st.floats(min_value=0.05, max_value=1.0),
        m_max=st.integers(min_value=1, max_value=20),
        varsigma=st.floats(min_value=0.5, max_value=5.0),
        n_terms=st.integers(min_value=1, max_value=30),
    )
    @settings(max_examples=40, deadline=None)
    def test_invariants_hold_for_arbitrary_valid_params(self, h, m_max, varsigma, n_terms):
        cs = build_coefficients(ApproximationParams(h=h, m_max=m_max, varsigma=varsigma, n_terms=n_terms))
        assert len(cs.alpha) == m_max
        assert all(map(math.isfinite, cs.alpha + cs.beta + cs.gamma))
        assert all(b > 0 for b in cs.beta)
        assert all(b2 > b1 for b1, b2 in zip(cs.beta, cs.beta[1:]))

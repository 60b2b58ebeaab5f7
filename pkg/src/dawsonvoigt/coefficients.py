"""Coefficient sequences for the rational pole-sum approximations.

The evaluation kernels in :mod:`dawsonvoigt.core` are finite sums of simple
rational terms.  Their coefficients derive from a sampled expansion of the
Gaussian exp(-x^2): a sampling step ``h``, a term count ``m_max``, a shift
constant ``varsigma`` that moves the evaluation line off the real axis, and a
sampling half-width ``n_terms``.  For m = 1..m_max:

    alpha_m = sqrt(pi)*(m - 1/2) / (2*m_max^2*h)
              * sum_{n=-N..N} exp(varsigma^2/4 - n^2 h^2)
                * sin(pi*(m - 1/2)*(n*h + varsigma/2) / (m_max*h))

    beta_m  = (pi*(m - 1/2) / (2*m_max*h))^2

    gamma_m = 1 / (m_max*sqrt(pi))
              * sum_{n=-N..N} exp(varsigma^2/4 - n^2 h^2)
                * cos(pi*(m - 1/2)*(n*h + varsigma/2) / (m_max*h))

The sums run in fixed ascending order n = -N..N so rebuilding from the same
parameters is bit-reproducible for a given floating-point profile.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidParamsError

SQRT_PI = math.sqrt(math.pi)

# exp() overflows past this argument; varsigma^2/4 must stay below it.
_EXP_OVERFLOW_ARG = 709.0


@dataclass(frozen=True)
class ApproximationParams:
    """Tuning constants that define one approximation instance.

    h:        sampling step (> 0, dimensionless)
    m_max:    number of rational terms (>= 1)
    varsigma: off-axis shift constant (> 0); kernels evaluate at y + varsigma/2
    n_terms:  half-width N of the sampling sum (>= 1)
    """

    h: float
    m_max: int
    varsigma: float
    n_terms: int

    def __post_init__(self) -> None:
        if not (isinstance(self.m_max, int) and self.m_max >= 1):
            raise InvalidParamsError(f"m_max must be an integer >= 1, got {self.m_max!r}")
        if not (isinstance(self.n_terms, int) and self.n_terms >= 1):
            raise InvalidParamsError(f"n_terms must be an integer >= 1, got {self.n_terms!r}")
        if not (math.isfinite(self.h) and self.h > 0):
            raise InvalidParamsError(f"h must be finite and > 0, got {self.h!r}")
        if not (math.isfinite(self.varsigma) and self.varsigma > 0):
            raise InvalidParamsError(f"varsigma must be finite and > 0, got {self.varsigma!r}")


@dataclass(frozen=True)
class CoefficientSet:
    """Precomputed coefficient sequences consumed by the rational kernels.

    ``alpha``, ``beta`` and ``gamma`` are tuples of length ``params.m_max``,
    indexed 0..m_max-1 for terms m = 1..m_max.  ``beta`` is strictly
    increasing and positive; all entries are finite.

    Equivalent pole-residue form: the same expansion can be written as a sum
    over complex poles +-C_m + i*varsigma/2 with parameters A_m = alpha_m,
    B_m = -i*gamma_m and C_m^2 = beta_m.  Only alpha, beta, gamma are stored;
    A, B, C are aliases and are never materialized.
    """

    params: ApproximationParams
    alpha: tuple[float, ...]
    beta: tuple[float, ...]
    gamma: tuple[float, ...]

    def __post_init__(self) -> None:
        m = self.params.m_max
        if not (len(self.alpha) == len(self.beta) == len(self.gamma) == m):
            raise InvalidParamsError(
                f"coefficient sequences must all have length {m}, got "
                f"{len(self.alpha)}/{len(self.beta)}/{len(self.gamma)}"
            )
        if not all(map(math.isfinite, (*self.alpha, *self.beta, *self.gamma))):
            raise InvalidParamsError("coefficient sequences contain non-finite entries")
        if any(b <= 0 for b in self.beta):
            raise InvalidParamsError("beta entries must be positive")
        if any(b2 <= b1 for b1, b2 in zip(self.beta, self.beta[1:])):
            raise InvalidParamsError("beta must be strictly increasing")


def default_params() -> ApproximationParams:
    """Standard tuning constants: h=0.293, m_max=12, varsigma=2.75, N=23."""
    return ApproximationParams(h=0.293, m_max=12, varsigma=2.75, n_terms=23)


def high_accuracy_params() -> ApproximationParams:
    """Higher-accuracy tuning constants: h=0.25, m_max=16, varsigma=2.75, N=23."""
    return ApproximationParams(h=0.25, m_max=16, varsigma=2.75, n_terms=23)


def build_coefficients(params: ApproximationParams) -> CoefficientSet:
    """Compute alpha/beta/gamma sequences for the given tuning constants.

    Each sampled term uses a single exponential exp(varsigma^2/4 - n^2*h^2)
    (not factored into exp(varsigma^2/4) * exp(-n^2*h^2)), and the n-sum runs
    ascending from -N to +N, so results are bit-reproducible.

    Raises OverflowError if exp(varsigma^2/4) is not finite (impossible for
    the shipped presets, but custom varsigma is caller-supplied).
    """
    h = params.h
    m_max = params.m_max
    vs = params.varsigma
    n_max = params.n_terms

    peak_arg = vs * vs / 4.0  # largest exponent, reached at n = 0
    if not math.isfinite(peak_arg) or peak_arg > _EXP_OVERFLOW_ARG:
        raise OverflowError(
            f"exp(varsigma^2/4) overflows for varsigma={vs!r}; "
            "choose a smaller shift constant"
        )

    alpha = []
    beta = []
    gamma = []
    for m in range(1, m_max + 1):
        freq = math.pi * (m - 0.5) / (m_max * h)
        sin_sum = 0.0
        cos_sum = 0.0
        for n in range(-n_max, n_max + 1):
            weight = math.exp(vs * vs / 4.0 - n * n * h * h)
            arg = freq * (n * h + vs / 2.0)
            sin_sum += weight * math.sin(arg)
            cos_sum += weight * math.cos(arg)
        alpha.append(SQRT_PI * (m - 0.5) / (2.0 * m_max * m_max * h) * sin_sum)
        beta.append((math.pi * (m - 0.5) / (2.0 * m_max * h)) ** 2)
        gamma.append(cos_sum / (m_max * SQRT_PI))

    return CoefficientSet(
        params=params,
        alpha=tuple(alpha),
        beta=tuple(beta),
        gamma=tuple(gamma),
    )

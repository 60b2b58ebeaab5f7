"""Fast evaluation of the Dawson integral, Voigt K, L, and Faddeeva w.

All functions here work in double precision from precomputed
:class:`~dawsonvoigt.coefficients.CoefficientSet` sequences.  The two scalar
kernels are sums of m_max rational terms sharing one denominator family
(y below denotes the already-shifted coordinate y + varsigma/2):

    kappa(x, y)  = sum_m [alpha_m*(beta_m + y^2 - x^2)
                          + gamma_m*y*(beta_m + x^2 + y^2)] / D_m(x, y)

    lambda(x, y) = sum_m x*[2*alpha_m*y + gamma_m*(x^2 + y^2 - beta_m)] / D_m(x, y)

    D_m(x, y) = beta_m^2 + 2*beta_m*(y^2 - x^2) + (x^2 + y^2)^2
              = (beta_m - x^2 - y^2)^2 + 4*beta_m*y^2   > 0 for y > 0

On the upper half-plane the Faddeeva function w = K + i*L is approximated by
w(x, y) ~ kappa(x, y + varsigma/2) + i*lambda(x, y + varsigma/2); the real
part loses relative accuracy for y below ~1e-6, where a dedicated small-y
formula takes over, and for |x + iy| > 15 the classical continued fraction
is used instead (see :mod:`dawsonvoigt.contfrac`).  Dispatch is by
:attr:`EvalPoint.region`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .coefficients import SQRT_PI, CoefficientSet
from .contfrac import laplace_cf_adaptive
from .errors import NegativeYError, NonFiniteInputError

# Radius of the rational-approximation domain.  The boundary is inclusive;
# the squared comparison carries a one-part-in-1e9 slack so that corner
# points like (15, 1e-6), whose exact |z| exceeds 15 by ~1e-18, still
# classify inside (the continued fraction is the wrong tool near the real
# axis, the rational form is fine slightly past the radius).
RATIONAL_RADIUS = 15.0
_INSIDE_R2 = RATIONAL_RADIUS * RATIONAL_RADIUS * (1.0 + 1e-9)

# Largest y for the dedicated small-y branch.  The boundary belongs to the
# small-y side: at y = 1e-6 the plain kappa kernel is accurate only to its
# ~1e-8 absolute error band while the small-y formula stays at ~1e-11
# relative, so routing the boundary through kappa would spoil the accuracy
# guarantee of the [0, 1e-6] strip.
SMALL_Y_THRESHOLD = 1e-6

# exp() overflows past this argument.
_EXP_OVERFLOW_ARG = 709.0


class Region(enum.Enum):
    """Which evaluation path serves a point of the upper half-plane."""

    RATIONAL = "rational"
    SMALL_Y = "small_y"
    CONTINUED_FRACTION = "continued_fraction"


@dataclass(frozen=True)
class EvalPoint:
    """A point (x, y) of the closed upper half-plane, validated on creation."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise NonFiniteInputError(f"EvalPoint requires finite x, y; got ({self.x!r}, {self.y!r})")
        if self.y < 0.0:
            raise NegativeYError(f"EvalPoint requires y >= 0; got y={self.y!r}")

    @property
    def region(self) -> Region:
        """Classify the point for dispatch (see module constants)."""
        if self.x * self.x + self.y * self.y > _INSIDE_R2:
            return Region.CONTINUED_FRACTION
        if self.y <= SMALL_Y_THRESHOLD:
            return Region.SMALL_Y
        return Region.RATIONAL


@dataclass(frozen=True)
class ComplexValue:
    """A complex result carried as two floats."""

    re: float
    im: float

    def as_complex(self) -> complex:
        return complex(self.re, self.im)


def _require_finite(op: str, **values: float) -> None:
    for name, v in values.items():
        if not math.isfinite(v):
            raise NonFiniteInputError(f"{op}: {name} must be finite, got {v!r}")


def kappa(x: float, y_shifted: float, coeffs: CoefficientSet) -> float:
    """Real-part rational kernel, evaluated at an already-shifted ordinate.

    Callers approximating the Voigt function pass y_shifted = y + varsigma/2.
    Even in x (depends on x only through x^2).  Terms are accumulated in
    ascending m; the shared subexpressions x^2, y^2 and (x^2+y^2)^2 are
    computed once per call.
    """
    _require_finite("kappa", x=x, y_shifted=y_shifted)
    xx = x * x
    yy = y_shifted * y_shifted
    diff = yy - xx
    s = xx + yy
    ss = s * s
    total = 0.0
    for a, b, g in zip(coeffs.alpha, coeffs.beta, coeffs.gamma):
        total += (a * (b + diff) + g * y_shifted * (b + s)) / (b * b + 2.0 * b * diff + ss)
    return total


def lambda_fn(x: float, y_shifted: float, coeffs: CoefficientSet) -> float:
    """Imaginary-part rational kernel, evaluated at a shifted ordinate.

    Odd in x: every numerator carries the factor x, so lambda_fn(0, y) is
    exactly 0.0.  Same evaluation-order contract as :func:`kappa`.
    """
    _require_finite("lambda_fn", x=x, y_shifted=y_shifted)
    xx = x * x
    yy = y_shifted * y_shifted
    diff = yy - xx
    s = xx + yy
    ss = s * s
    total = 0.0
    for a, b, g in zip(coeffs.alpha, coeffs.beta, coeffs.gamma):
        total += x * (2.0 * a * y_shifted + g * (s - b)) / (b * b + 2.0 * b * diff + ss)
    return total


def sinc(u: float) -> float:
    """sin(u)/u with the removable singularity filled: sinc(0) = 1.

    For |u| < 1e-4 the series 1 - u^2/6 + u^4/120 avoids the 0/0
    cancellation; its next term u^6/5040 is below double resolution there.
    """
    if abs(u) < 1e-4:
        uu = u * u
        return 1.0 - uu / 6.0 + uu * uu / 120.0
    return math.sin(u) / u


def dawson_real(x: float, coeffs: CoefficientSet) -> float:
    """Dawson integral of real argument, F(x) = exp(-x^2) * int_0^x exp(t^2) dt.

    Computed as (sqrt(pi)/2) * lambda_fn(x, varsigma/2): the expanded
    rational form in x alone is algebraically identical, so the kernel is
    not duplicated.  Odd in x; exactly 0.0 at x = 0.
    """
    _require_finite("dawson_real", x=x)
    return 0.5 * SQRT_PI * lambda_fn(x, coeffs.params.varsigma / 2.0, coeffs)


def voigt_small_y_full(p: EvalPoint, coeffs: CoefficientSet) -> float:
    """Small-y Voigt formula with the full trigonometric factors.

    K(x, y<<1) ~ exp(y^2 - x^2)*cos(2xy)
                 - (2*exp(y^2)/sqrt(pi)) * [y*sinc(2xy) - F(x)*sin(2xy)]

    Intended for y << 1; the dispatcher uses the simplified variant
    :func:`voigt_small_y`, this full form is kept as a public stepping stone
    and for cross-checking.
    """
    x, y = p.x, p.y
    two_xy = 2.0 * x * y
    eyy = math.exp(y * y)
    f = dawson_real(x, coeffs)
    return (
        eyy * math.exp(-x * x) * math.cos(two_xy)
        - (2.0 * eyy / SQRT_PI) * (y * sinc(two_xy) - f * math.sin(two_xy))
    )


def voigt_small_y(p: EvalPoint, coeffs: CoefficientSet) -> float:
    """Simplified small-y Voigt formula used by the dispatcher for y <= 1e-6.

    K(x, y<<1) ~ exp(-x^2) - (2y/sqrt(pi)) * [1 - sqrt(pi)*x*lambda(x, varsigma/2)]

    At y = 0 the bracket term vanishes and the value is exactly exp(-x^2).
    """
    x, y = p.x, p.y
    lam = lambda_fn(x, coeffs.params.varsigma / 2.0, coeffs)
    return math.exp(-x * x) - (2.0 * y / SQRT_PI) * (1.0 - SQRT_PI * x * lam)


def voigt_K(p: EvalPoint, coeffs: CoefficientSet) -> float:
    """Voigt function K(x, y), dispatched by region.

    Inside |z| <= 15: the kappa kernel at y + varsigma/2, except the strip
    y <= 1e-6 where the small-y formula preserves relative accuracy.
    Outside: real part of the adaptive continued fraction (plumbing that
    makes the function total on the upper half-plane).
    """
    region = p.region
    if region is Region.CONTINUED_FRACTION:
        return laplace_cf_adaptive(p).re
    if region is Region.SMALL_Y:
        return voigt_small_y(p, coeffs)
    return kappa(p.x, p.y + coeffs.params.varsigma / 2.0, coeffs)


def voigt_L(p: EvalPoint, coeffs: CoefficientSet) -> float:
    """L-function (imaginary part of w), dispatched by region.

    The lambda kernel keeps its relative accuracy down to y = 0, so inside
    |z| <= 15 no small-y special case is needed.
    """
    if p.region is Region.CONTINUED_FRACTION:
        return laplace_cf_adaptive(p).im
    return lambda_fn(p.x, p.y + coeffs.params.varsigma / 2.0, coeffs)


def faddeeva_w(p: EvalPoint, coeffs: CoefficientSet) -> ComplexValue:
    """Faddeeva function w(x, y) = K(x, y) + i*L(x, y) on the upper half-plane.

    Inside |z| <= 15 both components come from the rational kernels at
    y + varsigma/2, with the real part replaced by the small-y branch for
    y <= 1e-6; outside, both come from the continued fraction.
    """
    region = p.region
    if region is Region.CONTINUED_FRACTION:
        return laplace_cf_adaptive(p)
    y_shifted = p.y + coeffs.params.varsigma / 2.0
    im = lambda_fn(p.x, y_shifted, coeffs)
    if region is Region.SMALL_Y:
        return ComplexValue(voigt_small_y(p, coeffs), im)
    return ComplexValue(kappa(p.x, y_shifted, coeffs), im)


def dawson_complex(p: EvalPoint, coeffs: CoefficientSet) -> ComplexValue:
    """Dawson integral of complex argument via F(z) = (i*sqrt(pi)/2)*(exp(-z^2) - w(z)).

    The complex arithmetic is carried out explicitly from real parts:
    exp(-z^2) = exp(y^2 - x^2) * (cos(2xy) - i*sin(2xy)).  Raises
    OverflowError when exp(y^2 - x^2) exceeds the double range (large
    y^2 - x^2), rather than returning inf.
    """
    x, y = p.x, p.y
    exp_arg = y * y - x * x
    if exp_arg > _EXP_OVERFLOW_ARG:
        raise OverflowError(
            f"dawson_complex: exp(y^2 - x^2) overflows at (x={x!r}, y={y!r})"
        )
    w = faddeeva_w(p, coeffs)
    mag = math.exp(exp_arg)
    two_xy = 2.0 * x * y
    e_re = mag * math.cos(two_xy)
    e_im = -mag * math.sin(two_xy)
    # (i*sqrt(pi)/2) * (d_re + i*d_im) = (sqrt(pi)/2) * (-d_im + i*d_re)
    d_re = e_re - w.re
    d_im = e_im - w.im
    return ComplexValue(-0.5 * SQRT_PI * d_im, 0.5 * SQRT_PI * d_re)

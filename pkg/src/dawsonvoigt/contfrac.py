"""Laplace continued fraction for the Faddeeva function at large |z|.

For z = x + iy with y >= 0 and |z| large, w(z) is classically expanded as

    w(z) = (i/sqrt(pi)) / (z - (1/2)/(z - 1/(z - (3/2)/(z - ...))))

with partial numerators k/2, k = 1, 2, 3, ...  Truncated at a given depth
and evaluated bottom-up this is a rational function of z that converges
rapidly for |z| > 15, the region where the rational kernels of
:mod:`dawsonvoigt.core` are not used.  This path exists so the library is
total on the upper half-plane; it is deliberately not used near the real
axis inside |z| <= 15, where the real part of the fraction degenerates.
"""

from __future__ import annotations

import math

from .errors import ConvergenceError, DomainError

_I_OVER_SQRT_PI = 1j / math.sqrt(math.pi)

# Convergence-domain radius (matches the rational-domain radius in core).
CF_MIN_RADIUS = 15.0

# Adaptive refinement: depths double from 8 until two successive evaluations
# agree to this relative tolerance, capping at 64.
CF_REL_TOL = 1e-14
CF_START_DEPTH = 8
CF_MAX_DEPTH = 64


def _check_domain(x: float, y: float) -> None:
    if not (math.isfinite(x) and math.isfinite(y)):
        raise DomainError(f"laplace_cf: inputs must be finite, got ({x!r}, {y!r})")
    if math.hypot(x, y) <= CF_MIN_RADIUS:
        raise DomainError(
            f"laplace_cf: |x+iy| must exceed {CF_MIN_RADIUS}, got point ({x!r}, {y!r})"
        )


def laplace_cf(p, depth: int):
    """Evaluate the continued fraction for w at a fixed truncation depth.

    ``p`` is an :class:`~dawsonvoigt.core.EvalPoint` (or any object with
    finite ``x``/``y`` attributes, y >= 0) with |x+iy| > 15; ``depth`` >= 1
    is the number of partial numerators retained.  Deterministic: the same
    point and depth always produce the same bits.
    """
    from .core import ComplexValue  # local import; core imports this module

    if depth < 1:
        raise DomainError(f"laplace_cf: depth must be >= 1, got {depth!r}")
    _check_domain(p.x, p.y)
    w = _cf_value(complex(p.x, p.y), depth)
    return ComplexValue(w.real, w.imag)


def _cf_value(z: complex, depth: int) -> complex:
    t = z
    for k in range(depth, 0, -1):
        t = z - (0.5 * k) / t
    return _I_OVER_SQRT_PI / t


def laplace_cf_adaptive(p):
    """Continued fraction with depth doubled until two successive depths agree.

    Starts at depth 8 and doubles to at most 64; two successive values must
    agree to 1e-14 in relative complex magnitude.  Raises ConvergenceError
    if the cap is reached without agreement.
    """
    from .core import ComplexValue

    _check_domain(p.x, p.y)
    z = complex(p.x, p.y)
    prev = _cf_value(z, CF_START_DEPTH)
    depth = CF_START_DEPTH
    while depth < CF_MAX_DEPTH:
        depth *= 2
        cur = _cf_value(z, depth)
        if abs(cur - prev) <= CF_REL_TOL * abs(cur):
            return ComplexValue(cur.real, cur.imag)
        prev = cur
    raise ConvergenceError(
        f"laplace_cf: no convergence to {CF_REL_TOL} by depth {CF_MAX_DEPTH} at ({p.x!r}, {p.y!r})"
    )

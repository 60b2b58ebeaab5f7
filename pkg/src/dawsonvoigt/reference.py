"""Slow, independent, arbitrary-precision reference oracles.

Everything here exists to validate the double-precision kernels in
:mod:`dawsonvoigt.core` and shares no code with them.  Three routes:

* ``dawson_oracle``      -- Maclaurin series of the Dawson integral,
                            F(x) = sum_{n>=0} (-2)^n x^(2n+1) / (1*3*5*...*(2n+1)).
* ``dawson_oracle_quadrature`` -- direct Gauss-Legendre panel quadrature of
                            exp(-x^2) * int_0^x exp(t^2) dt; the independent
                            second method the series is checked against.
* ``w_oracle``           -- Gauss-Legendre panel quadrature of
                            w(x,y) = (1/sqrt(pi)) * int_0^inf exp(-t^2/4)
                                     * exp(-y*t) * exp(i*x*t) dt.
* ``w_erfc``             -- cross-check route exp(-z^2)*erfc(-iz) in mpmath
                            arbitrary precision; also the generator for the
                            persisted Voigt reference grid, where its speed
                            matters (the quadrature validates it on a
                            sampled subset).

Cancellation management: extracting K ~ exp(-x^2) from the oscillatory
integral (or from the alternating series) loses about x^2*log10(e) decimal
digits, so every route raises its internal precision by a guard based on a
cheap lower-bound estimate of the result component magnitudes.
"""

from __future__ import annotations

import math
import multiprocessing
from dataclasses import dataclass

import mpmath
from mpmath import mp

from .errors import DomainError, InvalidParamsError, PrecisionError

LOG10_E = math.log10(math.e)

# w_oracle accepts |z| <= 200 (squared radius 4e4) so the continued-fraction
# region out to radius 200 can be validated against it.  The comparison
# carries a one-part-in-1e9 slack: boundary points assembled as
# r*(cos a, sin a) may land a few ulps outside the exact circle.
_W_ORACLE_MAX_R2 = 4.0e4 * (1.0 + 1e-9)


@dataclass(frozen=True)
class OraclePrecision:
    """Working precision request for the oracle routes.

    working_digits:   decimal digits carried by the result (>= 50).
    target_rel_error: relative error the oracle must deliver (>= 1e-30,
                      i.e. no tighter than 1e-30).
    """

    working_digits: int = 50
    target_rel_error: float = 1e-30

    def __post_init__(self) -> None:
        if not (isinstance(self.working_digits, int) and self.working_digits >= 50):
            raise InvalidParamsError(
                f"working_digits must be an integer >= 50, got {self.working_digits!r}"
            )
        if not (self.target_rel_error >= 1e-30):
            raise InvalidParamsError(
                f"target_rel_error must be >= 1e-30, got {self.target_rel_error!r}"
            )


# ---------------------------------------------------------------------------
# Gauss-Legendre nodes at arbitrary precision
# ---------------------------------------------------------------------------

_node_cache: dict[tuple[int, int], tuple[list, list]] = {}


def _gauss_legendre_nodes(n: int, dps: int) -> tuple[list, list]:
    """Nodes and weights of n-point Gauss-Legendre on [-1, 1] at dps digits.

    Newton iteration on the Legendre recurrence from Chebyshev initial
    guesses; results are cached per (n, dps).
    """
    key = (n, dps)
    cached = _node_cache.get(key)
    if cached is not None:
        return cached
    with mp.workdps(dps + 20):
        half: list[tuple] = []
        tol = mp.mpf(10) ** (-(dps + 10))
        for k in range(1, n // 2 + 1):
            t = mp.cos(mp.pi * (k - mp.mpf(1) / 4) / (n + mp.mpf(1) / 2))
            dp = mp.mpf(1)
            for _ in range(200):
                p0, p1 = mp.mpf(1), t
                for j in range(2, n + 1):
                    p0, p1 = p1, ((2 * j - 1) * t * p1 - (j - 1) * p0) / j
                dp = n * (t * p1 - p0) / (t * t - 1)
                step = p1 / dp
                t -= step
                if abs(step) < tol:
                    break
            half.append((t, 2 / ((1 - t * t) * dp * dp)))
        nodes = [-t for t, _ in half]
        weights = [w for _, w in half]
        if n % 2 == 1:
            t = mp.mpf(0)
            p0, p1 = mp.mpf(1), t
            for j in range(2, n + 1):
                p0, p1 = p1, ((2 * j - 1) * t * p1 - (j - 1) * p0) / j
            dp = n * (t * p1 - p0) / (t * t - 1)
            nodes.append(t)
            weights.append(2 / (dp * dp))
        for t, w in reversed(half):
            nodes.append(t)
            weights.append(w)
    _node_cache[key] = (nodes, weights)
    return nodes, weights


def _panel_quad(f, edges, n_gl: int, dps: int):
    """Sum n_gl-point Gauss-Legendre over consecutive panels given by edges."""
    nodes, weights = _gauss_legendre_nodes(n_gl, dps)
    total = mp.mpf(0)
    for a, b in zip(edges[:-1], edges[1:]):
        halfw = (b - a) / 2
        mid = (a + b) / 2
        acc = None
        for t, w in zip(nodes, weights):
            v = w * f(mid + halfw * t)
            acc = v if acc is None else acc + v
        total += acc * halfw
    return total


# ---------------------------------------------------------------------------
# Dawson integral oracles
# ---------------------------------------------------------------------------


def _dawson_guard_digits(x: float) -> int:
    # Alternating-series cancellation loses ~x^2*log10(e) digits.
    return int(math.ceil(x * x * LOG10_E)) + 10


def dawson_oracle(x: float, prec: OraclePrecision = OraclePrecision()) -> mpmath.mpf:
    """Dawson integral of real argument by its alternating Maclaurin series.

    Terms satisfy t_0 = x, t_{n+1} = t_n * (-2 x^2) / (2n + 3); summation
    stops once |term| falls below 10^-(working_digits+10) relative to the
    running sum, after the term peak at n ~ x^2.  Returns an mpf carrying
    working_digits digits with relative error <= target_rel_error.
    """
    if not math.isfinite(x):
        raise DomainError(f"dawson_oracle: x must be finite, got {x!r}")
    if abs(x) > 100.0:
        raise DomainError(f"dawson_oracle: |x| <= 100 supported, got {x!r}")
    wd = prec.working_digits
    with mp.workdps(wd + _dawson_guard_digits(x)):
        xm = mp.mpf(x)
        if xm == 0:
            return mp.mpf(0)
        cutoff = mp.mpf(10) ** (-(wd + 10))
        term = xm
        total = xm
        n = 0
        min_n = x * x
        while True:
            term *= -2 * xm * xm / (2 * n + 3)
            total += term
            n += 1
            if n > min_n and abs(term) <= abs(total) * cutoff:
                break
        return +total


def dawson_oracle_quadrature(x: float, prec: OraclePrecision = OraclePrecision()) -> mpmath.mpf:
    """Dawson integral by direct quadrature of exp(-x^2) * int_0^x exp(t^2) dt.

    Independent of the series route; used to cross-validate it.  The
    integrand grows like exp(t^2), so panel widths shrink as 8/(2t) toward
    the right endpoint and the working precision carries the same
    cancellation guard as the series (here covering dynamic range).
    """
    if not math.isfinite(x):
        raise DomainError(f"dawson_oracle_quadrature: x must be finite, got {x!r}")
    if abs(x) > 100.0:
        raise DomainError(f"dawson_oracle_quadrature: |x| <= 100 supported, got {x!r}")
    if x == 0.0:
        return mp.mpf(0)
    wd = prec.working_digits
    dps = wd + _dawson_guard_digits(x)
    sign = 1.0 if x > 0 else -1.0
    ax = abs(x)
    with mp.workdps(dps):
        n_gl = max(24, int((dps + 30) * 0.38))

        def edges_for(scale: int):
            edges = [mp.mpf(0)]
            t = mp.mpf(0)
            while t < ax:
                width = min(mp.mpf(1), mp.mpf(8) / max(1, 2 * t)) / scale
                t = min(t + width, mp.mpf(ax))
                edges.append(t)
            return edges

        def integrand(t):
            return mp.exp(t * t)

        i1 = _panel_quad(integrand, edges_for(1), n_gl, dps)
        i2 = _panel_quad(integrand, edges_for(2), n_gl, dps)
        if abs(i1 - i2) > abs(i2) * mp.mpf(prec.target_rel_error):
            raise PrecisionError(
                f"dawson_oracle_quadrature: refinement disagreement at x={x!r}"
            )
        return +(sign * mp.exp(-mp.mpf(ax) ** 2) * i2)


# ---------------------------------------------------------------------------
# Faddeeva oracles
# ---------------------------------------------------------------------------


def _w_guard_digits(x: float, y: float) -> int:
    """Digits needed to resolve the smaller w component from an O(1) integrand.

    Lower-bound estimates: K >~ max(exp(-x^2), y/(sqrt(pi)(x^2+y^2))) and,
    for x != 0, |L| >~ x/(sqrt(pi)(1/2 + x^2 + y^2)).
    """
    r2 = x * x + y * y
    log10_k = -x * x * LOG10_E
    if y > 0.0:
        log10_k = max(log10_k, math.log10(y / (math.sqrt(math.pi) * r2)))
    worst = log10_k
    if x != 0.0:
        log10_l = math.log10(abs(x) / (math.sqrt(math.pi) * (0.5 + r2)))
        worst = min(worst, log10_l)
    return max(0, int(math.ceil(-worst))) + 10


def w_oracle(p, prec: OraclePrecision = OraclePrecision()) -> mpmath.mpc:
    """Faddeeva function by Gauss-Legendre panel quadrature of its half-line form.

    Integrates (1/sqrt(pi)) * exp(-t^2/4 - y*t) * exp(i*x*t) over [0, T],
    T solving T^2/4 + y*T = (digits+10)*ln(10) so the truncated tail is
    below 10^-(digits+10) (for y = 0 this is exactly exp(-T^2/4) <
    10^-(digits+10)).  Panel widths honour three constraints: <= 2, at
    least 10 panels per oscillation period 2*pi/x, and <= 16/t against the
    Gaussian tail decay.  The whole layout is recomputed with halved widths
    and both results must agree to target_rel_error per component, else
    PrecisionError.
    """
    x, y = float(p.x), float(p.y)
    if y < 0.0:
        raise DomainError(f"w_oracle: y >= 0 required, got {y!r}")
    if x * x + y * y > _W_ORACLE_MAX_R2:
        raise DomainError(
            f"w_oracle: x^2 + y^2 <= 4e4 supported, got ({x!r}, {y!r})"
        )
    wd = prec.working_digits
    digits = wd + _w_guard_digits(x, y)
    dps = digits + 15
    with mp.workdps(dps):
        rhs = (digits + 10) * mp.log(10)
        ym = mp.mpf(y)
        xm = mp.mpf(x)
        big_t = 2 * (-ym + mp.sqrt(ym * ym + rhs))
        n_gl = max(24, int((digits + 30) * 0.38))
        osc_width = mp.mpf(2 * mp.pi) / (10 * abs(x)) if x != 0.0 else mp.mpf(2)

        def edges_for(scale: int):
            edges = [mp.mpf(0)]
            t = mp.mpf(0)
            while t < big_t:
                width = min(mp.mpf(2), osc_width, mp.mpf(16) / max(1, t)) / scale
                t = min(t + width, big_t)
                edges.append(t)
            return edges

        def integrand(t):
            return mp.exp(-t * t / 4 - ym * t) * mp.expj(xm * t)

        i1 = _panel_quad(integrand, edges_for(1), n_gl, dps)
        i2 = _panel_quad(integrand, edges_for(2), n_gl, dps)
        tol = mp.mpf(prec.target_rel_error)
        for c1, c2 in ((i1.real, i2.real), (i1.imag, i2.imag)):
            scale = max(abs(c2), abs(i2) * mp.mpf(10) ** (-digits))
            if scale > 0 and abs(c1 - c2) > scale * tol:
                raise PrecisionError(
                    f"w_oracle: refinement disagreement at ({x!r}, {y!r})"
                )
        return +(i2 / mp.sqrt(mp.pi))


def w_erfc(p, digits: int = 300) -> mpmath.mpc:
    """Cross-check route: w(z) = exp(-z^2) * erfc(-i z) at the given precision.

    Component-accurate: mpmath's erfc resolves the real and imaginary parts
    individually, so the tiny K component survives next to an O(1) L.
    """
    x, y = float(p.x), float(p.y)
    if y < 0.0:
        raise DomainError(f"w_erfc: y >= 0 required, got {y!r}")
    with mp.workdps(digits):
        z = mp.mpc(x, y)
        return +(mp.exp(-z * z) * mp.erfc(-1j * z))


# ---------------------------------------------------------------------------
# Batch evaluation (used by tests and the cache generator)
# ---------------------------------------------------------------------------


def _w_oracle_worker(args: tuple[float, float, int, float]) -> tuple[str, str]:
    x, y, wd, tol = args
    prec = OraclePrecision(working_digits=wd, target_rel_error=tol)
    v = w_oracle(_Point(x, y), prec)
    with mp.workdps(wd + 15):
        return mp.nstr(v.real, wd + 10), mp.nstr(v.imag, wd + 10)


class _Point:
    """Minimal x/y holder for worker processes (EvalPoint validates anyway)."""

    __slots__ = ("x", "y")

    def __init__(self, x: float, y: float):
        self.x = x
        self.y = y


def w_oracle_batch(points, prec: OraclePrecision = OraclePrecision(), jobs: int = 1):
    """Evaluate w_oracle over an iterable of (x, y), optionally in parallel.

    Returns a list of mpc in input order regardless of worker scheduling.
    """
    args = [(float(x), float(y), prec.working_digits, prec.target_rel_error) for x, y in points]
    if jobs > 1 and len(args) > 1:
        with multiprocessing.Pool(jobs) as pool:
            raw = pool.map(_w_oracle_worker, args)
    else:
        raw = [_w_oracle_worker(a) for a in args]
    out = []
    with mp.workdps(prec.working_digits + 15):
        for re_s, im_s in raw:
            out.append(mp.mpc(mp.mpf(re_s), mp.mpf(im_s)))
    return out


# ---------------------------------------------------------------------------
# Reference-grid generation for the persisted cache
# ---------------------------------------------------------------------------


def _dawson_line_worker(args: tuple[float, int]) -> tuple[float, float, str, str]:
    from .cache import format_ref40

    x, wd = args
    prec = OraclePrecision(working_digits=wd)
    f = dawson_oracle(x, prec)
    with mp.workdps(wd + _dawson_guard_digits(x)):
        k = mp.exp(-mp.mpf(x) ** 2)
        l = 2 / mp.sqrt(mp.pi) * f
        return (x, 0.0, format_ref40(k), format_ref40(l))


def generate_dawson_line_records(xs, working_digits: int = 50, jobs: int = 1):
    """Reference records for the y = 0 line: K = exp(-x^2), L = (2/sqrt(pi))*F(x).

    F comes from the series Dawson oracle at the given working precision;
    50 digits leaves >40 significant digits in the stored strings, far
    beyond any tolerance checked against them.
    """
    args = [(float(x), working_digits) for x in xs]
    if jobs > 1 and len(args) > 1:
        with multiprocessing.Pool(jobs) as pool:
            return pool.map(_dawson_line_worker, args, chunksize=64)
    return [_dawson_line_worker(a) for a in args]


def _voigt_column_worker(args: tuple[float, tuple[float, ...], int]) -> list:
    from .cache import format_ref40

    x, ys, digits = args
    out = []
    for y in ys:
        v = w_erfc(_Point(x, y), digits=digits)
        out.append((x, y, format_ref40(v.real), format_ref40(v.imag)))
    return out


def generate_voigt_grid_records(xs, ys, digits: int = 300, jobs: int = 1):
    """Reference records for the small-y strip via the erfc route.

    300 working digits keeps the tiny K component fully resolved even at
    x = 15 on the y = 0 row, where it sits ~97 orders of magnitude below
    |w|.  The quadrature oracle validates this route on a sampled subset of
    the grid (see the reference tests); generating the full 301 x 31 grid
    through the quadrature would cost hours instead of a minute.
    """
    ys_t = tuple(float(y) for y in ys)
    args = [(float(x), ys_t, digits) for x in xs]
    if jobs > 1 and len(args) > 1:
        with multiprocessing.Pool(jobs) as pool:
            columns = pool.map(_voigt_column_worker, args)
    else:
        columns = [_voigt_column_worker(a) for a in args]
    return [rec for col in columns for rec in col]

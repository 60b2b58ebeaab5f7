"""Persisted oracle reference values and the standard evaluation grids.

The expensive arbitrary-precision references for the two standard error
studies are computed once and stored in a plain-text cache so the test
suite runs in seconds.  File layout:

    # dawsonvoigt-oracle-cache v1
    # grid=... (one descriptive header line per generation event)
    <x> <y> <K_ref> <L_ref>

one record per line, all four fields decimal strings with 40 significant
digits, records sorted by (y, x).  Forty digits round-trips the double grid
coordinates exactly and carries the reference values far below every
tolerance used in the tests.  The file is regenerated only by the
``oracle`` CLI command; the environment variable DV_ORACLE_CACHE overrides
its path.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

import mpmath
import numpy as np
from mpmath import mp

from .errors import MissingReferenceError

ENV_CACHE_PATH = "DV_ORACLE_CACHE"
_MAGIC = "# dawsonvoigt-oracle-cache v1"

# Standard grids: the Dawson difference curve is sampled on 10^4 uniform
# points of [0, 15]; the Voigt relative-error strip on 301 x 31 points of
# [0, 15] x [0, 1e-6] (x step 0.05, y step 1e-6/30).
DAWSON_LINE_POINTS = 10_000
VOIGT_GRID_NX = 301
VOIGT_GRID_NY = 31
X_MAX = 15.0
Y_MAX = 1e-6


def uniform_axis(lo: float, hi: float, n: int) -> tuple[float, ...]:
    """n uniformly spaced doubles including both endpoints.

    Single source of truth for grid coordinates: generation and lookup must
    produce bit-identical axis values.
    """
    return tuple(float(v) for v in np.linspace(lo, hi, n))


def dawson_line_axis() -> tuple[float, ...]:
    return uniform_axis(0.0, X_MAX, DAWSON_LINE_POINTS)


def voigt_grid_axes() -> tuple[tuple[float, ...], tuple[float, ...]]:
    return (
        uniform_axis(0.0, X_MAX, VOIGT_GRID_NX),
        uniform_axis(0.0, Y_MAX, VOIGT_GRID_NY),
    )


def default_cache_path() -> Path:
    env = os.environ.get(ENV_CACHE_PATH)
    if env:
        return Path(env)
    return Path(__file__).parent / "data" / "oracle_cache.txt"


def format_ref40(value) -> str:
    """Decimal string with exactly 40 significant digits (mpf or float)."""
    with mp.workdps(50):
        return mp.nstr(mp.mpf(value), 40, strip_zeros=False)


Record = tuple[float, float, str, str]  # (x, y, K_ref, L_ref)


@dataclass
class OracleCache:
    """In-memory view of the reference cache, keyed by exact (x, y) doubles."""

    headers: tuple[str, ...] = ()
    records: dict[tuple[float, float], tuple[str, str]] = field(default_factory=dict)

    @classmethod
    def load(cls, path: Path | str) -> "OracleCache":
        path = Path(path)
        headers: list[str] = []
        records: dict[tuple[float, float], tuple[str, str]] = {}
        with open(path, "r", encoding="ascii") as fh:
            for line in fh:
                line = line.rstrip("\n")
                if not line:
                    continue
                if line.startswith("#"):
                    headers.append(line)
                    continue
                xs, ys, ks, ls = line.split()
                records[(float(xs), float(ys))] = (ks, ls)
        return cls(headers=tuple(headers), records=records)

    def save(self, path: Path | str) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        lines = [_MAGIC]
        lines.extend(h for h in self.headers if h != _MAGIC)
        for (x, y) in sorted(self.records, key=lambda k: (k[1], k[0])):
            ks, ls = self.records[(x, y)]
            lines.append(f"{format_ref40(x)} {format_ref40(y)} {ks} {ls}")
        path.write_text("\n".join(lines) + "\n", encoding="ascii")

    def add_records(self, records: list[Record], header: str) -> None:
        """Merge a generation event: replaces records at colliding keys."""
        self.headers = tuple(h for h in self.headers if h != header) + (header,)
        for x, y, ks, ls in records:
            self.records[(x, y)] = (ks, ls)

    def lookup(self, x: float, y: float) -> tuple[str, str]:
        try:
            return self.records[(x, y)]
        except KeyError:
            raise MissingReferenceError(
                f"no cached reference for (x={x!r}, y={y!r}); "
                "regenerate with: dawson-voigt oracle --grid all"
            ) from None

    def k_ref(self, x: float, y: float) -> mpmath.mpf:
        ks, _ = self.lookup(x, y)
        with mp.workdps(50):
            return mp.mpf(ks)

    def l_ref(self, x: float, y: float) -> mpmath.mpf:
        _, ls = self.lookup(x, y)
        with mp.workdps(50):
            return mp.mpf(ls)

    def dawson_ref(self, x: float) -> mpmath.mpf:
        """F(x) recovered from the y = 0 record via F = (sqrt(pi)/2) * L."""
        _, ls = self.lookup(x, 0.0)
        with mp.workdps(50):
            return mp.sqrt(mp.pi) / 2 * mp.mpf(ls)

    def __len__(self) -> int:
        return len(self.records)

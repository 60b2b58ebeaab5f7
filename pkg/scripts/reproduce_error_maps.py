#!/usr/bin/env python3
"""Reproduce both error studies as CSV files under results/.

Writes the signed Dawson difference curve (10^4 points, default and
high-accuracy presets) and the Voigt relative-error strip (301 x 31),
then prints the headline figures.  Needs the oracle cache (scripts/
build_oracle_cache.py).
"""

import math
import sys
from pathlib import Path

from dawsonvoigt.cli import run

RESULTS = Path(__file__).resolve().parent.parent / "results"


def main() -> int:
    RESULTS.mkdir(exist_ok=True)
    jobs = [
        (
            RESULTS / "dawson_difference_default.csv",
            ["sweep-dawson", "--xmax", "15", "--points", "10000"],
        ),
        (
            RESULTS / "dawson_difference_high_accuracy.csv",
            ["sweep-dawson", "--xmax", "15", "--points", "10000",
             "--params-preset", "high-accuracy"],
        ),
        (
            RESULTS / "voigt_error_map.csv",
            ["error-map", "--xmax", "15", "--ymax", "1e-6", "--nx", "301", "--ny", "31"],
        ),
    ]
    for target, argv in jobs:
        code = run(argv + ["--output", str(target)])
        if code != 0:
            return code
        print(f"wrote {target}")

    for name in ("dawson_difference_default.csv", "voigt_error_map.csv"):
        is_sweep = "dawson" in name
        worst = 0.0 if is_sweep else -math.inf
        for line in (RESULTS / name).read_text().splitlines():
            if line.startswith("#") or "," not in line or line[0].isalpha():
                continue
            value = float(line.split(",")[-1])
            worst = max(worst, abs(value)) if is_sweep else max(worst, value)
        label = "max|eps|" if is_sweep else "max log10 rel err"
        print(f"{name}: {label} = {worst:.4g}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

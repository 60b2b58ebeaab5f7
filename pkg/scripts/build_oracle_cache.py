#!/usr/bin/env python3
"""Regenerate the full oracle reference cache (slow: a few minutes).

Equivalent to: python -m dawsonvoigt oracle --grid all --jobs <N>
"""

import argparse
import sys

from dawsonvoigt.cli import run


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--jobs", type=int, default=2)
    parser.add_argument("--digits", type=int, default=300)
    args = parser.parse_args()
    return run(
        ["oracle", "--grid", "all", "--jobs", str(args.jobs), "--digits", str(args.digits)]
    )


if __name__ == "__main__":
    sys.exit(main())

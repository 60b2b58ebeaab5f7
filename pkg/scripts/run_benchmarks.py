#!/usr/bin/env python3
"""Throughput of every kernel over the seeded 10^6-point set, as JSON lines."""

import json
import sys

from dawsonvoigt.analysis import BENCH_OPS, benchmark


def main() -> int:
    stats = {}
    for op in BENCH_OPS:
        s = benchmark(op, 1_000_000, repetitions=1)
        stats[op] = s.throughput
        print(json.dumps({
            "op_name": s.op_name,
            "points_evaluated": s.points_evaluated,
            "wall_seconds": round(s.wall_seconds, 4),
            "throughput": round(s.throughput),
            "repetitions": s.repetitions,
        }))
    ratio = stats["voigt_small_y"] / stats["kappa"]
    print(json.dumps({"small_y_over_kappa_throughput": round(ratio, 3)}))
    return 0


if __name__ == "__main__":
    sys.exit(main())

import math

import pytest

from dawsonvoigt.analysis import (
    BENCH_OPS,
    ErrorGrid,
    ErrorSeries,
    TimingStats,
    bench_points,
    benchmark,
    error_grid_voigt,
    relative_error,
    sweep_dawson_error,
)
from dawsonvoigt.cache import OracleCache, uniform_axis
from dawsonvoigt.errors import InvalidParamsError, MissingReferenceError
from dawsonvoigt.reference import generate_voigt_grid_records


class TestRelativeError:
    def test_identical(self):
        assert relative_error(1.0, 1.0) == 0.0

    def test_definition(self):
        assert relative_error(1.0 + 1e-10, 1.0) == pytest.approx(1e-10, rel=1e-5)

    def test_sign_mismatch(self):
        assert relative_error(0.9, -0.9) == 2.0

    def test_zero_reference_flagged(self):
        assert math.isnan(relative_error(1.0, 0.0))


class TestErrorSeries:
    def test_validation(self, coeffs):
        from dawsonvoigt import default_params

        with pytest.raises(InvalidParamsError):
            ErrorSeries(xs=(0.0, 1.0), eps=(0.0,), params=default_params())
        with pytest.raises(InvalidParamsError):
            ErrorSeries(xs=(1.0, 1.0), eps=(0.0, 0.0), params=default_params())

    def test_sweep_small_live(self, coeffs):
        series = sweep_dawson_error(2.0, 5, coeffs)
        assert series.xs == uniform_axis(0.0, 2.0, 5)
        assert len(series.eps) == 5
        assert series.eps[0] == 0.0  # both sides exactly zero at x = 0
        assert series.max_abs() <= 7e-9

    def test_sweep_deterministic(self, coeffs):
        a = sweep_dawson_error(1.0, 4, coeffs)
        b = sweep_dawson_error(1.0, 4, coeffs)
        assert a.xs == b.xs and a.eps == b.eps

    def test_sweep_validation(self, coeffs):
        with pytest.raises(InvalidParamsError):
            sweep_dawson_error(0.0, 5, coeffs)
        with pytest.raises(InvalidParamsError):
            sweep_dawson_error(1.0, 1, coeffs)


@pytest.mark.slow
def test_sweep_beyond_standard_domain_informational(coeffs):
    # No accuracy claim is made past x = 15; this records how the kernel
    # behaves out to x = 50 (it keeps improving: the error band decays with
    # x) without asserting a bound.
    series = sweep_dawson_error(50.0, 11, coeffs)
    assert all(map(math.isfinite, series.eps))
    print(f"informational [0,50] sweep: max|eps|={series.max_abs():.3e}")


@pytest.fixture(scope="module")
def tiny_cache():
    xs = uniform_axis(0.0, 15.0, 2)
    ys = uniform_axis(0.0, 1e-6, 2)
    store = OracleCache()
    store.add_records(generate_voigt_grid_records(xs, ys, digits=60), "# grid=tiny")
    return store


class TestErrorGrid:
    def test_shape_2x2(self, coeffs, tiny_cache):
        grid = error_grid_voigt(15.0, 1e-6, 2, 2, coeffs, cache=tiny_cache)
        assert len(grid.log10_delta) == 2
        assert all(len(row) == 2 for row in grid.log10_delta)
        assert grid.xs == (0.0, 15.0)
        assert grid.ys == (0.0, 1e-6)

    def test_branch_counts_match_geometry(self, coeffs, tiny_cache):
        grid = error_grid_voigt(15.0, 1e-6, 2, 2, coeffs, cache=tiny_cache)
        # every cell of the strip has y <= 1e-6 and |z| within the rational
        # radius, so all cells are served by the small-y branch
        assert grid.branch_counts["small_y"] == 4
        assert grid.branch_counts["rational"] == 0
        assert grid.branch_counts["continued_fraction"] == 0

    def test_entries_finite_and_accurate(self, coeffs, tiny_cache):
        grid = error_grid_voigt(15.0, 1e-6, 2, 2, coeffs, cache=tiny_cache)
        for row in grid.log10_delta:
            for v in row:
                assert math.isfinite(v)
        assert grid.max_entry() < -10.0

    def test_missing_reference(self, coeffs):
        with pytest.raises(MissingReferenceError):
            error_grid_voigt(15.0, 1e-6, 3, 3, coeffs, cache=OracleCache())

    def test_deterministic(self, coeffs, tiny_cache):
        a = error_grid_voigt(15.0, 1e-6, 2, 2, coeffs, cache=tiny_cache)
        b = error_grid_voigt(15.0, 1e-6, 2, 2, coeffs, cache=tiny_cache)
        assert a.log10_delta == b.log10_delta

    def test_grid_validation(self, coeffs, tiny_cache):
        with pytest.raises(InvalidParamsError):
            error_grid_voigt(15.0, 1e-6, 0, 2, coeffs, cache=tiny_cache)
        with pytest.raises(InvalidParamsError):
            ErrorGrid(xs=(0.0,), ys=(0.0, 1.0), log10_delta=((0.0,),), branch_counts={})


class TestBenchmark:
    def test_point_set_is_seeded_and_deterministic(self):
        assert bench_points(100, seed=7) == bench_points(100, seed=7)
        assert bench_points(100, seed=7) != bench_points(100, seed=8)
        xs, ys = zip(*bench_points(1000))
        assert all(0.0 <= x <= 15.0 for x in xs)
        assert all(0.0 <= y <= 1e-6 for y in ys)

    def test_unknown_selector(self):
        with pytest.raises(InvalidParamsError):
            benchmark("erf", 10_000)

    def test_point_floor(self):
        with pytest.raises(InvalidParamsError):
            benchmark("kappa", 9_999)

    @pytest.mark.parametrize("op", BENCH_OPS)
    def test_runs_and_reports_positive_throughput(self, coeffs, op):
        stats = benchmark(op, 10_000, repetitions=1, coeffs=coeffs)
        assert stats.op_name == op
        assert stats.points_evaluated == 10_000
        assert stats.wall_seconds > 0
        assert stats.throughput > 0

    def test_timing_stats_invariant(self):
        with pytest.raises(InvalidParamsError):
            TimingStats(op_name="kappa", points_evaluated=10, wall_seconds=1.0, throughput=5.0, repetitions=1)
        with pytest.raises(InvalidParamsError):
            TimingStats(op_name="kappa", points_evaluated=10, wall_seconds=0.0, throughput=0.0, repetitions=1)
        ok = TimingStats(op_name="kappa", points_evaluated=10, wall_seconds=2.0, throughput=10.0, repetitions=2)
        assert ok.throughput == 10.0

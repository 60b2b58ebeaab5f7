import pytest

from dawsonvoigt import build_coefficients, default_params, high_accuracy_params
from dawsonvoigt.cache import OracleCache, default_cache_path


@pytest.fixture(scope="session")
def coeffs():
    return build_coefficients(default_params())


@pytest.fixture(scope="session")
def coeffs_high():
    return build_coefficients(high_accuracy_params())


@pytest.fixture(scope="session")
def oracle_cache():
    path = default_cache_path()
    if not path.exists():
        pytest.fail(
            f"oracle cache missing at {path}; generate it once with: "
            "python -m dawsonvoigt oracle --grid all --jobs 2"
        )
    return OracleCache.load(path)

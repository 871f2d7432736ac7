import pytest
import logging

from mincq.util.sampling import default_rng


def pytest_addoption(parser):
    parser.addoption(
        "--no-clean", action="store_true", default=False, help="no cleaning in teardown"
    )


@pytest.fixture
def logger(caplog):
    caplog.set_level(logging.DEBUG)
    logger = logging.getLogger()
    yield logger


@pytest.fixture
def rng():
    """Seeded generator for exact random property trials."""
    return default_rng(20240917)


@pytest.fixture
def no_clean(request):
    return request.config.getoption("--no-clean")

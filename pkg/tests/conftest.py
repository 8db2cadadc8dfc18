import pytest

from combx.data.poset import from_edges


def pytest_addoption(parser):
    parser.addoption(
        "--exhaustive",
        action="store_true",
        default=False,
        help="Run acceptance-scale tests",
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "exhaustive: mark test as acceptance-scale")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--exhaustive"):
        return
    skip_exhaustive = pytest.mark.skip(reason="Needs --exhaustive")
    for item in items:
        if "exhaustive" in item.keywords:
            item.add_marker(skip_exhaustive)


@pytest.fixture
def diamond():
    return from_edges(4, [(0, 1), (0, 2), (1, 3), (2, 3)], ["bot", "l", "r", "top"])

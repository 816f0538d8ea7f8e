from pathlib import Path

import pytest

from edge_clique_partition.fpp import gen_gn
from edge_clique_partition.model import AwecpInstance, WildcardMatrix


def pytest_addoption(parser):
    try:
        parser.addoption("--slow", action="store_true", help="include slow tests")
    # Options are already added, e.g. if conftest is copied in a build pipeline
    # and runs twice
    except ValueError:
        pass


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: include slow tests")


def pytest_runtest_setup(item):
    def getopt(opt):
        # When using 'pytest --pyargs edge_clique_partition' to test an
        # installed copy, pytest skips running our pytest_addoption() hook.
        # Later, when we call getoption(), pytest raises an error, because it
        # doesn't recognize the option we're asking about. To avoid this, we
        # need to pass a default value.
        return item.config.getoption(f"--{opt}", False)

    # Integration of boolean flags
    for opt in ["slow"]:
        if opt in item.keywords and not getopt(opt):
            pytest.skip(f"need --{opt} option to run")


@pytest.fixture
def test_dir(request):
    return Path(request.fspath).parent


@pytest.fixture
def triangle():
    return AwecpInstance(3, ((0, 1, 1), (0, 2, 1), (1, 2, 1)), {}, 1)


@pytest.fixture
def path3():
    return AwecpInstance(3, ((0, 1, 1), (1, 2, 1)), {}, 1)


@pytest.fixture
def star3():
    return AwecpInstance(4, ((0, 1, 1), (0, 2, 1), (0, 3, 1)), {}, 1)


@pytest.fixture
def k5():
    edges = tuple((u, v, 1) for u in range(5) for v in range(u + 1, 5))
    return AwecpInstance(5, edges, {}, 1)


@pytest.fixture
def g2():
    return gen_gn(2)


@pytest.fixture
def triangle_matrix():
    return WildcardMatrix.from_rows([["*", 1, 1], [1, "*", 1], [1, 1, "*"]])


@pytest.fixture
def path_matrix():
    return WildcardMatrix.from_rows([["*", 1, 0], [1, "*", 1], [0, 1, "*"]])

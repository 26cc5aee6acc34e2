import pytest

import trivext
from trivext.core import IDEMPOTENT, BasisElement


def pytest_addoption(parser):
    parser.addoption('--extended', action='store_true', default=False,
                     help='run the long acceptance checks marked slow')


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: long-running acceptance check')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--extended'):
        return
    skip = pytest.mark.skip(reason='needs --extended')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def a2():
    return trivext.Quiver(2, ((0, 1, 'a'),))


@pytest.fixture
def kronecker():
    return trivext.Quiver(2, ((0, 1, 'a'), (0, 1, 'b')))


@pytest.fixture
def kA2(a2):
    return trivext.path_algebra(a2)


@pytest.fixture
def te_a2(kA2):
    return trivext.trivial_extension(kA2)


@pytest.fixture
def dual_numbers():
    return trivext.trivial_extension(trivext.semisimple_algebra(1))


@pytest.fixture
def a2_table():
    """Basis and structure constants of kA2, for hand-made corruptions."""
    basis = [BasisElement(0, 0, 0, IDEMPOTENT, 0, 'e0'),
             BasisElement(1, 1, 1, IDEMPOTENT, 0, 'e1'),
             BasisElement(2, 0, 1, label='a')]
    mult = {(0, 0): {0: 1}, (1, 1): {1: 1}, (0, 2): {2: 1}, (2, 1): {2: 1}}
    return basis, mult

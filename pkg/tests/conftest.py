import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from windex.presentation import (
    chain_group, cyclic_group, one_object_groupoid, trivial_point,
)


@pytest.fixture(scope="session")
def C2():
    return chain_group(2, 1)


@pytest.fixture(scope="session")
def C3():
    return chain_group(3, 1)


@pytest.fixture(scope="session")
def C4():
    return chain_group(2, 2)


@pytest.fixture(scope="session")
def C9():
    return chain_group(3, 2)


@pytest.fixture(scope="session")
def C8():
    return chain_group(2, 3)


@pytest.fixture(scope="session")
def C4_tabular():
    return cyclic_group(2, 2)


@pytest.fixture(scope="session")
def PT():
    return trivial_point()


@pytest.fixture(scope="session")
def BG():
    return one_object_groupoid(6)

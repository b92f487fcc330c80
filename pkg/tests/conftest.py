import pytest

from ksnake import _kernels
from ksnake.assemble import he_snake
from ksnake.chain_graph import build_chain_graph
from ksnake.chains import build_all_chains


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    _kernels.warmup()


@pytest.fixture(scope="session")
def s5_chains():
    return build_all_chains(2)


@pytest.fixture(scope="session")
def s7_chains():
    return build_all_chains(3)


@pytest.fixture(scope="session")
def s9_chains():
    return build_all_chains(4)


@pytest.fixture(scope="session")
def s5_snake(s5_chains):
    return he_snake(2, s5_chains)


@pytest.fixture(scope="session")
def s7_snake(s7_chains):
    return he_snake(3, s7_chains)


@pytest.fixture(scope="session")
def s9_snake(s9_chains):
    return he_snake(4, s9_chains)


@pytest.fixture(scope="session")
def s7_graph(s7_chains):
    return build_chain_graph(3, s7_chains)

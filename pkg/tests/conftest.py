import pytest

from sl2prod.tworep import make_L1
from sl2prod.product import build_product


@pytest.fixture(scope="session")
def V():
    return make_L1()


@pytest.fixture(scope="session")
def P(V):
    return build_product(V, check=True)

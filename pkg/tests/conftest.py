import pytest

from drgkit import catalog
from drgkit.ncgb import complete


@pytest.fixture(scope="session")
def S():
    return catalog.load_builtin("S")


@pytest.fixture(scope="session")
def T():
    return catalog.load_builtin("T")


@pytest.fixture(scope="session")
def gb_S(S):
    return complete(S.presentation, 9)


@pytest.fixture(scope="session")
def gb_T(T):
    return complete(T.presentation, 9)


@pytest.fixture(scope="session")
def claims_map():
    """One full verification run shared by the acceptance criteria."""
    results = catalog.verify_claims(depth=8)
    return {r.claim: r for r in results}

import pytest

from lndt.spread import null_seed_invocations


@pytest.fixture(scope="session", autouse=True)
def null_seeds_stay_quiet():
    # Nothing in the whole suite may ever reach an uninhabited position.
    yield
    assert null_seed_invocations() == 0

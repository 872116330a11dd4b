import pytest

from powersum.combinatorics import stirling_table


@pytest.fixture(scope="session")
def table30():
    return stirling_table(30)

import pytest

from borosmoll.core import BMTable


@pytest.fixture(scope="session")
def table() -> BMTable:
    # shared triangle; 202 covers every sweep in the suite
    return BMTable(202)

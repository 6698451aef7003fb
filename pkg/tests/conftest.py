import pytest

from twocenter.states import StateBank


@pytest.fixture(scope="session")
def bank():
    """Shared cache of solved states; expensive points are reused across
    the whole session (acceptance + unit tests)."""
    return StateBank()

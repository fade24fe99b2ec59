from functools import lru_cache

import pytest

from phm.fixtures import FIXTURES, MUTANTS


@lru_cache(maxsize=None)
def built(name):
    """Fixtures are immutable, so one instance per name is shared across tests."""
    if name in FIXTURES:
        return FIXTURES[name]()
    return MUTANTS[name][0]()


@pytest.fixture(params=sorted(FIXTURES))
def fx(request):
    return built(request.param)

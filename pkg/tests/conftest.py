from functools import lru_cache

import pytest

from cutpretree import CutSystem, Pretree
from cutpretree.fixtures import FIXTURES, valid_fixtures


@lru_cache(maxsize=None)
def pretree_of(name: str) -> Pretree:
    f = FIXTURES[name]
    return Pretree(CutSystem.build(f.space, f.cuts))


@pytest.fixture(params=[f.name for f in valid_fixtures()])
def valid_name(request):
    return request.param


@pytest.fixture
def path3():
    return FIXTURES["path3"].space


@pytest.fixture
def cycle4():
    return FIXTURES["cycle4_single"].space


@pytest.fixture
def corners():
    return FIXTURES["corners"]

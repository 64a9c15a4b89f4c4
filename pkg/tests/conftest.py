from __future__ import annotations

import os

import pytest

from fkcable.apoly import recursion_for
from fkcable.cabling import gen_cable


@pytest.fixture(scope="session")
def cache_dir(tmp_path_factory):
    return os.environ.get("FKCABLE_CACHE_DIR") or str(tmp_path_factory.mktemp("fkcache"))


@pytest.fixture(scope="session")
def rec9(cache_dir):
    return recursion_for(9, cache_dir)


@pytest.fixture(scope="session")
def rec11(cache_dir):
    return recursion_for(11, cache_dir)


@pytest.fixture(scope="session")
def rec13(cache_dir):
    return recursion_for(13, cache_dir)


@pytest.fixture(scope="session")
def cable_2_11():
    return gen_cable(2, 5, 129)

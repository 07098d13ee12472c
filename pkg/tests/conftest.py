import pytest

from pcflag.catalog import resolve_catalog
from pcflag.pcompact import build_model
from pcflag.reflection import close_group


@pytest.fixture(scope="session")
def g7_group():
    return close_group(list(resolve_catalog("G7").generators), cap=1000)


@pytest.fixture(scope="session")
def g7_model(g7_group):
    return build_model(g7_group, 13)


@pytest.fixture(scope="session")
def s3_group():
    return close_group(list(resolve_catalog("S3").generators), cap=100)


@pytest.fixture(scope="session")
def s3_model(s3_group):
    return build_model(s3_group, 7)


@pytest.fixture(scope="session")
def sullivan_model():
    group = close_group(list(resolve_catalog("sullivan", 5).generators), cap=10)
    return build_model(group, 5)


@pytest.fixture(scope="session")
def pm1_group():
    return close_group(list(resolve_catalog("pm1").generators), cap=10)


@pytest.fixture(scope="session")
def pm1_model(pm1_group):
    return build_model(pm1_group, 5)

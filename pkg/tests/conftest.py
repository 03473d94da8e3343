"""Shared fixtures: session-cached fields and both value backends."""

import pytest

from hypercount import build_field, get_ring


@pytest.fixture(scope="session")
def f7():
    return build_field(7)


@pytest.fixture(scope="session")
def f9():
    return build_field(3, 2)


@pytest.fixture(scope="session")
def f13():
    return build_field(13)


@pytest.fixture(scope="session")
def f25():
    return build_field(5, 2)


@pytest.fixture(params=["exact", "float"])
def backend(request):
    return request.param


@pytest.fixture
def ring13(f13, backend):
    return get_ring(f13, backend)


@pytest.fixture
def ring9(f9, backend):
    return get_ring(f9, backend)

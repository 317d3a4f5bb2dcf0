import pytest

from smallquot.carriers import available_backends, using_backend


@pytest.fixture(params=available_backends())
def backend(request):
    with using_backend(request.param):
        yield request.param

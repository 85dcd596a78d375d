import pytest

import gaussft


@pytest.fixture(params=gaussft.available_backends())
def backend(request):
    """Run the test once per available kernel backend."""
    prev = gaussft.set_backend(request.param)
    yield request.param
    gaussft.set_backend(prev)

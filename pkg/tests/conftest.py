import pytest

from homsample import backend


def available_backends():
    names = []
    try:
        import numba  # noqa: F401
        names.append("numba")
    except ImportError:
        pass
    names.append("numpy")
    return names


@pytest.fixture(params=available_backends())
def any_backend(request):
    """Run the test under each available kernel backend."""
    previous = backend.active_backend()
    backend.set_backend(request.param)
    yield request.param
    backend.set_backend(previous)

import pytest

from necklace_periods import _pykernels, kernels

try:
    from necklace_periods import _ckernels
except ImportError:  # pure-Python install
    _ckernels = None

BACKENDS = [_pykernels] + ([_ckernels] if _ckernels is not None else [])


@pytest.fixture(params=BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def backend(request):
    return request.param


@pytest.fixture
def pure_python():
    """Route every kernel call through the fallback for the duration of a test."""
    kernels.use_backend("python")
    yield
    kernels.use_backend(None)


def pytest_terminal_summary(terminalreporter):
    from tests import test_acceptance

    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(test_acceptance.RESULTS, key=lambda k: (isinstance(k, str), k)):
        terminalreporter.write_line(test_acceptance.RESULTS[key])

import numpy as np
import pytest

from hermcodes import _kernels
from hermcodes.code_construct import build_code
from hermcodes.finite_field import CodeParams, build_field

_CTX = {}
ACCEPTANCE = {}


def get_ctx(p, m):
    if (p, m) not in _CTX:
        _CTX[(p, m)] = build_field(CodeParams(p, m))
    return _CTX[(p, m)]


@pytest.fixture(scope="session")
def field_ctx():
    return get_ctx


@pytest.fixture(scope="session")
def code_of():
    specs = {}

    def get(p, m):
        if (p, m) not in specs:
            specs[(p, m)] = build_code(CodeParams(p, m), get_ctx(p, m))
        return specs[(p, m)]

    return get


@pytest.fixture(scope="session")
def warm_kernels():
    """Compile the numba kernels once so timed tests measure run time, not JIT."""
    basis = np.array([[1, 0, 1], [0, 1, 1]], dtype=np.int64)
    for impl in _kernels.KERNELS.values():
        impl["span_profile"](basis, 2, 0, 4)
        impl["exp_table"](2, 2, np.array([1, 1, 1], dtype=np.int64))
    return True


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        prev = ACCEPTANCE.get(number, (title, True))
        ACCEPTANCE[number] = (title, prev[1] and rep.outcome == "passed")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}")

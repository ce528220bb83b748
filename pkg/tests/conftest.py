import functools

import pytest

from supercas.osp_algebra import build_osp, osp_adjoint_bundle
from supercas.sl_algebra import build_sl, sl_adjoint_bundle

ACCEPTANCE_LINES: list[str] = []


@functools.lru_cache(maxsize=None)
def osp_instance(M, N):
    model = build_osp(M, N)
    return model, osp_adjoint_bundle(model)


@functools.lru_cache(maxsize=None)
def sl_instance(M, N):
    model = build_sl(M, N)
    return model, sl_adjoint_bundle(model)


@pytest.fixture(scope="session")
def osp52():
    return osp_instance(5, 2)


@pytest.fixture(scope="session")
def sl41():
    return sl_instance(4, 1)


@pytest.fixture(scope="session")
def sl31():
    return sl_instance(3, 1)


@pytest.fixture(scope="session")
def sl21():
    return sl_instance(2, 1)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

from functools import lru_cache

import pytest
from hypothesis import settings

from dagfem.monad import ts_monad
from dagfem.two_cat.fixture import fixture_2category

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@lru_cache(maxsize=None)
def _bundle(with_kleisli: bool):
    return fixture_2category(with_kleisli=with_kleisli)


@pytest.fixture(scope="session")
def ts():
    return ts_monad()


@pytest.fixture(scope="session")
def bundle():
    return _bundle(False)


@pytest.fixture(scope="session")
def bundle_kl():
    return _bundle(True)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)

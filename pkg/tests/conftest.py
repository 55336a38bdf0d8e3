from functools import lru_cache

import pytest

from crossedhh import builders
from crossedhh.field import RATIONALS, Field
from crossedhh.suite import run_full_suite

GF101 = Field(101)
SHIPPED_KEYS = [s.key for s in builders.SHIPPED]


@lru_cache(maxsize=None)
def bundle(key, spec="q"):
    return builders.shipped(key, Field.from_spec(spec))


@lru_cache(maxsize=None)
def suite(key, spec="q"):
    """Full pipeline on a shipped instance, computed once per session."""
    return run_full_suite(bundle(key, spec))


@pytest.fixture(params=SHIPPED_KEYS)
def shipped_key(request):
    return request.param


@pytest.fixture
def Q():
    return RATIONALS


@pytest.fixture
def F101():
    return GF101


ACCEPTANCE = {}


def record_criterion(number, passed, detail):
    ACCEPTANCE[number] = (passed, detail)
    print(f"CRITERION {number}: {'PASS' if passed else 'FAIL'} ({detail})")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"CRITERION {number}: {'PASS' if passed else 'FAIL'} ({detail})")

"""Shared test configuration: a lean hypothesis profile so the whole
suite stays fast, and one precomputed default report."""

import pytest
from hypothesis import settings

from hkverify.report import run_report

settings.register_profile("suite", max_examples=25, deadline=None)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def default_report():
    return run_report()

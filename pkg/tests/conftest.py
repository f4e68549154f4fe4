"""Shared test configuration: one session context, relaxed hypothesis deadline."""

import pytest
from hypothesis import settings

from rsckit import PrecisionContext

# arbitrary-precision arithmetic makes per-example wall clock too noisy
# for hypothesis' default deadline
settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def ctx():
    return PrecisionContext(bits=256)

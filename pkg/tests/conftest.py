import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.utils.config import PrecisionContext


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: two-dimensional quadratures and long bilateral sums")


@pytest.fixture(scope='session')
def ctx():
    """Reduced precision shared by the fast tests"""
    return PrecisionContext(digits=20)


@pytest.fixture
def mp(ctx):
    return ctx.mp

"""Pytest configuration and fixtures for jacq tests."""

import logging
from fractions import Fraction

import pytest

from jacq.logs import set_level

J3_TABLE = [0, 1, 1, 2, 5, 9, 18, 37, 73, 146, 293]
J3_LUCAS_TABLE = [2, 1, 5, 10, 17, 37, 74, 145, 293, 586, 1169]


# Test markers setup
def pytest_configure(config):
    """Configure pytest with custom markers."""
    config.addinivalue_line(
        "markers", "unit: Unit tests that test individual components in isolation"
    )
    config.addinivalue_line(
        "markers", "integration: Integration tests that test component interactions"
    )
    config.addinivalue_line(
        "markers",
        "performance: Performance tests that measure execution speed and resource usage",
    )
    config.addinivalue_line("markers", "slow: Tests that take a long time to run")
    config.addinivalue_line(
        "markers", "smoke: Quick smoke tests to verify basic functionality"
    )
    config.addinivalue_line("markers", "regression: Tests for previously found bugs")
    config.addinivalue_line("markers", "cli: Tests for command line interface")
    config.addinivalue_line("markers", "config: Tests for configuration handling")


@pytest.fixture
def j3_table():
    """J(n) for n = 0..10 as exact rationals."""
    return [Fraction(x) for x in J3_TABLE]


@pytest.fixture
def j3_lucas_table():
    """j(n) for n = 0..10 as exact rationals."""
    return [Fraction(x) for x in J3_LUCAS_TABLE]


@pytest.fixture(autouse=True)
def reset_log_level():
    """Restore the package log level after tests that change it."""
    yield
    set_level(logging.INFO)

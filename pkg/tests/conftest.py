"""
Pytest configuration and fixtures for radialis tests
"""

import os
from unittest.mock import Mock, patch

import pytest

from radialis.checks import default_suite_spaces
from radialis.config import Config


@pytest.fixture
def config():
    """A Config built from an empty environment, so every default applies"""
    with patch.dict(os.environ, {}, clear=True):
        yield Config()


@pytest.fixture
def mock_config():
    """Create a mock Config object with the default tolerances"""
    mocked = Mock(spec=Config)
    mocked.TOLERANCE = 1e-9
    mocked.CLASSIFY_THRESHOLD = 1e-6
    mocked.FLUX_TOL = 1e-12
    mocked.HARMONIC_TOL = 1e-10
    mocked.LEDGER_GAP_TOL = 1e-5
    mocked.CRITICAL_THRESHOLD = 1e-12
    mocked.QUAD_TOL = 1e-10
    mocked.SPHERE_CAP = 1e-3
    mocked.LEDGER_STEP = 1e-2
    mocked.LEDGER_LEVELS = 2
    mocked.LOG_LEVEL = "WARNING"
    mocked.LOG_FILE = None
    mocked.validate.return_value = True
    return mocked


@pytest.fixture
def small_spaces():
    """Catalog entries of real dimension at most 4"""
    return default_suite_spaces()

"""
Shared test configuration and fixtures for the rainbowtn test suite.

This module provides common constants, fixtures and helpers used across
both unit and integration tests.
"""

from fractions import Fraction

import pytest

from rainbowtn.core.config import RuntimeLimits, set_limits
from rainbowtn.core.schemas import ChainModel
from rainbowtn.core.walks import parse_walk


class TestConfig:
    """Centralized test configuration"""

    # Numerical tolerances
    EXACT_TOLERANCE = 1e-12
    ORACLE_TOLERANCE = 1e-10

    # j=1 walk counts, indexed by n
    MOTZKIN_COUNTS = {1: 2, 2: 9, 3: 51, 4: 323, 5: 2188, 6: 15511}
    FREDKIN_COUNTS = {1: 1, 2: 2, 3: 5, 4: 14, 5: 42, 6: 132}

    # Deformation parameters used by the exactness grids
    EXACT_T_VALUES = [Fraction(1, 2), Fraction(1), Fraction(2)]
    FLOAT_T_VALUES = [0.5, 1.0, 2.0]

    MODELS = [ChainModel.motzkin, ChainModel.fredkin]

    # Small limits that trip the caps quickly
    TIGHT_LIMITS = {
        "max_walks": 10,
        "max_dimension": 100,
        "max_frontier": 10,
        "max_tiling_n": 1,
    }


@pytest.fixture(scope="session")
def test_config():
    """Provide test configuration"""
    return TestConfig()


@pytest.fixture(autouse=True)
def reset_limits(monkeypatch):
    """Every test starts from default limits, unaffected by the environment"""
    for name in RuntimeLimits.model_fields:
        monkeypatch.delenv(f"RAINBOWTN_{name.upper()}", raising=False)
    set_limits(None)
    yield
    set_limits(None)


@pytest.fixture
def tight_limits(test_config):
    """Limits small enough to hit every cap"""
    return RuntimeLimits(**test_config.TIGHT_LIMITS)


@pytest.fixture
def make_walk():
    """Factory parsing walk text under a model and color count"""

    def _make(text, model=ChainModel.motzkin, colors=None):
        return parse_walk(text, model, colors)

    return _make


@pytest.fixture
def output_dir(tmp_path):
    """Directory for files written by the CLI and the renderers"""
    path = tmp_path / "out"
    path.mkdir()
    return path

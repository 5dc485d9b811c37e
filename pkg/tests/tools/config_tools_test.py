import os
from unittest.mock import patch

from mrank.tools import config_tools


@patch.dict(os.environ, {}, clear=True)
def test_defaults():
    assert config_tools.get_seed() == 1729
    assert config_tools.get_generic_trials() == 3
    assert config_tools.get_workers() == 1


@patch.dict(
    os.environ,
    {"MRANK_SEED": "42", "MRANK_GENERIC_TRIALS": "7", "MRANK_WORKERS": "4"},
)
def test_values_from_environment():
    assert config_tools.get_seed() == 42
    assert config_tools.get_generic_trials() == 7
    assert config_tools.get_workers() == 4


@patch.dict(os.environ, {"MRANK_SEED": "abc", "MRANK_WORKERS": "0"})
def test_invalid_values_fall_back(caplog):
    assert config_tools.get_seed() == 1729
    assert config_tools.get_workers() == 1
    assert "MRANK_SEED" in caplog.text
    assert "MRANK_WORKERS" in caplog.text

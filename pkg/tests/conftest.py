import os

import pytest

collect_ignore = ["setup.py"]


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "slow: long statistical acceptance runs")


@pytest.fixture(autouse=True)
def _run_from_tests_dir(monkeypatch):
    # Fixture paths are relative to tests/ (tox uses changedir = tests).
    monkeypatch.chdir(os.path.dirname(os.path.abspath(__file__)))

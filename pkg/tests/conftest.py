import pytest

from src.utlis.logger import setup_logger


@pytest.fixture(autouse=True, scope="session")
def _quiet_logs():
    setup_logger("WARNING")

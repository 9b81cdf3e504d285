import sys
from loguru import logger

from src.config.configs import QPRAT_LOG_LEVEL, QPRAT_LOG_FILE


def setup_logger(level: str = QPRAT_LOG_LEVEL, log_file: str = QPRAT_LOG_FILE) -> None:
    """Reset loguru sinks. Only the CLI calls this; library code just logs."""
    logger.remove()
    logger.add(
        sys.stderr,
        level=level.upper(),
        format="<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | {name}:{function} - {message}",
    )
    if log_file:
        logger.add(log_file, level="DEBUG", rotation="10 MB", encoding="utf-8")
    logger.debug("Logger configured: level={} file={}", level, log_file or "-")

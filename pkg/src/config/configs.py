import os
from dotenv import load_dotenv
from loguru import logger
load_dotenv()


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning("{} invalid ({!r}), fallback to {}", name, raw, default)
        return default


QPRAT_JOBS = max(1, _int_env("QPRAT_JOBS", os.cpu_count() or 1))
QPRAT_CHUNK_WIDTH = max(1024, _int_env("QPRAT_CHUNK_WIDTH", 1 << 16))
QPRAT_SIEVE_SEGMENT = max(1024, _int_env("QPRAT_SIEVE_SEGMENT", 1 << 18))
QPRAT_CROSS_VALIDATE_CAP = _int_env("QPRAT_CROSS_VALIDATE_CAP", 100_000)

QPRAT_TRIAL_BOUND = _int_env("QPRAT_TRIAL_BOUND", 1_000_000)
QPRAT_RHO_SEED = _int_env("QPRAT_RHO_SEED", 20240229)

QPRAT_ITER_CAP = _int_env("QPRAT_ITER_CAP", 10_000_000)
QPRAT_PERIOD_MODULUS_CAP = _int_env("QPRAT_PERIOD_MODULUS_CAP", 1_000_000)

# scan primes must keep p^2 products well inside 128 bits
QPRAT_MAX_PRIME = (1 << 31) - 1

QPRAT_LOG_LEVEL = os.getenv("QPRAT_LOG_LEVEL", "INFO")
QPRAT_LOG_FILE = os.getenv("QPRAT_LOG_FILE", "")

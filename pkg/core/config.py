"""
FidelityEq - Application Configuration (Singleton)
.env üzerinden ortam ayarları
"""

import os
from typing import Optional

from dotenv import load_dotenv

from .exceptions import logger


class AppConfig:
    """
    Singleton configuration.
    Scan parallelism only; the log directory is owned by the logging
    setup in exceptions.py. Numerical inputs come from command-line flags.
    """
    _instance: Optional["AppConfig"] = None

    def __new__(cls) -> "AppConfig":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._initialized = False
        return cls._instance

    def __init__(self):
        if self._initialized:
            return

        load_dotenv()

        # Scan fan-out
        self.scan_workers = max(1, _int_env("SCAN_WORKERS", 1))
        self.scan_batch_size = max(1, _int_env("SCAN_BATCH_SIZE", 2000))

        self._initialized = True
        logger.debug(
            f"AppConfig initialized. workers={self.scan_workers}, batch={self.scan_batch_size}"
        )

    @classmethod
    def reset(cls) -> None:
        """Drop the singleton so the next access re-reads the environment"""
        cls._instance = None


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name, str(default))
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer {name}={raw!r}, using {default}")
        return default


def get_config() -> AppConfig:
    """Get or create AppConfig singleton"""
    return AppConfig()

import asyncio
import logging
import os
from typing import Optional

import aiofiles
import yaml
from pydantic import BaseModel, ConfigDict, Field

LOG_LEVEL = logging.INFO
SETTINGS_PATH = "srreg_config.yaml"

DEFAULT_FIELD = "gf2"
BOX_LIMIT = 10**7
MAX_INTERMEDIATES = 16
SAMPLE_COUNT = 64
POLAR_VERTEX_LIMIT = 24
SYMBOLIC_BOX_LIMIT = 2 * 10**6
ENUMERATION_MAX_N = 7
POWER_CACHE_SIZE = 4096

logging.basicConfig(level=LOG_LEVEL)

logger = logging.getLogger(__name__)


class Settings(BaseModel):
    """Run settings shared by the CLI and the verification suites."""

    model_config = ConfigDict(extra="forbid")

    field: str = DEFAULT_FIELD
    jobs: int = Field(default=1, ge=1)
    seed: int = 0
    max_intermediates: int = Field(default=MAX_INTERMEDIATES, ge=0)
    sample_count: int = Field(default=SAMPLE_COUNT, ge=2)
    box_limit: int = Field(default=BOX_LIMIT, ge=1)
    polar_vertex_limit: int = Field(default=POLAR_VERTEX_LIMIT, ge=1)
    symbolic_box_limit: int = Field(default=SYMBOLIC_BOX_LIMIT, ge=1)
    power_cache_size: int = Field(default=POWER_CACHE_SIZE, ge=1)
    allow_s4: bool = False
    log_level: str = "INFO"


async def load_settings(path: Optional[str] = None) -> Settings:
    """Load settings from a YAML file; a missing default file yields defaults.

    Args:
        path: The settings file. ``None`` means ``SETTINGS_PATH`` if present.

    Returns:
        The validated settings.
    """
    target = path or SETTINGS_PATH
    if path is None and not os.path.exists(target):
        logger.debug(f"No settings file at {target}, using defaults")
        return Settings()
    async with aiofiles.open(target, "r") as file:
        raw = yaml.safe_load(await file.read()) or {}
    logger.debug(f"Loaded settings from {target}")
    return Settings.model_validate(raw)


def load_settings_sync(path: Optional[str] = None) -> Settings:
    return asyncio.run(load_settings(path))


def set_log_level(level: str) -> None:
    logging.getLogger().setLevel(level.upper())

"""Engine settings read from the environment (and a ``.env`` file)"""

import os
from functools import lru_cache
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

from .core.errors import ConfigurationError


class EngineSettings(BaseModel):
    """Settings shared by the homotopy engine, the verification suites and the CLI"""
    cache_size: int = Field(default=0, ge=0, description="Homotopy memo budget, 0 for unbounded")
    default_max_arity: int = Field(default=5, ge=0)
    default_seed: int = 0

    @property
    def lru_maxsize(self) -> Optional[int]:
        return self.cache_size or None

    @classmethod
    def from_env(cls) -> "EngineSettings":
        load_dotenv()
        values = {}
        for field_name, variable in (
            ("cache_size", "OPCYL_CACHE"),
            ("default_max_arity", "OPCYL_MAX_ARITY"),
            ("default_seed", "OPCYL_SEED"),
        ):
            raw = os.environ.get(variable)
            if raw is None or raw.strip() == "":
                continue
            try:
                values[field_name] = int(raw)
            except ValueError:
                raise ConfigurationError(f"{variable} must be an integer, got {raw!r}") from None
        try:
            return cls(**values)
        except ValueError as exc:
            raise ConfigurationError(f"Invalid engine settings: {exc}") from None


@lru_cache(maxsize=1)
def get_settings() -> EngineSettings:
    """Process-wide settings, read once"""
    return EngineSettings.from_env()

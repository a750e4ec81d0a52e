import os
import logging
from dotenv import load_dotenv
from pydantic import BaseModel, Field

# Load environment variables
load_dotenv()

logger = logging.getLogger("arith_billiards")


DEFAULT_MAX_STATES = 10_000_000


class Settings(BaseModel):
    max_states: int = Field(default=DEFAULT_MAX_STATES, ge=1)
    log_level: str = "INFO"
    log_dir: str = "logs"
    log_to_file: bool = True


def _env_flag(value: str) -> bool:
    return value.strip().lower() not in ("0", "false", "no", "off", "")


def _env_max_states() -> int:
    raw = os.getenv("BILLIARDS_MAX_STATES")
    if raw is None:
        return DEFAULT_MAX_STATES
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"Ignoring BILLIARDS_MAX_STATES={raw!r}: not an integer, using {DEFAULT_MAX_STATES}")
        return DEFAULT_MAX_STATES
    if value < 1:
        logger.warning(f"Ignoring BILLIARDS_MAX_STATES={raw!r}: must be positive, using {DEFAULT_MAX_STATES}")
        return DEFAULT_MAX_STATES
    return value


def load_settings() -> Settings:
    return Settings(
        max_states=_env_max_states(),
        log_level=os.getenv("BILLIARDS_LOG_LEVEL", "INFO").upper(),
        log_dir=os.getenv("BILLIARDS_LOG_DIR", "logs"),
        log_to_file=_env_flag(os.getenv("BILLIARDS_LOG_TO_FILE", "1")),
    )


settings = load_settings()
logger.debug(f"Settings loaded: {settings}")


def resolve_budget(max_states: int | None) -> int:
    return settings.max_states if max_states is None else max_states

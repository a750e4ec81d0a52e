# Pydantic schema for CLI results
from typing import Any, Dict, Optional, Tuple

from pydantic import BaseModel

SCHEMA_VERSION = "1"


class CommandResult(BaseModel):
    schema_version: str = SCHEMA_VERSION
    command: str
    grid: Optional[Tuple[int, ...]] = None
    payload: Dict[str, Any] = {}
    elapsed_ms: float = 0.0

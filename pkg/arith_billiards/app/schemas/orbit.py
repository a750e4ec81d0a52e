# Pydantic schema for diagonal-walk orbits
from pydantic import BaseModel, ConfigDict, Field

from app.schemas.grid import OrbitIndex, Point


class OrbitSummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    index: OrbitIndex
    size: int = Field(ge=1)
    sample: Point

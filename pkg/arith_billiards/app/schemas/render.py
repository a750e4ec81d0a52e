from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator


class RenderOptions(BaseModel):
    model_config = ConfigDict(frozen=True)

    cell_size: int = Field(default=40, ge=1)
    palette: Tuple[str, ...] = ("green", "blue", "red")
    grid_stroke_width: float = Field(default=1.0, gt=0)
    boundary_stroke_width: float = Field(default=2.0, gt=0)
    path_stroke_width: float = Field(default=2.0, gt=0)
    margin: int = Field(default=20, ge=0)

    @field_validator("palette")
    @classmethod
    def check_palette(cls, palette: Tuple[str, ...]) -> Tuple[str, ...]:
        if not palette:
            raise ValueError("palette must name at least one color")
        return palette

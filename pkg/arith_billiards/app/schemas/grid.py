# Pydantic schema for grids, lattice points and phase states
from typing import Literal, Tuple

from pydantic import BaseModel, ConfigDict, field_validator

Bit = Literal[0, 1]

_SIGN_CHARS = {"+": 0, "-": 1, "−": 1}


class GridSpec(BaseModel):
    """Dimensions (m_1, ..., m_p) of a spatial grid, p >= 2."""

    model_config = ConfigDict(frozen=True)

    dims: Tuple[int, ...]

    @field_validator("dims")
    @classmethod
    def check_dims(cls, dims: Tuple[int, ...]) -> Tuple[int, ...]:
        if len(dims) < 2:
            raise ValueError(f"a grid needs at least 2 dimensions, got {len(dims)}")
        if any(m < 1 for m in dims):
            raise ValueError(f"every dimension must be a positive integer, got {dims}")
        return dims

    @classmethod
    def of(cls, *dims: int) -> "GridSpec":
        return cls(dims=dims)

    @property
    def p(self) -> int:
        return len(self.dims)

    @property
    def moduli(self) -> Tuple[int, ...]:
        """Phase circle lengths 2*m_i."""
        return tuple(2 * m for m in self.dims)

    def __str__(self) -> str:
        return "x".join(str(m) for m in self.dims)


class Point(BaseModel):
    model_config = ConfigDict(frozen=True)

    coords: Tuple[int, ...]

    @classmethod
    def of(cls, *coords: int) -> "Point":
        return cls(coords=coords)


class PhaseState(BaseModel):
    model_config = ConfigDict(frozen=True)

    residues: Tuple[int, ...]

    @classmethod
    def of(cls, *residues: int) -> "PhaseState":
        return cls(residues=residues)


class DirectionMask(BaseModel):
    """Per-coordinate direction: 0 forward, 1 backward."""

    model_config = ConfigDict(frozen=True)

    signs: Tuple[Bit, ...]

    @classmethod
    def ascending(cls, p: int) -> "DirectionMask":
        return cls(signs=(0,) * p)

    @classmethod
    def descending(cls, p: int) -> "DirectionMask":
        return cls(signs=(1,) * p)

    @classmethod
    def parse(cls, text: str) -> "DirectionMask":
        try:
            return cls(signs=tuple(_SIGN_CHARS[ch] for ch in text.strip()))
        except KeyError:
            raise ValueError(f"mask must be a string of '+' and '-' characters, got {text!r}")

    def __str__(self) -> str:
        return "".join("-" if s else "+" for s in self.signs)


class OrbitIndex(BaseModel):
    model_config = ConfigDict(frozen=True)

    bits: Tuple[Bit, ...]

# Pydantic schema for circular sequences and their generating functions
from enum import Enum
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class SeqSign(str, Enum):
    positive = "+"
    negative = "-"


class SeqSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    sign: SeqSign
    t: int = Field(ge=0)
    m: int = Field(ge=1)

    @model_validator(mode="after")
    def check_first_term(self) -> "SeqSpec":
        if self.t > self.m:
            raise ValueError(f"first term t={self.t} exceeds height m={self.m}")
        return self


class IntPolynomial(BaseModel):
    """Dense integer polynomial, coeffs[i] is the coefficient of x**i."""

    model_config = ConfigDict(frozen=True)

    coeffs: Tuple[int, ...] = (0,)

    @field_validator("coeffs")
    @classmethod
    def trim(cls, coeffs: Tuple[int, ...]) -> Tuple[int, ...]:
        n = len(coeffs)
        while n > 1 and coeffs[n - 1] == 0:
            n -= 1
        return tuple(coeffs[:n]) if n else (0,)

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        if self.coeffs == (0,):
            return -1
        return len(self.coeffs) - 1

    def coeff(self, n: int) -> int:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else 0


class RationalGF(BaseModel):
    """numerator / (1 - x**period)."""

    model_config = ConfigDict(frozen=True)

    numerator: IntPolynomial
    period: int = Field(ge=1)

    @model_validator(mode="after")
    def check_degree(self) -> "RationalGF":
        if self.numerator.degree > self.period - 1:
            raise ValueError(
                f"numerator degree {self.numerator.degree} exceeds period - 1 = {self.period - 1}"
            )
        return self

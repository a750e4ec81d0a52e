# Pydantic schema for billiard paths, trajectories and reachability answers
from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from app.schemas.grid import PhaseState, Point


class PathKind(str, Enum):
    closed = "closed"
    open = "open"


class Path(BaseModel):
    model_config = ConfigDict(frozen=True)

    representative: PhaseState
    kind: PathKind
    step_length: int
    distinct_segments: int

    @model_validator(mode="after")
    def check_segments(self) -> "Path":
        expected = self.step_length if self.kind == PathKind.closed else self.step_length // 2
        if self.distinct_segments != expected:
            raise ValueError(
                f"{self.kind.value} path with step length {self.step_length} "
                f"must have {expected} segments, got {self.distinct_segments}"
            )
        return self


class Trajectory(BaseModel):
    model_config = ConfigDict(frozen=True)

    points: List[Point]
    states: List[PhaseState]

    @model_validator(mode="after")
    def check_lengths(self) -> "Trajectory":
        if len(self.points) != len(self.states) or not self.points:
            raise ValueError("a trajectory needs one point per state and at least one of each")
        return self

    @property
    def n_steps(self) -> int:
        return len(self.points) - 1


class ReachAnswer(BaseModel):
    model_config = ConfigDict(frozen=True)

    reachable: bool
    witness_steps: Optional[int] = None
    sign_choice: Optional[Tuple[int, ...]] = None

from typing import List, Optional

from pydantic import BaseModel, ConfigDict, computed_field, model_validator

from app.core.errors import InvalidParameters


class PellSolution(BaseModel):
    """A vertex/edge count pair with (2n+1)^2 - 2(2m+1)^2 = -1."""

    model_config = ConfigDict(frozen=True)

    n: int
    m: int

    @model_validator(mode="after")
    def check_equation(self):
        if self.n < 1 or self.m < 1 or self.x**2 - 2 * self.y**2 != -1:
            raise InvalidParameters(f"(n={self.n}, m={self.m}) does not solve x^2 - 2y^2 = -1")
        return self

    @computed_field
    @property
    def x(self) -> int:
        return 2 * self.n + 1

    @computed_field
    @property
    def y(self) -> int:
        return 2 * self.m + 1


class PellScreen(BaseModel):
    n: int
    m: int
    double_star_candidate: bool
    m_ds: Optional[int] = None
    c: Optional[int] = None
    cap: Optional[int] = None
    feasible: bool = False
    witnesses: List[int] = []
    reason: str

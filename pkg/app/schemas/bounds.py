from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, model_validator


class TauCase(str, Enum):
    TAU_0 = "tau_0"
    TAU_1 = "tau_1"
    TAU_2 = "tau_2"
    TAU_3 = "tau_3"
    TAU_4 = "tau_4"
    TAU_5 = "tau_5"
    TAU_6 = "tau_6"

    @classmethod
    def cap(cls, i: int) -> "TauCase":
        return cls(f"tau_{i}")


class TauResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: int
    attained_case: TauCase
    tau0: int
    tau_cap: int

    @model_validator(mode="after")
    def check_minimum(self):
        if self.value != min(self.tau0, self.tau_cap):
            raise ValueError("value must be min(tau0, tau_cap)")
        if (self.attained_case is TauCase.TAU_0) != (self.tau0 < self.tau_cap):
            raise ValueError("tau_0 is reported only when it is strictly smaller than the cap")
        return self


class BoundReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    beta: int
    lemma_upb2: Optional[int] = None
    lemma_upb3: Optional[int] = None

    def populated(self) -> List[int]:
        return [bound for bound in (self.beta, self.lemma_upb2, self.lemma_upb3) if bound is not None]


class Table1Cell(BaseModel):
    """One entry of the tolerance table; offset is j when value = 2m+j, starred when tau_0 ties it."""

    a: int
    b: int
    value: int
    case: TauCase
    offset: Optional[int] = None
    starred: bool


class Table1Row(BaseModel):
    m: int
    tau0: int
    cells: List[Table1Cell]

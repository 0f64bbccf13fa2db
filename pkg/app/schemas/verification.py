from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator


class DuplicateWitness(BaseModel):
    model_config = ConfigDict(frozen=True)

    u: int
    v: int
    shared_sum: int


class VerificationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    antimagic: bool
    duplicate_witness: Optional[DuplicateWitness] = None
    sums: List[int]
    ad_progression: Optional[Tuple[int, int]] = None

    @model_validator(mode="after")
    def check_consistency(self):
        if self.antimagic == (self.duplicate_witness is not None):
            raise ValueError("a report is antimagic exactly when it has no duplicate witness")
        if self.ad_progression is not None:
            a, d = self.ad_progression
            if self.sums != [a + i * d for i in range(len(self.sums))]:
                raise ValueError(f"sums do not form the progression ({a}, {d})")
        return self


class VerifyRequest(BaseModel):
    edges: List[Tuple[int, int]]
    labels: List[int]
    graph: Optional[str] = None
    expect_ad: Optional[Tuple[int, int]] = None


class FixtureResult(BaseModel):
    """Outcome of re-verifying one bundled labeling; passed means the sums are exactly 1..n."""

    name: str
    graph: str
    antimagic: bool
    ad_progression: List[int] = []
    passed: bool
    discrepancies: List[dict] = []

from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from app.schemas.forest import LabelPartition


class PairFamily(BaseModel):
    """p label pairs in [1, k] with alpha_i + beta_i = k + i (1-based i)."""

    model_config = ConfigDict(frozen=True)

    k: int
    p: int
    alpha: Tuple[int, ...]
    beta: Tuple[int, ...]

    def pair(self, i: int) -> Tuple[int, int]:
        return self.alpha[i - 1], self.beta[i - 1]

    def pairs(self, count: int) -> List[Tuple[int, int]]:
        return [self.pair(i) for i in range(1, count + 1)]


class ConstructionCase(str, Enum):
    C0 = "c0"
    C1_2 = "c1_2"
    C3_5 = "c3_5"
    MID_A1 = "mid_a1"
    MID_P_GE_C1 = "mid_p_ge_c1"
    MID_COND1 = "mid_cond1"
    MID_COND2 = "mid_cond2"
    MID_COND3 = "mid_cond3"
    HIGH_W = "high_W"


class ConstructionTrace(BaseModel):
    model_config = ConfigDict(frozen=True)

    case_tag: ConstructionCase
    chosen_index: Optional[int] = None
    W: Optional[Tuple[int, ...]] = None
    swap_applied: bool = False
    proposition_applies: bool = False


class ConstructionOut(BaseModel):
    """Labeling file enriched with the partition and the case that produced it."""

    graph: str
    a: int
    b: int
    c: int
    k: int
    edges: List[Tuple[int, int]]
    labels: List[int]
    partition: Dict[str, List]
    trace: ConstructionTrace
    antimagic: bool

    @classmethod
    def from_parts(cls, inst, part: LabelPartition, labeling, trace: ConstructionTrace, graph: str, antimagic: bool):
        return cls(
            graph=graph,
            a=inst.a,
            b=inst.b,
            c=inst.c,
            k=inst.k,
            edges=[list(e) for e in labeling.edges],
            labels=list(labeling.labels),
            partition={
                "p3_groups": [list(g) for g in part.p3_groups],
                "internal": list(part.internal),
                "side_a": list(part.side_a),
                "side_b": list(part.side_b),
            },
            trace=trace,
            antimagic=antimagic,
        )

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, computed_field, model_validator

from app.schemas.forest import Labeling


class SearchVerdict(str, Enum):
    FOUND = "found"
    REFUTED = "refuted"
    EXHAUSTED = "exhausted"


class SearchMode(str, Enum):
    ANTIMAGIC = "antimagic"
    ONE_ONE = "one-one"


class SearchOutcome(BaseModel):
    model_config = ConfigDict(frozen=True)

    verdict: SearchVerdict
    labeling: Optional[Labeling] = None
    nodes_explored: int
    budget_nodes: Optional[int] = None
    wall_budget: Optional[float] = None

    @model_validator(mode="after")
    def check_labeling(self):
        if (self.verdict is SearchVerdict.FOUND) != (self.labeling is not None):
            raise ValueError("a labeling is attached exactly to found outcomes")
        return self

    @computed_field
    @property
    def complete(self) -> bool:
        return self.verdict is not SearchVerdict.EXHAUSTED


class SearchRequest(BaseModel):
    graph: str
    mode: SearchMode = SearchMode.ANTIMAGIC
    budget_nodes: Optional[int] = None

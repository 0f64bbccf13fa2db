from pydantic import BaseModel, ConfigDict, Field


class CommandOutcome(BaseModel):
    model_config = ConfigDict(frozen=True)

    exit_code: int = Field(ge=0, le=4)
    payload: str = ""

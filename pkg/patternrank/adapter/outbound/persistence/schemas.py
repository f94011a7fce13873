"""JSONL corpus record schemas."""

from pydantic import BaseModel, ConfigDict


class DocumentRecord(BaseModel):
    """One line of an extraction input file."""

    model_config = ConfigDict(extra="ignore")

    id: str
    text: str


class GoldRecord(DocumentRecord):
    """One line of an evaluation corpus."""

    keyphrases: list[str]

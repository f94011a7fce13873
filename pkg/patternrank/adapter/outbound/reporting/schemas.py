"""
Output Schemas - serialized forms of reports and extraction results

Pydantic models for JSON output. These are output DTOs, not domain models;
field order is fixed, so serialized output is byte-stable.
"""

from pydantic import BaseModel, Field

from patternrank.core.domain.evaluation.models import Regime


class ScoreCellSchema(BaseModel):
    """One (regime, N) cell of a report."""

    regime: Regime
    n: int = Field(ge=1)
    precision: float
    recall: float
    f1: float


class DocumentScoresSchema(BaseModel):
    id: str
    scores: list[ScoreCellSchema]


class EvalReportSchema(BaseModel):
    """Complete evaluation report; documents keep corpus order."""

    extractor: str
    n_values: list[int]
    macro: list[ScoreCellSchema]
    documents: list[DocumentScoresSchema]


class KeyphraseSchema(BaseModel):
    phrase: str
    score: float
    rank: int = Field(ge=1)


class DocumentKeyphrasesSchema(BaseModel):
    """One line of extraction output."""

    id: str
    keyphrases: list[KeyphraseSchema]

"""
Embedding wire schemas.

The HTTP and stdio backends share one JSON protocol:

    request:  {"texts": ["...", ...]}
    response: {"vectors": [[...], ...], "dim": D}

The precomputed backend reads a versioned file mapping exact text to vector.
"""

from typing import Literal

from pydantic import BaseModel, FiniteFloat, Field, model_validator

PRECOMPUTED_FORMAT_VERSION = 1


class EmbedRequest(BaseModel):
    texts: list[str]


class EmbedResponse(BaseModel):
    """Backend answer; every vector must have ``dim`` finite components."""

    vectors: list[list[FiniteFloat]]
    dim: int = Field(ge=1)

    @model_validator(mode="after")
    def check_dimensions(self) -> "EmbedResponse":
        for index, vector in enumerate(self.vectors):
            if len(vector) != self.dim:
                raise ValueError(
                    f"vector {index} has {len(vector)} components, expected {self.dim}"
                )
        return self


class PrecomputedEmbeddings(BaseModel):
    version: Literal[1] = PRECOMPUTED_FORMAT_VERSION
    dim: int = Field(ge=1)
    vectors: dict[str, list[FiniteFloat]]

    @model_validator(mode="after")
    def check_dimensions(self) -> "PrecomputedEmbeddings":
        for text, vector in self.vectors.items():
            if len(vector) != self.dim:
                raise ValueError(
                    f"vector for {text!r} has {len(vector)} components, expected {self.dim}"
                )
        return self

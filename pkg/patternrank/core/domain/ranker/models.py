"""Ranker Models - embedding vectors and ranked keyphrases."""

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from patternrank.core.domain.pattern.models import Candidate


@dataclass(frozen=True, eq=False)
class EmbeddingVector:
    """
    Fixed-length real vector produced by an embedding backend.

    The array is copied and made read-only on construction.
    """

    values: npt.NDArray[np.float64]

    def __post_init__(self) -> None:
        array = np.array(self.values, dtype=np.float64)
        if array.ndim != 1 or array.size < 1:
            raise ValueError("EmbeddingVector must be a non-empty 1-d sequence")
        if not np.all(np.isfinite(array)):
            raise ValueError("EmbeddingVector values must be finite")
        array.setflags(write=False)
        object.__setattr__(self, "values", array)

    @classmethod
    def of(cls, values: Sequence[float]) -> "EmbeddingVector":
        return cls(np.asarray(values, dtype=np.float64))

    @property
    def dim(self) -> int:
        return int(self.values.size)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EmbeddingVector):
            return NotImplemented
        return bool(np.array_equal(self.values, other.values))

    def __hash__(self) -> int:
        return hash(self.values.tobytes())

    def scaled(self, factor: float) -> "EmbeddingVector":
        return EmbeddingVector(self.values * factor)


@dataclass(frozen=True)
class RankedKeyphrase:
    """
    A candidate with its score and 1-based rank.

    Scores from cosine ranking lie in [-1, 1]; SingleRank scores are raw sums
    of word scores and are not bounded.
    """

    candidate: Candidate
    score: float
    rank: int

    @property
    def phrase(self) -> str:
        return self.candidate.normalized

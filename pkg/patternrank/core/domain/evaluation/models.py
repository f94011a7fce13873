"""Evaluation Models - gold documents, metric triples and reports."""

from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum

from patternrank.core.exceptions import MissingGold


class Regime(str, Enum):
    """Matching regime for comparing extracted against gold phrases."""

    EXACT = "exact"
    PARTIAL = "partial"
    AVERAGE = "average"


@dataclass(frozen=True)
class GoldDocument:
    """A document with its normalized, deduplicated gold keyphrases."""

    doc_id: str
    text: str
    gold: frozenset[str]

    def __post_init__(self) -> None:
        if not self.gold:
            raise MissingGold(self.doc_id)


@dataclass(frozen=True)
class PRF:
    """Precision, recall and F1, each in [0, 1]."""

    precision: float
    recall: float
    f1: float

    @classmethod
    def from_pr(cls, precision: float, recall: float) -> "PRF":
        """Build from P and R; F1 is their harmonic mean, 0 when both are 0."""
        total = precision + recall
        f1 = 2 * precision * recall / total if total > 0 else 0.0
        return cls(precision=precision, recall=recall, f1=f1)

    @classmethod
    def zero(cls) -> "PRF":
        return cls(0.0, 0.0, 0.0)

    @classmethod
    def mean(cls, values: Sequence["PRF"]) -> "PRF":
        """Component-wise arithmetic mean; F1 is averaged, not recomputed."""
        if not values:
            return cls.zero()
        count = len(values)
        return cls(
            precision=sum(v.precision for v in values) / count,
            recall=sum(v.recall for v in values) / count,
            f1=sum(v.f1 for v in values) / count,
        )


Cell = tuple[Regime, int]


@dataclass(frozen=True)
class EvalReport:
    """
    Per-document and macro-averaged scores for one extractor.

    Cells are keyed by (regime, N). ``per_document`` keeps corpus order.
    """

    extractor_name: str
    n_values: tuple[int, ...]
    per_document: dict[str, dict[Cell, PRF]] = field(default_factory=dict)
    macro: dict[Cell, PRF] = field(default_factory=dict)

    @property
    def document_count(self) -> int:
        return len(self.per_document)

    def cells(self) -> list[Cell]:
        """All (regime, N) cells in report order."""
        return [(regime, n) for regime in Regime for n in self.n_values]

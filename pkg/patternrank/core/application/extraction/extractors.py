"""
Keyphrase extractors.

Every extractor exposes ``name`` and ``async extract(doc, top_n)`` over a
tagged document. Candidate selection and graph scoring are CPU-bound and run
in a worker thread; embedding calls go through the backend port.
"""

import asyncio
from abc import ABC, abstractmethod
from collections.abc import Iterable
from enum import Enum
from typing import Protocol

from patternrank.core.application.extraction.ranking import (
    DEFAULT_BATCH_SIZE,
    rank_candidates,
)
from patternrank.core.domain.pattern.candidates import extract_candidates, select_ngrams
from patternrank.core.domain.pattern.matcher import Matcher, compile_pattern
from patternrank.core.domain.pattern.models import BuiltinPattern, Candidate, PatternAst
from patternrank.core.domain.pattern.parser import builtin_pattern
from patternrank.core.domain.ranker.models import RankedKeyphrase
from patternrank.core.domain.ranker.similarity import top_n as cut_top_n
from patternrank.core.domain.singlerank.graph import (
    DEFAULT_DAMPING,
    DEFAULT_MAX_ITER,
    DEFAULT_TOL,
    DEFAULT_WINDOW,
    WordScores,
    build_graph,
    score_candidates,
    weighted_pagerank,
)
from patternrank.core.domain.textpipe.models import TaggedDocument
from patternrank.core.port.outbound.embedding_ports import EmbeddingBackend
from patternrank.core.port.outbound.telemetry_ports import TelemetryPort


class ExtractorName(str, Enum):
    PATTERNRANK_POS = "patternrank_pos"
    PATTERNRANK_NP = "patternrank_np"
    NGRAM = "ngram"
    SINGLERANK = "singlerank"


class KeyphraseExtractor(Protocol):
    """Common interface of all extractors."""

    @property
    def name(self) -> str: ...

    async def extract(self, doc: TaggedDocument, top_n: int) -> list[RankedKeyphrase]: ...


class EmbeddingRankExtractor(ABC):
    """Shared ranking step for extractors that score candidates by embedding."""

    def __init__(
        self,
        name: str,
        backend: EmbeddingBackend,
        batch_size: int = DEFAULT_BATCH_SIZE,
        telemetry: TelemetryPort | None = None,
    ) -> None:
        self._name = name
        self.backend = backend
        self.batch_size = batch_size
        self.telemetry = telemetry

    @property
    def name(self) -> str:
        return self._name

    @abstractmethod
    def candidates(self, doc: TaggedDocument) -> list[Candidate]: ...

    async def extract(self, doc: TaggedDocument, top_n: int) -> list[RankedKeyphrase]:
        candidates = await asyncio.to_thread(self.candidates, doc)
        ranked = await rank_candidates(
            doc.text, candidates, self.backend, self.batch_size, self.telemetry
        )
        return cut_top_n(ranked, top_n)


class PatternRankExtractor(EmbeddingRankExtractor):
    """POS-pattern candidates ranked by similarity to the document."""

    def __init__(
        self,
        name: str,
        pattern: PatternAst,
        backend: EmbeddingBackend,
        batch_size: int = DEFAULT_BATCH_SIZE,
        telemetry: TelemetryPort | None = None,
    ) -> None:
        super().__init__(name, backend, batch_size, telemetry)
        self.matcher: Matcher = compile_pattern(pattern)

    def candidates(self, doc: TaggedDocument) -> list[Candidate]:
        return extract_candidates(doc, self.matcher)


class NgramExtractor(EmbeddingRankExtractor):
    """KeyBERT-style baseline: every n-gram in range is a candidate."""

    def __init__(
        self,
        backend: EmbeddingBackend,
        min_n: int = 1,
        max_n: int = 3,
        stopwords: Iterable[str] = (),
        batch_size: int = DEFAULT_BATCH_SIZE,
        telemetry: TelemetryPort | None = None,
    ) -> None:
        super().__init__(ExtractorName.NGRAM.value, backend, batch_size, telemetry)
        self.min_n = min_n
        self.max_n = max_n
        self.stopwords = frozenset(word.lower() for word in stopwords)

    def candidates(self, doc: TaggedDocument) -> list[Candidate]:
        return select_ngrams(doc, self.min_n, self.max_n, self.stopwords)


class SingleRankExtractor:
    """Noun-phrase candidates scored by weighted PageRank over word co-occurrence."""

    name = ExtractorName.SINGLERANK.value

    def __init__(
        self,
        window: int = DEFAULT_WINDOW,
        damping: float = DEFAULT_DAMPING,
        tol: float = DEFAULT_TOL,
        max_iter: int = DEFAULT_MAX_ITER,
        pattern: PatternAst | None = None,
    ) -> None:
        self.window = window
        self.damping = damping
        self.tol = tol
        self.max_iter = max_iter
        self.matcher = compile_pattern(pattern or builtin_pattern(BuiltinPattern.NOUN_PHRASE))

    def rank(self, doc: TaggedDocument) -> list[RankedKeyphrase]:
        candidates = extract_candidates(doc, self.matcher)
        if not candidates:
            return []
        graph = build_graph(doc, self.window)
        if graph.number_of_nodes() == 0:
            return score_candidates(candidates, WordScores({}, iterations=0, converged=True))
        scores = weighted_pagerank(graph, self.damping, self.tol, self.max_iter)
        return score_candidates(candidates, scores)

    async def extract(self, doc: TaggedDocument, top_n: int) -> list[RankedKeyphrase]:
        ranked = await asyncio.to_thread(self.rank, doc)
        return cut_top_n(ranked, top_n)

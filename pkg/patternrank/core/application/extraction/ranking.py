"""
Embedding-based ranking - ORCHESTRATION LAYER

Calls the embedding backend for the document and its candidates, then hands
the vectors to the pure ranking function. Batches may run concurrently when
the backend allows it; vectors are merged back by candidate index, so the
result never depends on completion order.
"""

import asyncio
from collections.abc import Sequence

import structlog

from patternrank.core.domain.pattern.models import Candidate
from patternrank.core.domain.ranker.models import EmbeddingVector, RankedKeyphrase
from patternrank.core.domain.ranker.similarity import rank_by_similarity
from patternrank.core.exceptions import BackendFailure
from patternrank.core.port.outbound.embedding_ports import EmbeddingBackend
from patternrank.core.port.outbound.telemetry_ports import TelemetryPort

logger = structlog.get_logger(__name__)

DEFAULT_BATCH_SIZE = 64


def chunk(texts: Sequence[str], size: int) -> list[list[str]]:
    """Split texts into consecutive batches of at most ``size``."""
    if size < 1:
        raise ValueError("batch size must be >= 1")
    return [list(texts[i : i + size]) for i in range(0, len(texts), size)]


async def _embed(
    backend: EmbeddingBackend,
    batch: list[str],
    telemetry: TelemetryPort | None,
) -> list[EmbeddingVector]:
    try:
        vectors = await backend.embed_batch(batch)
        if len(vectors) != len(batch):
            raise BackendFailure(
                f"backend returned {len(vectors)} vectors for {len(batch)} texts", batch
            )
    except BackendFailure:
        if telemetry:
            await telemetry.record_backend_batch(backend.name, len(batch), ok=False)
        raise
    if telemetry:
        await telemetry.record_backend_batch(backend.name, len(batch), ok=True)
    return vectors


async def embed_texts(
    texts: Sequence[str],
    backend: EmbeddingBackend,
    batch_size: int = DEFAULT_BATCH_SIZE,
    telemetry: TelemetryPort | None = None,
) -> list[EmbeddingVector]:
    """Embed texts in batches, preserving input order."""
    batches = chunk(texts, batch_size)
    if backend.supports_concurrency:
        results = await asyncio.gather(*(_embed(backend, b, telemetry) for b in batches))
    else:
        results = [await _embed(backend, b, telemetry) for b in batches]
    return [vector for batch in results for vector in batch]


def truncate_document(text: str, backend: EmbeddingBackend) -> str:
    limit = backend.max_chars
    if limit is None or len(text) <= limit:
        return text
    logger.warning(
        "Document truncated for embedding backend",
        backend=backend.name,
        original_chars=len(text),
        max_chars=limit,
    )
    return text[:limit]


async def rank_candidates(
    doc_text: str,
    candidates: Sequence[Candidate],
    backend: EmbeddingBackend,
    batch_size: int = DEFAULT_BATCH_SIZE,
    telemetry: TelemetryPort | None = None,
) -> list[RankedKeyphrase]:
    """
    Rank deduplicated candidates by cosine similarity to the document.

    The document is embedded in its own call, then candidate forms in batches
    of ``batch_size``. No backend call is made when there are no candidates.

    Raises:
        BackendFailure: with the batch that failed
    """
    if not candidates:
        return []

    [doc_vector] = await embed_texts(
        [truncate_document(doc_text, backend)], backend, 1, telemetry
    )
    vectors = await embed_texts(
        [candidate.normalized for candidate in candidates], backend, batch_size, telemetry
    )
    for candidate, vector in zip(candidates, vectors, strict=True):
        if vector.dim != doc_vector.dim:
            raise BackendFailure(
                f"vector dimension {vector.dim} differs from document dimension {doc_vector.dim}",
                [candidate.normalized],
            )
    return rank_by_similarity(doc_vector, candidates, vectors)

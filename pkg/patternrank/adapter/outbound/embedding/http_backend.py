"""
HTTP Embedding Adapter

Talks to an embedding service over ``POST {url}/embed``. Connection errors
are retried by the httpx transport; any non-200 status, transport error or
malformed body becomes a ``BackendFailure`` carrying the batch.
"""

import httpx
import structlog
from pydantic import ValidationError

from patternrank.adapter.outbound.embedding.schemas import EmbedRequest, EmbedResponse
from patternrank.core.domain.ranker.models import EmbeddingVector
from patternrank.core.exceptions import BackendFailure

logger = structlog.get_logger(__name__)


class HttpEmbeddingBackend:
    """Embedding backend served over HTTP; safe for concurrent batches."""

    name = "http"
    supports_concurrency = True

    def __init__(
        self,
        url: str,
        timeout: float = 30.0,
        retries: int = 3,
        max_chars: int | None = 20000,
        transport: httpx.AsyncBaseTransport | None = None,
    ) -> None:
        self.url = url.rstrip("/")
        self.max_chars = max_chars
        self._dim: int | None = None
        self._client = httpx.AsyncClient(
            timeout=timeout,
            transport=transport or httpx.AsyncHTTPTransport(retries=retries),
        )

    @property
    def dim(self) -> int | None:
        return self._dim

    async def embed_batch(self, texts: list[str]) -> list[EmbeddingVector]:
        try:
            response = await self._client.post(
                f"{self.url}/embed", json=EmbedRequest(texts=texts).model_dump()
            )
        except httpx.HTTPError as e:
            logger.error("Embedding request failed", url=self.url, error=str(e))
            raise BackendFailure(f"{type(e).__name__}: {e}", texts) from e

        if response.status_code != 200:
            logger.error(
                "Embedding service returned an error",
                url=self.url,
                status_code=response.status_code,
            )
            raise BackendFailure(f"HTTP {response.status_code}", texts)

        try:
            body = EmbedResponse.model_validate_json(response.content)
        except ValidationError as e:
            raise BackendFailure(f"malformed response: {e.error_count()} errors", texts) from e

        if self._dim is not None and body.dim != self._dim:
            raise BackendFailure(f"dimension changed from {self._dim} to {body.dim}", texts)
        self._dim = body.dim
        return [EmbeddingVector.of(vector) for vector in body.vectors]

    async def aclose(self) -> None:
        await self._client.aclose()

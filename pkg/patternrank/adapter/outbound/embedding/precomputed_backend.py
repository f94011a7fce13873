"""
Precomputed Embedding Adapter

Serves vectors from a versioned JSON file keyed by exact text. A text with no
entry fails the whole batch with ``MissingEmbedding``.
"""

from pathlib import Path

from pydantic import ValidationError

from patternrank.adapter.outbound.embedding.schemas import PrecomputedEmbeddings
from patternrank.core.domain.ranker.models import EmbeddingVector
from patternrank.core.exceptions import ConfigError, CorpusIoError, MissingEmbedding


class PrecomputedEmbeddingBackend:
    """In-memory lookup table of embeddings."""

    name = "precomputed"
    supports_concurrency = True
    max_chars: int | None = None

    def __init__(self, embeddings: PrecomputedEmbeddings) -> None:
        self._dim = embeddings.dim
        self._vectors = {
            text: EmbeddingVector.of(values) for text, values in embeddings.vectors.items()
        }

    @classmethod
    def from_file(cls, path: str) -> "PrecomputedEmbeddingBackend":
        """
        Load a precomputed embedding file.

        Raises:
            CorpusIoError: if the file cannot be read
            ConfigError: if the file is not a valid embedding file
        """
        try:
            content = Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise CorpusIoError(path, str(e)) from e
        try:
            return cls(PrecomputedEmbeddings.model_validate_json(content))
        except ValidationError as e:
            raise ConfigError(f"Invalid embedding file {path}: {e}", field="backend") from e

    @property
    def dim(self) -> int:
        return self._dim

    def __len__(self) -> int:
        return len(self._vectors)

    async def embed_batch(self, texts: list[str]) -> list[EmbeddingVector]:
        vectors: list[EmbeddingVector] = []
        for text in texts:
            vector = self._vectors.get(text)
            if vector is None:
                raise MissingEmbedding(text, texts)
            vectors.append(vector)
        return vectors

    async def aclose(self) -> None:
        return None

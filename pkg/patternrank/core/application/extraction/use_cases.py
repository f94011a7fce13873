"""
Extraction Use Cases - ORCHESTRATION LAYER

Use cases orchestrate the functional core with the imperative shell:
1. Tag the document (functional core, in a worker thread)
2. Select and rank candidates (functional core + embedding backend)
3. Record metrics and spans (imperative shell)

Documents are processed concurrently up to ``workers`` at a time; results
come back in input order.
"""

import asyncio
from collections.abc import Sequence
from dataclasses import dataclass

from patternrank.core.application.extraction.extractors import KeyphraseExtractor
from patternrank.core.domain.ranker.models import RankedKeyphrase
from patternrank.core.domain.textpipe.models import (
    SourceDocument,
    TaggedDocument,
    TaggerModel,
)
from patternrank.core.domain.textpipe.tagger import tag_text
from patternrank.core.exceptions import ConfigError, ExtractionError
from patternrank.core.port.outbound.telemetry_ports import TelemetryPort

InputDocument = SourceDocument | TaggedDocument


@dataclass(frozen=True)
class DocumentKeyphrases:
    """Ranked top-N keyphrases of one document."""

    doc_id: str
    keyphrases: list[RankedKeyphrase]

    @property
    def phrases(self) -> list[str]:
        return [keyphrase.phrase for keyphrase in self.keyphrases]


class ExtractKeyphrasesUseCase:
    """
    Use case: extract the top-N keyphrases of each document.

    Raw documents are tagged with ``tagger_model``; pre-tagged documents are
    used as they are.
    """

    def __init__(
        self,
        extractor: KeyphraseExtractor,
        telemetry_port: TelemetryPort,
        tagger_model: TaggerModel | None = None,
        workers: int = 4,
    ):
        """
        Initialize use case with the extractor and ports.

        Args:
            extractor: Candidate selection and scoring strategy
            telemetry_port: Handles metrics and tracing
            tagger_model: Model for tagging raw documents (optional)
            workers: Maximum number of documents in flight
        """
        if workers < 1:
            raise ConfigError("workers must be >= 1", field="workers")
        self.extractor = extractor
        self.telemetry_port = telemetry_port
        self.tagger_model = tagger_model
        self.workers = workers

    async def _tagged(self, doc: InputDocument) -> TaggedDocument:
        if isinstance(doc, TaggedDocument):
            return doc
        if self.tagger_model is None:
            raise ConfigError(
                "Raw text needs a tagger model (--tagger-model) or pre-tagged --conllu input",
                field="tagger",
            )
        return await asyncio.to_thread(tag_text, doc.text, self.tagger_model, doc.doc_id)

    async def extract_document(self, doc: InputDocument, top_n: int) -> DocumentKeyphrases:
        """
        Tag, select and rank one document.

        Raises:
            ExtractionError: wrapping any failure, with the document id
        """
        start_time = await self.telemetry_port.get_current_time()
        async with self.telemetry_port.trace_document(doc.doc_id, self.extractor.name):
            try:
                tagged = await self._tagged(doc)
                keyphrases = await self.extractor.extract(tagged, top_n)
            except Exception as e:
                await self.telemetry_port.record_error(
                    doc_id=doc.doc_id,
                    extractor=self.extractor.name,
                    error=str(e),
                    error_type=type(e).__name__,
                )
                if isinstance(e, ExtractionError):
                    raise
                raise ExtractionError(doc.doc_id, e) from e

        end_time = await self.telemetry_port.get_current_time()
        await self.telemetry_port.record_document(
            extractor=self.extractor.name,
            keyphrases=len(keyphrases),
            duration_seconds=end_time - start_time,
        )
        return DocumentKeyphrases(doc_id=doc.doc_id, keyphrases=keyphrases)

    async def execute(
        self, documents: Sequence[InputDocument], top_n: int
    ) -> list[DocumentKeyphrases]:
        """Extract keyphrases for every document, preserving input order."""
        semaphore = asyncio.Semaphore(self.workers)

        async def bounded(doc: InputDocument) -> DocumentKeyphrases:
            async with semaphore:
                return await self.extract_document(doc, top_n)

        return list(await asyncio.gather(*(bounded(doc) for doc in documents)))

"""
Telemetry Adapter

Run-level side effects behind TelemetryPort:
- Run metrics: prometheus_client, exported through the node-exporter textfile
  format at the end of a batch run
- Distributed tracing: OpenTelemetry, one span per extracted document
"""

import time
from collections.abc import AsyncGenerator
from contextlib import asynccontextmanager

import structlog
from opentelemetry import trace
from prometheus_client import REGISTRY, Counter, Histogram, write_to_textfile

from patternrank.core.exceptions import CorpusIoError
from patternrank.infra.telemetry import get_telemetry_manager

logger = structlog.get_logger(__name__)


# Registered once per process on the default registry.
_documents_total = Counter(
    name="patternrank_documents_total",
    documentation="Documents processed",
    labelnames=["extractor", "status"],
)

_keyphrases_per_document = Histogram(
    name="patternrank_keyphrases_per_document",
    documentation="Keyphrases returned per document",
    labelnames=["extractor"],
    buckets=(0, 1, 2, 5, 10, 20, 50, 100),
)

_extraction_duration = Histogram(
    name="patternrank_extraction_duration_seconds",
    documentation="Per-document extraction duration in seconds",
    labelnames=["extractor"],
)

_backend_batches_total = Counter(
    name="patternrank_backend_batches_total",
    documentation="Embedding backend batch requests",
    labelnames=["backend", "status"],
)


class TelemetryAdapter:
    """TelemetryPort over prometheus_client counters and OpenTelemetry spans."""

    def __init__(self) -> None:
        telemetry_manager = get_telemetry_manager()
        self.tracer = (
            telemetry_manager.get_tracer("patternrank.extraction")
            if telemetry_manager
            else None
        )

    async def get_current_time(self) -> float:
        """Monotonic clock for durations (side effect)."""
        return time.perf_counter()

    @asynccontextmanager
    async def trace_document(
        self, doc_id: str, extractor: str
    ) -> AsyncGenerator[None, None]:
        """Trace one document extraction using OpenTelemetry."""
        if self.tracer:
            with self.tracer.start_as_current_span(
                "extraction.document",
                attributes={
                    "extraction.doc_id": doc_id,
                    "extraction.extractor": extractor,
                },
            ):
                yield
        else:
            yield

    async def record_document(
        self, extractor: str, keyphrases: int, duration_seconds: float
    ) -> None:
        _documents_total.labels(extractor=extractor, status="success").inc()
        _keyphrases_per_document.labels(extractor=extractor).observe(keyphrases)
        _extraction_duration.labels(extractor=extractor).observe(duration_seconds)

    async def record_error(
        self, doc_id: str, extractor: str, error: str, error_type: str
    ) -> None:
        _documents_total.labels(extractor=extractor, status="error").inc()
        logger.error(
            "Document extraction failed",
            doc_id=doc_id,
            extractor=extractor,
            error=error,
            error_type=error_type,
        )
        if self.tracer:
            span = trace.get_current_span()
            span.set_status(trace.Status(trace.StatusCode.ERROR, error))
            span.set_attributes(
                {"extraction.error": error, "extraction.error_type": error_type}
            )

    async def record_backend_batch(self, backend: str, size: int, ok: bool) -> None:
        _backend_batches_total.labels(
            backend=backend, status="success" if ok else "error"
        ).inc()
        if not ok:
            logger.warning("Embedding batch failed", backend=backend, batch_size=size)


def write_metrics_textfile(path: str) -> None:
    """
    Write all registered metrics in the textfile collector format.

    Raises:
        CorpusIoError: if the file cannot be written
    """
    try:
        write_to_textfile(path, REGISTRY)
    except OSError as e:
        raise CorpusIoError(path, str(e)) from e
    logger.info("Metrics written", path=path)

"""
Telemetry Ports - Interfaces for Imperative Shell

Tracing and metrics for extraction runs, kept out of the use cases'
signatures beyond this protocol.
"""

from contextlib import AbstractAsyncContextManager
from typing import Protocol


class TelemetryPort(Protocol):
    """
    Port for telemetry operations (metrics, tracing).

    This interface defines how use cases record observability data
    without knowing the telemetry backend.
    """

    async def get_current_time(self) -> float:
        """
        Get current time for measuring durations.

        Returns:
            Current time in seconds
        """
        ...

    def trace_document(
        self, doc_id: str, extractor: str
    ) -> AbstractAsyncContextManager[None]:
        """
        Start a span around the extraction of one document.

        Args:
            doc_id: Document identifier
            extractor: Extractor name

        Returns:
            Async context manager for tracing
        """
        ...

    async def record_document(
        self, extractor: str, keyphrases: int, duration_seconds: float
    ) -> None:
        """
        Record a successfully processed document.

        Args:
            extractor: Extractor name
            keyphrases: Number of keyphrases returned
            duration_seconds: Extraction duration
        """
        ...

    async def record_error(
        self, doc_id: str, extractor: str, error: str, error_type: str
    ) -> None:
        """
        Record a failed document.

        Args:
            doc_id: Document identifier
            extractor: Extractor name
            error: Error message
            error_type: Type of error
        """
        ...

    async def record_backend_batch(self, backend: str, size: int, ok: bool) -> None:
        """
        Record one embedding batch request.

        Args:
            backend: Backend name
            size: Number of texts in the batch
            ok: Whether the batch succeeded
        """
        ...

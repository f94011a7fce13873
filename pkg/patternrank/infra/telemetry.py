"""
Span export for batch runs.

One tracer provider per process. Embedding requests go through httpx, which is
auto-instrumented, so a slow backend call nests under the document span that
issued it. Without an OTLP endpoint or console tracing the global no-op
provider stays in place.
"""

from collections.abc import Iterator
from dataclasses import dataclass, field

import structlog
from opentelemetry import trace
from opentelemetry.exporter.otlp.proto.grpc.trace_exporter import OTLPSpanExporter
from opentelemetry.instrumentation.httpx import HTTPXClientInstrumentor
from opentelemetry.sdk.resources import Resource
from opentelemetry.sdk.trace import SpanProcessor, TracerProvider
from opentelemetry.sdk.trace.export import BatchSpanProcessor, ConsoleSpanExporter
from opentelemetry.semconv.resource import ResourceAttributes

from patternrank.core.config import get_settings

logger = structlog.get_logger(__name__)


@dataclass
class TelemetryConfig:
    """Exporter selection; ``None`` fields are read from settings."""

    otlp_endpoint: str | None = None
    enable_console_traces: bool | None = None
    service_name: str = field(init=False)
    service_version: str = field(init=False)

    def __post_init__(self) -> None:
        settings = get_settings()
        self.service_name = settings.APP_NAME
        self.service_version = settings.APP_VERSION
        if self.otlp_endpoint is None:
            self.otlp_endpoint = settings.OTLP_ENDPOINT
        if self.enable_console_traces is None:
            self.enable_console_traces = settings.ENABLE_CONSOLE_TRACES

    @property
    def exporting(self) -> bool:
        return bool(self.otlp_endpoint) or bool(self.enable_console_traces)


class TelemetryManager:
    """Owns the tracer provider and httpx instrumentation for one run."""

    def __init__(self, config: TelemetryConfig):
        self.config = config
        self.tracer_provider: TracerProvider | None = None

    def setup_telemetry(self) -> None:
        if not self.config.exporting:
            return

        resource = Resource.create(
            {
                ResourceAttributes.SERVICE_NAME: self.config.service_name,
                ResourceAttributes.SERVICE_VERSION: self.config.service_version,
            }
        )
        provider = TracerProvider(resource=resource)
        for processor in self._span_processors():
            provider.add_span_processor(processor)
        trace.set_tracer_provider(provider)
        self.tracer_provider = provider

        try:
            HTTPXClientInstrumentor().instrument()
        except Exception as exc:
            logger.warning("httpx instrumentation unavailable", error=str(exc))

        logger.info(
            "Span export enabled",
            otlp_endpoint=self.config.otlp_endpoint or None,
            console=bool(self.config.enable_console_traces),
        )

    def _span_processors(self) -> Iterator[SpanProcessor]:
        if self.config.otlp_endpoint:
            yield BatchSpanProcessor(OTLPSpanExporter(endpoint=self.config.otlp_endpoint))
        if self.config.enable_console_traces:
            yield BatchSpanProcessor(ConsoleSpanExporter())

    def get_tracer(self, name: str) -> trace.Tracer:
        # global provider: a no-op one until setup_telemetry installs ours
        return trace.get_tracer(name, self.config.service_version)

    def shutdown(self) -> None:
        """Flush pending spans."""
        if self.tracer_provider is not None:
            self.tracer_provider.shutdown()


_telemetry_manager: TelemetryManager | None = None


def initialize_telemetry(config: TelemetryConfig | None = None) -> TelemetryManager:
    """Install the process-wide manager, replacing any previous one."""
    global _telemetry_manager

    _telemetry_manager = TelemetryManager(config or TelemetryConfig())
    _telemetry_manager.setup_telemetry()
    return _telemetry_manager


def get_telemetry_manager() -> TelemetryManager | None:
    return _telemetry_manager


def shutdown_telemetry() -> None:
    global _telemetry_manager

    if _telemetry_manager is not None:
        _telemetry_manager.shutdown()
    _telemetry_manager = None

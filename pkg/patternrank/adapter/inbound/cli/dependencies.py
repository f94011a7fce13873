"""
CLI Dependencies - wiring

Builds run configuration, adapters and use cases for the command-line
front end.
"""

import json
from collections.abc import Mapping
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from patternrank.adapter.inbound.cli.schemas import (
    BackendSpec,
    HttpBackendSpec,
    PrecomputedBackendSpec,
    ReferenceBackendSpec,
    RunConfig,
    StdioBackendSpec,
)
from patternrank.adapter.outbound.embedding.http_backend import HttpEmbeddingBackend
from patternrank.adapter.outbound.embedding.precomputed_backend import (
    PrecomputedEmbeddingBackend,
)
from patternrank.adapter.outbound.embedding.reference_backend import reference_embedder
from patternrank.adapter.outbound.embedding.stdio_backend import StdioEmbeddingBackend
from patternrank.adapter.outbound.persistence.corpus_adapter import (
    CorpusFileAdapter,
    read_text,
)
from patternrank.adapter.outbound.persistence.tagger_model_store import (
    TaggerModelFileStore,
)
from patternrank.adapter.outbound.telemetry.metrics_adapter import TelemetryAdapter
from patternrank.core.application.evaluation.use_cases import EvaluateCorpusUseCase
from patternrank.core.application.extraction.extractors import (
    ExtractorName,
    KeyphraseExtractor,
    NgramExtractor,
    PatternRankExtractor,
    SingleRankExtractor,
)
from patternrank.core.application.extraction.use_cases import ExtractKeyphrasesUseCase
from patternrank.core.application.tagging.use_cases import TrainTaggerUseCase
from patternrank.core.config import Settings
from patternrank.core.domain.pattern.models import BuiltinPattern
from patternrank.core.domain.pattern.parser import builtin_pattern, parse_pattern
from patternrank.core.domain.textpipe.models import TaggerModel
from patternrank.core.exceptions import ConfigError, CorpusIoError
from patternrank.core.port.outbound.embedding_ports import EmbeddingBackend
from patternrank.core.port.outbound.telemetry_ports import TelemetryPort


def require_path(path: str, field: str) -> str:
    """
    Fail fast on input paths that do not exist.

    Raises:
        ConfigError: if nothing exists at ``path``
    """
    if not Path(path).exists():
        raise ConfigError(f"Input not found: {path}", field=field)
    return path


def load_run_config(
    overrides: Mapping[str, Any],
    config_path: str | None,
    settings: Settings,
) -> RunConfig:
    """
    Layer CLI overrides over an optional JSON config file.

    The backend falls back to ``PATTERNRANK_BACKEND`` when neither source
    names one.

    Raises:
        ConfigError: if the file or the merged options are invalid
    """
    values: dict[str, Any] = {}
    if config_path is not None:
        require_path(config_path, "config")
        try:
            loaded = json.loads(read_text(Path(config_path)))
        except json.JSONDecodeError as e:
            raise ConfigError(
                f"Config file {config_path} is not JSON: {e.msg}", field="config"
            ) from e
        if not isinstance(loaded, dict):
            raise ConfigError(f"Config file {config_path} must hold an object", field="config")
        values.update(loaded)
    values.update({key: value for key, value in overrides.items() if value is not None})
    if values.get("backend") is None and settings.BACKEND:
        values["backend"] = settings.BACKEND

    try:
        return RunConfig.model_validate(values)
    except ValidationError as e:
        details = "; ".join(
            f"{'.'.join(map(str, err['loc'])) or 'config'}: {err['msg']}" for err in e.errors()
        )
        raise ConfigError(f"Invalid run configuration: {details}") from e


def save_run_config(config: RunConfig, path: str) -> None:
    try:
        Path(path).write_text(config.model_dump_json(indent=2) + "\n", encoding="utf-8")
    except OSError as e:
        raise CorpusIoError(path, str(e)) from e


def load_stopwords(path: str | None) -> frozenset[str]:
    """One stopword per line; blank lines and ``#`` comments are skipped."""
    if path is None:
        return frozenset()
    require_path(path, "stopwords")
    lines = read_text(Path(path)).splitlines()
    return frozenset(
        line.strip().lower() for line in lines if line.strip() and not line.startswith("#")
    )


def create_backend(spec: BackendSpec, settings: Settings) -> EmbeddingBackend:
    """Instantiate the embedding adapter named by ``spec``."""
    match spec:
        case HttpBackendSpec(url=url):
            return HttpEmbeddingBackend(
                url,
                timeout=settings.EXTERNAL_API_TIMEOUT,
                retries=settings.EXTERNAL_API_RETRIES,
                max_chars=settings.HTTP_MAX_CHARS,
            )
        case StdioBackendSpec(command=command):
            return StdioEmbeddingBackend(command, timeout=settings.EXTERNAL_API_TIMEOUT)
        case PrecomputedBackendSpec(path=path):
            return PrecomputedEmbeddingBackend.from_file(require_path(path, "backend"))
        case ReferenceBackendSpec(dim=dim, seed=seed):
            return reference_embedder(dim, seed)
    raise ConfigError(f"Unsupported backend: {spec!r}", field="backend")


def create_extractor(
    config: RunConfig,
    backend: EmbeddingBackend | None,
    settings: Settings,
    telemetry: TelemetryPort | None = None,
) -> KeyphraseExtractor:
    """Build the extractor selected by ``config``."""
    if config.extractor is ExtractorName.SINGLERANK:
        return SingleRankExtractor(
            window=config.window,
            damping=config.damping,
            tol=config.tol,
            max_iter=config.max_iter,
        )
    if backend is None:
        raise ConfigError("No embedding backend configured", field="backend")
    if config.extractor is ExtractorName.NGRAM:
        return NgramExtractor(
            backend,
            min_n=config.ngram_min,
            max_n=config.ngram_max,
            stopwords=load_stopwords(config.stopwords),
            batch_size=settings.EMBED_BATCH_SIZE,
            telemetry=telemetry,
        )
    default = (
        BuiltinPattern.PATTERNRANK_POS
        if config.extractor is ExtractorName.PATTERNRANK_POS
        else BuiltinPattern.NOUN_PHRASE
    )
    pattern = parse_pattern(config.pattern) if config.pattern else builtin_pattern(default)
    return PatternRankExtractor(
        config.extractor.value,
        pattern,
        backend,
        batch_size=settings.EMBED_BATCH_SIZE,
        telemetry=telemetry,
    )


def get_extraction_use_case(
    extractor: KeyphraseExtractor,
    tagger_model: TaggerModel | None,
    workers: int,
    telemetry: TelemetryPort | None = None,
) -> ExtractKeyphrasesUseCase:
    """Wire the extraction use case with the telemetry adapter."""
    return ExtractKeyphrasesUseCase(
        extractor=extractor,
        telemetry_port=telemetry or TelemetryAdapter(),
        tagger_model=tagger_model,
        workers=workers,
    )


def get_evaluation_use_case(extraction: ExtractKeyphrasesUseCase) -> EvaluateCorpusUseCase:
    return EvaluateCorpusUseCase(extraction)


def get_training_use_case() -> TrainTaggerUseCase:
    return TrainTaggerUseCase(
        corpus_port=CorpusFileAdapter(),
        model_port=TaggerModelFileStore(),
    )

"""
Command-line entry point - IMPERATIVE SHELL

Subcommands:
    train-tagger   train the part-of-speech tagger on a CoNLL-U corpus
    extract        write the ranked keyphrases of each document as JSONL
    eval           score an extractor against a gold corpus

Exit codes: 0 success, 2 configuration error, 3 embedding backend failure,
4 I/O or parse failure.
"""

import argparse
import asyncio
import sys
from collections.abc import Awaitable, Callable, Sequence
from pathlib import Path
from typing import Any

import structlog
from pydantic import ValidationError

from patternrank.adapter.inbound.cli.dependencies import (
    create_backend,
    create_extractor,
    get_evaluation_use_case,
    get_extraction_use_case,
    get_training_use_case,
    load_run_config,
    require_path,
    save_run_config,
)
from patternrank.adapter.inbound.cli.schemas import (
    ConlluTaggerSpec,
    ModelTaggerSpec,
    RunConfig,
)
from patternrank.adapter.outbound.persistence.corpus_adapter import CorpusFileAdapter
from patternrank.adapter.outbound.persistence.tagger_model_store import (
    TaggerModelFileStore,
)
from patternrank.adapter.outbound.reporting.report_renderer import (
    ReportFormat,
    render_keyphrases_jsonl,
    render_report,
)
from patternrank.adapter.outbound.telemetry.metrics_adapter import (
    TelemetryAdapter,
    write_metrics_textfile,
)
from patternrank.core.application.extraction.use_cases import (
    DocumentKeyphrases,
    InputDocument,
)
from patternrank.core.config import Settings, get_settings
from patternrank.core.domain.evaluation.models import EvalReport
from patternrank.core.domain.textpipe.models import TaggedDocument, TaggerModel
from patternrank.core.exceptions import (
    EXIT_CONFIG,
    ConfigError,
    CorpusIoError,
    PatternRankError,
)
from patternrank.core.port.outbound.embedding_ports import EmbeddingBackend
from patternrank.infra.logging import setup_logging
from patternrank.infra.telemetry import initialize_telemetry, shutdown_telemetry

logger = structlog.get_logger(__name__)

Handler = Callable[[argparse.Namespace, Settings], Awaitable[int]]

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def parse_int_list(value: str, option: str) -> list[int]:
    """Parse a comma-separated list such as ``5,10,20``."""
    try:
        return [int(part) for part in value.split(",") if part.strip()]
    except ValueError as e:
        raise ConfigError(f"{option} expects comma-separated integers, got '{value}'") from e


def parse_ngram_range(value: str) -> tuple[int, int]:
    """Parse ``MIN,MAX``."""
    bounds = parse_int_list(value, "--ngram-range")
    if len(bounds) != 2:
        raise ConfigError(f"--ngram-range expects MIN,MAX, got '{value}'", field="ngram_range")
    return bounds[0], bounds[1]


def write_output(text: str, path: str | None) -> None:
    """Write to ``path``, or to stdout when no path is given."""
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as e:
        raise CorpusIoError(path, str(e)) from e


def run_overrides(args: argparse.Namespace) -> dict[str, Any]:
    """Map the shared run flags onto ``RunConfig`` fields; unset flags are None."""
    overrides: dict[str, Any] = {
        "extractor": args.extractor,
        "pattern": args.pattern,
        "top_n": args.top_n,
        "backend": args.backend,
        "window": args.window,
        "damping": args.damping,
        "stopwords": args.stopwords,
    }
    if args.tagger_model is not None:
        overrides["tagger"] = {"kind": "model", "path": args.tagger_model}
    if args.ngram_range is not None:
        overrides["ngram_min"], overrides["ngram_max"] = parse_ngram_range(args.ngram_range)
    return overrides


def resolve_config(
    args: argparse.Namespace,
    settings: Settings,
    overrides: dict[str, Any],
    evaluating: bool = False,
) -> RunConfig:
    """
    Load the run configuration and save it when asked.

    Evaluation needs max(n_values) phrases per document, so an eval run with
    no explicit top_n takes that value.
    """
    config = load_run_config(overrides, args.config, settings)
    if evaluating and "top_n" not in config.model_fields_set:
        config = config.model_copy(update={"top_n": max(config.n_values)})
    if args.save_config is not None:
        save_run_config(config, args.save_config)
        logger.info("Run configuration saved", path=args.save_config)
    return config


async def load_tagger_model(config: RunConfig) -> TaggerModel | None:
    if isinstance(config.tagger, ModelTaggerSpec):
        path = require_path(config.tagger.path, "tagger")
        return await TaggerModelFileStore().load(path)
    return None


async def run_extraction(
    config: RunConfig,
    settings: Settings,
    workers: int | None,
    run: Callable[..., Awaitable[Any]],
) -> Any:
    """
    Build backend, extractor and use case, run ``run(use_case)`` and always
    release the backend.
    """
    config.require_complete()
    tagger_model = await load_tagger_model(config)
    backend: EmbeddingBackend | None = None
    if config.needs_backend and config.backend is not None:
        backend = create_backend(config.backend, settings)
    telemetry = TelemetryAdapter()
    try:
        extractor = create_extractor(config, backend, settings, telemetry)
        use_case = get_extraction_use_case(
            extractor, tagger_model, workers or settings.WORKERS, telemetry
        )
        return await run(use_case)
    finally:
        if backend is not None:
            await backend.aclose()


async def train_tagger_command(args: argparse.Namespace, settings: Settings) -> int:
    corpus_path = require_path(args.corpus, "corpus")
    result = await get_training_use_case().execute(
        corpus_path, args.out, iterations=args.iterations, seed=args.seed
    )
    logger.info(
        "Tagger trained",
        sentences=result.sentences,
        tokens=result.tokens,
        accuracy=result.accuracy,
        path=args.out,
    )
    write_output(
        f"sentences: {result.sentences}\n"
        f"tokens: {result.tokens}\n"
        f"training accuracy: {result.accuracy:.4f}\n"
        f"model: {args.out}\n",
        None,
    )
    return 0


async def extract_command(args: argparse.Namespace, settings: Settings) -> int:
    input_path = require_path(args.input, "input")
    overrides = run_overrides(args)
    if args.conllu:
        overrides["tagger"] = {"kind": "conllu"}
    config = resolve_config(args, settings, overrides)

    corpus = CorpusFileAdapter()
    documents: list[InputDocument]
    if isinstance(config.tagger, ConlluTaggerSpec):
        documents = list(await corpus.load_tagged_documents(input_path))
    else:
        documents = list(await corpus.load_documents(input_path))
    logger.info("Extracting", documents=len(documents), extractor=config.extractor.value)

    results: list[DocumentKeyphrases] = await run_extraction(
        config,
        settings,
        args.workers,
        lambda use_case: use_case.execute(documents, config.top_n),
    )
    write_output(render_keyphrases_jsonl(results), args.output)
    return 0


async def eval_command(args: argparse.Namespace, settings: Settings) -> int:
    corpus_path = require_path(args.corpus, "corpus")
    overrides = run_overrides(args)
    if args.n_values is not None:
        overrides["n_values"] = parse_int_list(args.n_values, "--n-values")
    if args.conllu is not None:
        overrides["tagger"] = {"kind": "conllu", "path": args.conllu}
    config = resolve_config(args, settings, overrides, evaluating=True)
    config.require_eval()

    corpus = CorpusFileAdapter()
    gold = await corpus.load_gold(corpus_path)
    tagged: dict[str, TaggedDocument] | None = None
    if isinstance(config.tagger, ConlluTaggerSpec):
        if config.tagger.path is None:
            raise ConfigError("eval --conllu needs the path of the tagged corpus", field="tagger")
        tagged_path = require_path(config.tagger.path, "conllu")
        tagged = {doc.doc_id: doc for doc in await corpus.load_tagged_documents(tagged_path)}
    logger.info("Evaluating", documents=len(gold), extractor=config.extractor.value)

    report: EvalReport = await run_extraction(
        config,
        settings,
        args.workers,
        lambda use_case: get_evaluation_use_case(use_case).execute(
            gold, config.n_values, tagged
        ),
    )
    write_output(render_report(report, args.format), args.output)
    return 0


def _add_run_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("run options")
    group.add_argument(
        "--extractor",
        help="patternrank_pos (default), patternrank_np, ngram or singlerank",
    )
    group.add_argument("--pattern", help="custom POS pattern, e.g. '{ADJ}*{NOUN}+'")
    group.add_argument("--top-n", type=int, help="keyphrases per document")
    group.add_argument(
        "--backend",
        help="http:URL | stdio:CMD | precomputed:PATH | reference[:DIM[:SEED]]",
    )
    group.add_argument("--tagger-model", help="tagger model written by train-tagger")
    group.add_argument("--window", type=int, help="singlerank co-occurrence window")
    group.add_argument("--damping", type=float, help="singlerank damping factor")
    group.add_argument("--ngram-range", metavar="MIN,MAX", help="ngram extractor lengths")
    group.add_argument("--stopwords", help="stopword file for the ngram extractor")
    group.add_argument("--workers", type=int, help="documents processed concurrently")
    group.add_argument("--config", help="JSON run configuration; flags override it")
    group.add_argument("--save-config", help="write the resolved run configuration here")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="patternrank",
        description="Keyphrase extraction with part-of-speech patterns and embeddings",
    )
    parser.add_argument("--log-level", choices=LOG_LEVELS, type=str.upper)
    commands = parser.add_subparsers(dest="command", required=True)

    train = commands.add_parser("train-tagger", help="train the part-of-speech tagger")
    train.add_argument("corpus", help="CoNLL-U training corpus")
    train.add_argument("--iterations", type=int, default=5)
    train.add_argument("--seed", type=int, default=0)
    train.add_argument("--out", required=True, help="model file to write")
    train.set_defaults(handler=train_tagger_command)

    extract = commands.add_parser("extract", help="extract keyphrases as JSONL")
    extract.add_argument("input", help="text file, JSONL documents or CoNLL-U (--conllu)")
    extract.add_argument("--output", help="write JSONL here instead of stdout")
    extract.add_argument("--conllu", action="store_true", help="input is pre-tagged CoNLL-U")
    _add_run_options(extract)
    extract.set_defaults(handler=extract_command)

    evaluate = commands.add_parser("eval", help="evaluate against gold keyphrases")
    evaluate.add_argument("corpus", help="Inspec directory or gold JSONL file")
    evaluate.add_argument("--conllu", metavar="PATH", help="pre-tagged corpus documents")
    evaluate.add_argument("--n-values", metavar="N,N,...", help="cut-offs, default 5,10,20")
    evaluate.add_argument(
        "--format",
        choices=[fmt.value for fmt in ReportFormat],
        default=ReportFormat.TABLE.value,
    )
    evaluate.add_argument("--output", help="write the report here instead of stdout")
    _add_run_options(evaluate)
    evaluate.set_defaults(handler=eval_command)

    return parser


async def _execute(handler: Handler, args: argparse.Namespace, settings: Settings) -> int:
    status = await handler(args, settings)
    if settings.METRICS_TEXTFILE:
        write_metrics_textfile(settings.METRICS_TEXTFILE)
    return status


def main(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return the process exit code."""
    args = build_parser().parse_args(argv)
    try:
        settings = get_settings()
    except ValidationError as e:
        print(f"error: invalid PATTERNRANK_ environment settings: {e}", file=sys.stderr)
        return EXIT_CONFIG

    setup_logging(args.log_level)
    initialize_telemetry()
    try:
        return asyncio.run(_execute(args.handler, args, settings))
    except PatternRankError as e:
        logger.error(
            "Command failed",
            command=args.command,
            error=e.message,
            error_type=type(e).__name__,
            exit_code=e.exit_code,
            details=e.details,
        )
        print(f"error: {e.message}", file=sys.stderr)
        return e.exit_code
    finally:
        shutdown_telemetry()


def run() -> None:
    """Console script entry point."""
    sys.exit(main())

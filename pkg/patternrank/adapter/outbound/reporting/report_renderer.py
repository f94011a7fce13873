"""
Report Renderer - IMPERATIVE SHELL

Serializes evaluation reports as a regime by (P, R, F1)@N text grid, JSON or
CSV, and extraction results as JSONL. All renderings are deterministic.
"""

import csv
import io
from collections.abc import Sequence
from enum import Enum

from pydantic import ValidationError

from patternrank.adapter.outbound.reporting.schemas import (
    DocumentKeyphrasesSchema,
    DocumentScoresSchema,
    EvalReportSchema,
    KeyphraseSchema,
    ScoreCellSchema,
)
from patternrank.core.application.extraction.use_cases import DocumentKeyphrases
from patternrank.core.domain.evaluation.models import PRF, Cell, EvalReport, Regime
from patternrank.core.exceptions import ConfigError

CSV_HEADER = ("regime", "n", "precision", "recall", "f1")


class ReportFormat(str, Enum):
    TABLE = "table"
    JSON = "json"
    CSV = "csv"


def _cell_schemas(cells: dict[Cell, PRF], report: EvalReport) -> list[ScoreCellSchema]:
    return [
        ScoreCellSchema(
            regime=regime,
            n=n,
            precision=cells[(regime, n)].precision,
            recall=cells[(regime, n)].recall,
            f1=cells[(regime, n)].f1,
        )
        for regime, n in report.cells()
    ]


def _cells_from_schemas(schemas: list[ScoreCellSchema]) -> dict[Cell, PRF]:
    return {
        (schema.regime, schema.n): PRF(schema.precision, schema.recall, schema.f1)
        for schema in schemas
    }


def render_json(report: EvalReport) -> str:
    payload = EvalReportSchema(
        extractor=report.extractor_name,
        n_values=list(report.n_values),
        macro=_cell_schemas(report.macro, report),
        documents=[
            DocumentScoresSchema(id=doc_id, scores=_cell_schemas(cells, report))
            for doc_id, cells in report.per_document.items()
        ],
    )
    return payload.model_dump_json(indent=2) + "\n"


def report_from_json(text: str) -> EvalReport:
    """
    Inverse of the JSON rendering.

    Raises:
        ConfigError: if ``text`` is not a serialized report
    """
    try:
        payload = EvalReportSchema.model_validate_json(text)
    except ValidationError as e:
        raise ConfigError(f"Invalid report JSON: {e.error_count()} errors", field="report") from e
    return EvalReport(
        extractor_name=payload.extractor,
        n_values=tuple(payload.n_values),
        per_document={
            document.id: _cells_from_schemas(document.scores) for document in payload.documents
        },
        macro=_cells_from_schemas(payload.macro),
    )


def render_csv(report: EvalReport) -> str:
    """Macro scores, one row per (regime, N)."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for regime, n in report.cells():
        prf = report.macro[(regime, n)]
        writer.writerow(
            [regime.value, n, f"{prf.precision:.6f}", f"{prf.recall:.6f}", f"{prf.f1:.6f}"]
        )
    return buffer.getvalue()


def render_table(report: EvalReport) -> str:
    """Regime rows by (P, R, F1)@N columns, as percentages."""
    metric_columns = [f"{metric}@{n}" for n in report.n_values for metric in ("P", "R", "F1")]
    width = max(7, *(len(column) + 1 for column in metric_columns))
    header = f"{'regime':<8}" + "".join(f"{column:>{width}}" for column in metric_columns)
    lines = [
        f"extractor: {report.extractor_name}  documents: {report.document_count}",
        header,
        "-" * len(header),
    ]
    for regime in Regime:
        values: list[str] = []
        for n in report.n_values:
            prf = report.macro[(regime, n)]
            values.extend(
                f"{100 * value:>{width}.2f}" for value in (prf.precision, prf.recall, prf.f1)
            )
        lines.append(f"{regime.value:<8}" + "".join(values))
    return "\n".join(lines) + "\n"


def render_report(report: EvalReport, fmt: ReportFormat | str = ReportFormat.TABLE) -> str:
    """Render ``report`` in the requested format."""
    renderers = {
        ReportFormat.TABLE: render_table,
        ReportFormat.JSON: render_json,
        ReportFormat.CSV: render_csv,
    }
    return renderers[ReportFormat(fmt)](report)


def render_keyphrases_jsonl(results: Sequence[DocumentKeyphrases]) -> str:
    """One {"id", "keyphrases": [{"phrase", "score", "rank"}]} object per line."""
    lines = [
        DocumentKeyphrasesSchema(
            id=result.doc_id,
            keyphrases=[
                KeyphraseSchema(phrase=k.phrase, score=k.score, rank=k.rank)
                for k in result.keyphrases
            ],
        ).model_dump_json()
        for result in results
    ]
    return "".join(line + "\n" for line in lines)

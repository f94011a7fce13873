"""
CLI Schemas - per-run configuration

``RunConfig`` is built from command-line flags, optionally layered over a
JSON config file, and can be written back out; a saved config reloaded
drives an identical run. These are CLI DTOs, not domain models.
"""

from typing import Annotated, Any, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from patternrank.core.application.extraction.extractors import ExtractorName
from patternrank.core.domain.evaluation.calculations import DEFAULT_N_VALUES
from patternrank.core.domain.pattern.parser import format_pattern, parse_pattern
from patternrank.core.domain.singlerank.graph import (
    DEFAULT_DAMPING,
    DEFAULT_MAX_ITER,
    DEFAULT_TOL,
    DEFAULT_WINDOW,
)
from patternrank.core.exceptions import ConfigError, PatternRankError

DEFAULT_TOP_N = 20
DEFAULT_REFERENCE_DIM = 256


class HttpBackendSpec(BaseModel):
    kind: Literal["http"] = "http"
    url: str = Field(min_length=1)


class StdioBackendSpec(BaseModel):
    kind: Literal["stdio"] = "stdio"
    command: str = Field(min_length=1)


class PrecomputedBackendSpec(BaseModel):
    kind: Literal["precomputed"] = "precomputed"
    path: str = Field(min_length=1)


class ReferenceBackendSpec(BaseModel):
    kind: Literal["reference"] = "reference"
    dim: int = Field(default=DEFAULT_REFERENCE_DIM, ge=16)
    seed: int = 0


BackendSpec = Annotated[
    HttpBackendSpec | StdioBackendSpec | PrecomputedBackendSpec | ReferenceBackendSpec,
    Field(discriminator="kind"),
]


def parse_backend_spec(value: str) -> dict[str, Any]:
    """
    Parse ``http:URL``, ``stdio:CMD``, ``precomputed:PATH`` or
    ``reference[:DIM[:SEED]]`` into the fields of a backend spec.

    Raises:
        ConfigError: on an unknown backend kind or malformed reference spec
    """
    kind, _, rest = value.partition(":")
    match kind:
        case "http":
            return {"kind": "http", "url": rest}
        case "stdio":
            return {"kind": "stdio", "command": rest}
        case "precomputed":
            return {"kind": "precomputed", "path": rest}
        case "reference":
            parts = [part for part in rest.split(":") if part] if rest else []
            if len(parts) > 2:
                raise ConfigError(f"Malformed reference backend: {value}", field="backend")
            try:
                numbers = [int(part) for part in parts]
            except ValueError as e:
                raise ConfigError(f"Malformed reference backend: {value}", field="backend") from e
            spec: dict[str, Any] = {"kind": "reference"}
            spec.update(zip(("dim", "seed"), numbers, strict=False))
            return spec
    raise ConfigError(
        f"Unknown backend '{value}'; expected http:URL, stdio:CMD, "
        "precomputed:PATH or reference:DIM:SEED",
        field="backend",
    )


class ModelTaggerSpec(BaseModel):
    """Tag raw text with a trained model file."""

    kind: Literal["model"] = "model"
    path: str = Field(min_length=1)


class ConlluTaggerSpec(BaseModel):
    """
    Input is already tagged (CoNLL-U).

    For extraction the input file itself is CoNLL-U; for evaluation ``path``
    names the CoNLL-U file holding the corpus documents.
    """

    kind: Literal["conllu"] = "conllu"
    path: str | None = None


TaggerSpec = Annotated[ModelTaggerSpec | ConlluTaggerSpec, Field(discriminator="kind")]


class RunConfig(BaseModel):
    """Options of one extract or eval run."""

    model_config = ConfigDict(extra="forbid")

    extractor: ExtractorName = ExtractorName.PATTERNRANK_POS
    pattern: str | None = None
    top_n: int = Field(default=DEFAULT_TOP_N, ge=1)
    n_values: list[int] = Field(default_factory=lambda: list(DEFAULT_N_VALUES), min_length=1)
    backend: BackendSpec | None = None
    tagger: TaggerSpec | None = None
    window: int = Field(default=DEFAULT_WINDOW, ge=2)
    damping: float = Field(default=DEFAULT_DAMPING, gt=0.0, lt=1.0)
    tol: float = Field(default=DEFAULT_TOL, gt=0.0)
    max_iter: int = Field(default=DEFAULT_MAX_ITER, ge=1)
    ngram_min: int = Field(default=1, ge=1)
    ngram_max: int = Field(default=3, ge=1)
    stopwords: str | None = None

    @field_validator("backend", mode="before")
    @classmethod
    def parse_backend(cls, v: Any) -> Any:
        """Accept the ``kind:argument`` string form as well as a mapping."""
        return parse_backend_spec(v) if isinstance(v, str) else v

    @field_validator("pattern", mode="after")
    @classmethod
    def normalize_pattern(cls, v: str | None) -> str | None:
        """Store the canonical form so saved configs reparse identically."""
        if v is None:
            return None
        try:
            return format_pattern(parse_pattern(v))
        except PatternRankError as e:
            raise ValueError(e.message) from e

    @field_validator("n_values", mode="after")
    @classmethod
    def validate_n_values(cls, v: list[int]) -> list[int]:
        if any(n < 1 for n in v):
            raise ValueError("every N must be >= 1")
        return sorted(set(v))

    @model_validator(mode="after")
    def check_consistency(self) -> "RunConfig":
        if self.ngram_min > self.ngram_max:
            raise ValueError("ngram range minimum exceeds maximum")
        if self.pattern is not None and self.extractor not in (
            ExtractorName.PATTERNRANK_POS,
            ExtractorName.PATTERNRANK_NP,
        ):
            raise ValueError("--pattern only applies to the patternrank extractors")
        return self

    @property
    def needs_backend(self) -> bool:
        return self.extractor is not ExtractorName.SINGLERANK

    def require_complete(self) -> None:
        """
        Check the cross-field requirements of an actual run.

        Raises:
            ConfigError: if the backend or tagger source is missing
        """
        if self.needs_backend and self.backend is None:
            raise ConfigError(
                "No embedding backend; use --backend or PATTERNRANK_BACKEND", field="backend"
            )
        if self.tagger is None:
            raise ConfigError("Use --tagger-model PATH or --conllu", field="tagger")

    def require_eval(self) -> None:
        """
        Evaluation ranks max(n_values) phrases, so top_n must cover it.

        Raises:
            ConfigError: if top_n < max(n_values)
        """
        if self.top_n < max(self.n_values):
            raise ConfigError(
                f"--top-n {self.top_n} is below the largest N {max(self.n_values)}",
                field="top_n",
            )

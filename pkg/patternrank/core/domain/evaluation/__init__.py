"""Evaluation domain - exact/partial matching and macro-averaged reports."""

from patternrank.core.domain.evaluation.calculations import (
    DEFAULT_N_VALUES,
    build_report,
    dedupe_extracted,
    evaluate,
    normalize_gold,
    normalize_keyphrase,
    prf_exact,
    prf_partial,
    score_document,
    unigrams,
    validate_n_values,
)
from patternrank.core.domain.evaluation.models import (
    PRF,
    EvalReport,
    GoldDocument,
    Regime,
)

__all__ = [
    "DEFAULT_N_VALUES",
    "PRF",
    "EvalReport",
    "GoldDocument",
    "Regime",
    "build_report",
    "dedupe_extracted",
    "evaluate",
    "normalize_gold",
    "normalize_keyphrase",
    "prf_exact",
    "prf_partial",
    "score_document",
    "unigrams",
    "validate_n_values",
]

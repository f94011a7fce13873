"""Pattern domain - POS-pattern DSL, NFA matcher and candidate selection."""

from patternrank.core.domain.pattern.candidates import (
    extract_candidates,
    match_spans,
    normalize_span,
    select_ngrams,
)
from patternrank.core.domain.pattern.matcher import Matcher, accepts, compile_pattern
from patternrank.core.domain.pattern.models import (
    Alternation,
    BuiltinPattern,
    Candidate,
    Concat,
    Literal,
    PatternAst,
    Repeat,
    Wildcard,
)
from patternrank.core.domain.pattern.parser import (
    builtin_pattern,
    format_pattern,
    parse_pattern,
)

__all__ = [
    "Alternation",
    "BuiltinPattern",
    "Candidate",
    "Concat",
    "Literal",
    "Matcher",
    "PatternAst",
    "Repeat",
    "Wildcard",
    "accepts",
    "builtin_pattern",
    "compile_pattern",
    "extract_candidates",
    "format_pattern",
    "match_spans",
    "normalize_span",
    "parse_pattern",
    "select_ngrams",
]

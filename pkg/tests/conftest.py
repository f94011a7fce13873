"""
Pytest configuration and shared fixtures.

This module provides common fixtures for all tests: a toy tagger model
trained once per session, the reference embedding backend, small corpora on
disk and a clean settings singleton per test.

Test environment variables are set BEFORE any package import; the backend,
metrics and OTLP variables are cleared.
"""

import json
import os
from collections.abc import Generator
from pathlib import Path

# CRITICAL: Set test environment variables BEFORE any package imports
# This must happen before Settings() is instantiated during import
os.environ["PATTERNRANK_TESTING"] = "true"
os.environ["PATTERNRANK_LOG_FORMAT"] = "console"
for _name in ("PATTERNRANK_BACKEND", "PATTERNRANK_METRICS_TEXTFILE", "PATTERNRANK_OTLP_ENDPOINT"):
    os.environ.pop(_name, None)

# Imports must come after environment variables are set
import pytest  # noqa: E402

from patternrank.adapter.outbound.embedding.reference_backend import (  # noqa: E402
    ReferenceEmbeddingBackend,
)
from patternrank.core.config import reset_settings  # noqa: E402
from patternrank.core.domain.textpipe.models import TaggerModel  # noqa: E402
from patternrank.core.domain.textpipe.tagger import (  # noqa: E402
    serialize_model,
    train_tagger,
)
from tests.helpers import TRAINING_SENTENCES, conllu_text  # noqa: E402


@pytest.fixture(autouse=True)
def fresh_settings() -> Generator[None, None, None]:
    """Drop the cached settings so monkeypatched environments take effect."""
    reset_settings()
    yield
    reset_settings()


@pytest.fixture(scope="session")
def toy_tagger_model() -> TaggerModel:
    """Tagger trained on the handcrafted corpus; shared read-only."""
    return train_tagger(TRAINING_SENTENCES, iterations=5, seed=0)


@pytest.fixture
def reference_backend() -> ReferenceEmbeddingBackend:
    return ReferenceEmbeddingBackend(dim=256, seed=0)


@pytest.fixture
def training_conllu(tmp_path: Path) -> Path:
    """The handcrafted training corpus written as CoNLL-U."""
    path = tmp_path / "train.conllu"
    path.write_text(conllu_text({"train": TRAINING_SENTENCES}), encoding="utf-8")
    return path


@pytest.fixture
def tagger_model_file(tmp_path: Path, toy_tagger_model: TaggerModel) -> Path:
    path = tmp_path / "tagger.json"
    path.write_text(serialize_model(toy_tagger_model), encoding="utf-8")
    return path


@pytest.fixture
def gold_jsonl(tmp_path: Path) -> Path:
    """Two-document gold corpus in the JSONL format."""
    records = [
        {
            "id": "d1",
            "text": "Fast neural networks improve grid computing systems.",
            "keyphrases": ["neural networks", "grid computing"],
        },
        {
            "id": "d2",
            "text": "Fuzzy logic control of distributed systems.",
            "keyphrases": ["fuzzy logic", "control"],
        },
    ]
    path = tmp_path / "gold.jsonl"
    path.write_text("".join(json.dumps(record) + "\n" for record in records), encoding="utf-8")
    return path

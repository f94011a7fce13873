"""
Tagger Model Store - IMPERATIVE SHELL

Writes and reads tagger models as versioned, sorted-key JSON files.
"""

from pathlib import Path

import structlog

from patternrank.core.domain.textpipe.models import TaggerModel
from patternrank.core.domain.textpipe.tagger import deserialize_model, serialize_model
from patternrank.core.exceptions import CorpusIoError

logger = structlog.get_logger(__name__)


class TaggerModelFileStore:
    """File implementation of the tagger model port."""

    async def save(self, model: TaggerModel, path: str) -> None:
        """
        Write ``model`` to ``path``, creating parent directories.

        Raises:
            CorpusIoError: if the file cannot be written
        """
        target = Path(path)
        try:
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_text(serialize_model(model), encoding="utf-8")
        except OSError as e:
            raise CorpusIoError(path, str(e)) from e
        logger.info("Tagger model saved", path=path, features=len(model.weights))

    async def load(self, path: str) -> TaggerModel:
        """
        Read a model file.

        Raises:
            CorpusIoError: if the file cannot be read
            ConfigError: if the content is not a tagger model
        """
        try:
            content = Path(path).read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as e:
            raise CorpusIoError(path, str(e)) from e
        return deserialize_model(content)

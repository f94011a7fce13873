"""
Stdio Embedding Adapter

Runs an embedding service as a subprocess speaking line-delimited JSON: one
request object per line on stdin, one response object per line on stdout.
The subprocess handles one request at a time, so calls are serialized with an
``asyncio.Lock``. The process is started lazily on the first batch and replaced after a timeout.
"""

import asyncio
import contextlib
import shlex

import structlog
from pydantic import ValidationError

from patternrank.adapter.outbound.embedding.schemas import EmbedRequest, EmbedResponse
from patternrank.core.domain.ranker.models import EmbeddingVector
from patternrank.core.exceptions import BackendFailure

logger = structlog.get_logger(__name__)

# Response lines can carry thousands of floats.
STREAM_LIMIT = 64 * 1024 * 1024


class StdioEmbeddingBackend:
    """Embedding backend behind a child process's stdin/stdout."""

    name = "stdio"
    supports_concurrency = False

    def __init__(
        self,
        command: str,
        timeout: float = 30.0,
        max_chars: int | None = None,
    ) -> None:
        self.argv = shlex.split(command)
        if not self.argv:
            raise ValueError("stdio backend needs a command")
        self.timeout = timeout
        self.max_chars = max_chars
        self._dim: int | None = None
        self._process: asyncio.subprocess.Process | None = None
        self._lock = asyncio.Lock()

    @property
    def dim(self) -> int | None:
        return self._dim

    async def _ensure_started(self, texts: list[str]) -> asyncio.subprocess.Process:
        if self._process is not None and self._process.returncode is None:
            return self._process
        try:
            self._process = await asyncio.create_subprocess_exec(
                *self.argv,
                stdin=asyncio.subprocess.PIPE,
                stdout=asyncio.subprocess.PIPE,
                limit=STREAM_LIMIT,
            )
        except OSError as e:
            raise BackendFailure(f"cannot start {self.argv[0]}: {e}", texts) from e
        logger.info("Embedding subprocess started", command=self.argv[0], pid=self._process.pid)
        return self._process

    async def _round_trip(self, texts: list[str]) -> bytes:
        process = await self._ensure_started(texts)
        assert process.stdin is not None and process.stdout is not None
        line = EmbedRequest(texts=texts).model_dump_json() + "\n"
        try:
            process.stdin.write(line.encode("utf-8"))
            await process.stdin.drain()
            return await asyncio.wait_for(process.stdout.readline(), self.timeout)
        except asyncio.TimeoutError as e:
            # a late reply would be read as the answer to the next request
            await self._discard(process)
            raise BackendFailure(f"no response within {self.timeout}s", texts) from e
        except (OSError, ValueError) as e:
            raise BackendFailure(f"{type(e).__name__}: {e}", texts) from e

    async def _discard(self, process: asyncio.subprocess.Process) -> None:
        if self._process is process:
            self._process = None
        if process.returncode is None:
            with contextlib.suppress(ProcessLookupError):
                process.kill()
            await process.wait()
        logger.warning("Embedding subprocess killed", command=self.argv[0], pid=process.pid)

    async def embed_batch(self, texts: list[str]) -> list[EmbeddingVector]:
        async with self._lock:
            raw = await self._round_trip(texts)
        if not raw:
            raise BackendFailure("embedding subprocess closed its output", texts)
        try:
            body = EmbedResponse.model_validate_json(raw)
        except ValidationError as e:
            raise BackendFailure(f"malformed response: {e.error_count()} errors", texts) from e
        if self._dim is not None and body.dim != self._dim:
            raise BackendFailure(f"dimension changed from {self._dim} to {body.dim}", texts)
        self._dim = body.dim
        return [EmbeddingVector.of(vector) for vector in body.vectors]

    async def aclose(self) -> None:
        process, self._process = self._process, None
        if process is None or process.returncode is not None:
            return
        if process.stdin is not None:
            process.stdin.close()
        try:
            await asyncio.wait_for(process.wait(), self.timeout)
        except asyncio.TimeoutError:
            process.kill()
            await process.wait()

"""
Unit tests for embedding backends.

The HTTP backend runs against an in-process httpx.MockTransport and the stdio
backend against a tiny echo service started with the current interpreter.
"""

import json
import shlex
import sys
from pathlib import Path

import httpx
import pytest

from patternrank.adapter.outbound.embedding.http_backend import HttpEmbeddingBackend
from patternrank.adapter.outbound.embedding.precomputed_backend import (
    PrecomputedEmbeddingBackend,
)
from patternrank.adapter.outbound.embedding.reference_backend import (
    ReferenceEmbeddingBackend,
    reference_embedder,
)
from patternrank.adapter.outbound.embedding.stdio_backend import StdioEmbeddingBackend
from patternrank.core.domain.ranker.models import EmbeddingVector
from patternrank.core.exceptions import (
    BackendFailure,
    ConfigError,
    CorpusIoError,
    MissingEmbedding,
)

ECHO_SERVICE = """
import json, sys
for line in sys.stdin:
    texts = json.loads(line)["texts"]
    vectors = [[float(len(t)), 1.0] for t in texts]
    print(json.dumps({"vectors": vectors, "dim": 2}), flush=True)
"""


NAN_SERVICE = """
import sys
for line in sys.stdin:
    print('{"vectors": [[NaN, 1.0]], "dim": 2}', flush=True)
"""

SLOW_SERVICE = """
import json, sys, time
for line in sys.stdin:
    texts = json.loads(line)["texts"]
    if texts == ["slow"]:
        time.sleep(6)
    vectors = [[float(len(t)), 1.0] for t in texts]
    print(json.dumps({"vectors": vectors, "dim": 2}), flush=True)
"""

def embed_handler(request: httpx.Request) -> httpx.Response:
    texts = json.loads(request.content)["texts"]
    return httpx.Response(200, json={"vectors": [[float(len(t)), 1.0] for t in texts], "dim": 2})


class TestHttpEmbeddingBackend:
    """Test cases for the HTTP backend."""

    @pytest.mark.asyncio
    async def test_embed_batch(self):
        seen: list[str] = []

        def handler(request: httpx.Request) -> httpx.Response:
            seen.append(str(request.url))
            return embed_handler(request)

        backend = HttpEmbeddingBackend("http://embedder/", transport=httpx.MockTransport(handler))

        vectors = await backend.embed_batch(["abc", "de"])
        await backend.aclose()

        assert seen == ["http://embedder/embed"]
        assert vectors == [EmbeddingVector.of([3.0, 1.0]), EmbeddingVector.of([2.0, 1.0])]
        assert backend.dim == 2

    @pytest.mark.asyncio
    async def test_error_status(self):
        backend = HttpEmbeddingBackend(
            "http://embedder", transport=httpx.MockTransport(lambda r: httpx.Response(503))
        )

        with pytest.raises(BackendFailure) as exc_info:
            await backend.embed_batch(["abc"])

        assert exc_info.value.batch == ["abc"]
        assert exc_info.value.exit_code == 3
        assert "503" in exc_info.value.cause

    @pytest.mark.asyncio
    @pytest.mark.parametrize(
        "body",
        [
            {"vectors": [[1.0]], "dim": 2},
            {"vectors": [[1.0, 2.0]]},
            {"dim": 0, "vectors": []},
        ],
    )
    async def test_malformed_response(self, body):
        backend = HttpEmbeddingBackend(
            "http://embedder", transport=httpx.MockTransport(lambda r: httpx.Response(200, json=body))
        )

        with pytest.raises(BackendFailure, match="malformed"):
            await backend.embed_batch(["abc"])

    @pytest.mark.asyncio
    @pytest.mark.parametrize("value", ["NaN", "Infinity", "-Infinity"])
    async def test_non_finite_vector(self, value):
        body = f'{{"vectors": [[{value}, 1.0]], "dim": 2}}'.encode()
        backend = HttpEmbeddingBackend(
            "http://embedder", transport=httpx.MockTransport(lambda r: httpx.Response(200, content=body))
        )

        with pytest.raises(BackendFailure) as exc_info:
            await backend.embed_batch(["abc"])

        assert exc_info.value.exit_code == 3
        assert exc_info.value.batch == ["abc"]

    @pytest.mark.asyncio
    async def test_transport_error(self):
        def handler(request: httpx.Request) -> httpx.Response:
            raise httpx.ConnectError("connection refused", request=request)

        backend = HttpEmbeddingBackend("http://embedder", transport=httpx.MockTransport(handler))

        with pytest.raises(BackendFailure, match="ConnectError"):
            await backend.embed_batch(["abc"])

    @pytest.mark.asyncio
    async def test_dimension_change_rejected(self):
        dims = iter([2, 3])

        def handler(request: httpx.Request) -> httpx.Response:
            dim = next(dims)
            return httpx.Response(200, json={"vectors": [[1.0] * dim], "dim": dim})

        backend = HttpEmbeddingBackend("http://embedder", transport=httpx.MockTransport(handler))
        await backend.embed_batch(["a"])

        with pytest.raises(BackendFailure, match="dimension changed"):
            await backend.embed_batch(["b"])


class TestStdioEmbeddingBackend:
    """Test cases for the subprocess backend."""

    @pytest.fixture
    def echo_command(self, tmp_path: Path) -> str:
        script = tmp_path / "echo_service.py"
        script.write_text(ECHO_SERVICE, encoding="utf-8")
        return shlex.join([sys.executable, str(script)])

    @pytest.mark.asyncio
    async def test_round_trips_keep_one_process(self, echo_command):
        backend = StdioEmbeddingBackend(echo_command, timeout=10.0)
        try:
            first = await backend.embed_batch(["abcd"])
            process = backend._process
            second = await backend.embed_batch(["a", "bb"])
        finally:
            await backend.aclose()

        assert first == [EmbeddingVector.of([4.0, 1.0])]
        assert second == [EmbeddingVector.of([1.0, 1.0]), EmbeddingVector.of([2.0, 1.0])]
        assert process is not None
        assert backend.dim == 2
        assert not backend.supports_concurrency

    @pytest.mark.asyncio
    async def test_missing_executable(self):
        backend = StdioEmbeddingBackend("/nonexistent/embedder --flag")

        with pytest.raises(BackendFailure, match="cannot start"):
            await backend.embed_batch(["abc"])

    @pytest.mark.asyncio
    async def test_process_without_output(self, tmp_path: Path):
        script = tmp_path / "silent.py"
        script.write_text("import sys\nsys.stdin.readline()\n", encoding="utf-8")
        backend = StdioEmbeddingBackend(shlex.join([sys.executable, str(script)]), timeout=10.0)
        try:
            with pytest.raises(BackendFailure, match="closed its output"):
                await backend.embed_batch(["abc"])
        finally:
            await backend.aclose()

    @pytest.mark.asyncio
    async def test_non_finite_vector(self, tmp_path: Path):
        script = tmp_path / "nan_service.py"
        script.write_text(NAN_SERVICE, encoding="utf-8")
        backend = StdioEmbeddingBackend(shlex.join([sys.executable, str(script)]), timeout=10.0)
        try:
            with pytest.raises(BackendFailure) as exc_info:
                await backend.embed_batch(["abc"])
        finally:
            await backend.aclose()

        assert exc_info.value.exit_code == 3

    @pytest.mark.asyncio
    async def test_timeout_replaces_process(self, tmp_path: Path):
        script = tmp_path / "slow_service.py"
        script.write_text(SLOW_SERVICE, encoding="utf-8")
        backend = StdioEmbeddingBackend(shlex.join([sys.executable, str(script)]), timeout=2.0)
        try:
            await backend.embed_batch(["a"])
            first = backend._process
            with pytest.raises(BackendFailure, match="no response"):
                await backend.embed_batch(["slow"])

            vectors = await backend.embed_batch(["abc"])
            second = backend._process
        finally:
            await backend.aclose()

        assert first is not None and first.returncode is not None
        assert second is not first
        # the reply for "slow" (length 4) must not leak into this batch
        assert vectors == [EmbeddingVector.of([3.0, 1.0])]

    def test_empty_command_rejected(self):
        with pytest.raises(ValueError):
            StdioEmbeddingBackend("   ")


class TestPrecomputedEmbeddingBackend:
    """Test cases for the precomputed embedding file."""

    def write_file(self, tmp_path: Path, payload: dict) -> Path:
        path = tmp_path / "embeddings.json"
        path.write_text(json.dumps(payload), encoding="utf-8")
        return path

    @pytest.mark.asyncio
    async def test_lookup(self, tmp_path: Path):
        path = self.write_file(
            tmp_path, {"version": 1, "dim": 2, "vectors": {"grid": [1, 0], "net": [0, 1]}}
        )
        backend = PrecomputedEmbeddingBackend.from_file(str(path))

        vectors = await backend.embed_batch(["net", "grid"])

        assert vectors == [EmbeddingVector.of([0, 1]), EmbeddingVector.of([1, 0])]
        assert len(backend) == 2
        assert backend.dim == 2

    @pytest.mark.asyncio
    async def test_missing_text(self, tmp_path: Path):
        path = self.write_file(tmp_path, {"version": 1, "dim": 1, "vectors": {"grid": [1]}})
        backend = PrecomputedEmbeddingBackend.from_file(str(path))

        with pytest.raises(MissingEmbedding) as exc_info:
            await backend.embed_batch(["grid", "cloud"])

        assert exc_info.value.text == "cloud"
        assert exc_info.value.exit_code == 3

    @pytest.mark.parametrize(
        "payload",
        [
            {"version": 2, "dim": 1, "vectors": {}},
            {"version": 1, "dim": 2, "vectors": {"grid": [1]}},
            {"version": 1, "dim": 1, "vectors": {"grid": [float("nan")]}},
            {"version": 1, "vectors": {}},
        ],
    )
    def test_invalid_file(self, tmp_path: Path, payload):
        path = self.write_file(tmp_path, payload)

        with pytest.raises(ConfigError):
            PrecomputedEmbeddingBackend.from_file(str(path))

    def test_unreadable_file(self, tmp_path: Path):
        with pytest.raises(CorpusIoError):
            PrecomputedEmbeddingBackend.from_file(str(tmp_path / "missing.json"))


class TestReferenceEmbeddingBackend:
    """Test cases for the offline reference backend."""

    @pytest.mark.asyncio
    async def test_batching_is_transparent(self, reference_backend):
        texts = [f"phrase number {i}" for i in range(100)]

        together = await reference_backend.embed_batch(texts)
        one_by_one = [(await reference_backend.embed_batch([t]))[0] for t in texts]

        assert together == one_by_one

    def test_factory(self):
        backend = reference_embedder(64, 3)

        assert isinstance(backend, ReferenceEmbeddingBackend)
        assert (backend.dim, backend.seed) == (64, 3)

    def test_dimension_floor(self):
        with pytest.raises(ConfigError):
            ReferenceEmbeddingBackend(dim=4)

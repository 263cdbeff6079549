"""HTTP/JSON service exposing analyses to the browser UI.

One POST runs the whole pipeline synchronously (bounded by a hard
timeout) and stores the immutable result under a fresh id; every GET is a
pure read.  GET responses are memoized as serialized bytes, so repeated
calls return byte-identical bodies.
"""

from __future__ import annotations

import json
import os
import threading
from concurrent.futures import ThreadPoolExecutor
from concurrent.futures import TimeoutError as FutureTimeout
from dataclasses import dataclass, field
from typing import Optional

from fastapi import FastAPI, Form, HTTPException, Response, UploadFile
from fastapi.middleware.cors import CORSMiddleware

from .ingest import IngestOptions, NoValidEdges, ParseReport, parse_edge_list, parse_metadata
from .metrics import NodeNotInCommunity
from .model import AnalysisError, AnalysisResult, EmptyNetwork, build_network
from .pipeline import (
    AnalysisConfig,
    ConfigError,
    community_payload,
    globalview_payload,
    matrix_payload,
    node_payload,
    run_pipeline,
    summary_payload,
)
from .sampling import parse_sampling_spec
from .slicing import InvalidSliceCount

DEFAULT_TIMEOUT = 120.0


@dataclass
class AnalysisStore:
    """Concurrent id -> result map with a per-analysis payload cache."""

    _lock: threading.Lock = field(default_factory=threading.Lock)
    _results: dict[str, AnalysisResult] = field(default_factory=dict)
    _cache: dict[tuple[str, str], bytes] = field(default_factory=dict)
    _counter: int = 0

    def insert(self, result: AnalysisResult) -> str:
        with self._lock:
            self._counter += 1
            analysis_id = f"a{self._counter}"
            self._results[analysis_id] = result
        return analysis_id

    def get(self, analysis_id: str) -> AnalysisResult:
        try:
            return self._results[analysis_id]
        except KeyError:
            raise HTTPException(status_code=404, detail="unknown analysis id")

    def cached(self, analysis_id: str, key: str, build) -> bytes:
        cache_key = (analysis_id, key)
        body = self._cache.get(cache_key)
        if body is None:
            body = json.dumps(build(), sort_keys=True).encode("utf-8")
            with self._lock:
                body = self._cache.setdefault(cache_key, body)
        return body


def _json_response(body: bytes) -> Response:
    return Response(content=body, media_type="application/json")


def create_app(
    timeout: float = DEFAULT_TIMEOUT, store: Optional[AnalysisStore] = None
) -> FastAPI:
    app = FastAPI(
        title="temponet",
        description=(
            "Temporal-network community analysis: timeslicing, per-slice "
            "Louvain communities, cross-slice evolution links, taxonomy "
            "matrices, and view geometry."
        ),
        version="1.0.0",
    )
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[os.environ.get("TEMPONET_UI_ORIGIN", "*")],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.store = store if store is not None else AnalysisStore()
    app.state.timeout = timeout
    app.state.executor = ThreadPoolExecutor(max_workers=4)

    @app.post("/api/network")
    async def post_network(
        edges: UploadFile,
        metadata: Optional[UploadFile] = None,
        slice_count: Optional[int] = Form(default=None),
        min_community_size: int = Form(default=3),
        sampling: str = Form(default="none"),
        seed: int = Form(default=0),
        tau: float = Form(default=0.5),
        node_threshold: int = Form(default=200),
    ):
        report = ParseReport()
        try:
            parsed = parse_edge_list(await edges.read(), IngestOptions(), report)
            meta = None
            if metadata is not None:
                meta = parse_metadata(await metadata.read(), report)
            net = build_network(parsed, meta)
        except (NoValidEdges, EmptyNetwork) as exc:
            raise HTTPException(
                status_code=400,
                detail={
                    "message": str(exc),
                    "bad_lines": [n for n, _ in report.bad_lines[:10]],
                },
            )

        try:
            spec = parse_sampling_spec(sampling, seed)
            config = AnalysisConfig(
                slice_count=slice_count if slice_count is not None else 1,
                min_community_size=min_community_size,
                sampling=spec,
                seed=seed,
                tau=tau,
                node_threshold=node_threshold,
            )
        except (ValueError, ConfigError) as exc:
            raise HTTPException(status_code=422, detail=str(exc))

        progress: dict = {}
        future = app.state.executor.submit(
            _run, net, config, slice_count is None, progress
        )
        try:
            result = future.result(timeout=app.state.timeout)
        except FutureTimeout:
            raise HTTPException(
                status_code=503,
                detail={
                    "message": f"analysis exceeded {app.state.timeout:.0f}s",
                    "progress": progress.get("stage", "starting"),
                },
            )
        except (InvalidSliceCount, AnalysisError) as exc:
            raise HTTPException(status_code=422, detail=str(exc))

        analysis_id = app.state.store.insert(result)
        return {"id": analysis_id, **summary_payload(result)}

    @app.get("/api/{analysis_id}/matrix")
    def get_matrix(analysis_id: str, x: str, y: str):
        result = app.state.store.get(analysis_id)
        try:
            body = app.state.store.cached(
                analysis_id,
                f"matrix:{x.lower()}:{y.lower()}",
                lambda: matrix_payload(result, x, y),
            )
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return _json_response(body)

    @app.get("/api/{analysis_id}/summary")
    def get_summary(analysis_id: str):
        result = app.state.store.get(analysis_id)
        body = app.state.store.cached(
            analysis_id, "summary", lambda: summary_payload(result)
        )
        return _json_response(body)

    @app.get("/api/{analysis_id}/globalview")
    def get_globalview(analysis_id: str):
        result = app.state.store.get(analysis_id)
        body = app.state.store.cached(
            analysis_id, "globalview", lambda: globalview_payload(result)
        )
        return _json_response(body)

    @app.get("/api/{analysis_id}/community/{slice_index}/{local_id}")
    def get_community(analysis_id: str, slice_index: int, local_id: int):
        result = app.state.store.get(analysis_id)
        try:
            body = app.state.store.cached(
                analysis_id,
                f"community:{slice_index}:{local_id}",
                lambda: community_payload(result, slice_index, local_id),
            )
        except (KeyError, IndexError):
            raise HTTPException(status_code=404, detail="unknown community")
        return _json_response(body)

    @app.get("/api/{analysis_id}/node/{slice_index}/{local_id}/{node}")
    def get_node(analysis_id: str, slice_index: int, local_id: int, node: str):
        result = app.state.store.get(analysis_id)
        try:
            body = app.state.store.cached(
                analysis_id,
                f"node:{slice_index}:{local_id}:{node}",
                lambda: node_payload(result, slice_index, local_id, node),
            )
        except (KeyError, IndexError, NodeNotInCommunity):
            raise HTTPException(status_code=404, detail="unknown community or node")
        return _json_response(body)

    return app


def _run(net, config: AnalysisConfig, auto_slices: bool, progress: dict):
    if auto_slices:
        from .sampling import SamplingMethod, apply_sampling
        from .slicing import suggest_slice_counts

        sampled = net
        if config.sampling.method is not SamplingMethod.NONE:
            sampled = apply_sampling(net, config.sampling)
        suggested = suggest_slice_counts(sampled).default_count
        config = AnalysisConfig(
            slice_count=suggested,
            min_community_size=config.min_community_size,
            sampling=config.sampling,
            seed=config.seed,
            tau=config.tau,
            node_threshold=config.node_threshold,
            layout_iterations=config.layout_iterations,
        )
    return run_pipeline(net, config, progress=progress)


def serve_preloaded(
    result: AnalysisResult, port: int = 8000, host: str = "127.0.0.1"
) -> None:
    """Start the server with one analysis already in the store (id "a1")."""
    import uvicorn

    store = AnalysisStore()
    store.insert(result)
    app = create_app(store=store)
    uvicorn.run(app, host=host, port=port)


def main() -> None:
    import uvicorn

    port = int(os.environ.get("TEMPONET_PORT", "8000"))
    uvicorn.run(create_app(), host="127.0.0.1", port=port)


app = create_app()

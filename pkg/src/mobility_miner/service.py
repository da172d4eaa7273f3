"""HTTP/JSON surface over a DatasetStore.

Endpoints: GET /users, GET /users/{id}/graph, GET /users/{id}/patterns,
GET /users/{id}/stats, POST /upload. Every response carries the snapshot
version it was computed from in the X-Snapshot-Version header; errors are
{"error": code, "message": text}.
"""

from __future__ import annotations

import os

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .ingest import INPUT_ENCODING
from .miner import ConfigError, MiningConfig, patterns_to_dicts
from .store import DatasetStore, UnknownUserError, UploadRejectedError

DEFAULT_MAX_UPLOAD_BYTES = 10 * 1024 * 1024

VERSION_HEADER = "X-Snapshot-Version"


def _ok(payload, version: int) -> JSONResponse:
    return JSONResponse(payload, headers={VERSION_HEADER: str(version)})


def _error(status: int, code: str, message: str, version: int | None = None) -> JSONResponse:
    headers = {VERSION_HEADER: str(version)} if version is not None else {}
    return JSONResponse({"error": code, "message": message},
                        status_code=status, headers=headers)


def _parse_support(raw: str) -> int | float:
    """Query-string min_support: '3' is absolute, '0.5' is a fraction."""
    try:
        if any(ch in raw for ch in ".eE"):
            return float(raw)
        return int(raw)
    except ValueError:
        raise ConfigError(f"min_support is not a number: {raw!r}")


def _parse_optional_int(raw: str | None, name: str) -> int | None:
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{name} is not an integer: {raw!r}")


def create_app(store: DatasetStore,
               max_upload_bytes: int = DEFAULT_MAX_UPLOAD_BYTES,
               frontend_dir: str | os.PathLike | None = None) -> FastAPI:
    app = FastAPI(title="mobility-miner", version="0.1.0")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/users")
    def list_users():
        snap = store.snapshot
        return _ok(store.list_users(snap), snap.version)

    @app.get("/users/{user_id}/graph")
    def get_graph(user_id: str):
        snap = store.snapshot
        try:
            graph = store.get_graph(user_id, snap)
        except UnknownUserError:
            return _error(404, "unknown_user", f"no such user: {user_id}", snap.version)
        return _ok(graph.to_dict(), snap.version)

    @app.get("/users/{user_id}/patterns")
    def get_patterns(user_id: str, request: Request):
        snap = store.snapshot
        params = request.query_params
        raw_support = params.get("min_support")
        if raw_support is None:
            return _error(400, "config_error", "min_support is required", snap.version)
        try:
            max_len = _parse_optional_int(params.get("max_len"), "max_len")
            config = MiningConfig(
                min_support=_parse_support(raw_support),
                max_pattern_length=10 if max_len is None else max_len,
                max_gap=_parse_optional_int(params.get("max_gap"), "max_gap"),
            )
            patterns = store.get_patterns(user_id, config, snap)
        except ConfigError as exc:
            return _error(400, "config_error", str(exc), snap.version)
        except UnknownUserError:
            return _error(404, "unknown_user", f"no such user: {user_id}", snap.version)
        return _ok(patterns_to_dicts(patterns), snap.version)

    @app.get("/users/{user_id}/stats")
    def get_stats(user_id: str):
        snap = store.snapshot
        try:
            stats = store.get_stats(user_id, snap)
        except UnknownUserError:
            return _error(404, "unknown_user", f"no such user: {user_id}", snap.version)
        return _ok(stats, snap.version)

    @app.post("/upload")
    async def upload(request: Request):
        body = await request.body()
        if len(body) > max_upload_bytes:
            return _error(413, "too_large",
                          f"upload exceeds {max_upload_bytes} bytes")
        text = body.decode(INPUT_ENCODING, errors="replace")
        try:
            report, version = store.upload(text)
        except UploadRejectedError as exc:
            return _error(400, "empty_upload", str(exc), store.snapshot.version)
        return _ok(report.to_dict(), version)

    if frontend_dir is not None:
        app.mount("/", StaticFiles(directory=os.fspath(frontend_dir), html=True),
                  name="frontend")

    return app

"""HTTP service: load a model once, evaluate what-ifs against the snapshot.

The service is a compute head over an immutable model snapshot. Loading a
new model swaps the snapshot atomically and bumps the revision; evaluate
and tornado requests never mutate anything, so concurrent readers always
see one consistent revision.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping, Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse

from . import formats
from .errors import (
    ArgusError,
    DocumentSyntaxError,
    EvaluationError,
    ModelValidationError,
    SchemaError,
    UnknownTargetError,
    UnknownVariableError,
)
from .model import ArgumentModel
from .network import ConfidenceNetwork, transform
from .propagation import Assessment, Overrides, propagate
from .sensitivity import resolve_variable, tornado


@dataclass(frozen=True)
class Snapshot:
    """One loaded model with everything derived from it."""

    revision: int
    document: dict
    model: ArgumentModel
    network: ConfidenceNetwork
    baseline: Assessment


class Session:
    """Holds the current snapshot; replacement is atomic."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._snapshot: Optional[Snapshot] = None
        self._revision = 0

    @property
    def snapshot(self) -> Optional[Snapshot]:
        return self._snapshot

    def load(self, document: dict) -> Snapshot:
        model = formats.model_from_tree(document)
        network = transform(model)
        baseline = Assessment(values=dict(model.leaf_confidences))
        with self._lock:
            self._revision += 1
            snapshot = Snapshot(
                revision=self._revision,
                document=formats.model_to_tree(model),
                model=model,
                network=network,
                baseline=baseline,
            )
            self._snapshot = snapshot
        return snapshot


class _NoModel(ArgusError):
    def __init__(self) -> None:
        super().__init__("no model is loaded; PUT /api/model first")


def _error_response(status: int, code: str, message: str, **extra: Any) -> JSONResponse:
    body: dict[str, Any] = {"code": code, "message": message}
    body.update(extra)
    return JSONResponse(status_code=status, content=body)


def _domain_error(exc: ArgusError) -> JSONResponse:
    if isinstance(exc, _NoModel):
        return _error_response(404, "NoModel", str(exc))
    if isinstance(exc, ModelValidationError):
        return _error_response(
            422,
            "InvalidModel",
            "model validation failed",
            violations=[
                {"code": v.code.value, "path": v.path, "message": v.message} for v in exc.violations
            ],
        )
    if isinstance(exc, SchemaError):
        return _error_response(
            422,
            "SchemaError",
            "document does not match the schema",
            errors=[{"path": path, "message": message} for path, message in exc.errors],
        )
    if isinstance(exc, DocumentSyntaxError):
        return _error_response(422, "SyntaxError", str(exc))
    if isinstance(exc, UnknownTargetError):
        return _error_response(422, "UnknownTarget", str(exc))
    if isinstance(exc, UnknownVariableError):
        return _error_response(422, "UnknownVariable", str(exc))
    if isinstance(exc, EvaluationError):
        return _error_response(422, type(exc).__name__.removesuffix("Error"), str(exc))
    return _error_response(500, "InternalError", str(exc))


async def _json_body(request: Request) -> Any:
    if not await request.body():
        return {}
    try:
        return await request.json()
    except ValueError as exc:
        raise DocumentSyntaxError(f"request body is not valid JSON: {exc}") from exc


def create_app(
    document: Optional[dict] = None,
    cors_origin: Optional[str] = None,
    ui_dir: Optional[Path] = None,
) -> FastAPI:
    """Build the service. ``document`` preloads a model tree if given."""
    app = FastAPI(title="argus", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[cors_origin] if cors_origin else ["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    session = Session()
    app.state.session = session
    if document is not None:
        session.load(document)

    @app.exception_handler(ArgusError)
    async def handle_argus_error(_request: Request, exc: ArgusError) -> JSONResponse:
        return _domain_error(exc)

    @app.exception_handler(RequestValidationError)
    async def handle_validation_error(_request: Request, exc: RequestValidationError) -> JSONResponse:
        return _error_response(422, "SchemaError", str(exc))

    @app.exception_handler(Exception)
    async def handle_unexpected(_request: Request, exc: Exception) -> JSONResponse:
        return _error_response(500, "InternalError", f"{type(exc).__name__}: {exc}")

    def current() -> Snapshot:
        snapshot = session.snapshot
        if snapshot is None:
            raise _NoModel()
        return snapshot

    @app.get("/api/model")
    async def get_model() -> JSONResponse:
        snapshot = current()
        return JSONResponse({"revision": snapshot.revision, "model": snapshot.document})

    @app.put("/api/model")
    async def put_model(request: Request) -> JSONResponse:
        body = await _json_body(request)
        snapshot = session.load(body)
        return JSONResponse({"revision": snapshot.revision})

    @app.get("/api/network")
    async def get_network(format: Optional[str] = None):
        snapshot = current()
        if format == "dot":
            return PlainTextResponse(
                formats.export_dot(snapshot.network),
                media_type="text/vnd.graphviz",
                headers={"X-Argus-Revision": str(snapshot.revision)},
            )
        return JSONResponse(
            {"revision": snapshot.revision, "network": formats.network_to_tree(snapshot.network)}
        )

    @app.post("/api/evaluate")
    async def evaluate(request: Request) -> JSONResponse:
        snapshot = current()
        body = await _json_body(request)
        overrides = _parse_overrides(snapshot.network, body)
        result = propagate(snapshot.network, snapshot.baseline, overrides)
        tree = formats.result_to_tree(result)
        return JSONResponse({"revision": snapshot.revision, **tree})

    @app.post("/api/tornado")
    async def run_tornado(request: Request) -> JSONResponse:
        snapshot = current()
        body = await _json_body(request)
        if not isinstance(body, Mapping) or not isinstance(body.get("target"), str):
            raise SchemaError([("target", "required string")])
        top = body.get("top")
        if top is not None and (isinstance(top, bool) or not isinstance(top, int) or top < 0):
            raise SchemaError([("top", "must be a non-negative integer")])
        keys = body.get("variables")
        selected = None
        if keys is not None:
            if not isinstance(keys, list) or not all(isinstance(k, str) for k in keys):
                raise SchemaError([("variables", "must be a list of variable keys")])
            selected = [resolve_variable(snapshot.network, key) for key in keys]
        report = tornado(snapshot.network, snapshot.baseline, body["target"], selected)
        return JSONResponse(
            {"revision": snapshot.revision, "tornado": formats.tornado_to_tree(report, top=top)}
        )

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


def _parse_overrides(network: ConfidenceNetwork, body: Any) -> Overrides:
    if not isinstance(body, Mapping):
        raise SchemaError([("", "request body must be a JSON object")])
    for key in body:
        if key != "overrides":
            raise SchemaError([(str(key), "unknown key")])
    flat = body.get("overrides", {})
    if not isinstance(flat, Mapping):
        raise SchemaError([("overrides", "must be a mapping of variable keys to numbers")])
    cleaned: dict[str, float] = {}
    for key, value in flat.items():
        if not isinstance(key, str):
            raise SchemaError([("overrides", f"keys must be strings, got {key!r}")])
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise SchemaError([(f"overrides.{key}", f"must be a number, got {value!r}")])
        cleaned[key] = float(value)
    return Overrides.from_flat(cleaned)

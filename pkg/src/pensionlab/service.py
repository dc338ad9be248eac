"""JSON HTTP facade over the engine.

Versioned under /api/v1.  Projection and sweep endpoints are stateless
and safe to retry; the scenario endpoints persist through a
:class:`~pensionlab.store.ScenarioStore`.  Validation failures return
400 with field-level messages, engine-domain failures 422.  Money goes
over the wire as integer paise, rates as decimal strings — the payloads
must never pass through floating point.

Configuration: ``PENSIONLAB_ADDR`` (default 127.0.0.1:8080) and
``PENSIONLAB_DATA`` (scenario file, default ./scenarios.jsonl).
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from ._version import ENGINE_VERSION
from .benefits import Overrides, parse_scheme, project
from .errors import DomainError, ValidationError
from .jsonutil import expect_mapping, expect_str
from .salary import EmployeeProfile
from .store import ScenarioStore, StaleUpdateError, UnknownScenarioError
from .sweeps import SweepSpec, run_sweep, table_to_csv

DEFAULT_ADDR = "127.0.0.1:8080"
DEFAULT_DATA_PATH = "scenarios.jsonl"


def _validation_response(exc: ValidationError) -> JSONResponse:
    return JSONResponse(
        status_code=400, content={"errors": [e.as_dict() for e in exc.errors]}
    )


async def _read_json_body(request: Request):
    raw = await request.body()
    if not raw:
        raise ValidationError.single("body", "request body must be a JSON object")
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ValidationError.single("body", f"invalid JSON: {exc.msg}") from exc


def create_app(data_path: str | Path | None = None) -> FastAPI:
    """Build the service; separate instances share nothing but the file."""
    if data_path is None:
        data_path = os.environ.get("PENSIONLAB_DATA", DEFAULT_DATA_PATH)
    store = ScenarioStore(data_path)

    app = FastAPI(title="pensionlab", version=ENGINE_VERSION)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    app.state.store = store

    @app.exception_handler(ValidationError)
    async def handle_validation(_, exc: ValidationError):
        return _validation_response(exc)

    @app.exception_handler(DomainError)
    async def handle_domain(_, exc: DomainError):
        return JSONResponse(status_code=422, content={"error": str(exc)})

    @app.exception_handler(UnknownScenarioError)
    async def handle_unknown(_, exc: UnknownScenarioError):
        return JSONResponse(status_code=404, content={"error": f"unknown scenario {exc}"})

    @app.exception_handler(StaleUpdateError)
    async def handle_stale(_, exc: StaleUpdateError):
        return JSONResponse(status_code=409, content={"error": str(exc)})

    @app.get("/api/v1/health")
    async def health():
        return {"status": "ok", "version": ENGINE_VERSION}

    @app.post("/api/v1/project")
    async def project_endpoint(request: Request):
        body = await _read_json_body(request)
        data = expect_mapping(body, {"profile", "scheme"}, optional={"overrides"}, field="body")
        profile = EmployeeProfile.from_json(data["profile"], field="body.profile")
        scheme = parse_scheme(
            expect_str(data["scheme"], field="body.scheme"), field="body.scheme"
        )
        overrides = Overrides.from_json(data.get("overrides", {}), field="body.overrides")
        return project(profile, scheme, overrides).to_json()

    @app.post("/api/v1/sweep")
    async def sweep_endpoint(request: Request, format: str = "json"):
        body = await _read_json_body(request)
        table = run_sweep(SweepSpec.from_json(body, field="body"))
        if format == "csv":
            return Response(content=table_to_csv(table), media_type="text/csv; charset=utf-8")
        if format != "json":
            raise ValidationError.single("format", "expected 'json' or 'csv'")
        return table.to_json()

    @app.post("/api/v1/scenarios", status_code=201)
    async def create_scenario(request: Request):
        body = await _read_json_body(request)
        data = expect_mapping(body, {"name", "profile"}, optional={"overrides"}, field="body")
        profile = EmployeeProfile.from_json(data["profile"], field="body.profile")
        overrides = Overrides.from_json(data.get("overrides", {}), field="body.overrides")
        return store.create(data["name"], profile, overrides).to_json()

    @app.get("/api/v1/scenarios")
    async def list_scenarios():
        return {"scenarios": [record.to_json() for record in store.list()]}

    @app.get("/api/v1/scenarios/{scenario_id}")
    async def get_scenario(scenario_id: str):
        return store.get(scenario_id).to_json()

    @app.put("/api/v1/scenarios/{scenario_id}")
    async def update_scenario(scenario_id: str, request: Request):
        body = await _read_json_body(request)
        data = expect_mapping(
            body,
            {"expected_updated_at"},
            optional={"name", "profile", "overrides"},
            field="body",
        )
        expected = expect_str(data["expected_updated_at"], field="body.expected_updated_at")
        profile = (
            EmployeeProfile.from_json(data["profile"], field="body.profile")
            if "profile" in data
            else None
        )
        overrides = (
            Overrides.from_json(data["overrides"], field="body.overrides")
            if "overrides" in data
            else None
        )
        return store.update(
            scenario_id,
            expected,
            name=data.get("name"),
            profile=profile,
            overrides=overrides,
        ).to_json()

    @app.delete("/api/v1/scenarios/{scenario_id}", status_code=204)
    async def delete_scenario(scenario_id: str):
        store.delete(scenario_id)
        return Response(status_code=204)

    return app


def parse_addr(addr: str) -> tuple[str, int]:
    host, _, port = addr.rpartition(":")
    if not host or not port.isdigit():
        raise ValueError(f"expected HOST:PORT, got {addr!r}")
    return host, int(port)


def run(addr: str | None = None, data_path: str | Path | None = None) -> None:
    """Serve with uvicorn; blocking."""
    import uvicorn

    host, port = parse_addr(addr or os.environ.get("PENSIONLAB_ADDR", DEFAULT_ADDR))
    uvicorn.run(create_app(data_path), host=host, port=port, log_level="info")

"""JSON HTTP service over the toolkit.

Sessions hold an exchange matrix plus its mutation history; analyses are
computed in a worker pool and cached by the canonical key of the diagram, so
revisiting a shape never recomputes group orders.  Responses always include
the canonical key.  Analyses that take longer than the patience window
return 202 with a poll URL.
"""

from __future__ import annotations

import hashlib
import threading
import uuid
from concurrent.futures import Future, ThreadPoolExecutor
from dataclasses import dataclass, field

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse, PlainTextResponse

from .canonical import canonical_form
from .exchange import ExchangeMatrix, InvalidMatrixError, diagram_view, mutate
from .manifold import manifold_invariants, report_to_dict
from .mutation_class import FiniteType, classify_mutation_type
from .presentation import build_presentation, emit_presentation

PATIENCE_SECONDS = 2.0


def _canonical_key(m: ExchangeMatrix) -> str:
    return hashlib.sha256(canonical_form(diagram_view(m))).hexdigest()


@dataclass
class Session:
    id: str
    root: ExchangeMatrix
    history: list[int] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def matrix(self) -> ExchangeMatrix:
        m = self.root
        for k in self.history:
            m = mutate(m, k)
        return m


def _diagram_payload(m: ExchangeMatrix) -> dict:
    g = diagram_view(m)
    return {"n": g.n, "edges": sorted([i, j, w] for i, j, w in g.edges)}


def _state_payload(s: Session) -> dict:
    m = s.matrix
    payload = {"id": s.id, "matrix": {"n": m.n, "b": [list(r) for r in m.b]}}
    if any(x != 1 for x in m.d):
        payload["matrix"]["d"] = list(m.d)
    payload["diagram"] = _diagram_payload(m)
    payload["history"] = list(s.history)
    payload["canonical_key"] = _canonical_key(m)
    return payload


def _compute_analysis(m: ExchangeMatrix) -> dict:
    t = classify_mutation_type(m)
    if not isinstance(t, FiniteType):
        kind = type(t).__name__
        return {
            "error": "analysis unavailable",
            "reason": f"mutation type {kind} has no finite Weyl model",
            "mutation_type": kind,
        }
    report = manifold_invariants(m)
    payload = report_to_dict(report)
    payload["mutation_type"] = "FiniteType"
    payload["canonical_key"] = _canonical_key(m)
    return payload


def create_app() -> FastAPI:
    app = FastAPI(title="coxmut service")
    sessions: dict[str, Session] = {}
    analyses: dict[str, Future] = {}
    analyses_lock = threading.Lock()
    executor = ThreadPoolExecutor(max_workers=2)

    def _analysis_future(m: ExchangeMatrix) -> tuple[str, Future]:
        key = _canonical_key(m)
        with analyses_lock:
            fut = analyses.get(key)
            if fut is None:
                fut = executor.submit(_compute_analysis, m)
                analyses[key] = fut
        return key, fut

    @app.post("/api/sessions")
    async def create_session(request: Request):
        body = await request.body()
        try:
            m = ExchangeMatrix.from_json(body.decode())
        except (InvalidMatrixError, UnicodeDecodeError) as exc:
            return JSONResponse({"error": str(exc)}, status_code=400)
        sid = uuid.uuid4().hex
        sessions[sid] = Session(sid, m)
        return _state_payload(sessions[sid])

    def _session(sid: str) -> Session | None:
        return sessions.get(sid)

    @app.get("/api/sessions/{sid}")
    async def get_session(sid: str):
        s = _session(sid)
        if s is None:
            return JSONResponse({"error": "unknown session"}, status_code=404)
        return _state_payload(s)

    @app.post("/api/sessions/{sid}/mutate")
    async def do_mutate(sid: str, request: Request):
        s = _session(sid)
        if s is None:
            return JSONResponse({"error": "unknown session"}, status_code=404)
        try:
            body = await request.json()
            k = body["k"]
        except Exception:
            return JSONResponse({"error": "body must be a JSON object with an integer 'k'"}, status_code=400)
        if not isinstance(k, int) or not 0 <= k < s.root.n:
            return JSONResponse({"error": f"vertex {k} out of range"}, status_code=409)
        with s.lock:
            s.history.append(k)
            return _state_payload(s)

    @app.post("/api/sessions/{sid}/undo")
    async def do_undo(sid: str):
        s = _session(sid)
        if s is None:
            return JSONResponse({"error": "unknown session"}, status_code=404)
        with s.lock:
            if not s.history:
                return JSONResponse({"error": "nothing to undo"}, status_code=409)
            s.history.pop()
            return _state_payload(s)

    @app.get("/api/sessions/{sid}/presentation")
    async def get_presentation(sid: str):
        s = _session(sid)
        if s is None:
            return JSONResponse({"error": "unknown session"}, status_code=404)
        m = s.matrix
        try:
            pres = build_presentation(diagram_view(m))
        except ValueError as exc:
            return JSONResponse({"error": "presentation unavailable", "reason": str(exc)}, status_code=422)
        headers = {"X-Canonical-Key": _canonical_key(m)}
        return PlainTextResponse(emit_presentation(pres), headers=headers)

    @app.get("/api/sessions/{sid}/analysis")
    async def get_analysis(sid: str, response: Response):
        s = _session(sid)
        if s is None:
            return JSONResponse({"error": "unknown session"}, status_code=404)
        m = s.matrix
        key, fut = _analysis_future(m)
        try:
            payload = fut.result(timeout=PATIENCE_SECONDS)
        except TimeoutError:
            return JSONResponse(
                {"status": "pending", "poll": f"/api/analyses/{key}", "canonical_key": key},
                status_code=202,
            )
        if "error" in payload:
            return JSONResponse({**payload, "canonical_key": key}, status_code=422)
        return payload

    @app.get("/api/analyses/{key}")
    async def poll_analysis(key: str):
        with analyses_lock:
            fut = analyses.get(key)
        if fut is None:
            return JSONResponse({"error": "unknown analysis"}, status_code=404)
        if not fut.done():
            return JSONResponse(
                {"status": "pending", "poll": f"/api/analyses/{key}", "canonical_key": key},
                status_code=202,
            )
        payload = fut.result()
        if "error" in payload:
            return JSONResponse({**payload, "canonical_key": key}, status_code=422)
        return payload

    return app

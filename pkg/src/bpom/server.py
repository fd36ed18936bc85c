"""HTTP JSON stepping service over StepSession.

Sessions live in process memory and expire after an idle TTL. Every response
body is produced by StepSession.payload(), so the wire behaviour is the
library behaviour by construction.
"""

from __future__ import annotations

import os
import threading
import time
from dataclasses import dataclass, field
from typing import Optional

from fastapi import Body, FastAPI, HTTPException, Response
from fastapi.middleware.cors import CORSMiddleware

from .encode import LoopsUnsupported
from .chor import IllFormed
from .parser import ParseError, parse
from .session import NotEnabled, StepSession

DEFAULT_TTL_SECS = 3600.0


@dataclass
class _Entry:
    session: StepSession
    lock: threading.Lock = field(default_factory=threading.Lock)
    last_access: float = field(default_factory=time.monotonic)


class _Store:
    """Session map with per-session locks and lazy idle expiry."""

    def __init__(self, ttl_secs: float):
        self.ttl_secs = ttl_secs
        self._entries: dict[str, _Entry] = {}
        self._lock = threading.Lock()

    def _sweep(self, now: float) -> None:
        dead = [sid for sid, entry in self._entries.items()
                if now - entry.last_access > self.ttl_secs]
        for sid in dead:
            del self._entries[sid]

    def put(self, session: StepSession) -> None:
        with self._lock:
            self._sweep(time.monotonic())
            self._entries[session.id] = _Entry(session)

    def entry(self, sid: str) -> _Entry:
        with self._lock:
            now = time.monotonic()
            self._sweep(now)
            entry = self._entries.get(sid)
            if entry is None:
                raise HTTPException(404, f"unknown session {sid}")
            entry.last_access = now
            return entry

    def drop(self, sid: str) -> bool:
        with self._lock:
            return self._entries.pop(sid, None) is not None


def _ttl_from_env() -> float:
    raw = os.environ.get("BPOM_SESSION_TTL_SECS")
    if raw is None:
        return DEFAULT_TTL_SECS
    try:
        return float(raw)
    except ValueError:
        raise RuntimeError(f"BPOM_SESSION_TTL_SECS must be a number, got {raw!r}")


def create_app(ttl_secs: Optional[float] = None) -> FastAPI:
    app = FastAPI(title="bpom stepping service")
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])
    store = _Store(_ttl_from_env() if ttl_secs is None else ttl_secs)
    app.state.store = store

    @app.post("/session", status_code=201)
    def create_session(body: dict = Body(...)):
        text = body.get("text")
        if not isinstance(text, str):
            raise HTTPException(400, "body needs a string field 'text'")
        unfold = body.get("unfold", 0)
        if not isinstance(unfold, int) or isinstance(unfold, bool) or unfold < 0:
            raise HTTPException(400, "'unfold' must be a non-negative integer")
        try:
            term = parse(text)
            session = StepSession.create(term, unfold_depth=unfold)
        except (ParseError, IllFormed, LoopsUnsupported) as exc:
            raise HTTPException(400, str(exc))
        store.put(session)
        return session.payload()

    @app.get("/session/{sid}/state")
    def get_state(sid: str):
        entry = store.entry(sid)
        with entry.lock:
            return entry.session.payload()

    @app.post("/session/{sid}/fire")
    def fire(sid: str, body: dict = Body(...)):
        event = body.get("event")
        if not isinstance(event, int) or isinstance(event, bool):
            raise HTTPException(400, "body needs an integer field 'event'")
        entry = store.entry(sid)
        with entry.lock:
            try:
                entry.session.fire(event)
            except NotEnabled as exc:
                raise HTTPException(409, str(exc))
            return entry.session.payload()

    @app.post("/session/{sid}/reset")
    def reset(sid: str):
        entry = store.entry(sid)
        with entry.lock:
            entry.session.reset()
            return entry.session.payload()

    @app.delete("/session/{sid}", status_code=204)
    def delete(sid: str):
        if not store.drop(sid):
            raise HTTPException(404, f"unknown session {sid}")
        return Response(status_code=204)

    return app


def run(host: str = "127.0.0.1", port: Optional[int] = None) -> None:
    import uvicorn
    if port is None:
        port = int(os.environ.get("BPOM_PORT", "8000"))
    uvicorn.run(create_app(), host=host, port=port)

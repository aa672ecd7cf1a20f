"""HTTP front end for exploration sessions (JSON over plain HTTP).

Sessions live in memory; an explicit snapshot file may be loaded at
startup but nothing is persisted implicitly.  State counts travel as
decimal strings so arbitrary-precision values survive JSON.
"""

from __future__ import annotations

import threading
import uuid

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from .basetools import BaseFamily
from .errors import KspaceError
from .explore import ExplorationSession, StaleQueryError, snapshot_text
from .model import Domain, ItemSet


class CreateSession(BaseModel):
    domain: list[str]
    mode: str = "human"
    hidden_base: list[list[str]] | None = None
    a_max: int | None = None


class QueryAnswer(BaseModel):
    premise: list[str]
    item: str
    accept: bool


class QueryRef(BaseModel):
    premise: list[str]
    item: str


def create_app(preloaded: list[ExplorationSession] | None = None) -> FastAPI:
    app = FastAPI(title="kspace exploration service")
    sessions: dict[str, ExplorationSession] = {}
    locks: dict[str, threading.Lock] = {}
    for s in preloaded or []:
        sessions[s.session_id] = s
        locks[s.session_id] = threading.Lock()

    def get_session(session_id: str) -> ExplorationSession:
        if session_id not in sessions:
            raise HTTPException(status_code=404, detail="unknown session")
        return sessions[session_id]

    def parse_query(session, body):
        try:
            a = ItemSet.from_labels(session.domain, body.premise)
            q = session.domain.index(body.item)
        except KspaceError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return a, q

    @app.post("/sessions")
    def create(body: CreateSession):
        try:
            domain = Domain(tuple(body.domain))
            hidden = None
            if body.hidden_base is not None:
                hidden = BaseFamily(
                    domain,
                    tuple(ItemSet.from_labels(domain, s) for s in body.hidden_base),
                )
            session = ExplorationSession(
                session_id=uuid.uuid4().hex,
                domain=domain,
                mode=body.mode,
                hidden_base=hidden,
                a_max=body.a_max,
            )
        except (KspaceError, ValueError) as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        sessions[session.session_id] = session
        locks[session.session_id] = threading.Lock()
        return {"id": session.session_id}

    @app.get("/sessions/{session_id}/next")
    def next_query(session_id: str):
        session = get_session(session_id)
        with locks[session_id]:
            nq = session.next_query()
            if nq is None:
                return {"exhausted": True, "stats": session.stats()}
            a, q = nq
            return {
                "query": {"premise": list(a.labels()), "item": session.domain.label(q)},
                "stats": session.stats(),
            }

    @app.post("/sessions/{session_id}/answer")
    def answer(session_id: str, body: QueryAnswer):
        session = get_session(session_id)
        a, q = parse_query(session, body)
        with locks[session_id]:
            try:
                stats = session.apply_answer(a, q, body.accept)
            except StaleQueryError as exc:
                raise HTTPException(status_code=409, detail=str(exc))
        return {"stats": stats}

    @app.post("/sessions/{session_id}/whatif")
    def whatif(session_id: str, body: QueryRef):
        session = get_session(session_id)
        a, q = parse_query(session, body)
        with locks[session_id]:
            try:
                count = session.whatif(a, q)
            except KspaceError as exc:
                raise HTTPException(status_code=422, detail=str(exc))
        return {"states_if_accept": str(count)}

    @app.get("/sessions/{session_id}/state")
    def state(session_id: str):
        session = get_session(session_id)
        with locks[session_id]:
            return {
                "id": session.session_id,
                "domain": list(session.domain.items),
                "mode": session.mode,
                "a_max": session.a_max,
                "status": session.status,
                "rows": [str(r) for r in session.rows.rows],
                "base": [list(s.labels()) for s in session.base.sets],
                "accepted": [
                    {"premise": list(d.premise.labels()), "item": d.conclusion.labels()[0]}
                    for d in session.accepted
                ],
                "rejected": [
                    {
                        "premise": list(ItemSet(session.domain, mask).labels()),
                        "item": session.domain.label(q),
                    }
                    for mask, q in session.rejected
                ],
                "stats": session.stats(),
                "snapshot": snapshot_text(session),
            }

    @app.delete("/sessions/{session_id}")
    def finish(session_id: str):
        session = get_session(session_id)
        session.status = "finished"
        del sessions[session_id]
        del locks[session_id]
        return {"finished": True}

    return app

"""Local JSON service: sessions over disk seeds with mutation history,
pinned elements re-expressed in the current chart, and the relation suite.

Sessions are in memory; a session's state is a pure function of its base
seed and history, so replaying the history reproduces every payload
byte-identically.
"""

from __future__ import annotations

import secrets
import threading

from fastapi import Body, FastAPI, HTTPException

from .builders import build_disk_seed, build_triangle
from .errors import FrozenMutation, NotLaurent, QClusterError, UnknownVertex
from .qtorus import element_from_dict, element_to_dict, render_element
from .quiver import mutate_quiver, quiver_from_dict, quiver_to_dict
from .rootdata import cartan_data
from .transport import MutationPath, transport
from .tropical import TropicalPoint, trop_mutate
from .uq import KappaContext, relation_suite


class Session:
    def __init__(self, sid, base_quiver, disk=None, cartan=None, word=None):
        self.id = sid
        self.base = base_quiver
        self.disk = disk
        self.cartan = cartan
        self.word = word
        self.history = []
        self.pins = {}
        self.lock = threading.Lock()
        self._kappa = None
        self._chart_cache = {(): base_quiver}

    def kappa_context(self):
        if self._kappa is None:
            if self.cartan is None or self.disk is None:
                raise QClusterError("session has no disk seed context")
            self._kappa = KappaContext(self.cartan, self.word)
        return self._kappa

    def current_quiver(self):
        key = tuple(self.history)
        if key not in self._chart_cache:
            q = self._chart_cache[()]
            for i, k in enumerate(key):
                sub = key[: i + 1]
                if sub not in self._chart_cache:
                    q = mutate_quiver(q, k)
                    self._chart_cache[sub] = q
                else:
                    q = self._chart_cache[sub]
            self._chart_cache[key] = q
        return self._chart_cache[key]

    def render_pins(self):
        out = {}
        path = MutationPath(self.base, tuple(self.history))
        for name, pin in self.pins.items():
            if pin["kind"] == "tropical":
                p = TropicalPoint(self.base, pin["coords"])
                for k in self.history:
                    p = trop_mutate(p, k)
                out[name] = {"kind": "tropical", "status": "ok", "coords": p.as_dict()}
                continue
            el = pin["element"]
            try:
                moved = transport(el, path)
            except NotLaurent:
                out[name] = {"kind": "element", "status": "NotLaurent"}
                continue
            out[name] = {
                "kind": "element",
                "status": "ok",
                "element": element_to_dict(moved),
                "text": render_element(moved),
                "positive": moved.coefficients_positive(),
            }
        return out

    def state(self):
        return {
            "id": self.id,
            "history": list(self.history),
            "quiver": quiver_to_dict(self.current_quiver()),
            "pins": self.render_pins(),
        }


def create_app():
    app = FastAPI(title="qcluster service")
    sessions = {}

    def get_session(sid):
        if sid not in sessions:
            raise HTTPException(status_code=404, detail="unknown session")
        return sessions[sid]

    @app.post("/session")
    def create_session(body: dict = Body(...)):
        sid = secrets.token_hex(8)
        try:
            if "seed" in body:
                quiver = quiver_from_dict(body["seed"])
                sessions[sid] = Session(sid, quiver)
            else:
                c = cartan_data(body["type"])
                word = tuple(int(ch) for ch in str(body["word"]))
                shape = body.get("shape", "disk")
                if shape == "triangle":
                    quiver = build_triangle(c, word).quiver
                    sessions[sid] = Session(sid, quiver)
                else:
                    disk = build_disk_seed(c, word)
                    sessions[sid] = Session(sid, disk.quiver, disk, c, word)
        except (QClusterError, ValueError, KeyError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return {"id": sid}

    @app.get("/session")
    def list_sessions():
        return {"sessions": sorted(sessions)}

    @app.get("/session/{sid}")
    def get_state(sid: str):
        return get_session(sid).state()

    @app.delete("/session/{sid}")
    def delete_session(sid: str):
        get_session(sid)
        del sessions[sid]
        return {"deleted": sid}

    @app.post("/session/{sid}/mutate")
    def mutate(sid: str, body: dict = Body(...)):
        s = get_session(sid)
        vertex = body.get("vertex")
        with s.lock:
            try:
                mutate_quiver(s.current_quiver(), vertex)
            except FrozenMutation as exc:
                raise HTTPException(status_code=409, detail=str(exc))
            except (UnknownVertex, QClusterError) as exc:
                raise HTTPException(status_code=400, detail=str(exc))
            s.history.append(vertex)
            return s.state()

    @app.post("/session/{sid}/undo")
    def undo(sid: str):
        s = get_session(sid)
        with s.lock:
            if not s.history:
                raise HTTPException(status_code=400, detail="history is empty")
            s.history.pop()
            return s.state()

    @app.post("/session/{sid}/pin")
    def pin(sid: str, body: dict = Body(...)):
        s = get_session(sid)
        name = body.get("name")
        kind = body.get("kind")
        with s.lock:
            try:
                if kind == "generator":
                    gen = body["generator"]
                    ctx = s.kappa_context()
                    el = ctx.images[(gen[:-1], int(gen[-1]))]
                    s.pins[name] = {"kind": "element", "element": el}
                elif kind == "element":
                    el = element_from_dict(s.base, body["element"])
                    s.pins[name] = {"kind": "element", "element": el}
                elif kind == "tropical":
                    coords = {k: int(v) for k, v in body["coords"].items()}
                    TropicalPoint(s.base, coords)
                    s.pins[name] = {"kind": "tropical", "coords": coords}
                else:
                    raise HTTPException(status_code=400, detail="unknown pin kind")
            except (QClusterError, ValueError, KeyError) as exc:
                raise HTTPException(status_code=400, detail=str(exc))
            return s.state()

    @app.delete("/session/{sid}/pin/{name}")
    def unpin(sid: str, name: str):
        s = get_session(sid)
        with s.lock:
            s.pins.pop(name, None)
            return s.state()

    @app.post("/session/{sid}/verify")
    def verify(sid: str, body: dict = Body(default={})):
        s = get_session(sid)
        if s.cartan is None:
            raise HTTPException(status_code=400, detail="session has no Cartan data")
        quotient = bool(body.get("quotient", False))
        ctx = KappaContext(s.cartan, s.word, quotient=quotient)
        return relation_suite(ctx)

    return app

"""Loopback HTTP service for game sessions and analysis.

Endpoints (JSON in, JSON out):

* ``POST /games``                 {shape: {n, c, variant}, mode, seed?} -> state
* ``POST /games/<id>/guesses``    {guess, rating?} -> {rating, state}
* ``GET  /games/<id>``            -> state
* ``POST /analyze/count``         {instance} -> {count}
* ``POST /analyze/suggest``       {instance} -> {guess, worstCase}
* ``POST /analyze/reduce``        {dimacs, target} -> {instance, layout}

Errors map to 400 (validation), 404 (unknown session), 409 (finished
session), 413 (budget exceeded), with bodies of the form {"error": text}.
The server adds no game semantics of its own; every number it returns comes
from the counting/strategy/reduction modules.
"""

from __future__ import annotations

import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .codes import rating_to_doc
from .counting import Instance, count_solutions
from .errors import (
    BudgetExceededError,
    MastermindError,
    SessionFinishedError,
    UnknownSessionError,
)
from .cnf import parse_dimacs
from .reductions import reduce_to
from .sessions import SessionStore
from .strategy import candidate_codes, suggest_guess, worst_case_partition

DEFAULT_PORT = 8750


def _status_for(exc: Exception) -> int:
    if isinstance(exc, UnknownSessionError):
        return 404
    if isinstance(exc, SessionFinishedError):
        return 409
    if isinstance(exc, BudgetExceededError):
        return 413
    return 400


class _Handler(BaseHTTPRequestHandler):
    server_version = "mastermind/0.1"
    store: SessionStore  # set by make_server

    # Keep request logging off; this is a local tool and tests read stderr.
    def log_message(self, format, *args):
        pass

    def _reply(self, code: int, payload: dict) -> None:
        body = json.dumps(payload).encode("utf-8")
        self.send_response(code)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _fail(self, code: int, message: str) -> None:
        self._reply(code, {"error": message})

    def _body(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        if not raw:
            raise MastermindError("request body must be a JSON object")
        try:
            doc = json.loads(raw)
        except ValueError as exc:
            raise MastermindError(f"request body is not valid JSON: {exc}") from exc
        if not isinstance(doc, dict):
            raise MastermindError("request body must be a JSON object")
        return doc

    def do_OPTIONS(self):  # CORS preflight for the browser UI
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    def do_GET(self):
        parts = [p for p in self.path.split("/") if p]
        if len(parts) == 2 and parts[0] == "games":
            try:
                self._reply(200, self.store.view(parts[1]))
            except MastermindError as exc:
                self._fail(_status_for(exc), str(exc))
            return
        self._fail(404, f"no route for GET {self.path}")

    def do_POST(self):
        parts = [p for p in self.path.split("/") if p]
        try:
            doc = self._body()
            if parts == ["games"]:
                self._reply(200, self._create_game(doc))
            elif len(parts) == 3 and parts[0] == "games" and parts[2] == "guesses":
                self._reply(200, self._submit_guess(parts[1], doc))
            elif parts == ["analyze", "count"]:
                self._reply(200, self._analyze_count(doc))
            elif parts == ["analyze", "suggest"]:
                self._reply(200, self._analyze_suggest(doc))
            elif parts == ["analyze", "reduce"]:
                self._reply(200, self._analyze_reduce(doc))
            else:
                self._fail(404, f"no route for POST {self.path}")
        except MastermindError as exc:
            self._fail(_status_for(exc), str(exc))

    def _create_game(self, doc):
        shape = doc.get("shape")
        if not isinstance(shape, dict) or not {"n", "c", "variant"} <= set(shape):
            raise MastermindError("shape must be an object with n, c and variant")
        return self.store.create(
            shape["n"], shape["c"], shape["variant"], doc.get("mode"), doc.get("seed")
        )

    def _submit_guess(self, session_id, doc):
        if "guess" not in doc:
            raise MastermindError("body must contain a guess")
        rating, state = self.store.submit_guess(session_id, doc["guess"], doc.get("rating"))
        return {"rating": rating_to_doc(rating, state["variant"]), "state": state}

    def _analyze_count(self, doc):
        inst = self._instance(doc)
        return {"count": count_solutions(inst, self.store.budget)}

    def _analyze_suggest(self, doc):
        inst = self._instance(doc)
        guess = suggest_guess(inst, self.store.budget)
        worst = worst_case_partition(guess, candidate_codes(inst, self.store.budget), inst.variant)
        return {"guess": list(guess), "worstCase": worst}

    def _analyze_reduce(self, doc):
        if not isinstance(doc.get("dimacs"), str):
            raise MastermindError("body must contain DIMACS text under 'dimacs'")
        instance, layout = reduce_to(doc.get("target"), parse_dimacs(doc["dimacs"]))
        return {"instance": instance.to_doc(), "layout": layout.to_doc()}

    def _instance(self, doc):
        if "instance" not in doc:
            raise MastermindError("body must contain an instance document")
        return Instance.from_doc(doc["instance"])


def make_server(
    store: SessionStore, host: str = "127.0.0.1", port: int = 0
) -> ThreadingHTTPServer:
    """Build (but do not start) the HTTP server; port 0 picks a free port."""
    handler = type("BoundHandler", (_Handler,), {"store": store})
    server = ThreadingHTTPServer((host, port), handler)
    server.daemon_threads = True
    return server

"""Live game sessions over the counting and strategy machinery.

Three modes:

* ``engine-secret``: the engine draws a secret (reproducibly, from an
  optional seed) and rates guesses honestly.
* ``engine-adaptive``: no fixed secret; each guess is rated so that as many
  codes as possible stay eligible, so the codemaker never contradicts
  itself and the game is as long as the codebreaker is unlucky.
* ``external-assistant``: the user relays ratings from an outside opponent;
  the session tracks the remaining candidate count and flags contradictions
  (remaining 0).

Sessions live in memory behind per-session locks; mutations are serialized
and numbered by a turn counter. An optional append-only journal (one JSON
line per state change) allows recovery after a crash.
"""

from __future__ import annotations

import json
import os
import random
import secrets
import threading
from dataclasses import dataclass, field

from .codes import (
    Code,
    check_code,
    check_rating,
    check_variant,
    perfect_rating,
    rate,
    rating_from_doc,
    rating_to_doc,
)
from .counting import DEFAULT_BUDGET, Instance, count_solutions, search_space_size
from .errors import (
    BudgetExceededError,
    InvalidInstanceError,
    SessionFinishedError,
    UnknownSessionError,
)
from .strategy import adaptive_rating

MODES = ("engine-secret", "engine-adaptive", "external-assistant")
IN_PROGRESS, SOLVED, CONTRADICTED = "in-progress", "solved", "contradicted"


@dataclass
class GameSession:
    id: str
    instance: Instance
    mode: str
    secret: Code | None
    status: str = IN_PROGRESS
    turn: int = 0
    remaining: int = 0
    remaining_after: list[int] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def view(self) -> dict:
        """Public state. The secret stays hidden until the game is over."""
        inst = self.instance
        history = [
            {
                "guess": list(q.guess),
                "rating": rating_to_doc(q.rating, inst.variant),
                "remaining": left,
            }
            for q, left in zip(inst.queries, self.remaining_after)
        ]
        doc = {
            "id": self.id,
            "n": inst.n,
            "c": inst.c,
            "variant": inst.variant,
            "mode": self.mode,
            "status": self.status,
            "turn": self.turn,
            "remaining": self.remaining,
            "history": history,
        }
        if self.mode == "engine-secret" and self.status != IN_PROGRESS:
            doc["secret"] = list(self.secret)
        return doc

    def snapshot(self) -> dict:
        """Full state for the journal, secret included."""
        inst = self.instance
        return {
            "id": self.id,
            "n": inst.n,
            "c": inst.c,
            "variant": inst.variant,
            "mode": self.mode,
            "secret": list(self.secret) if self.secret is not None else None,
            "status": self.status,
            "turn": self.turn,
            "remaining": self.remaining,
            "queries": [
                {"guess": list(q.guess), "rating": rating_to_doc(q.rating, inst.variant)}
                for q in inst.queries
            ],
            "remaining_after": list(self.remaining_after),
        }

    @classmethod
    def from_snapshot(cls, doc) -> "GameSession":
        inst = Instance.from_doc(
            {
                "n": doc["n"],
                "c": doc["c"],
                "variant": doc["variant"],
                "queries": doc["queries"],
            }
        )
        return cls(
            id=doc["id"],
            instance=inst,
            mode=doc["mode"],
            secret=tuple(doc["secret"]) if doc["secret"] is not None else None,
            status=doc["status"],
            turn=doc["turn"],
            remaining=doc["remaining"],
            remaining_after=list(doc["remaining_after"]),
        )


class SessionStore:
    """Thread-safe in-memory session registry with optional journaling."""

    def __init__(self, budget: int = DEFAULT_BUDGET, journal_path: str | None = None):
        self.budget = budget
        self._sessions: dict[str, GameSession] = {}
        self._registry_lock = threading.Lock()
        self._journal_path = journal_path
        self._journal_lock = threading.Lock()
        if journal_path and os.path.exists(journal_path):
            self._recover(journal_path)

    def create(self, n, c, variant, mode, seed=None) -> dict:
        """Open a session. The shape must leave the solution space countable
        within the store's budget, since every turn recounts it."""
        if mode not in MODES:
            raise InvalidInstanceError(f"unknown mode {mode!r}; expected one of {MODES}")
        instance = Instance(n, c, variant)
        space = search_space_size(n, c, variant)
        if space >= self.budget:
            raise BudgetExceededError(space, self.budget, "session solution space")
        secret = None
        if mode == "engine-secret":
            rng = random.Random(seed)
            secret = tuple(rng.randrange(c) for _ in range(n))
        session = GameSession(
            id=secrets.token_urlsafe(16),
            instance=instance,
            mode=mode,
            secret=secret,
            remaining=space,
        )
        with self._registry_lock:
            self._sessions[session.id] = session
        self._journal("create", session)
        return session.view()

    def submit_guess(self, session_id: str, guess, rating=None):
        """Play one turn; returns (rating, state view)."""
        session = self._get(session_id)
        with session.lock:
            if session.status != IN_PROGRESS:
                raise SessionFinishedError(f"session {session_id} is {session.status}")
            inst = session.instance
            guess = check_code(guess, inst.n, inst.c)
            if session.mode == "external-assistant":
                if rating is None:
                    raise InvalidInstanceError(
                        "external-assistant sessions require a rating with each guess"
                    )
                rating = _parse_rating(rating, inst.n, inst.variant)
            else:
                if rating is not None:
                    raise InvalidInstanceError(
                        f"{session.mode} sessions rate guesses themselves; do not send one"
                    )
                if session.mode == "engine-secret":
                    rating = rate(session.secret, guess, inst.variant)
                else:
                    rating = adaptive_rating(inst, guess, self.budget)
            session.instance = inst = inst.with_query(guess, rating)
            session.remaining = count_solutions(inst, self.budget)
            session.remaining_after.append(session.remaining)
            session.turn += 1
            if session.remaining == 0:
                session.status = CONTRADICTED
            elif rating == perfect_rating(inst.n, inst.variant):
                session.status = SOLVED
            self._journal("guess", session)
            return rating, session.view()

    def view(self, session_id: str) -> dict:
        return self._get(session_id).view()

    def _get(self, session_id) -> GameSession:
        with self._registry_lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise UnknownSessionError(f"unknown session {session_id!r}")
        return session

    def _journal(self, event, session) -> None:
        if not self._journal_path:
            return
        line = json.dumps({"event": event, "session": session.snapshot()})
        with self._journal_lock:
            with open(self._journal_path, "a", encoding="utf-8") as fh:
                fh.write(line + "\n")

    def _recover(self, path) -> None:
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                try:
                    doc = json.loads(line)
                    session = GameSession.from_snapshot(doc["session"])
                except (ValueError, KeyError):
                    # A torn final line after a crash is expected; skip it.
                    continue
                self._sessions[session.id] = session


def _parse_rating(rating, n, variant):
    check_variant(variant)
    if isinstance(rating, dict):
        return rating_from_doc(rating, n, variant)
    if isinstance(rating, (list, tuple)):
        return check_rating(tuple(rating), n, variant)
    return check_rating(rating, n, variant)

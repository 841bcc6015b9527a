"""Spin up the HTTP service in-process and walk through its endpoints the
way the web UI does."""

import json
import threading
import urllib.request

from mastermind import SessionStore
from mastermind.service import make_server

server = make_server(SessionStore())
port = server.server_address[1]
threading.Thread(target=server.serve_forever, daemon=True).start()
base = f"http://127.0.0.1:{port}"
print(f"service listening on {base}")


def call(method, path, body=None):
    data = None if body is None else json.dumps(body).encode()
    req = urllib.request.Request(
        f"{base}{path}", data=data, method=method,
        headers={"Content-Type": "application/json"},
    )
    with urllib.request.urlopen(req) as resp:
        return json.loads(resp.read())


print()
print("POST /games: seeded engine-secret game on the classic board")
state = call("POST", "/games", {
    "shape": {"n": 4, "c": 6, "variant": "full"},
    "mode": "engine-secret",
    "seed": 597,
})
print(f"  id={state['id'][:8]}... remaining={state['remaining']}")

print()
print("POST /games/<id>/guesses: play a few turns")
for guess in ([4, 4, 1, 1], [1, 2, 0, 3], [0, 1, 2, 3]):
    body = call("POST", f"/games/{state['id']}/guesses", {"guess": guess})
    r = body["rating"]
    s = body["state"]
    print(f"  {guess} -> black={r['black']} white={r['white']}, "
          f"remaining={s['remaining']}, status={s['status']}")

print()
print("GET /games/<id>: the finished game reveals its secret")
view = call("GET", f"/games/{state['id']}")
print(f"  secret was {view['secret']}")

print()
print("POST /analyze/count and /analyze/suggest work on bare instances")
doc = {"n": 2, "c": 2, "variant": "full", "queries": []}
print(f"  count: {call('POST', '/analyze/count', {'instance': doc})}")
print(f"  suggest: {call('POST', '/analyze/suggest', {'instance': doc})}")

print()
print("POST /analyze/reduce compiles DIMACS text")
body = call("POST", "/analyze/reduce", {"dimacs": "p cnf 3 1\n1 2 3 0\n", "target": "black2"})
inst = body["instance"]
print(f"  -> {inst['n']} pegs, {inst['c']} colors, {len(inst['queries'])} queries")
print(f"  layout maps variable 0 to positions "
      f"{body['layout']['positive_position'][0]}/{body['layout']['negative_position'][0]}")

server.shutdown()

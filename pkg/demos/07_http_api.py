"""Driving the HTTP API end to end, in process.

The same four endpoints serve the browser chat demo; here a test client
exercises them directly. Start a real server with `anamorph-api` and point
any HTTP client at the identical routes.
"""

from fastapi.testclient import TestClient

from anamorph.api import app

client = TestClient(app)

dictator = client.post("/api/keygen", json={"role": "dictator", "seed": 1}).json()
alice = client.post("/api/keygen", json={"role": "alice", "seed": 2}).json()
print(f"dictator public key: {dictator['public'][:24]}...")

ct = client.post("/api/encrypt", json={
    "pk": dictator["public"],
    "t": alice["secret"],
    "m0_text": "nothing to see here",
    "schema": {"action": 5, "time_minutes": 600, "location": 3,
               "flags": [False, True, True, False]},
}).json()
print(f"ciphertext c1: {ct['c1']}")

official = client.post("/api/decrypt-dictator", json={
    "sk0": dictator["secret"], "c0": ct["c0"], "c1": ct["c1"],
}).json()
print(f"dictator sees: {official['m0_text']!r}")

covert = client.post("/api/decrypt-alice", json={
    "t": alice["secret"], "c1": ct["c1"], "decode_schema": True,
}).json()
print(f"alice sees: cm={covert['cm']}, schema={covert['schema']}")

assert official["m0_text"] == "nothing to see here"
assert covert["schema"]["action"] == 5

"""Packing a structured command into the 30-bit covert value.

Thirty bits is enough for a small command vocabulary: 6 bits of action,
12 of time (minutes of the day), 8 of location, and 4 flags. The packed
integer rides the covert channel like any other cm.
"""

import random

from anamorph import (
    CovertSchema,
    decode_schema,
    decrypt_alice,
    encode_schema,
    encrypt,
    keygen_alice,
    keygen_dictator,
)
from anamorph.codec import schema_to_json

order = CovertSchema(
    action=12,           # e.g. "move the meeting"
    time_minutes=21 * 60 + 30,
    location=47,
    flags=(True, False, False, True),
)
cm = encode_schema(order)
print(f"packed command: {cm} (bits: {cm:030b})")

rng = random.Random(99)
dictator = keygen_dictator(rng)
alice = keygen_alice(rng)
ct = encrypt(dictator.pk, 0, cm, alice.t)

recovered = decrypt_alice(alice, ct.c1)
decoded = decode_schema(recovered)
print(f"decoded after the round trip: {schema_to_json(decoded)}")
assert decoded == order

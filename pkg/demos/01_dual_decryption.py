"""One ciphertext, two readings.

Bob encrypts a cover message under the Dictator's public key and tucks a
covert integer into the encryption nonce. The Dictator decrypts and sees
the cover text; Alice, holding the nonce secret t, recovers the covert
value the Dictator cannot even detect.
"""

import random

from anamorph import (
    decrypt_alice,
    decrypt_dictator,
    encrypt,
    keygen_alice,
    keygen_dictator,
)
from anamorph.formats import decode_text_message, encode_text_message

rng = random.Random(2024)

# The Dictator publishes pk and believes sk0 is the only decryption key.
dictator = keygen_dictator(rng)

# Alice picks t and shares it with Bob out of band. Both t and t*G stay
# secret (see demo 02 for what happens if t*G leaks).
alice = keygen_alice(rng)

cover = "I love the Dictator"
covert = 20_260_131  # any integer below 2^30

ciphertext = encrypt(dictator.pk, encode_text_message(cover), covert, alice.t)
print(f"c0 = {ciphertext.c0}")
print(f"c1 = {ciphertext.c1!r}")

# The Dictator's view: plain ElGamal decryption of the cover message.
m0 = decrypt_dictator(dictator.sk0, ciphertext)
print(f"\nDictator reads: {decode_text_message(m0)!r}")

# Alice's view: c1 - t*G = cm*G, then a small discrete-log search.
cm = decrypt_alice(alice, ciphertext.c1)
print(f"Alice recovers: {cm}")

assert decode_text_message(m0) == cover
assert cm == covert
print("\nBoth decryptions check out.")

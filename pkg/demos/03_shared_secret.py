"""Turning the covert channel into a key agreement.

The point Alice recovers, cm*G, is known to both ends: the sender picked
cm, Alice computed c1 - t*G. Hashing it yields a 32-byte symmetric key for
a second encryption layer, bootstrapped entirely inside the covert channel.
"""

import hashlib
import random

from anamorph import derive_shared_secret, encrypt, keygen_alice, keygen_dictator
from anamorph.curve import G, encode_point, scalar_mul

rng = random.Random(12)
dictator = keygen_dictator(rng)
alice = keygen_alice(rng)

cm = 31_337
ciphertext = encrypt(dictator.pk, 1, cm, alice.t)

# Receiver side: from the ciphertext and her key.
alice_key = derive_shared_secret(alice, ciphertext.c1)

# Sender side: from the covert value directly.
bob_key = hashlib.sha256(encode_point(scalar_mul(cm, G))).digest()

print(f"alice key: {alice_key.hex()}")
print(f"bob key:   {bob_key.hex()}")
assert alice_key == bob_key
print("Keys match; cm = 0 is the one value with nothing to derive.")

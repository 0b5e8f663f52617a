"""Why Alice's point t*G is a secret, not a public key.

An eavesdropper who learns t*G (never mind t itself) can subtract it from
the observed c1 and brute-force the covert message, because the covert
range is deliberately small. Conventional key hygiene intuition does not
transfer: both halves of Alice's key material stay private.
"""

import random
import time

from anamorph import encrypt, keygen_alice, keygen_dictator, leak_attack

rng = random.Random(7)
dictator = keygen_dictator(rng)
alice = keygen_alice(rng)

covert = 987_654
ciphertext = encrypt(dictator.pk, 0, covert, alice.t)

# The attacker's inputs: the wire ciphertext plus the leaked point. No t.
leaked_tc = alice.tc
observed_c1 = ciphertext.c1

start = time.perf_counter()
recovered = leak_attack(leaked_tc, observed_c1, bound=1 << 30)
elapsed = time.perf_counter() - start

print(f"planted covert message: {covert}")
print(f"attacker recovered:     {recovered} in {elapsed:.2f}s")
assert recovered == covert

# Without tc the attacker faces a full-range curve discrete log on c1,
# which is exactly the hardness the whole scheme rests on.
print("\nConclusion: guard t AND t*G.")

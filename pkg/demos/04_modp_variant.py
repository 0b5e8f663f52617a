"""The same construction in a multiplicative group mod p.

A tiny classroom group (p=23, g=5) makes every intermediate value small
enough to follow by hand; the arithmetic mirrors the curve scheme with
exponentiation in place of scalar multiplication.
"""

from anamorph import (
    MODP_2048,
    MODP_TOY_23,
    modp_decrypt_alice,
    modp_decrypt_dictator,
    modp_encrypt,
    modp_keygen,
)

p, g = MODP_TOY_23.p, MODP_TOY_23.g
sk0 = 6
pk = pow(g, sk0, p)
print(f"toy group: p={p}, g={g}")
print(f"dictator: sk0={sk0}, pk=g^{sk0}={pk}")

t, cm, m0 = 4, 3, 5
ct = modp_encrypt(MODP_TOY_23, pk, m0=m0, cm=cm, t=t)
print(f"encrypt m0={m0} cm={cm} t={t}: r={cm}+{t}={cm+t},"
      f" c1=g^{cm+t}={ct.c1}, c0=pk^{cm+t}+{m0}={ct.c0}")

print(f"dictator reads: {modp_decrypt_dictator(MODP_TOY_23, sk0, ct)}")
print(f"alice recovers: {modp_decrypt_alice(MODP_TOY_23, t, ct.c1, bound=21)}")

# The production-sized variant works identically on a 2048-bit safe prime.
import random

rng = random.Random(5)
sk0, pk = modp_keygen(MODP_2048, rng)
t, _ = modp_keygen(MODP_2048, rng)
ct = modp_encrypt(MODP_2048, pk, m0=123456, cm=777, t=t)
assert modp_decrypt_dictator(MODP_2048, sk0, ct) == 123456
assert modp_decrypt_alice(MODP_2048, t, ct.c1, bound=1 << 12) == 777
print(f"\n2048-bit group round trip fine (c1 has {ct.c1.bit_length()} bits)")

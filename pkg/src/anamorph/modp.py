"""The same dual-decryption construction in a multiplicative group mod p.

Exponentiation replaces scalar multiplication: c1 = g^r, the cover mask is
pk^r, and Alice's residual g^cm = c1 * (g^t)^-1 feeds the same discrete-log
solvers. Exists mainly so the benchmark can compare integer and curve
arithmetic on equal footing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from ._intmath import mod_inv, mod_pow
from .dlog import BabyTable, Group
from .errors import NegativeResultError, ZeroNonceError
from .scheme import DEFAULT_COVERT_BOUND, MAX_COVERT_BOUND, _SYSTEM_RNG, _search_covert


@dataclass(frozen=True)
class ModpGroupParams:
    """Prime modulus p, generator g, and the order q of g."""

    name: str
    p: int
    g: int
    q: int

    def __post_init__(self):
        if self.g in (0, 1) or not 1 < self.g < self.p:
            raise ValueError("generator must be in (1, p)")
        if mod_pow(self.g, self.q, self.p) != 1:
            raise ValueError("q is not a multiple of the generator order")


# The 2048-bit MODP group from the standard IKE catalogue (a safe prime;
# g = 2 generates the prime-order subgroup of size (p-1)/2).
_P2048 = int(
    "FFFFFFFFFFFFFFFFC90FDAA22168C234C4C6628B80DC1CD129024E088A67CC74"
    "020BBEA63B139B22514A08798E3404DDEF9519B3CD3A431B302B0A6DF25F1437"
    "4FE1356D6D51C245E485B576625E7EC6F44C42E9A637ED6B0BFF5CB6F406B7ED"
    "EE386BFB5A899FA5AE9F24117C4B1FE649286651ECE45B3DC2007CB8A163BF05"
    "98DA48361C55D39A69163FA8FD24CF5F83655D23DCA3AD961C62F356208552BB"
    "9ED529077096966D670C354E4ABC9804F1746C08CA18217C32905E462E36CE3B"
    "E39E772C180E86039B2783A2EC07A28FB5C55DF06F4C52C9DE2BCBF695581718"
    "3995497CEA956AE515D2261898FA051015728E5A8AACAA68FFFFFFFFFFFFFFFF",
    16,
)

MODP_2048 = ModpGroupParams(name="modp-2048", p=_P2048, g=2, q=(_P2048 - 1) // 2)
#: Tiny classroom group for worked examples and exhaustive tests.
MODP_TOY_23 = ModpGroupParams(name="modp-toy-23", p=23, g=5, q=22)

MODP_GROUPS: dict[str, ModpGroupParams] = {
    params.name: params for params in (MODP_2048, MODP_TOY_23)
}


class ModpGroup(Group):
    """Multiplicative group mod p for the discrete-log solvers."""

    def __init__(self, params: ModpGroupParams):
        self.params = params
        self.identity = 1
        self.generator = params.g
        self._p = params.p
        self._key_width = (params.p.bit_length() + 7) // 8

    def combine(self, a, b):
        return a * b % self._p

    def inverse(self, a):
        return mod_inv(a, self._p)

    def element_key(self, a) -> bytes:
        return a.to_bytes(self._key_width, "big")


@dataclass(frozen=True)
class ModpCiphertext:
    c0: int
    c1: int


def modp_keygen(
    params: ModpGroupParams, rng: random.Random | None = None
) -> tuple[int, int]:
    """(secret, public) with secret uniform in [1, q) and public = g^secret.

    Serves both roles: the authority's decryption key and Alice's covert
    scalar t with its (confidential) public element.
    """
    rng = rng or _SYSTEM_RNG
    secret = rng.randrange(1, params.q)
    return secret, mod_pow(params.g, secret, params.p)


def modp_encrypt(
    params: ModpGroupParams,
    pk: int,
    m0: int,
    cm: int,
    t: int,
    cm_bound: int = DEFAULT_COVERT_BOUND,
) -> ModpCiphertext:
    """Encrypt with nonce r = cm + t (mod q): c1 = g^r, c0 = pk^r + m0."""
    if not 1 <= pk < params.p:
        raise ValueError("public key out of range [1, p)")
    if m0 < 0:
        raise ValueError("cover message must be non-negative")
    if not 1 <= cm_bound <= MAX_COVERT_BOUND:
        raise ValueError("covert bound out of range [1, 2^34]")
    if not 0 <= cm < cm_bound:
        raise ValueError(f"covert message out of range [0, {cm_bound})")
    if not 1 <= t < params.q:
        raise ValueError("secret scalar must be in [1, q)")
    r = (cm + t) % params.q
    if r == 0:
        raise ZeroNonceError("cm + t is a multiple of the generator order")
    mask = mod_pow(pk, r, params.p)
    return ModpCiphertext(c0=mask + m0, c1=mod_pow(params.g, r, params.p))


def modp_decrypt_dictator(
    params: ModpGroupParams, sk0: int, ct: ModpCiphertext
) -> int:
    """Recover the cover message: c0 - c1^sk0 (mod p removes the mask)."""
    m0 = ct.c0 - mod_pow(ct.c1, sk0, params.p)
    if m0 < 0:
        raise NegativeResultError(
            "cover message went negative: wrong key or corrupted ciphertext"
        )
    return m0


def modp_decrypt_alice(
    params: ModpGroupParams,
    t: int,
    c1: int,
    bound: int = DEFAULT_COVERT_BOUND,
    method: str = "bsgs",
    group: Group | None = None,
    table: BabyTable | None = None,
) -> int:
    """Recover cm from c1 = g^(cm+t): divide out g^t, then solve g^cm.

    Accepts the same instrumentation overrides as the curve-side decryption.

    Raises:
        CovertNotFoundError: no cm in [0, bound] matches.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    grp = group or ModpGroup(params)
    residual = grp.combine(c1, grp.inverse(mod_pow(params.g, t, params.p)))
    return _search_covert(residual, bound, method, grp, table)

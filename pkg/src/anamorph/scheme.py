"""Dual-decryption ElGamal over secp256k1.

One ciphertext (c0, c1) decrypts two ways:

* the authority key sk0 recovers the cover message m0 from c0, exactly as
  in integer-encoded ElGamal;
* Alice's secret scalar t recovers a small covert integer cm that was
  folded into the encryption nonce as r = cm + t. She computes
  c1 - t*G = (r - t)*G = cm*G and solves the short-range discrete log.

Alice's t and its point t*G are BOTH secrets: anyone holding t*G can run
the same short-range search (see :func:`leak_attack`), which is the whole
point of keeping cm small enough to recover quickly.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass

from .curve import (
    G,
    N,
    Point,
    encode_point,
    point_add,
    point_neg,
    point_to_int,
    scalar_mul,
)
from .dlog import BabyTable, EcGroup, Group, solve_brute, solve_bsgs
from .errors import (
    CovertNotFoundError,
    IdentityPointError,
    NegativeResultError,
    ZeroNonceError,
)

#: Covert messages default to 30 bits; the ceiling keeps recovery feasible.
DEFAULT_COVERT_BOUND = 1 << 30
MAX_COVERT_BOUND = 1 << 34
#: Cover messages are capped at 256 bits so c0's magnitude stays dominated
#: by the 512-bit mask value and does not advertise an oversized plaintext.
MAX_COVER_MESSAGE = 1 << 256

_EC_GROUP = EcGroup()
_SYSTEM_RNG = random.SystemRandom()


@dataclass(frozen=True)
class DictatorKeyPair:
    """The authority's ElGamal keypair; pk = sk0 * G."""

    sk0: int
    pk: Point


@dataclass(frozen=True)
class AliceKey:
    """Alice's covert-channel key: scalar t and cached tc = t * G.

    Both fields are confidential. tc looks like a public key but leaking it
    lets anyone recover covert messages (see :func:`leak_attack`).
    """

    t: int
    tc: Point

    @classmethod
    def from_scalar(cls, t: int) -> "AliceKey":
        if not 1 <= t < N:
            raise ValueError("secret scalar must be in [1, N)")
        return cls(t=t, tc=scalar_mul(t, G))


@dataclass(frozen=True)
class AnamorphicCiphertext:
    """c0 = Int(r*pk) + m0 (an unbounded integer), c1 = r*G."""

    c0: int
    c1: Point


def keygen_dictator(rng: random.Random | None = None) -> DictatorKeyPair:
    """Fresh authority keypair; sk0 uniform in [1, N)."""
    rng = rng or _SYSTEM_RNG
    sk0 = rng.randrange(1, N)
    return DictatorKeyPair(sk0=sk0, pk=scalar_mul(sk0, G))


def keygen_alice(rng: random.Random | None = None) -> AliceKey:
    """Fresh covert-channel key; t uniform in [1, N), tc cached."""
    rng = rng or _SYSTEM_RNG
    return AliceKey.from_scalar(rng.randrange(1, N))


def encrypt(
    pk: Point,
    m0: int,
    cm: int,
    t: int,
    cm_bound: int = DEFAULT_COVERT_BOUND,
) -> AnamorphicCiphertext:
    """Encrypt cover message m0 for pk, hiding cm in the nonce r = cm + t.

    Args:
        pk: recipient (authority) public key, a non-identity point.
        m0: cover message integer in [0, 2^256).
        cm: covert message integer in [0, cm_bound).
        t: Alice's secret scalar in [1, N); whoever picks it must share it
            with Alice out of band.
        cm_bound: covert range; at most 2^34, above which recovery is no
            longer quick.

    Raises:
        ZeroNonceError: cm + t = 0 (mod N); the caller must pick another t.
        ValueError: any argument outside its range.
    """
    if pk.is_identity:
        raise ValueError("public key must not be the identity")
    if not 0 <= m0 < MAX_COVER_MESSAGE:
        raise ValueError("cover message out of range [0, 2^256)")
    if not 1 <= cm_bound <= MAX_COVERT_BOUND:
        raise ValueError("covert bound out of range [1, 2^34]")
    if not 0 <= cm < cm_bound:
        raise ValueError(f"covert message out of range [0, {cm_bound})")
    if not 1 <= t < N:
        raise ValueError("secret scalar must be in [1, N)")
    r = (cm + t) % N
    if r == 0:
        raise ZeroNonceError("cm + t is a multiple of the group order")
    mask = point_to_int(scalar_mul(r, pk))
    return AnamorphicCiphertext(c0=mask + m0, c1=scalar_mul(r, G))


def decrypt_dictator(sk0: int, ct: AnamorphicCiphertext) -> int:
    """Recover the cover message: c0 - Int(sk0 * c1).

    sk0 * c1 = sk0 * r * G = r * pk, the mask added at encryption time.

    Raises:
        NegativeResultError: recovered value is negative, meaning the key is
            wrong or the ciphertext corrupted.
    """
    try:
        mask = point_to_int(scalar_mul(sk0, ct.c1))
    except IdentityPointError as exc:
        raise NegativeResultError("degenerate shared point: wrong key") from exc
    m0 = ct.c0 - mask
    if m0 < 0:
        raise NegativeResultError("cover message went negative: wrong key or corrupted ciphertext")
    return m0


def _search_covert(
    residual: Point,
    bound: int,
    method: str,
    group: Group | None,
    table: BabyTable | None,
) -> int:
    group = group or _EC_GROUP
    if method == "brute":
        found = solve_brute(residual, bound, group)
    elif method == "bsgs":
        found = solve_bsgs(residual, bound, group, table)
    else:
        raise ValueError(f"unknown search method {method!r}")
    if found is None:
        raise CovertNotFoundError(
            f"no covert value in [0, {bound}] matches: wrong key or bound too small"
        )
    return found


def leak_attack(
    tc: Point,
    c1: Point,
    bound: int = DEFAULT_COVERT_BOUND,
    method: str = "bsgs",
    group: Group | None = None,
    table: BabyTable | None = None,
) -> int:
    """Recover cm from a leaked tc = t * G and an observed c1.

    Computes c1 - tc = cm * G and searches [0, bound], exactly what Alice
    does; it needs no knowledge of t. This is why tc must stay secret.

    Raises:
        CovertNotFoundError: no match within bound (tc belongs to someone
            else, or the bound is too small).
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    grp = group or _EC_GROUP
    residual = grp.combine(c1, grp.inverse(tc))
    return _search_covert(residual, bound, method, grp, table)


def decrypt_alice(
    key: AliceKey,
    c1: Point,
    bound: int = DEFAULT_COVERT_BOUND,
    method: str = "bsgs",
    group: Group | None = None,
    table: BabyTable | None = None,
) -> int:
    """Recover the covert message from the nonce commitment c1.

    Args:
        key: Alice's key (only tc is used).
        c1: the ciphertext's nonce point.
        bound: inclusive search ceiling for cm.
        method: "bsgs" (default) or "brute".
        group: optional group override (e.g. a CountingGroup) for
            instrumentation.
        table: optional prebuilt baby table to amortise BSGS setup.

    Raises:
        CovertNotFoundError: no cm in [0, bound] matches: wrong key or
            bound too small.
    """
    return leak_attack(key.tc, c1, bound, method, group, table)


def derive_shared_secret(key: AliceKey, c1: Point) -> bytes:
    """32-byte key from the recovered point cm * G = c1 - tc.

    Both endpoints can derive it: the sender from cm directly, Alice from
    the ciphertext. Useful as a symmetric key or lookup index for a second
    encryption layer.

    Raises:
        IdentityPointError: cm = 0 leaves no usable point.
    """
    shared = point_add(c1, point_neg(key.tc))
    if shared.is_identity:
        raise IdentityPointError("covert message 0 yields the identity, no secret to derive")
    return hashlib.sha256(encode_point(shared)).digest()

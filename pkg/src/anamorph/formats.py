"""Key files, ciphertext records, and text-message encoding.

Everything here is the JSON surface shared by the CLI and the HTTP API:

* key file: {"role", "scheme", "secret", "public"} with scalars as hex and
  the public element as compressed-point hex (curve) or decimal (mod p);
* ciphertext: {"c0": decimal string, "c1": point hex or decimal, "scheme"};
* cover text: UTF-8 bytes as a big-endian integer, at most 31 bytes so it
  stays under the 256-bit cover-message cap.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from . import curve, modp, scheme
from .errors import KeyFormatError

ROLES = ("dictator", "alice")
SCHEMES = ("ecc",) + tuple(modp.MODP_GROUPS)

MAX_TEXT_BYTES = 31


def encode_text_message(text: str) -> int:
    """Big-endian integer of the UTF-8 bytes; fits the cover-message range."""
    data = text.encode("utf-8")
    if len(data) > MAX_TEXT_BYTES:
        raise ValueError(f"cover text longer than {MAX_TEXT_BYTES} UTF-8 bytes")
    return int.from_bytes(data, "big")


def decode_text_message(m0: int) -> str | None:
    """Inverse of :func:`encode_text_message`, or None when m0 is not
    printable round-tripping text (callers then show the integer)."""
    if m0 < 0:
        return None
    data = m0.to_bytes((m0.bit_length() + 7) // 8, "big")
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        return None
    if not text.isprintable() and text != "":
        return None
    if encode_text_message(text) != m0:  # leading NUL bytes do not survive
        return None
    return text


@dataclass(frozen=True)
class KeyFile:
    """One participant's key material for one scheme."""

    role: str
    scheme: str
    secret: int
    public: object  # curve.Point for "ecc", int residue for mod-p schemes

    def to_json(self) -> dict:
        if self.scheme == "ecc":
            secret = curve.scalar_hex(self.secret)
            public = curve.point_hex(self.public)
        else:
            secret = f"{self.secret:x}"
            public = str(self.public)
        return {"role": self.role, "scheme": self.scheme,
                "secret": secret, "public": public}


def generate_keyfile(role: str, scheme_name: str,
                     rng: random.Random | None = None) -> KeyFile:
    if role not in ROLES:
        raise KeyFormatError(f"unknown role {role!r}")
    if scheme_name == "ecc":
        if role == "dictator":
            pair = scheme.keygen_dictator(rng)
            return KeyFile(role, scheme_name, pair.sk0, pair.pk)
        alice = scheme.keygen_alice(rng)
        return KeyFile(role, scheme_name, alice.t, alice.tc)
    params = _modp_params(scheme_name)
    secret, public = modp.modp_keygen(params, rng)
    return KeyFile(role, scheme_name, secret, public)


def keyfile_from_json(doc: dict) -> KeyFile:
    """Parse and validate: the public element must recompute from the secret."""
    try:
        role = doc["role"]
        scheme_name = doc["scheme"]
        secret_text = doc["secret"]
        public_text = doc["public"]
    except (KeyError, TypeError) as exc:
        raise KeyFormatError(f"key file missing field: {exc}") from exc
    if role not in ROLES:
        raise KeyFormatError(f"unknown role {role!r}")
    if scheme_name == "ecc":
        try:
            secret = curve.scalar_from_hex(secret_text)
            public = curve.point_from_hex(public_text)
        except ValueError as exc:
            raise KeyFormatError(f"bad key encoding: {exc}") from exc
        if curve.scalar_mul(secret, curve.G) != public:
            raise KeyFormatError("public point does not match the secret scalar")
        return KeyFile(role, scheme_name, secret, public)
    params = _modp_params(scheme_name)
    try:
        secret = int(secret_text, 16)
        public = int(public_text, 10)
    except ValueError as exc:
        raise KeyFormatError(f"bad key encoding: {exc}") from exc
    if not 1 <= secret < params.q:
        raise KeyFormatError("secret exponent out of range")
    from ._intmath import mod_pow

    if mod_pow(params.g, secret, params.p) != public:
        raise KeyFormatError("public residue does not match the secret exponent")
    return KeyFile(role, scheme_name, secret, public)


def ciphertext_to_json(ct, scheme_name: str) -> dict:
    if scheme_name == "ecc":
        c1 = curve.point_hex(ct.c1)
    else:
        _modp_params(scheme_name)
        c1 = str(ct.c1)
    return {"c0": str(ct.c0), "c1": c1, "scheme": scheme_name}


def ciphertext_from_json(doc: dict):
    """Returns (scheme_name, ciphertext object)."""
    try:
        c0 = int(doc["c0"], 10)
        c1_text = doc["c1"]
        scheme_name = doc["scheme"]
    except (KeyError, TypeError, ValueError) as exc:
        raise KeyFormatError(f"bad ciphertext record: {exc}") from exc
    if c0 < 0:
        raise KeyFormatError("c0 must be non-negative")
    if scheme_name == "ecc":
        try:
            c1 = curve.point_from_hex(c1_text)
        except ValueError as exc:
            raise KeyFormatError(f"bad ciphertext point: {exc}") from exc
        if c1.is_identity:
            raise KeyFormatError("c1 must not be the identity")
        return scheme_name, scheme.AnamorphicCiphertext(c0=c0, c1=c1)
    params = _modp_params(scheme_name)
    try:
        c1 = int(c1_text, 10)
    except (TypeError, ValueError) as exc:
        raise KeyFormatError(f"bad ciphertext residue: {exc}") from exc
    if not 1 <= c1 < params.p:
        raise KeyFormatError("c1 out of range [1, p)")
    return scheme_name, modp.ModpCiphertext(c0=c0, c1=c1)


def dumps_canonical(doc: dict) -> str:
    """Stable serialization so fixed seeds yield byte-identical files."""
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _modp_params(scheme_name: str) -> modp.ModpGroupParams:
    try:
        return modp.MODP_GROUPS[scheme_name]
    except KeyError:
        raise KeyFormatError(f"unknown scheme {scheme_name!r}") from None

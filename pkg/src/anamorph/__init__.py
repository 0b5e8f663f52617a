"""Dual-decryption ElGamal: a cover message for the authority that holds
the decryption key, and a covert message for Alice, hidden in the nonce.

Not hardened cryptography: arithmetic is not constant-time and no
side-channel defenses exist. Research and demonstration use only.
"""

from .curve import G, IDENTITY, N, P, Point
from .scheme import (
    AliceKey,
    AnamorphicCiphertext,
    DEFAULT_COVERT_BOUND,
    DictatorKeyPair,
    MAX_COVERT_BOUND,
    decrypt_alice,
    decrypt_dictator,
    derive_shared_secret,
    encrypt,
    keygen_alice,
    keygen_dictator,
    leak_attack,
)
from .dlog import (
    BabyTable,
    CountingGroup,
    EcGroup,
    Group,
    build_baby_table,
    solve_brute,
    solve_bsgs,
)
from .modp import (
    MODP_2048,
    MODP_GROUPS,
    MODP_TOY_23,
    ModpCiphertext,
    ModpGroup,
    ModpGroupParams,
    modp_decrypt_alice,
    modp_decrypt_dictator,
    modp_encrypt,
    modp_keygen,
)
from .codec import CovertSchema, decode_schema, encode_schema
from .bench import BenchPlan, BenchRecord, emit_report, run_bench
from . import errors

__version__ = "0.1.0"

__all__ = [
    "G", "IDENTITY", "N", "P", "Point",
    "AliceKey", "AnamorphicCiphertext", "DictatorKeyPair",
    "DEFAULT_COVERT_BOUND", "MAX_COVERT_BOUND",
    "keygen_dictator", "keygen_alice", "encrypt",
    "decrypt_dictator", "decrypt_alice", "leak_attack", "derive_shared_secret",
    "Group", "EcGroup", "CountingGroup", "BabyTable",
    "build_baby_table", "solve_brute", "solve_bsgs",
    "ModpGroupParams", "ModpGroup", "ModpCiphertext",
    "MODP_2048", "MODP_TOY_23", "MODP_GROUPS",
    "modp_keygen", "modp_encrypt", "modp_decrypt_dictator", "modp_decrypt_alice",
    "CovertSchema", "encode_schema", "decode_schema",
    "BenchPlan", "BenchRecord", "run_bench", "emit_report",
    "errors",
]

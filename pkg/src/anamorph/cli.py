"""Command-line tools: key generation, encryption, both decryptions, and
the benchmark driver.

Exit codes: 0 success, 1 I/O failure, 2 usage or validation error,
3 cryptographic failure (wrong key, covert value not found).
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import bench, codec, formats, modp, scheme
from .errors import (
    AnamorphError,
    BenchPlanError,
    CovertNotFoundError,
    KeyFormatError,
    NegativeResultError,
    SchemaError,
    TableCapacityError,
)

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_CRYPTO = 3


def _rng(args) -> random.Random | None:
    return random.Random(args.seed) if args.seed is not None else None


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise KeyFormatError(f"{path}: not valid JSON ({exc})") from exc


def _load_keyfile(path: str, expect_role: str | None = None) -> formats.KeyFile:
    kf = formats.keyfile_from_json(_load_json(path))
    if expect_role and kf.role != expect_role:
        raise KeyFormatError(f"{path}: expected a {expect_role} key, found {kf.role}")
    return kf


def cmd_keygen(args) -> int:
    kf = formats.generate_keyfile(args.role, args.scheme, _rng(args))
    doc = kf.to_json()
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(formats.dumps_canonical(doc))
    print(doc["public"])
    return EXIT_OK


def cmd_encrypt(args) -> int:
    pk_file = _load_keyfile(args.pk, expect_role="dictator")
    alice_file = _load_keyfile(args.alice_key, expect_role="alice")
    if pk_file.scheme != alice_file.scheme:
        raise KeyFormatError(
            f"key schemes differ: {pk_file.scheme} vs {alice_file.scheme}"
        )
    if args.m0_int is not None:
        m0 = args.m0_int
        if m0 < 0:
            raise ValueError("--m0-int must be non-negative")
    else:
        m0 = formats.encode_text_message(args.m0)
    if args.schema is not None:
        try:
            schema_doc = json.loads(args.schema)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"--schema is not valid JSON: {exc}") from exc
        cm = codec.encode_schema(codec.schema_from_json(schema_doc))
    else:
        cm = args.cm
    if pk_file.scheme == "ecc":
        ct = scheme.encrypt(pk_file.public, m0, cm, alice_file.secret,
                            cm_bound=args.cm_bound)
    else:
        params = modp.MODP_GROUPS[pk_file.scheme]
        ct = modp.modp_encrypt(params, pk_file.public, m0, cm, alice_file.secret,
                               cm_bound=args.cm_bound)
    doc = formats.ciphertext_to_json(ct, pk_file.scheme)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(formats.dumps_canonical(doc))
    return EXIT_OK


def cmd_decrypt_dictator(args) -> int:
    kf = _load_keyfile(args.key, expect_role="dictator")
    ct_scheme, ct = formats.ciphertext_from_json(_load_json(args.ct))
    if ct_scheme != kf.scheme:
        raise KeyFormatError(f"ciphertext scheme {ct_scheme} does not match key")
    if kf.scheme == "ecc":
        m0 = scheme.decrypt_dictator(kf.secret, ct)
    else:
        m0 = modp.modp_decrypt_dictator(modp.MODP_GROUPS[kf.scheme], kf.secret, ct)
    text = formats.decode_text_message(m0)
    print(text if text is not None else m0)
    return EXIT_OK


def cmd_decrypt_alice(args) -> int:
    kf = _load_keyfile(args.key, expect_role="alice")
    ct_scheme, ct = formats.ciphertext_from_json(_load_json(args.ct))
    if ct_scheme != kf.scheme:
        raise KeyFormatError(f"ciphertext scheme {ct_scheme} does not match key")
    if kf.scheme == "ecc":
        alice = scheme.AliceKey(t=kf.secret, tc=kf.public)
        cm = scheme.decrypt_alice(alice, ct.c1, bound=args.bound, method=args.method)
    else:
        cm = modp.modp_decrypt_alice(
            modp.MODP_GROUPS[kf.scheme], kf.secret, ct.c1,
            bound=args.bound, method=args.method,
        )
    print(cm)
    if args.decode_schema:
        print(json.dumps(codec.schema_to_json(codec.decode_schema(cm))))
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.plan:
        plan = bench.BenchPlan.from_json(_load_json(args.plan))
    else:
        fields: dict = {}
        if args.schemes:
            fields["schemes"] = tuple(args.schemes.split(","))
        if args.cm:
            try:
                fields["cm_values"] = tuple(int(v) for v in args.cm.split(","))
            except ValueError as exc:
                raise BenchPlanError(f"bad --cm list: {exc}") from exc
        if args.reps is not None:
            fields["repetitions"] = args.reps
        if args.timeout is not None:
            fields["timeout_s"] = args.timeout
        if args.bsgs_mode:
            fields["bsgs_mode"] = args.bsgs_mode
        if args.modp_group:
            fields["modp_group"] = args.modp_group
        if args.allow_slow_vanilla:
            fields["allow_slow_vanilla"] = True
        plan = bench.BenchPlan(**fields)
    records = bench.run_bench(plan, _rng(args))
    print(bench.emit_report(records, fmt=args.format), end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="anamorph",
        description="Dual-decryption ElGamal: cover messages for the key "
        "holder, covert messages for Alice.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("keygen", help="generate a key file")
    p.add_argument("--role", required=True, choices=formats.ROLES)
    p.add_argument("--scheme", default="ecc", choices=formats.SCHEMES)
    p.add_argument("--out", required=True, help="key file path")
    p.add_argument("--seed", type=int, help="deterministic randomness seed")
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("encrypt", help="encrypt a cover and a covert message")
    p.add_argument("--pk", required=True, help="dictator key file (public part used)")
    p.add_argument("--alice-key", required=True, help="alice key file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--m0", help="cover message text (at most 31 UTF-8 bytes)")
    group.add_argument("--m0-int", type=int, help="cover message as an integer")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--cm", type=int, help="covert message integer")
    group.add_argument("--schema", help="covert command schema as inline JSON")
    p.add_argument("--cm-bound", type=int, default=scheme.DEFAULT_COVERT_BOUND,
                   help="covert range ceiling (default 2^30)")
    p.add_argument("--out", required=True, help="ciphertext file path")
    p.set_defaults(func=cmd_encrypt)

    p = sub.add_parser("decrypt-dictator", help="recover the cover message")
    p.add_argument("--key", required=True, help="dictator key file")
    p.add_argument("--ct", required=True, help="ciphertext file")
    p.set_defaults(func=cmd_decrypt_dictator)

    p = sub.add_parser("decrypt-alice", help="recover the covert message")
    p.add_argument("--key", required=True, help="alice key file")
    p.add_argument("--ct", required=True, help="ciphertext file")
    p.add_argument("--bound", type=int, default=scheme.DEFAULT_COVERT_BOUND,
                   help="inclusive search ceiling (default 2^30)")
    p.add_argument("--method", default="bsgs", choices=("brute", "bsgs"))
    p.add_argument("--decode-schema", action="store_true",
                   help="also print the decoded covert command schema")
    p.set_defaults(func=cmd_decrypt_alice)

    p = sub.add_parser("bench", help="run the four-scheme timing comparison")
    p.add_argument("--plan", help="JSON plan file (overrides inline flags)")
    p.add_argument("--schemes", help="comma-separated scheme ids")
    p.add_argument("--cm", help="comma-separated covert values")
    p.add_argument("--reps", type=int, help="repetitions per cell (default 5)")
    p.add_argument("--timeout", type=float, help="per-cell timeout seconds")
    p.add_argument("--bsgs-mode", choices=("cold", "warm", "both"))
    p.add_argument("--modp-group", choices=tuple(modp.MODP_GROUPS))
    p.add_argument("--allow-slow-vanilla", action="store_true")
    p.add_argument("--format", default="csv", choices=("csv", "markdown"))
    p.add_argument("--seed", type=int, help="deterministic randomness seed")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (NegativeResultError, CovertNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CRYPTO
    except (KeyFormatError, SchemaError, BenchPlanError, TableCapacityError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except AnamorphError as exc:  # remaining crypto-layer failures
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CRYPTO


if __name__ == "__main__":
    sys.exit(main())

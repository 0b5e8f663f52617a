"""Stateless JSON-over-HTTP facade for the scheme.

Four endpoints mirror the CLI verbs: /api/keygen, /api/encrypt,
/api/decrypt-dictator, /api/decrypt-alice. Keys travel in request bodies
and are never persisted server-side. Every error body has the shape
{"code": ..., "message": ...} with code one of bad_request,
crypto_failure, not_found_cm. Interactive reference lives at /api/docs.

The baby-step table for the default covert bound is built once at startup
and shared read-only across requests; handlers are otherwise pure, so the
service is safe under arbitrary request concurrency.

This is a demo service: no TLS, no authentication, loopback by default.
"""

from __future__ import annotations

import argparse
import json
import os
import random

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, ConfigDict, Field

from . import codec, curve, formats, modp, scheme
from .dlog import EcGroup, build_baby_table
from .errors import (
    AnamorphError,
    CovertNotFoundError,
    KeyFormatError,
    NegativeResultError,
)

DEFAULT_LISTEN = "127.0.0.1:8008"
LISTEN_ENV_VAR = "ANAMORPH_API_LISTEN"


class ApiFailure(Exception):
    """Carries the wire error code and HTTP status for the handlers."""

    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


def _bad_request(message: str) -> ApiFailure:
    return ApiFailure(400, "bad_request", message)


class KeygenRequest(BaseModel):
    role: str
    scheme: str = "ecc"
    seed: int | None = None


class EncryptRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    pk: str
    t: str
    m0_text: str | None = None
    m0_int: str | int | None = None
    cm: int | None = None
    covert_schema: dict | None = Field(default=None, alias="schema")
    scheme: str = "ecc"


class DecryptDictatorRequest(BaseModel):
    sk0: str
    c0: str | int
    c1: str
    scheme: str = "ecc"


class DecryptAliceRequest(BaseModel):
    t: str
    c1: str
    bound: int = scheme.DEFAULT_COVERT_BOUND
    method: str = "bsgs"
    decode_schema: bool = False
    scheme: str = "ecc"


def _parse_secret(text: str, scheme_name: str) -> int:
    try:
        if scheme_name == "ecc":
            return curve.scalar_from_hex(text)
        secret = int(text, 16)
    except ValueError as exc:
        raise _bad_request(f"bad secret scalar: {exc}") from exc
    params = modp.MODP_GROUPS[scheme_name]
    if not 1 <= secret < params.q:
        raise _bad_request("secret exponent out of range")
    return secret


def _check_scheme(name: str) -> None:
    if name not in formats.SCHEMES:
        raise _bad_request(f"unknown scheme {name!r}")


def create_app() -> FastAPI:
    app = FastAPI(
        title="anamorph API",
        description="Dual-decryption ElGamal over secp256k1 and mod-p groups.",
        docs_url="/api/docs",
        redoc_url=None,
    )
    # The browser demo is served from another origin (or file://); this is
    # an unauthenticated loopback demo service, so allow any origin.
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    # Shared read-only table for the default bound; handlers never mutate it.
    app.state.ec_group = EcGroup()
    app.state.baby_table = build_baby_table(
        scheme.DEFAULT_COVERT_BOUND, app.state.ec_group
    )

    @app.exception_handler(ApiFailure)
    async def on_api_failure(request: Request, exc: ApiFailure):
        return JSONResponse(
            status_code=exc.status,
            content={"code": exc.code, "message": exc.message},
        )

    @app.exception_handler(RequestValidationError)
    async def on_validation_error(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"code": "bad_request", "message": str(exc.errors()[:3])},
        )

    @app.post("/api/keygen")
    def keygen(body: KeygenRequest):
        rng = random.Random(body.seed) if body.seed is not None else None
        try:
            kf = formats.generate_keyfile(body.role, body.scheme, rng)
        except KeyFormatError as exc:
            raise _bad_request(str(exc)) from exc
        doc = kf.to_json()
        return {"secret": doc["secret"], "public": doc["public"]}

    @app.post("/api/encrypt")
    def encrypt(body: EncryptRequest):
        _check_scheme(body.scheme)
        if (body.m0_text is None) == (body.m0_int is None):
            raise _bad_request("provide exactly one of m0_text or m0_int")
        if (body.cm is None) == (body.covert_schema is None):
            raise _bad_request("provide exactly one of cm or schema")
        try:
            if body.m0_text is not None:
                m0 = formats.encode_text_message(body.m0_text)
            else:
                m0 = int(body.m0_int)
            if body.covert_schema is not None:
                cm = codec.encode_schema(codec.schema_from_json(body.covert_schema))
            else:
                cm = body.cm
            t = _parse_secret(body.t, body.scheme)
            if body.scheme == "ecc":
                pk = curve.point_from_hex(body.pk)
                ct = scheme.encrypt(pk, m0, cm, t)
            else:
                params = modp.MODP_GROUPS[body.scheme]
                ct = modp.modp_encrypt(params, int(body.pk, 10), m0, cm, t)
        except ApiFailure:
            raise
        except (AnamorphError, ValueError) as exc:
            raise _bad_request(str(exc)) from exc
        doc = formats.ciphertext_to_json(ct, body.scheme)
        return {"c0": doc["c0"], "c1": doc["c1"]}

    @app.post("/api/decrypt-dictator")
    def decrypt_dictator(body: DecryptDictatorRequest):
        _check_scheme(body.scheme)
        sk0 = _parse_secret(body.sk0, body.scheme)
        try:
            _, ct = formats.ciphertext_from_json(
                {"c0": str(body.c0), "c1": body.c1, "scheme": body.scheme}
            )
        except KeyFormatError as exc:
            raise _bad_request(str(exc)) from exc
        try:
            if body.scheme == "ecc":
                m0 = scheme.decrypt_dictator(sk0, ct)
            else:
                m0 = modp.modp_decrypt_dictator(modp.MODP_GROUPS[body.scheme], sk0, ct)
        except NegativeResultError as exc:
            raise ApiFailure(422, "crypto_failure", str(exc)) from exc
        return {"m0": str(m0), "m0_text": formats.decode_text_message(m0)}

    @app.post("/api/decrypt-alice")
    def decrypt_alice(body: DecryptAliceRequest):
        _check_scheme(body.scheme)
        if body.method not in ("brute", "bsgs"):
            raise _bad_request(f"unknown method {body.method!r}")
        if body.bound < 1:
            raise _bad_request("bound must be at least 1")
        t = _parse_secret(body.t, body.scheme)
        try:
            _, ct = formats.ciphertext_from_json(
                {"c0": "0", "c1": body.c1, "scheme": body.scheme}
            )
        except KeyFormatError as exc:
            raise _bad_request(str(exc)) from exc
        table = None
        if (
            body.scheme == "ecc"
            and body.method == "bsgs"
            and body.bound <= scheme.DEFAULT_COVERT_BOUND
        ):
            table = app.state.baby_table
        try:
            if body.scheme == "ecc":
                alice = scheme.AliceKey.from_scalar(t)
                cm = scheme.decrypt_alice(
                    alice, ct.c1, bound=body.bound, method=body.method, table=table
                )
            else:
                cm = modp.modp_decrypt_alice(
                    modp.MODP_GROUPS[body.scheme], t, ct.c1,
                    bound=body.bound, method=body.method,
                )
        except CovertNotFoundError as exc:
            raise ApiFailure(422, "not_found_cm", str(exc)) from exc
        except (AnamorphError, ValueError) as exc:
            raise _bad_request(str(exc)) from exc
        result: dict = {"cm": cm}
        if body.decode_schema:
            try:
                result["schema"] = codec.schema_to_json(codec.decode_schema(cm))
            except AnamorphError:
                result["schema"] = None
        return result

    return app


app = create_app()


def main(argv: list[str] | None = None) -> int:
    """Run the service; listen address from --listen or the environment."""
    import uvicorn

    parser = argparse.ArgumentParser(prog="anamorph-api")
    parser.add_argument(
        "--listen",
        default=os.environ.get(LISTEN_ENV_VAR, DEFAULT_LISTEN),
        help=f"host:port to bind (default {DEFAULT_LISTEN}, "
        f"or ${LISTEN_ENV_VAR})",
    )
    args = parser.parse_args(argv)
    host, _, port_text = args.listen.rpartition(":")
    if not host or not port_text.isdigit():
        parser.error(f"--listen must look like host:port, got {args.listen!r}")
    uvicorn.run(app, host=host, port=int(port_text))
    return 0


if __name__ == "__main__":
    main()

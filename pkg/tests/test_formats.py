import json
import random

import pytest

from anamorph import formats
from anamorph.curve import G, scalar_mul
from anamorph.errors import KeyFormatError
from anamorph.formats import (
    KeyFile,
    ciphertext_from_json,
    ciphertext_to_json,
    decode_text_message,
    dumps_canonical,
    encode_text_message,
    generate_keyfile,
    keyfile_from_json,
)
from anamorph.modp import MODP_TOY_23, modp_encrypt
from anamorph.scheme import encrypt, keygen_alice, keygen_dictator


class TestTextMessages:
    def test_round_trip(self):
        for text in ("hi", "I am loyal", "", "café ☕", "x" * 31):
            assert decode_text_message(encode_text_message(text)) == text

    def test_too_long(self):
        with pytest.raises(ValueError):
            encode_text_message("x" * 32)

    def test_non_text_integers_stay_integers(self):
        assert decode_text_message(6) is None  # control byte, not printable
        assert decode_text_message(2**200 + 12345) is None or isinstance(
            decode_text_message(2**200 + 12345), str
        )

    def test_known_value(self):
        assert encode_text_message("hi") == int.from_bytes(b"hi", "big")


class TestKeyFiles:
    @pytest.mark.parametrize("scheme_name", formats.SCHEMES)
    @pytest.mark.parametrize("role", formats.ROLES)
    def test_generate_and_reload(self, role, scheme_name):
        kf = generate_keyfile(role, scheme_name, random.Random(42))
        doc = kf.to_json()
        assert doc["role"] == role
        assert doc["scheme"] == scheme_name
        loaded = keyfile_from_json(doc)
        assert loaded == kf

    def test_deterministic_given_seed(self):
        a = generate_keyfile("alice", "ecc", random.Random(7))
        b = generate_keyfile("alice", "ecc", random.Random(7))
        assert dumps_canonical(a.to_json()) == dumps_canonical(b.to_json())

    def test_tampered_public_rejected(self):
        kf = generate_keyfile("dictator", "ecc", random.Random(1))
        doc = kf.to_json()
        doc["public"] = formats.curve.point_hex(scalar_mul(2, G))
        with pytest.raises(KeyFormatError, match="does not match"):
            keyfile_from_json(doc)

    def test_tampered_modp_public_rejected(self):
        kf = generate_keyfile("dictator", "modp-toy-23", random.Random(1))
        doc = kf.to_json()
        doc["public"] = str((kf.public % 21) + 2)
        assert doc["public"] != str(kf.public)
        with pytest.raises(KeyFormatError):
            keyfile_from_json(doc)

    def test_unknown_role_and_scheme(self):
        with pytest.raises(KeyFormatError):
            generate_keyfile("emperor", "ecc")
        with pytest.raises(KeyFormatError):
            generate_keyfile("alice", "rsa-4096")
        with pytest.raises(KeyFormatError):
            keyfile_from_json({"role": "alice"})


class TestCiphertextRecords:
    def test_ecc_round_trip(self):
        rng = random.Random(3)
        dictator = keygen_dictator(rng)
        ct = encrypt(dictator.pk, 1234, 56, keygen_alice(rng).t)
        doc = ciphertext_to_json(ct, "ecc")
        assert doc["scheme"] == "ecc"
        assert doc["c0"] == str(ct.c0)
        name, back = ciphertext_from_json(doc)
        assert (name, back) == ("ecc", ct)
        json.dumps(doc)  # must be serializable as-is

    def test_modp_round_trip(self):
        ct = modp_encrypt(MODP_TOY_23, pk=8, m0=5, cm=3, t=4)
        doc = ciphertext_to_json(ct, "modp-toy-23")
        assert doc == {"c0": "17", "c1": "17", "scheme": "modp-toy-23"}
        name, back = ciphertext_from_json(doc)
        assert (name, back) == ("modp-toy-23", ct)

    def test_malformed_records(self):
        with pytest.raises(KeyFormatError):
            ciphertext_from_json({"c0": "12"})
        with pytest.raises(KeyFormatError):
            ciphertext_from_json({"c0": "-1", "c1": "05", "scheme": "ecc"})
        with pytest.raises(KeyFormatError):
            ciphertext_from_json({"c0": "12", "c1": "00", "scheme": "ecc"})
        with pytest.raises(KeyFormatError):
            ciphertext_from_json({"c0": "12", "c1": "99", "scheme": "modp-toy-23"})
        with pytest.raises(KeyFormatError):
            ciphertext_from_json({"c0": "12", "c1": "1", "scheme": "nope"})

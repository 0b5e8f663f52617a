import type { KeyPair, SchemaFields } from "./types.js";

// Structural checks only. The page never does curve math; a pasted key
// that is well-formed but wrong simply fails its decryption visibly.

const SCALAR_HEX = /^[0-9a-f]{64}$/;
const POINT_HEX = /^0[23][0-9a-f]{64}$/;

export function validateKeyPair(pair: KeyPair): string | null {
  if (!SCALAR_HEX.test(pair.secret.toLowerCase())) {
    return "secret must be 64 hex characters";
  }
  if (!POINT_HEX.test(pair.public.toLowerCase())) {
    return "public key must be 66 hex characters starting 02 or 03";
  }
  return null;
}

export function validateSchemaFields(fields: SchemaFields): string | null {
  if (!Number.isInteger(fields.action) || fields.action < 0 || fields.action >= 64) {
    return "action must be an integer in [0, 64)";
  }
  if (
    !Number.isInteger(fields.timeMinutes) ||
    fields.timeMinutes < 0 ||
    fields.timeMinutes >= 1440
  ) {
    return "time must be a minute of the day in [0, 1440)";
  }
  if (!Number.isInteger(fields.location) || fields.location < 0 || fields.location >= 256) {
    return "location must be an integer in [0, 256)";
  }
  if (fields.flags.length !== 4) {
    return "exactly four flags required";
  }
  return null;
}

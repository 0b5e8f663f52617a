"""Pack a small command schema into the 30-bit covert integer.

Layout (schema "v1", a local convention): action in bits 29..24, time in
bits 23..12, location in bits 11..4, flags in bits 3..0 with flags[0] as
bit 3. Time gets a 12-bit slot although minutes-of-day only needs 11; a
decoded time of 1440 or more is structurally fine but semantically flagged.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SchemaError

SCHEMA_VERSION = "v1"

ACTION_BITS = 6
TIME_BITS = 12
LOCATION_BITS = 8
FLAG_BITS = 4
TOTAL_BITS = ACTION_BITS + TIME_BITS + LOCATION_BITS + FLAG_BITS  # 30

MINUTES_PER_DAY = 1440


@dataclass(frozen=True)
class CovertSchema:
    """A covert command: action code, time of day, location code, 4 flags."""

    action: int
    time_minutes: int
    location: int
    flags: tuple[bool, bool, bool, bool]

    def __post_init__(self):
        if not 0 <= self.action < (1 << ACTION_BITS):
            raise SchemaError(f"action {self.action} outside [0, 64)")
        if not 0 <= self.time_minutes < (1 << TIME_BITS):
            raise SchemaError(f"time {self.time_minutes} outside the 12-bit slot")
        if not 0 <= self.location < (1 << LOCATION_BITS):
            raise SchemaError(f"location {self.location} outside [0, 256)")
        if len(self.flags) != FLAG_BITS:
            raise SchemaError("exactly four flags required")
        object.__setattr__(self, "flags", tuple(bool(f) for f in self.flags))

    @property
    def time_field_valid(self) -> bool:
        """Whether the time field is a real minute of the day."""
        return self.time_minutes < MINUTES_PER_DAY


def encode_schema(schema: CovertSchema) -> int:
    """Pack into the covert integer; always below 2^30.

    Raises:
        SchemaError: any field out of range, including a time field past
            23:59 (only decoding tolerates those).
    """
    if not schema.time_field_valid:
        raise SchemaError(f"time {schema.time_minutes} outside [0, {MINUTES_PER_DAY})")
    flag_bits = 0
    for flag in schema.flags:  # flags[0] lands in the highest of the 4 bits
        flag_bits = (flag_bits << 1) | int(flag)
    return (
        (schema.action << (TIME_BITS + LOCATION_BITS + FLAG_BITS))
        | (schema.time_minutes << (LOCATION_BITS + FLAG_BITS))
        | (schema.location << FLAG_BITS)
        | flag_bits
    )


def decode_schema(cm: int) -> CovertSchema:
    """Exact inverse of :func:`encode_schema`.

    Decoding is structural: a time field of 1440..4095 comes back as-is
    with ``time_field_valid`` False.

    Raises:
        SchemaError: cm outside [0, 2^30).
    """
    if not 0 <= cm < (1 << TOTAL_BITS):
        raise SchemaError(f"packed value {cm} outside [0, 2^30)")
    flag_bits = cm & ((1 << FLAG_BITS) - 1)
    flags = tuple(bool((flag_bits >> (FLAG_BITS - 1 - i)) & 1) for i in range(FLAG_BITS))
    return CovertSchema(
        action=cm >> (TIME_BITS + LOCATION_BITS + FLAG_BITS),
        time_minutes=(cm >> (LOCATION_BITS + FLAG_BITS)) & ((1 << TIME_BITS) - 1),
        location=(cm >> FLAG_BITS) & ((1 << LOCATION_BITS) - 1),
        flags=flags,
    )


def schema_to_json(schema: CovertSchema) -> dict:
    """The wire representation used by the API and UI."""
    return {
        "action": schema.action,
        "time_minutes": schema.time_minutes,
        "location": schema.location,
        "flags": list(schema.flags),
        "schema": SCHEMA_VERSION,
    }


def schema_from_json(data: dict) -> CovertSchema:
    if data.get("schema", SCHEMA_VERSION) != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema version {data.get('schema')!r}")
    try:
        flags = data.get("flags", [False] * FLAG_BITS)
        return CovertSchema(
            action=int(data.get("action", 0)),
            time_minutes=int(data.get("time_minutes", 0)),
            location=int(data.get("location", 0)),
            flags=tuple(bool(f) for f in flags),
        )
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"malformed schema document: {exc}") from exc

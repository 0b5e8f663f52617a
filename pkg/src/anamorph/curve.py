"""secp256k1 group arithmetic in affine coordinates.

Points are immutable; all operations are pure functions, so everything here
is safe to share across threads.

WARNING: none of this is constant-time. Scalar multiplication leaks timing
information about its operand. This package is a research artifact for
experimenting with dual-decryption ciphertexts, not a hardened crypto
library. Do not use it to protect real secrets.
"""

from __future__ import annotations

from .errors import IdentityPointError, PointDecodeError
from ._intmath import mod_inv

# SEC 2 domain parameters for secp256k1 (y^2 = x^3 + 7 over F_P, cofactor 1).
P = 0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEFFFFFC2F
N = 0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEBAAEDCE6AF48A03BBFD25E8CD0364141
B = 7
GX = 0x79BE667EF9DCBBAC55A06295CE870B07029BFCDB2DCE28D959F2815B16F81798
GY = 0x483ADA7726A3C4655DA4FBFC0E1108A8FD17B448A68554199C47D08FFB10D4B8

_IDENTITY_BYTES = b"\x00"


def is_on_curve(x: int | None, y: int | None) -> bool:
    """Whether (x, y) satisfies y^2 = x^3 + 7 with coordinates in [0, P)."""
    if x is None:
        return True  # the identity belongs to the group
    if not (0 <= x < P and 0 <= y < P):
        return False
    return (y * y - x * x * x - B) % P == 0


class Point:
    """A point on secp256k1: affine coordinates, or the identity.

    Construct with ``Point(x, y)``, which validates field range and the
    curve equation, or use the module-level ``IDENTITY`` singleton.
    """

    __slots__ = ("x", "y")

    x: int | None
    y: int | None

    def __init__(self, x: int | None, y: int | None):
        if (x is None) != (y is None):
            raise ValueError("coordinates must be both set or both None")
        if x is not None and not is_on_curve(x, y):
            raise ValueError("point is not on the secp256k1 curve")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @classmethod
    def _raw(cls, x: int, y: int) -> "Point":
        # Fast path for results of group operations, which are on the curve
        # by closure; skips the validation modmuls.
        pt = object.__new__(cls)
        object.__setattr__(pt, "x", x)
        object.__setattr__(pt, "y", y)
        return pt

    def __setattr__(self, name, value):
        raise AttributeError("Point is immutable")

    @property
    def is_identity(self) -> bool:
        return self.x is None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Point):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self) -> int:
        return hash((self.x, self.y))

    def __repr__(self) -> str:
        if self.is_identity:
            return "Point(identity)"
        return f"Point(0x{self.x:064x}, 0x{self.y:064x})"


IDENTITY = Point(None, None)
G = Point(GX, GY)


def point_neg(pt: Point) -> Point:
    """Additive inverse: mirror across the x axis; identity negates to itself."""
    if pt.is_identity:
        return IDENTITY
    return Point._raw(pt.x, (P - pt.y) % P)


def point_add(p1: Point, p2: Point) -> Point:
    """Group addition, total on valid points.

    Handles identity operands, doubling, and inverse pairs (which sum to
    the identity).
    """
    if p1.is_identity:
        return p2
    if p2.is_identity:
        return p1
    x1, y1 = p1.x, p1.y
    x2, y2 = p2.x, p2.y
    if x1 == x2:
        if (y1 + y2) % P == 0:
            return IDENTITY
        # Doubling; y1 == y2 != 0 here since the inverse case was handled.
        s = 3 * x1 * x1 * mod_inv(2 * y1, P) % P
    else:
        s = (y2 - y1) * mod_inv(x2 - x1, P) % P
    x3 = (s * s - x1 - x2) % P
    y3 = (s * (x1 - x3) - y1) % P
    return Point._raw(x3, y3)


def scalar_mul(k: int, pt: Point) -> Point:
    """k*pt by double-and-add. k must be a non-negative integer.

    Not constant-time (see module docstring). ``scalar_mul(N, G)`` is the
    identity; for k in [1, N) and pt of full order the result never is.
    """
    if k < 0:
        raise ValueError("scalar must be non-negative")
    result = IDENTITY
    addend = pt
    while k:
        if k & 1:
            result = point_add(result, addend)
        addend = point_add(addend, addend)
        k >>= 1
    return result


def encode_point(pt: Point) -> bytes:
    """Compressed encoding: 0x02/0x03 prefix + 32-byte big-endian x.

    The identity encodes as the single byte 0x00.
    """
    if pt.is_identity:
        return _IDENTITY_BYTES
    prefix = b"\x02" if pt.y % 2 == 0 else b"\x03"
    return prefix + pt.x.to_bytes(32, "big")


def decode_point(data: bytes) -> Point:
    """Inverse of :func:`encode_point`; validates curve membership.

    Raises:
        PointDecodeError: wrong length, unknown prefix byte, or an x
            coordinate with no matching y on the curve.
    """
    if data == _IDENTITY_BYTES:
        return IDENTITY
    if len(data) != 33:
        raise PointDecodeError(f"expected 33 bytes or the identity byte, got {len(data)}")
    prefix = data[0]
    if prefix not in (0x02, 0x03):
        raise PointDecodeError(f"invalid prefix byte 0x{prefix:02x}")
    x = int.from_bytes(data[1:], "big")
    if x >= P:
        raise PointDecodeError("x coordinate out of field range")
    y_sq = (x * x * x + B) % P
    # P = 3 (mod 4), so a square root, when it exists, is c^((P+1)/4).
    y = pow(y_sq, (P + 1) // 4, P)
    if y * y % P != y_sq:
        raise PointDecodeError("x coordinate is not on the curve")
    if (y % 2 == 0) != (prefix == 0x02):
        y = P - y
    return Point._raw(x, y)


def point_to_int(pt: Point) -> int:
    """Integer value of the 64-byte concatenation x || y, big-endian.

    Injective on non-identity points; the identity has no integer value.
    """
    if pt.is_identity:
        raise IdentityPointError("the identity point has no integer encoding")
    return (pt.x << 256) | pt.y


def point_hex(pt: Point) -> str:
    """Lowercase hex of the compressed encoding; used in key and cipher files."""
    return encode_point(pt).hex()


def point_from_hex(text: str) -> Point:
    try:
        raw = bytes.fromhex(text)
    except ValueError as exc:
        raise PointDecodeError(f"not valid hex: {text!r}") from exc
    return decode_point(raw)


def scalar_hex(k: int) -> str:
    """64-char big-endian hex of a scalar in [0, N)."""
    if not 0 <= k < N:
        raise ValueError("scalar out of range")
    return f"{k:064x}"


def scalar_from_hex(text: str) -> int:
    k = int(text, 16)
    if not 0 <= k < N:
        raise ValueError("scalar out of range")
    return k

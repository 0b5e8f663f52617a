"""Modular arithmetic helpers.

gmpy2 is used when available: its modular inverse is roughly 8x faster than
CPython's ``pow(x, -1, m)`` for 256-bit operands and its modexp roughly 7x
faster at 2048 bits, which dominates the brute-force search benchmarks.
The stdlib fallback is exact and keeps the package dependency-free at runtime.
"""

try:
    from gmpy2 import invert as _g_invert, powmod as _g_powmod

    def mod_inv(a: int, m: int) -> int:
        return int(_g_invert(a, m))

    def mod_pow(base: int, exp: int, m: int) -> int:
        return int(_g_powmod(base, exp, m))

except ImportError:  # pragma: no cover - exercised only without gmpy2

    def mod_inv(a: int, m: int) -> int:
        return pow(a, -1, m)

    def mod_pow(base: int, exp: int, m: int) -> int:
        return pow(base, exp, m)

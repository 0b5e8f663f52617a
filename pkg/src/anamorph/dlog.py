"""Small-range discrete logarithm solving over an abstract abelian group.

Two strategies: exhaustive search (one group operation per candidate) and
Baby-Step Giant-Step, which trades O(sqrt(bound)) memory for O(sqrt(bound))
group operations. Both return the smallest exponent k in [0, bound] with
k*g == target, or None when no such k exists.

The group is abstract so the same solvers serve the elliptic-curve group
and the multiplicative group mod p, and so tests can count operations or
substitute cheap groups.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any

from . import curve
from .errors import TableCapacityError

#: Baby tables refuse to grow beyond this many entries (~2^28 entries caps
#: the search bound near 2^56, far past anything this package needs).
DEFAULT_TABLE_BUDGET = 1 << 28


class Group(ABC):
    """A finite abelian group written additively: k*g means g combined k times.

    Implementations set ``identity`` and ``generator`` attributes and must
    satisfy the usual laws (associativity, neutral element, inverses);
    ``element_key`` returns a canonical byte string for hash-table lookup.
    """

    identity: Any
    generator: Any

    @abstractmethod
    def combine(self, a, b):
        """The group operation."""

    @abstractmethod
    def inverse(self, a):
        """The inverse element of a."""

    @abstractmethod
    def element_key(self, a) -> bytes:
        """Canonical byte key for a, equal iff the elements are equal."""


class EcGroup(Group):
    """secp256k1 under point addition, generated by the base point."""

    def __init__(self):
        self.identity = curve.IDENTITY
        self.generator = curve.G

    def combine(self, a, b):
        return curve.point_add(a, b)

    def inverse(self, a):
        return curve.point_neg(a)

    def element_key(self, a) -> bytes:
        return curve.encode_point(a)


class CountingGroup(Group):
    """Wraps a group and counts combine calls; used for cost instrumentation."""

    def __init__(self, inner: Group):
        self.inner = inner
        self.identity = inner.identity
        self.generator = inner.generator
        self.ops = 0

    def combine(self, a, b):
        self.ops += 1
        return self.inner.combine(a, b)

    def inverse(self, a):
        return self.inner.inverse(a)

    def element_key(self, a) -> bytes:
        return self.inner.element_key(a)


def ceil_sqrt(x: int) -> int:
    s = math.isqrt(x)
    return s if s * s == x else s + 1


@dataclass
class BabyTable:
    """Precomputed baby steps: element_key(j*g) -> j for j in [0, m).

    ``giant_step`` holds the inverse of m*g, the stride the giant-step scan
    applies repeatedly. Immutable after construction; safe to share across
    threads and reuse across many solves with the same group and bound.
    """

    m: int
    entries: dict[bytes, int]
    giant_step: Any


def build_baby_table(
    bound: int, group: Group, max_entries: int = DEFAULT_TABLE_BUDGET
) -> BabyTable:
    """Build the baby-step table for searches over [0, bound].

    Table width is m = ceil(sqrt(bound + 1)). Raises TableCapacityError when
    m would exceed ``max_entries``.
    """
    if bound < 0:
        raise ValueError("bound must be non-negative")
    m = ceil_sqrt(bound + 1)
    if m > max_entries:
        raise TableCapacityError(
            f"baby table of {m} entries exceeds the budget of {max_entries}"
        )
    entries: dict[bytes, int] = {}
    acc = group.identity
    g = group.generator
    for j in range(m):
        # setdefault keeps the smallest j when the group order is below m.
        entries.setdefault(group.element_key(acc), j)
        acc = group.combine(acc, g)
    # After the loop acc is m*g: the giant-step stride comes for free.
    return BabyTable(m=m, entries=entries, giant_step=group.inverse(acc))


def solve_brute(target, bound: int, group: Group) -> int | None:
    """Smallest k in [0, bound] with k*g == target, by exhaustive search.

    Costs at most bound + 1 combine operations (exactly k when found at k).
    """
    if bound < 0:
        raise ValueError("bound must be non-negative")
    acc = group.identity
    g = group.generator
    combine = group.combine
    for k in range(bound + 1):
        if acc == target:
            return k
        acc = combine(acc, g)
    return None


def solve_bsgs(
    target, bound: int, group: Group, table: BabyTable | None = None
) -> int | None:
    """Smallest k in [0, bound] with k*g == target, by Baby-Step Giant-Step.

    A table built by :func:`build_baby_table` for this group may be passed
    to amortise its cost across solves; it must be at least as wide as this
    bound requires. Without one, a table is built on demand (the "cold"
    cost). Total work is about 2*sqrt(bound) combine operations cold, half
    that warm.
    """
    if bound < 0:
        raise ValueError("bound must be non-negative")
    if table is None:
        table = build_baby_table(bound, group)
    m = table.m
    if m < ceil_sqrt(bound + 1):
        raise ValueError(
            f"baby table width {m} is too small for bound {bound}"
        )
    entries = table.entries
    element_key = group.element_key
    combine = group.combine
    stride = table.giant_step
    gamma = target
    giant_steps = (bound + m) // m  # ceil((bound + 1) / m)
    for i in range(giant_steps):
        j = entries.get(element_key(gamma))
        if j is not None:
            k = i * m + j
            if k <= bound:
                return k
        gamma = combine(gamma, stride)
    return None

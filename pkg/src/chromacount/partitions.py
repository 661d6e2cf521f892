"""Partitions of a vertex count into a fixed number of color classes.

Counts of partition-compatible graphs are exact powers of two, so they are
carried around as exponents (:class:`Log2Count`) and only expanded to integers
at report boundaries or inside the brute-force oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator

from .errors import DomainError


@dataclass(frozen=True)
class Partition:
    """Multiset of positive color-class sizes, stored non-increasing.

    Any iterable of parts is accepted; the canonical (sorted) form is what is
    kept, so ``Partition((1, 3, 1)) == Partition((3, 1, 1))``.
    """

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        canonical = tuple(sorted(parts, reverse=True))
        if not canonical:
            raise DomainError("a partition needs at least one part")
        if any(not isinstance(x, int) or x < 1 for x in canonical):
            raise DomainError(f"parts must be positive integers: {canonical}")
        object.__setattr__(self, "parts", canonical)

    @property
    def v(self) -> int:
        """Total vertex count."""
        return sum(self.parts)

    @property
    def n(self) -> int:
        """Number of color classes."""
        return len(self.parts)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.parts)

    @classmethod
    def from_text(cls, text: str) -> "Partition":
        try:
            return cls(int(piece) for piece in text.split(","))
        except ValueError as exc:
            raise DomainError(f"bad partition text: {text!r}") from exc

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)


@dataclass(frozen=True)
class Log2Count:
    """A count known to equal ``2 ** exponent`` exactly."""

    exponent: int

    def __post_init__(self):
        if self.exponent < 0:
            raise DomainError(f"negative exponent: {self.exponent}")

    def exact(self) -> int:
        """Expand to the integer count (exact, arbitrary precision)."""
        return 1 << self.exponent


def _check_domain(v: int, n: int) -> None:
    if v < 1 or n < 1 or n > v:
        raise DomainError(f"no partition of {v} into {n} positive parts")


def enumerate_partitions(v: int, n: int) -> Iterator[Partition]:
    """Every partition of ``v`` into exactly ``n`` positive parts, once each.

    Yields in reverse-lexicographic order on the canonical form, e.g.
    (4, 2) gives 3,1 then 2,2.
    """
    _check_domain(v, n)

    def gen(remaining: int, slots: int, max_part: int) -> Iterator[tuple[int, ...]]:
        if slots == 1:
            if 1 <= remaining <= max_part:
                yield (remaining,)
            return
        top = min(max_part, remaining - slots + 1)
        bottom = -(-remaining // slots)  # ceil: keep later parts <= the first
        for first in range(top, bottom - 1, -1):
            for rest in gen(remaining - first, slots - 1, first):
                yield (first,) + rest

    for parts in gen(v, n, v):
        yield Partition(parts)


def exponent(p: Partition) -> Log2Count:
    """Count exponent for graphs compatible with ``p``: cross-class pair count.

    Computed as the nested sum (each class size times the sizes after it);
    equals the closed form ``(v^2 - sum of squares) / 2``.
    """
    total = 0
    suffix = p.v
    for x in p.parts:
        suffix -= x
        total += x * suffix
    return Log2Count(total)


def exponent_closed_form(p: Partition) -> Log2Count:
    """Independent closed form of :func:`exponent`, kept for cross-checking."""
    return Log2Count((p.v**2 - sum(x * x for x in p.parts)) // 2)


def max_partition(v: int, n: int) -> tuple[Partition, Log2Count]:
    """Argmax partition for the count exponent, and the maximal exponent.

    Exhaustive over :func:`enumerate_partitions`; ties (no exact ties exist,
    but the contract is deterministic anyway) break to the first in
    enumeration order.
    """
    _check_domain(v, n)
    best: tuple[Partition, Log2Count] | None = None
    for p in enumerate_partitions(v, n):
        e = exponent(p)
        if best is None or e.exponent > best[1].exponent:
            best = (p, e)
    assert best is not None
    return best


def balanced_partition(v: int, n: int) -> Partition:
    """Closed-form maximizer candidate: all parts within 1 of each other."""
    _check_domain(v, n)
    big, rem = divmod(v, n)
    return Partition([big + 1] * rem + [big] * (n - rem))


def class_pair_sum(p: Partition) -> int:
    """Sum over parts of C(x, 2): the intra-class pair count of ``p``."""
    return sum(comb(x, 2) for x in p.parts)

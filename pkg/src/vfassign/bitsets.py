"""Small helpers for index sets stored as Python ints.

Vertex sets and facet sets are kept as arbitrary-precision int bitsets;
bit i set means index i is in the set. Intersection, union and subset
tests are then single int operations.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def full_mask(n: int) -> int:
    """Bitset containing indices 0..n-1."""
    return (1 << n) - 1


def from_indices(indices: Iterable[int]) -> int:
    """Bitset from an iterable of nonnegative indices."""
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def to_indices(mask: int) -> tuple[int, ...]:
    """Sorted tuple of the indices in a bitset."""
    return tuple(iter_indices(mask))


def iter_indices(mask: int) -> Iterator[int]:
    """Yield the indices in a bitset in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def is_subset(a: int, b: int) -> bool:
    """True if bitset a is contained in bitset b."""
    return a & ~b == 0

"""Small-universe subsets encoded as Python int bitmasks."""

from __future__ import annotations

from typing import Iterable, Iterator


def bit_indices(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    """Pack an iterable of bit positions into a mask."""
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask

"""Vertex sets as Python ints: bit v set iff v is a member."""
from typing import Iterable, Iterator


def bit(v: int) -> int:
    return 1 << v


def from_vertices(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> Iterator[int]:
    """Members in increasing order"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def size(mask: int) -> int:
    return bin(mask).count("1")

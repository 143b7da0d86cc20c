"""Subsets of a finite carrier encoded as int bit vectors."""

from collections.abc import Iterable, Iterator


def mask_of(elems: Iterable[int]) -> int:
    m = 0
    for e in elems:
        m |= 1 << e
    return m


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def submasks(universe: int) -> Iterator[int]:
    """Every submask of `universe`, including 0 and `universe` itself."""
    sub = 0
    while True:
        yield sub
        if sub == universe:
            return
        sub = (sub - universe) & universe

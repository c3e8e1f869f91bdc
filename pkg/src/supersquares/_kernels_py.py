"""Pure-Python search kernels over bitmask sets.

Each candidate is an int whose set bits are the points it covers.  The
compiled module ``_kernels`` exposes the same three functions.
"""

from __future__ import annotations

from collections.abc import Sequence


def _by_bit(masks: Sequence[int], nbits: int) -> list[list[int]]:
    table: list[list[int]] = [[] for _ in range(nbits)]
    for i, m in enumerate(masks):
        while m:
            low = m & -m
            table[low.bit_length() - 1].append(i)
            m ^= low
    return table


def exact_cover(masks: Sequence[int], full: int, start: Sequence[int] = ()) -> list[tuple[int, ...]]:
    """All sets of candidate indices whose masks partition ``full``.

    Branches on the lowest uncovered bit, so each family is produced once.
    ``start`` pre-selects candidates (used to split work across processes).
    Solutions list indices in selection order.
    """
    table = _by_bit(masks, full.bit_length())
    covered = 0
    for i in start:
        if covered & masks[i]:
            return []
        covered |= masks[i]
    chosen = list(start)
    out: list[tuple[int, ...]] = []

    def search(covered: int) -> None:
        free = full & ~covered
        if not free:
            out.append(tuple(chosen))
            return
        bit = (free & -free).bit_length() - 1
        for i in table[bit]:
            m = masks[i]
            if not covered & m:
                chosen.append(i)
                search(covered | m)
                chosen.pop()

    search(covered)
    return out


def max_disjoint_family(masks: Sequence[int], block_size: int) -> tuple[int, ...]:
    """A largest set of pairwise disjoint masks (each of ``block_size`` bits).

    Branch and bound: a partial family can grow by at most
    (uncovered bits reachable) // block_size members.
    """
    n = len(masks)
    # reach[i]: union of masks[i:]
    reach = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        reach[i] = reach[i + 1] | masks[i]
    best: list[tuple[int, ...]] = [()]
    chosen: list[int] = []

    def search(start: int, covered: int) -> None:
        if len(chosen) > len(best[0]):
            best[0] = tuple(chosen)
        for i in range(start, n):
            if len(chosen) + (reach[i] & ~covered).bit_count() // block_size <= len(best[0]):
                return
            m = masks[i]
            if not covered & m:
                chosen.append(i)
                search(i + 1, covered | m)
                chosen.pop()

    search(0, 0)
    return best[0]


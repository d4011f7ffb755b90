"""Set partitions as restricted growth strings, in lexicographic order."""

from __future__ import annotations

from typing import Iterator


def restricted_growth_strings(m: int, k: int | None = None) -> Iterator[list[int]]:
    """Yield every restricted growth string of length ``m`` in lex order.

    A restricted growth string ``a`` has ``a[0] == 0`` and
    ``a[i] <= max(a[:i]) + 1``; it encodes the partition of ``range(m)``
    whose blocks are the level sets of ``a``.  With ``k`` given, only
    strings with exactly ``k`` blocks are produced.

    The same list object is mutated and re-yielded; copy it to keep it.
    """
    if m == 0:
        if k in (None, 0):
            yield []
        return
    if k is not None and not (1 <= k <= m):
        return
    yield from _rgs(m, k)


def _rgs(m: int, k: int | None) -> Iterator[list[int]]:
    limit = m if k is None else k
    a = [0] * m
    # opened[i]: number of blocks used by a[:i+1]
    opened = [1] * m

    def bounds(i: int) -> tuple[int, int]:
        used = opened[i - 1]
        hi = min(used, limit - 1)
        if k is None:
            return 0, hi
        # positions i..m-1 must still open k - used blocks
        must_open = k - used
        remaining = m - i
        if must_open == remaining:
            return used, used
        return 0, hi

    i = 1
    if m == 1:
        yield a
        return
    lo, hi = bounds(1)
    a[1] = lo - 1
    # iterative depth-first walk over positions 1..m-1
    his = [0] * m
    his[1] = hi
    while i >= 1:
        if a[i] < his[i]:
            a[i] += 1
            opened[i] = max(opened[i - 1], a[i] + 1)
            if i == m - 1:
                yield a
                continue
            i += 1
            lo, hi = bounds(i)
            a[i] = lo - 1
            his[i] = hi
        else:
            i -= 1


def merge_patterns(m: int, merges: int) -> Iterator[list[int]]:
    """Partitions of ``range(m)`` into ``m - merges`` blocks, lex order.

    Each block after the first element of a class is one "merge"; the walk
    spends a fixed merge budget and never enters a dead branch, so the cost
    is proportional to the output, O(m^(2*merges)) for fixed ``merges``.
    """
    if merges < 0 or merges >= max(m, 1):
        if m == 0 and merges == 0:
            yield []
        return
    a = [0] * m

    def walk(i: int, used: int, left: int) -> Iterator[list[int]]:
        if i == m:
            yield a
            return
        if left:
            for c in range(used):
                a[i] = c
                yield from walk(i + 1, used, left - 1)
        if m - i - 1 >= left:
            a[i] = used
            yield from walk(i + 1, used + 1, left)

    yield from walk(1, 1, merges)


def stirling2(m: int, k: int) -> int:
    """Stirling number of the second kind by the standard recurrence."""
    row = [1] + [0] * k
    for _ in range(m):
        new = [0] * (k + 1)
        for j in range(1, k + 1):
            new[j] = j * row[j] + row[j - 1]
        row = new
    return row[k]

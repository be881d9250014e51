"""Integer partitions, hook lengths, and the hook-length dimension formula.

Conventions: rows and columns of the Ferrers-Young diagram are 1-based, parts
are non-increasing, and the empty partition is the unique partition of 0.
"""

from __future__ import annotations

from collections import Counter
from math import factorial
from typing import Iterable, Iterator


class Partition(tuple):
    """A partition of an integer: a non-increasing tuple of positive parts.

    Immutable; equality, ordering and hashing are inherited from tuple, so a
    Partition compares equal to the plain tuple of its parts.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        self = super().__new__(cls, parts)
        prev = None
        for p in self:
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"parts must be positive integers, got {p!r}")
            if prev is not None and p > prev:
                raise ValueError(f"parts must be non-increasing, got {tuple(self)}")
            prev = p
        return self

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of n exactly once, in reverse-lexicographic order.

    The order starts at (n) and ends at (1, 1, ..., 1); it is deterministic
    and stable, which snapshot tests rely on.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n == 0:
        yield Partition()
        return
    parts = [n]
    while True:
        yield Partition(parts)
        # Strip trailing ones, then decrement the rightmost part above 1 and
        # redistribute the freed units greedily.
        i = len(parts) - 1
        ones = 0
        while i >= 0 and parts[i] == 1:
            ones += 1
            i -= 1
        if i < 0:
            return
        parts[i] -= 1
        cap = parts[i]
        rem = ones + 1
        del parts[i + 1:]
        while rem > 0:
            add = min(cap, rem)
            parts.append(add)
            rem -= add


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Ferrers-Young diagram (column lengths become parts)."""
    if not lam:
        return Partition()
    cols = [0] * lam[0]
    for part in lam:
        for j in range(part):
            cols[j] += 1
    return Partition(cols)


def hook_length(lam: Partition, i: int, j: int) -> int:
    """Hook length h(i, j) of cell (i, j), 1-based.

    h(i, j) = (arm) + (leg) + 1 = (lam_i - j) + (lam'_j - i) + 1.
    """
    if i < 1 or i > len(lam) or j < 1 or j > lam[i - 1]:
        raise ValueError(f"cell ({i},{j}) is not in the diagram of {tuple(lam)}")
    col_len = sum(1 for part in lam if part >= j)
    return (lam[i - 1] - j) + (col_len - i) + 1


def hook_rows(lam: Partition) -> list[list[int]]:
    """Hook lengths laid out like the diagram: row i holds h(i, 1..lam_i)."""
    cols = conjugate(lam)
    return [
        [(part - j) + (cols[j - 1] - i) + 1 for j in range(1, part + 1)]
        for i, part in enumerate(lam, start=1)
    ]


def hook_multiset(lam: Partition) -> Counter[int]:
    """Multiset of all hook lengths of lam; its cardinality is |lam|."""
    counts: Counter[int] = Counter()
    for row in hook_rows(lam):
        counts.update(row)
    return counts


def count_t_hooks(lam: Partition, t: int) -> int:
    """Number of cells whose hook length is divisible by t."""
    if t < 2:
        raise ValueError(f"t must be at least 2, got {t}")
    return sum(1 for row in hook_rows(lam) for h in row if h % t == 0)


def representation_dimension(lam: Partition) -> int:
    """n! divided by the product of all hook lengths (always an integer).

    This is the dimension of the irreducible symmetric-group representation
    labelled by lam.
    """
    prod = 1
    for row in hook_rows(lam):
        for h in row:
            prod *= h
    q, r = divmod(factorial(lam.size), prod)
    if r:
        raise ArithmeticError(
            f"hook product {prod} does not divide {lam.size}! for {tuple(lam)}"
        )
    return q

"""Bead abaci for partitions: structure numbers, t-cores, and t-quotients.

A partition with s parts (zeros allowed as padding) has structure numbers
B_i = lam_i - i + s, a strictly decreasing sequence. Placing a bead for each
B_i = t*(r-1) + c at row r >= 1 of runner c in {0, ..., t-1} gives the abacus
of the partition. Sliding a bead up one row removes one rim t-hook; sliding
every bead all the way up yields the t-core, and the bead pattern of each
runner, read on its own, decodes to one component of the t-quotient.

Bead-count convention: unless a caller supplies one, abaci are padded with
zero parts so the bead count s is the least multiple of t with s >= #parts.
Fixing s mod t pins down the labelling of the quotient components (changing
s by one cyclically permutes the runners); any two paddings that agree mod t
produce the same labelled quotient.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .partitions import Partition, count_t_hooks


@dataclass(frozen=True)
class Abacus:
    """t runners holding beads at positions (row, column), row >= 1."""

    t: int
    beads: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.t < 2:
            raise ValueError(f"runner count must be at least 2, got {self.t}")
        object.__setattr__(self, "beads", frozenset(self.beads))
        for r, c in self.beads:
            if r < 1 or not 0 <= c < self.t:
                raise ValueError(f"bead {(r, c)} outside runners 0..{self.t - 1}")

    @property
    def bead_count(self) -> int:
        return len(self.beads)

    def decoded_values(self) -> tuple[int, ...]:
        """Structure numbers encoded by the beads, sorted decreasing."""
        return tuple(
            sorted((self.t * (r - 1) + c for r, c in self.beads), reverse=True)
        )

    def column_rows(self, c: int) -> list[int]:
        """Occupied rows of runner c, ascending."""
        return sorted(r for r, cc in self.beads if cc == c)

    def __str__(self) -> str:
        rows = max((r for r, _ in self.beads), default=0)
        return "\n".join(
            " ".join("o" if (r, c) in self.beads else "." for c in range(self.t))
            for r in range(1, rows + 1)
        )


class CanonicalCoreAbacus(NamedTuple):
    """Unique per-runner bead counts (a_0, ..., a_{t-1}) of a t-core, a_0 = 0."""

    column_counts: tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.column_counts)

    def partition(self) -> Partition:
        beads = frozenset(
            (r, c)
            for c, count in enumerate(self.column_counts)
            for r in range(1, count + 1)
        )
        return partition_from_abacus(Abacus(self.t, beads))


@dataclass(frozen=True)
class CoreQuotient:
    """Image of a partition under the core/quotient bijection."""

    core: Partition
    quotient: tuple[Partition, ...]
    t: int

    @property
    def quotient_size(self) -> int:
        return sum(comp.size for comp in self.quotient)

    @property
    def size(self) -> int:
        """Size of the partition this pair composes to."""
        return self.core.size + self.t * self.quotient_size


def default_bead_count(num_parts: int, t: int) -> int:
    """Least multiple of t that is >= num_parts."""
    return -(-num_parts // t) * t


def structure_numbers(lam: Partition, pad_to: int | None = None) -> tuple[int, ...]:
    """B_i = lam_i - i + s for i = 1..s, with s parts after zero-padding.

    With the default s = #parts, B_i is the hook length of cell (i, 1).
    Padding by one extra zero part shifts every entry up by one and appends 0.
    """
    s = len(lam) if pad_to is None else pad_to
    if s < len(lam):
        raise ValueError(f"pad_to={s} is below the number of parts {len(lam)}")
    return tuple(
        (lam[i - 1] if i <= len(lam) else 0) - i + s for i in range(1, s + 1)
    )


def abacus_from_partition(
    lam: Partition, t: int, bead_count: int | None = None
) -> Abacus:
    """Abacus of lam on t runners; default bead count per the padding rule."""
    if t < 2:
        raise ValueError(f"t must be at least 2, got {t}")
    s = default_bead_count(len(lam), t) if bead_count is None else bead_count
    beads = frozenset(
        (b // t + 1, b % t) for b in structure_numbers(lam, pad_to=s)
    )
    return Abacus(t, beads)


def partition_from_abacus(ab: Abacus) -> Partition:
    """Decode an abacus back to its partition (trailing zero parts dropped)."""
    return _partition_from_values(ab.decoded_values())


def _partition_from_values(values: Iterable[int]) -> Partition:
    vs = sorted(values, reverse=True)
    s = len(vs)
    return Partition([p for i, b in enumerate(vs, start=1) if (p := b + i - s) > 0])


def slide_bead(ab: Abacus, bead: tuple[int, int]) -> Abacus:
    """Move one bead up a row; the decoded partition loses one rim t-hook."""
    if bead not in ab.beads:
        raise ValueError(f"no bead at {bead}")
    r, c = bead
    if r == 1:
        raise ValueError(f"bead {bead} is already in the top row")
    if (r - 1, c) in ab.beads:
        raise ValueError(f"target position {(r - 1, c)} is occupied")
    return Abacus(ab.t, (ab.beads - {bead}) | {(r - 1, c)})


def compact_columns(ab: Abacus) -> Abacus:
    """Slide every bead maximally upward in its runner (order-independent)."""
    beads = frozenset(
        (r, c)
        for c in range(ab.t)
        for r in range(1, len(ab.column_rows(c)) + 1)
    )
    return Abacus(ab.t, beads)


def t_core(lam: Partition, t: int) -> Partition:
    """The unique t-core obtained by removing rim t-hooks until none remain."""
    return partition_from_abacus(compact_columns(abacus_from_partition(lam, t)))


def quotient_components(ab: Abacus) -> tuple[Partition, ...]:
    """Decode each runner of ab on its own, as a one-runner abacus.

    Beads of runner c in rows r_1 < ... < r_m become the one-runner structure
    numbers r_j - 1 with bead count m. Unchanged when the bead count grows by
    a full multiple of t (each runner then gains row-1 beads, i.e. zero
    padding), which is why the multiple-of-t convention makes the labelling
    well defined.
    """
    return tuple(
        _partition_from_values(r - 1 for r in ab.column_rows(c))
        for c in range(ab.t)
    )


def decompose(lam: Partition, t: int) -> CoreQuotient:
    """Split lam into its t-core and t-quotient.

    The total quotient size equals the number of t-hooks of lam, and
    |lam| = |core| + t * (total quotient size).
    """
    ab = abacus_from_partition(lam, t)
    core = partition_from_abacus(compact_columns(ab))
    return CoreQuotient(core=core, quotient=quotient_components(ab), t=t)


def compose(cq: CoreQuotient) -> Partition:
    """Inverse of decompose: rebuild the partition from core and quotient."""
    t = cq.t
    if len(cq.quotient) != t:
        raise ValueError(f"quotient must have {t} components, got {len(cq.quotient)}")
    if count_t_hooks(cq.core, t) != 0:
        raise ValueError(f"core {tuple(cq.core)} has a {t}-hook")
    core_ab = abacus_from_partition(cq.core, t)
    counts = [len(core_ab.column_rows(c)) for c in range(t)]
    # Grow the padding (one bead lands atop every runner per t extra zero
    # parts) until each runner has at least as many beads as its component
    # has parts.
    extra = max(
        [len(comp) - counts[c] for c, comp in enumerate(cq.quotient)], default=0
    )
    if extra > 0:
        counts = [a + extra for a in counts]
    beads = set()
    for c, comp in enumerate(cq.quotient):
        a = counts[c]
        for pos in structure_numbers(comp, pad_to=a):
            beads.add((pos + 1, c))
    return partition_from_abacus(Abacus(t, frozenset(beads)))


def canonicalize_core_abacus(ab: Abacus) -> CanonicalCoreAbacus:
    """Unique bead-count tuple (0, a_1, ..., a_{t-1}) for a t-core abacus.

    The abacus must be in core form: every runner's beads fill rows 1..a_c
    with no gaps. The shift (a_0, ..., a_{t-1}) -> (a_1, ..., a_{t-1}, a_0 - 1)
    preserves the decoded partition and is applied until runner 0 is empty.
    """
    counts = []
    for c in range(ab.t):
        rows = ab.column_rows(c)
        if rows != list(range(1, len(rows) + 1)):
            raise ValueError(f"runner {c} has gaps: occupied rows {rows}")
        counts.append(len(rows))
    while counts[0] != 0:
        counts = counts[1:] + [counts[0] - 1]
    return CanonicalCoreAbacus(tuple(counts))

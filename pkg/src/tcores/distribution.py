"""Exact counts of partitions by number of t-hooks in a residue class.

Write p_t(a, b; n) for the number of partitions of n whose t-hook count is
congruent to a mod b. The core/quotient bijection turns this into a
convolution: a partition of n with exactly k t-hooks is a t-core of n - t*k
paired with a t-tuple of partitions of total size k, so

    p_t(a, b; n) = sum over k = a mod b, 0 <= t*k <= n of
                   c_t(n - t*k) * Q_t(k),

with Q_t(k) the number of t-tuples of total size k. Everything is exact
big-integer arithmetic; proportions are exact rationals rendered to a fixed
number of decimal places (round half to even).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import cores
from .partitions import count_t_hooks, enumerate_partitions
from .series import BigSeries, eta_inverse_power_series, partition_count_series

__all__ = [
    "BigSeries",
    "eta_inverse_power_series",
    "HookDistribution",
    "ResidueProfile",
    "Verdict",
    "SweepReport",
    "pt_count",
    "residue_profile",
    "brute_force_profile",
    "format_proportion",
    "verify_2hook_vanishing",
    "verify_3hook_vanishing",
    "sweep_2hook_vanishing",
    "sweep_3hook_vanishing",
    "get_engine",
    "VERIFIED",
    "HYPOTHESIS_NOT_MET",
    "COUNTEREXAMPLE",
]

BRUTE_FORCE_GUARD = 40

VERIFIED = "verified"
HYPOTHESIS_NOT_MET = "hypothesis-not-met"
COUNTEREXAMPLE = "counterexample"


def _core_count_array(t: int, n_max: int) -> list[int]:
    if t == 2:
        return [cores.c2(n) for n in range(n_max + 1)]
    if t == 3:
        return [cores.c3_divisor_sum(n) for n in range(n_max + 1)]
    return list(cores.ct_count_series(t, n_max))


class HookDistribution:
    """Precomputed series for counting partitions of n <= n_max by t-hooks."""

    def __init__(self, t: int, n_max: int) -> None:
        if t < 2:
            raise ValueError(f"t must be at least 2, got {t}")
        if n_max < 0:
            raise ValueError(f"n_max must be non-negative, got {n_max}")
        self.t = t
        self.n_max = n_max
        self.core_counts = _core_count_array(t, n_max)
        self.tuple_counts = eta_inverse_power_series(t, n_max // t).coeffs

    def count(self, a: int, b: int, n: int) -> int:
        """p_t(a, b; n), summing only the hook counts k = a mod b."""
        if b < 1:
            raise ValueError(f"modulus b must be at least 1, got {b}")
        if not 0 <= n <= self.n_max:
            raise ValueError(f"n={n} outside precomputed range 0..{self.n_max}")
        t = self.t
        total = 0
        for k in range(a % b, n // t + 1, b):
            total += self.core_counts[n - t * k] * self.tuple_counts[k]
        return total

    def residue_counts(self, b: int, n: int) -> list[int]:
        """All b residue-class counts of n in one pass; sums to p(n)."""
        if b < 1:
            raise ValueError(f"modulus b must be at least 1, got {b}")
        if not 0 <= n <= self.n_max:
            raise ValueError(f"n={n} outside precomputed range 0..{self.n_max}")
        t = self.t
        counts = [0] * b
        for k in range(n // t + 1):
            c = self.core_counts[n - t * k]
            if c:
                counts[k % b] += c * self.tuple_counts[k]
        return counts


_engines: dict[int, HookDistribution] = {}


def get_engine(t: int, n_max: int) -> HookDistribution:
    """Shared per-t engine, regrown whenever a larger range is requested."""
    eng = _engines.get(t)
    if eng is None or eng.n_max < n_max:
        eng = HookDistribution(t, n_max)
        _engines[t] = eng
    return eng


def pt_count(t: int, a: int, b: int, n: int) -> int:
    """Number of partitions of n whose t-hook count is a mod b."""
    return get_engine(t, n).count(a, b, n)


def format_proportion(count: int, total: int, places: int = 4) -> str:
    """count/total as a decimal string, round half to even, exact arithmetic."""
    if total <= 0:
        raise ValueError(f"total must be positive, got {total}")
    scale = 10**places
    q, r = divmod(count * scale, total)
    if 2 * r > total or (2 * r == total and q % 2 == 1):
        q += 1
    return f"{q // scale}.{q % scale:0{places}d}"


@dataclass(frozen=True)
class ResidueProfile:
    """The b residue-class counts of partitions of n by t-hook count."""

    t: int
    b: int
    n: int
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        """p(n): every partition lands in exactly one residue class."""
        return sum(self.counts)

    def proportions(self) -> tuple[Fraction, ...]:
        total = self.total
        return tuple(Fraction(c, total) for c in self.counts)

    def formatted_proportions(self, places: int = 4) -> tuple[str, ...]:
        total = self.total
        return tuple(format_proportion(c, total, places) for c in self.counts)


def residue_profile(t: int, b: int, n: int) -> ResidueProfile:
    """All b counts p_t(0, b; n), ..., p_t(b-1, b; n)."""
    counts = get_engine(t, n).residue_counts(b, n)
    return ResidueProfile(t=t, b=b, n=n, counts=tuple(counts))


def _hook_counts_of_all(t: int, n: int, _cache: dict = {}) -> tuple[int, ...]:
    # t-hook count of every partition of n, enumeration order; memoized
    # because the brute-force oracle is called once per modulus.
    key = (t, n)
    if key not in _cache:
        _cache[key] = tuple(
            count_t_hooks(lam, t) for lam in enumerate_partitions(n)
        )
    return _cache[key]


def brute_force_profile(
    t: int, b: int, n: int, force: bool = False
) -> ResidueProfile:
    """Oracle twin of residue_profile: enumerate partitions and bucket them.

    Refuses n > 40 unless force=True, since the enumeration is exponential.
    """
    if b < 1:
        raise ValueError(f"modulus b must be at least 1, got {b}")
    if n > BRUTE_FORCE_GUARD and not force:
        raise ValueError(
            f"n={n} exceeds the brute-force guard {BRUTE_FORCE_GUARD}; "
            "pass force=True to override"
        )
    counts = [0] * b
    for h in _hook_counts_of_all(t, n):
        counts[h % b] += 1
    return ResidueProfile(t=t, b=b, n=n, counts=tuple(counts))


@dataclass(frozen=True)
class Verdict:
    """Outcome of one vanishing check: verified, inapplicable, or refuted."""

    status: str
    checked: int = 0
    counterexample: int | None = None
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.status != COUNTEREXAMPLE


def verify_2hook_vanishing(
    ell: int,
    a1: int,
    a2: int,
    n_max: int,
    engine: HookDistribution | None = None,
) -> Verdict:
    """Check p_2(a1, ell; n) = 0 for every n <= n_max with n = a2 mod ell.

    Applies only when the symbol (-16*a1 + 8*a2 + 1 / ell) is -1; otherwise
    the verdict is hypothesis-not-met and nothing is asserted.
    """
    if ell < 3 or not cores.is_prime(ell):
        raise ValueError(f"ell must be an odd prime, got {ell}")
    v = -16 * a1 + 8 * a2 + 1
    if cores.legendre_symbol(v, ell) != -1:
        return Verdict(HYPOTHESIS_NOT_MET, note=f"({v}/{ell}) != -1")
    if engine is None:
        engine = get_engine(2, n_max)
    checked = 0
    for n in range(a2 % ell, n_max + 1, ell):
        if engine.count(a1, ell, n) != 0:
            return Verdict(COUNTEREXAMPLE, checked=checked, counterexample=n)
        checked += 1
    return Verdict(VERIFIED, checked=checked)


def verify_3hook_vanishing(
    ell: int,
    a1: int,
    a2: int,
    n_max: int,
    engine: HookDistribution | None = None,
) -> Verdict:
    """Check p_3(a1, ell^2; n) = 0 for every n <= n_max with n = a2 mod ell^2.

    Applies when ell is a prime congruent to 2 mod 3 and -9*a1 + 3*a2 + 1 is
    nonzero with ell-adic valuation exactly 1.
    """
    if ell % 3 != 2 or not cores.is_prime(ell):
        raise ValueError(f"ell must be a prime congruent to 2 mod 3, got {ell}")
    v = -9 * a1 + 3 * a2 + 1
    if v == 0:
        return Verdict(HYPOTHESIS_NOT_MET, note="-9*a1 + 3*a2 + 1 = 0")
    if cores.padic_valuation(ell, v) != 1:
        return Verdict(HYPOTHESIS_NOT_MET, note=f"ord_{ell}({v}) != 1")
    b = ell * ell
    if engine is None:
        engine = get_engine(3, n_max)
    checked = 0
    for n in range(a2 % b, n_max + 1, b):
        if engine.count(a1, b, n) != 0:
            return Verdict(COUNTEREXAMPLE, checked=checked, counterexample=n)
        checked += 1
    return Verdict(VERIFIED, checked=checked)


@dataclass(frozen=True)
class SweepReport:
    """Verdicts for every (a1, a2) cell of one modulus."""

    kind: str
    ell: int
    modulus: int
    n_max: int
    cells: tuple[tuple[int, int, Verdict], ...]

    @property
    def ok(self) -> bool:
        return all(v.ok for _, _, v in self.cells)

    @property
    def counterexamples(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(
            (a1, a2, v.counterexample)
            for a1, a2, v in self.cells
            if v.status == COUNTEREXAMPLE
        )

    @property
    def hypothesis_cells(self) -> int:
        return sum(1 for _, _, v in self.cells if v.status != HYPOTHESIS_NOT_MET)

    @property
    def values_checked(self) -> int:
        return sum(v.checked for _, _, v in self.cells)


def _sweep(kind, ell, modulus, n_max, verify, engine, threads) -> SweepReport:
    pairs = [(a1, a2) for a1 in range(modulus) for a2 in range(modulus)]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            verdicts = list(
                pool.map(lambda p: verify(ell, p[0], p[1], n_max, engine), pairs)
            )
    else:
        verdicts = [verify(ell, a1, a2, n_max, engine) for a1, a2 in pairs]
    cells = tuple((a1, a2, v) for (a1, a2), v in zip(pairs, verdicts))
    return SweepReport(kind=kind, ell=ell, modulus=modulus, n_max=n_max, cells=cells)


def sweep_2hook_vanishing(ell: int, n_max: int, threads: int = 1) -> SweepReport:
    """verify_2hook_vanishing over every (a1, a2) in [0, ell) x [0, ell)."""
    engine = get_engine(2, n_max)
    return _sweep("2-hook", ell, ell, n_max, verify_2hook_vanishing, engine, threads)


def sweep_3hook_vanishing(ell: int, n_max: int, threads: int = 1) -> SweepReport:
    """verify_3hook_vanishing over every (a1, a2) in [0, ell^2) x [0, ell^2)."""
    if ell % 3 != 2 or not cores.is_prime(ell):
        raise ValueError(f"ell must be a prime congruent to 2 mod 3, got {ell}")
    engine = get_engine(3, n_max)
    return _sweep(
        "3-hook", ell, ell * ell, n_max, verify_3hook_vanishing, engine, threads
    )


def partition_count(n: int) -> int:
    """p(n) from the generating function (independent of any enumeration)."""
    return partition_count_series(n)[n]

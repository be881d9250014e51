"""Counting t-core partitions.

Closed forms for t = 2 (triangular-number test on 8n+1) and t = 3 (a divisor
sum over 3n+1 driven by the residue of each divisor mod 3), a positive
definite quadratic-form count equivalent to the t = 3 case, and two generic
routes — the product generating function and direct abacus enumeration —
that work for every t and serve as cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterator

from .abacus import Abacus, partition_from_abacus
from .partitions import Partition, count_t_hooks, enumerate_partitions
from .series import eta_inverse_power_series, sparse_product


def is_prime(n: int) -> bool:
    """Trial-division primality test; plenty for desk-scale moduli."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def legendre_symbol(a: int, p: int) -> int:
    """Quadratic-residue symbol (a/p) in {-1, 0, +1} for an odd prime p.

    Computed by Euler's criterion a^((p-1)/2) mod p with fast modular
    exponentiation.
    """
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if a % p == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def padic_valuation(ell: int, n: int) -> int:
    """Largest e with ell^e dividing n (n nonzero; sign ignored)."""
    if not is_prime(ell):
        raise ValueError(f"ell must be prime, got {ell}")
    if n == 0:
        raise ValueError("the valuation of 0 is infinite")
    n = abs(n)
    e = 0
    while n % ell == 0:
        n //= ell
        e += 1
    return e


def c2(n: int) -> int:
    """Number of 2-cores of n: 1 iff 8n+1 is a perfect (odd) square.

    Equivalently, 1 iff n is triangular — the staircase is the only 2-core.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    m = 8 * n + 1
    return 1 if isqrt(m) ** 2 == m else 0


def _divisors(n: int) -> list[int]:
    divs = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            divs.append(d)
            if d != n // d:
                divs.append(n // d)
        d += 1
    return divs


def c3_divisor_sum(n: int) -> int:
    """Number of 3-cores of n: sum of (d/3) over divisors d of 3n+1.

    Since 3 never divides a divisor of 3n+1, (d/3) is +1 for d = 1 mod 3 and
    -1 for d = 2 mod 3; a residue lookup replaces Euler's criterion here.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return sum(1 if d % 3 == 1 else -1 for d in _divisors(3 * n + 1))


def c3_nonvanishing(n: int) -> bool:
    """True iff n has a 3-core: every prime p = 2 mod 3 divides 3n+1 evenly.

    Agrees with c3_divisor_sum(n) > 0.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    m = 3 * n + 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            if d % 3 == 2 and e % 2 == 1:
                return False
        d += 1
    # leftover m is prime (or 1)
    return not (m % 3 == 2 and m > 1)


@dataclass(frozen=True)
class QFSolution:
    """One representation n = a^2 - a*b + b^2 + b with a, b >= 0.

    The change of variables x = -a + 2b + 1, y = a + b + 1 turns it into
    3n + 1 = x^2 - x*y + y^2, the norm form of discriminant -3.
    """

    a: int
    b: int

    @property
    def n(self) -> int:
        return self.a * self.a - self.a * self.b + self.b * self.b + self.b

    @property
    def x(self) -> int:
        return -self.a + 2 * self.b + 1

    @property
    def y(self) -> int:
        return self.a + self.b + 1


def c3_qf_solutions(n: int, bound: int | None = None) -> list[QFSolution]:
    """All (a, b) in Z>=0 x Z>=0 with a^2 - a*b + b^2 + b = n.

    The form dominates (a^2 + b^2)/2, so the default search box
    0 <= a, b <= 1 + ceil(2*sqrt(n+1)) is complete with room to spare;
    tests re-run with an enlarged box and check the count is stable.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if bound is None:
        bound = 1 + isqrt(4 * (n + 1)) + 1
    solutions = []
    for b in range(bound + 1):
        base = b * b + b
        for a in range(bound + 1):
            if a * a - a * b + base == n:
                solutions.append(QFSolution(a=a, b=b))
    return solutions


def c3_qf_count(n: int, bound: int | None = None) -> int:
    """Number of representations n = a^2 - a*b + b^2 + b over Z>=0 x Z>=0."""
    return len(c3_qf_solutions(n, bound))


def ct_count_series(t: int, truncation: int) -> tuple[int, ...]:
    """c_t(0..N) via the product formula prod (1-q^{tm})^t / (1-q^m)."""
    if t < 2:
        raise ValueError(f"t must be at least 2, got {t}")
    factors = [(m, -1) for m in range(1, truncation + 1)]
    factors += [(t * m, t) for m in range(1, truncation // t + 1)]
    return tuple(sparse_product(factors, truncation))


def _runner_offset_vectors(t: int, max_size: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Yield (size, offsets) for every t-core of size <= max_size, once each.

    A t-core padded to a multiple-of-t bead count has per-runner bead counts
    b_c; the offsets x_c = b_c - s/t sum to zero, do not depend on the
    padding, and determine the core. The size works out to
    sum_c [ (t/2) x_c^2 + c x_c ], so each coordinate lives in a provably
    complete interval and backtracking with a running budget enumerates all
    solutions. Doubled values keep the arithmetic integral.
    """
    target2 = 2 * max_size
    # Worst-case negative contribution of the runners not yet assigned:
    # min over integers of t*x^2 + 2*c*x is min(0, t - 2*c), at x in {0, -1}.
    slack = [0] * (t + 1)
    for c in range(t):
        slack[c + 1] = slack[c] + min(0, t - 2 * c)

    def ranges(c: int, budget2: int) -> range:
        # t*x^2 + 2*c*x <= budget2  =>  |t*x + c| <= sqrt(c^2 + t*budget2)
        if budget2 < 0:
            budget2 = 0
        root = isqrt(c * c + t * budget2)
        lo = -((root + c) // t)
        hi = (root - c) // t
        return range(lo, hi + 1)

    out: list[tuple[int, tuple[int, ...]]] = []

    def descend(c: int, acc2: int, total: int, chosen: list[int]) -> None:
        if c == 0:
            x = -total
            size2 = acc2 + t * x * x
            if size2 <= target2:
                out.append((size2 // 2, (x, *reversed(chosen))))
            return
        budget2 = target2 - acc2 - slack[c]
        for x in ranges(c, budget2):
            chosen.append(x)
            descend(c - 1, acc2 + t * x * x + 2 * c * x, total + x, chosen)
            chosen.pop()

    descend(t - 1, 0, 0, [])
    return iter(out)


def _offsets_to_partition(offsets: tuple[int, ...], t: int) -> Partition:
    shift = max(0, -min(offsets))
    beads = frozenset(
        (r, c)
        for c, x in enumerate(offsets)
        for r in range(1, x + shift + 1)
    )
    return partition_from_abacus(Abacus(t, beads))


def count_t_cores_up_to(t: int, max_size: int) -> list[int]:
    """c_t(0), ..., c_t(max_size) by direct abacus enumeration."""
    if t < 2:
        raise ValueError(f"t must be at least 2, got {t}")
    counts = [0] * (max_size + 1)
    for size, _ in _runner_offset_vectors(t, max_size):
        counts[size] += 1
    return counts


def enumerate_t_cores(n: int, t: int, mode: str = "abacus") -> list[Partition]:
    """All t-core partitions of n, in reverse-lexicographic order.

    mode="abacus" enumerates runner bead-count vectors and decodes them;
    mode="oracle" filters enumerate_partitions(n) by the t-hook count and is
    the brute-force cross-check (keep n small there).
    """
    if n < 0 or t < 2:
        raise ValueError(f"need n >= 0 and t >= 2, got n={n}, t={t}")
    if mode == "abacus":
        cores = [
            _offsets_to_partition(offsets, t)
            for size, offsets in _runner_offset_vectors(t, n)
            if size == n
        ]
        return sorted(cores, reverse=True)
    if mode == "oracle":
        return [
            lam for lam in enumerate_partitions(n) if count_t_hooks(lam, t) == 0
        ]
    raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class CoreCount:
    """c_t(n), optionally with the t-cores themselves as witnesses."""

    n: int
    t: int
    count: int
    witnesses: tuple[Partition, ...] | None = None


def count_t_cores(n: int, t: int, witnesses: bool = False) -> CoreCount:
    """c_t(n) via the cheapest correct route for the given t."""
    if witnesses:
        found = tuple(enumerate_t_cores(n, t))
        return CoreCount(n=n, t=t, count=len(found), witnesses=found)
    if t == 2:
        return CoreCount(n=n, t=t, count=c2(n))
    if t == 3:
        return CoreCount(n=n, t=t, count=c3_divisor_sum(n))
    return CoreCount(n=n, t=t, count=count_t_cores_up_to(t, n)[n])


@dataclass(frozen=True)
class CoreFormulaReport:
    """Outcome of the multi-route agreement sweep over core counts."""

    n_max: int
    series_n_max: int
    t_max: int
    checked: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_core_formulas(
    n_max: int = 500, series_n_max: int = 200, t_max: int = 7
) -> CoreFormulaReport:
    """Check every counting route against the others.

    For n <= n_max: the t=3 divisor sum, the quadratic-form count and abacus
    enumeration must agree, and the t=2 closed form must match enumeration.
    For n <= series_n_max and 2 <= t <= t_max: the generating-function
    coefficients must match enumeration.
    """
    failures: list[str] = []
    checked = 0
    by_enum2 = count_t_cores_up_to(2, n_max)
    by_enum3 = count_t_cores_up_to(3, n_max)
    for n in range(n_max + 1):
        ds = c3_divisor_sum(n)
        qf = c3_qf_count(n)
        if not ds == qf == by_enum3[n]:
            failures.append(
                f"c_3({n}): divisor sum {ds}, quadratic form {qf}, abacus {by_enum3[n]}"
            )
        if c2(n) != by_enum2[n]:
            failures.append(f"c_2({n}): closed form {c2(n)}, abacus {by_enum2[n]}")
        checked += 2
    for t in range(2, t_max + 1):
        from_series = ct_count_series(t, series_n_max)
        from_enum = tuple(count_t_cores_up_to(t, series_n_max))
        if from_series != from_enum:
            first = next(
                i for i, (a, b) in enumerate(zip(from_series, from_enum)) if a != b
            )
            failures.append(
                f"c_{t}: series and abacus enumeration differ first at n={first}"
            )
        checked += series_n_max + 1
    return CoreFormulaReport(
        n_max=n_max,
        series_n_max=series_n_max,
        t_max=t_max,
        checked=checked,
        failures=tuple(failures),
    )

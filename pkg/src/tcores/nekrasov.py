"""The Nekrasov-Okounkov hook-length formula, checked exactly order by order.

Both sides of

    prod_{n>=1} (1 - q^n)^(z-1)
        = sum over partitions of q^|lam| * prod over hooks of (1 - z/h^2)

are expanded as polynomials in z with exact rational coefficients, one
q-degree at a time, and compared coefficient-wise. Setting z = 2 or z = 4
specializes the right side to the Euler and Jacobi series prod (1-q^n) and
prod (1-q^n)^3, which tests compare against independently computed integer
coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable

from .partitions import enumerate_partitions, hook_rows

DEFAULT_GUARD = 12


class ZPoly:
    """Polynomial in one variable over the exact rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int] = ()) -> None:
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ZPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "ZPoly") -> "ZPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return ZPoly(out)

    def __sub__(self, other: "ZPoly") -> "ZPoly":
        return self + ZPoly([-c for c in other.coeffs])

    def __mul__(self, other):
        if isinstance(other, ZPoly):
            if not self.coeffs or not other.coeffs:
                return ZPoly()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return ZPoly(out)
        return ZPoly([c * Fraction(other) for c in self.coeffs])

    __rmul__ = __mul__

    def __call__(self, z: Fraction | int) -> Fraction:
        z = Fraction(z)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __repr__(self) -> str:
        if not self.coeffs:
            return "ZPoly(0)"
        terms = " + ".join(f"({c})z^{k}" for k, c in enumerate(self.coeffs) if c)
        return f"ZPoly({terms})"


_ONE = ZPoly([1])


def _check_guard(m: int, guard: int) -> None:
    if m < 0:
        raise ValueError(f"q-degree must be non-negative, got {m}")
    if m > guard:
        raise ValueError(
            f"q-degree {m} exceeds the guard {guard}; pass a larger guard "
            "explicitly to go further"
        )


def partition_side(m: int, guard: int = DEFAULT_GUARD) -> ZPoly:
    """Coefficient of q^m on the hook-product side, as a polynomial in z.

    Sum over partitions of m of prod over hook lengths h of (1 - z/h^2).
    Its constant term is p(m) and its z-degree is m.
    """
    _check_guard(m, guard)
    total = ZPoly()
    for lam in enumerate_partitions(m):
        prod = _ONE
        for row in hook_rows(lam):
            for h in row:
                prod = prod * ZPoly([1, Fraction(-1, h * h)])
        total = total + prod
    return total


def _binomial_z_minus_one(k: int) -> ZPoly:
    # C(z-1, k) = (z-1)(z-2)...(z-k) / k!
    poly = _ONE
    for i in range(1, k + 1):
        poly = poly * ZPoly([-i, 1])
    return poly * Fraction(1, factorial(k))


def product_side(m: int, guard: int = DEFAULT_GUARD) -> ZPoly:
    """Coefficient of q^m in prod_{n=1}^{m} (1 - q^n)^(z-1).

    Each factor expands as sum_k (-1)^k C(z-1, k) q^(n*k); the truncated
    product is assembled degree by degree.
    """
    _check_guard(m, guard)
    series: list[ZPoly] = [_ONE] + [ZPoly()] * m
    for n in range(1, m + 1):
        factor = [
            ZPoly([(-1) ** k]) * _binomial_z_minus_one(k)
            for k in range(m // n + 1)
        ]
        out: list[ZPoly] = [ZPoly()] * (m + 1)
        for j, coeff in enumerate(series):
            if coeff:
                for k, f in enumerate(factor):
                    if j + n * k <= m:
                        out[j + n * k] = out[j + n * k] + coeff * f
        series = out
    return series[m]


@dataclass(frozen=True)
class IdentityReport:
    """Result of comparing both sides of the identity for all m <= m_max."""

    m_max: int
    mismatches: tuple[tuple[int, int], ...]  # (q-degree, first bad z-degree)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def check_identity(m_max: int, guard: int = DEFAULT_GUARD) -> IdentityReport:
    """Compare product_side(m) and partition_side(m) for every m <= m_max."""
    _check_guard(m_max, guard)
    mismatches = []
    for m in range(m_max + 1):
        lhs = product_side(m, guard)
        rhs = partition_side(m, guard)
        if lhs != rhs:
            top = max(lhs.degree, rhs.degree)
            bad = next(
                k
                for k in range(top + 1)
                if (lhs.coeffs[k] if k <= lhs.degree else 0)
                != (rhs.coeffs[k] if k <= rhs.degree else 0)
            )
            mismatches.append((m, bad))
    return IdentityReport(m_max=m_max, mismatches=tuple(mismatches))


def specialize(
    m_max: int, z: Fraction | int, guard: int = DEFAULT_GUARD
) -> tuple[Fraction, ...]:
    """Evaluate the hook-product side at a fixed z for every m <= m_max.

    z = 2 yields the coefficients of prod (1-q^n); z = 4 those of
    prod (1-q^n)^3.
    """
    _check_guard(m_max, guard)
    return tuple(partition_side(m, guard)(z) for m in range(m_max + 1))

import pytest
from hypothesis import given, strategies as st

from tcores.cores import (
    c2,
    c3_divisor_sum,
    c3_nonvanishing,
    c3_qf_count,
    c3_qf_solutions,
    count_t_cores,
    count_t_cores_up_to,
    ct_count_series,
    enumerate_t_cores,
    is_prime,
    legendre_symbol,
    padic_valuation,
    verify_core_formulas,
)
from tcores.partitions import count_t_hooks


def test_is_prime_small():
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23]
    assert [n for n in range(25) if is_prime(n)] == primes


def test_legendre_examples():
    assert legendre_symbol(-16 * 1 + 8 * 1 + 1, 5) == -1
    assert legendre_symbol(0, 7) == 0
    assert legendre_symbol(2, 7) == 1
    with pytest.raises(ValueError):
        legendre_symbol(3, 2)
    with pytest.raises(ValueError):
        legendre_symbol(3, 9)


def test_legendre_matches_square_table():
    for p in (3, 5, 7, 11, 13):
        squares = {x * x % p for x in range(1, p)}
        for a in range(-p, 2 * p):
            expected = 0 if a % p == 0 else (1 if a % p in squares else -1)
            assert legendre_symbol(a, p) == expected


@given(st.integers(-200, 200), st.integers(-200, 200), st.sampled_from([3, 5, 7, 11, 13]))
def test_legendre_multiplicative(a, b, p):
    assert legendre_symbol(a * b, p) == legendre_symbol(a, p) * legendre_symbol(b, p)


def test_padic_valuation_examples():
    assert padic_valuation(5, -9 * 1 + 3 * 1 + 1) == 1
    assert padic_valuation(7, 1) == 0
    assert padic_valuation(2, 48) == 4
    with pytest.raises(ValueError):
        padic_valuation(5, 0)
    with pytest.raises(ValueError):
        padic_valuation(4, 12)


def test_c2_examples():
    assert c2(0) == 1
    assert c2(6) == 1
    assert c2(4) == 0
    triangulars = {k * (k + 1) // 2 for k in range(40)}
    for n in range(500):
        assert c2(n) == (1 if n in triangulars else 0)


def test_c3_divisor_sum_examples():
    assert c3_divisor_sum(1) == 1
    assert c3_divisor_sum(0) == 1
    assert c3_divisor_sum(2) == 2


def test_c3_nonvanishing_examples():
    assert c3_nonvanishing(1) is True
    assert c3_nonvanishing(0) is True
    assert c3_nonvanishing(3) is False


def test_c3_nonvanishing_iff_positive_count():
    for n in range(2001):
        assert c3_nonvanishing(n) == (c3_divisor_sum(n) > 0)


def test_c3_qf_count_examples():
    assert c3_qf_count(0) == 1
    assert c3_qf_count(1) == 1
    assert c3_qf_count(2) == 2
    assert [(s.a, s.b) for s in c3_qf_solutions(1)] == [(1, 0)]


def test_qf_solutions_norm_form_identity():
    # x = -a+2b+1, y = a+b+1 carries each solution to x^2 - xy + y^2 = 3n+1
    for n in range(200):
        for s in c3_qf_solutions(n):
            assert s.n == n
            assert s.x * s.x - s.x * s.y + s.y * s.y == 3 * n + 1


def test_c3_qf_count_box_is_stable():
    # enlarging the search box must never find new solutions
    from math import isqrt

    for n in range(151):
        default = c3_qf_count(n)
        enlarged = c3_qf_count(n, bound=isqrt(4 * (n + 1)) + 9)
        assert default == enlarged


def test_c3_routes_agree():
    for n in range(301):
        assert c3_divisor_sum(n) == c3_qf_count(n)


def test_ct_count_series_examples():
    assert ct_count_series(2, 6) == (1, 1, 0, 1, 0, 0, 1)
    assert ct_count_series(3, 2) == (1, 1, 2)
    assert ct_count_series(4, 0) == (1,)
    with pytest.raises(ValueError):
        ct_count_series(1, 5)


def test_series_matches_closed_forms():
    s2 = ct_count_series(2, 200)
    s3 = ct_count_series(3, 200)
    for n in range(201):
        assert s2[n] == c2(n)
        assert s3[n] == c3_divisor_sum(n)


def test_enumerate_t_cores_examples():
    assert enumerate_t_cores(6, 2) == [(3, 2, 1)]
    assert enumerate_t_cores(0, 4) == [()]
    assert enumerate_t_cores(2, 3) == [(2,), (1, 1)]


def test_enumerate_modes_agree():
    for t, n_max in ((2, 30), (3, 30), (4, 20), (5, 20)):
        for n in range(n_max + 1):
            fast = enumerate_t_cores(n, t)
            oracle = enumerate_t_cores(n, t, mode="oracle")
            assert fast == oracle
            for core in fast:
                assert core.size == n
                assert count_t_hooks(core, t) == 0
    with pytest.raises(ValueError):
        enumerate_t_cores(3, 2, mode="nonsense")


def test_count_t_cores_up_to_matches_series():
    for t in (2, 3, 4, 5, 6, 7):
        assert tuple(count_t_cores_up_to(t, 80)) == ct_count_series(t, 80)


def test_count_t_cores_witnesses():
    cc = count_t_cores(6, 2, witnesses=True)
    assert cc.count == 1 and cc.witnesses == ((3, 2, 1),)
    assert count_t_cores(6, 2).count == 1
    assert count_t_cores(2, 3).count == 2
    assert count_t_cores(11, 5).count == count_t_cores(11, 5, witnesses=True).count


def test_verify_core_formulas_small():
    report = verify_core_formulas(n_max=100, series_n_max=60, t_max=5)
    assert report.ok, report.failures

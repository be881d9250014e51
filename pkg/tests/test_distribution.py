import pytest

from tcores import distribution
from tcores.distribution import (
    COUNTEREXAMPLE,
    HYPOTHESIS_NOT_MET,
    VERIFIED,
    HookDistribution,
    brute_force_profile,
    format_proportion,
    pt_count,
    residue_profile,
    sweep_2hook_vanishing,
    sweep_3hook_vanishing,
    verify_2hook_vanishing,
    verify_3hook_vanishing,
)
from tcores.partitions import enumerate_partitions
from tcores.series import (
    BigSeries,
    eta_inverse_power_series,
    euler_product_series,
    partition_count_series,
)


def test_partition_series_values():
    assert tuple(partition_count_series(5)) == (1, 1, 2, 3, 5, 7)
    ps = partition_count_series(30)
    for n in range(31):
        assert ps[n] == len(list(enumerate_partitions(n)))


def test_eta_inverse_examples():
    assert eta_inverse_power_series(2, 2)[2] == 5
    for t in (1, 2, 3, 7):
        assert eta_inverse_power_series(t, 4)[0] == 1


def test_eta_inverse_counts_tuples():
    # q^k coefficient of 1/prod(1-q^m)^t counts t-tuples of total size k
    ps = partition_count_series(12).coeffs
    q2 = eta_inverse_power_series(2, 12)
    for k in range(13):
        assert q2[k] == sum(ps[i] * ps[k - i] for i in range(k + 1))


def test_product_and_inverse_cancel():
    prod = euler_product_series(2, 40) * eta_inverse_power_series(2, 40)
    assert prod == BigSeries.one(40)


def test_monotone_truncation():
    small = eta_inverse_power_series(2, 50)
    large = eta_inverse_power_series(2, 80)
    assert large.coeffs[:51] == small.coeffs
    small = euler_product_series(3, 40)
    large = euler_product_series(3, 70)
    assert large.coeffs[:41] == small.coeffs


def test_pt_count_examples():
    assert pt_count(2, 0, 1, 6) == 11  # p(6)
    # the two vanishing showcases
    for n in (1, 6, 11, 16, 21, 26):
        assert pt_count(2, 1, 5, n) == 0
    for n in (1, 26, 51):
        assert pt_count(3, 1, 25, n) == 0


def test_residue_counts_sum_to_partition_count():
    ps = partition_count_series(60)
    for t, b in ((2, 3), (3, 5), (4, 4)):
        for n in (0, 1, 7, 30, 60):
            prof = residue_profile(t, b, n)
            assert prof.total == ps[n]
            assert all(c >= 0 for c in prof.counts)
            assert len(prof.counts) == b


def test_profile_matches_brute_force():
    for t in (2, 3):
        for b in (2, 3, 5):
            for n in range(19):
                fast = residue_profile(t, b, n)
                slow = brute_force_profile(t, b, n)
                assert fast.counts == slow.counts


def test_brute_force_guard():
    with pytest.raises(ValueError):
        brute_force_profile(2, 3, 41)
    prof = brute_force_profile(2, 2, 41, force=True)
    assert prof.counts == residue_profile(2, 2, 41).counts


def test_brute_force_smallest_3hook_vanishing_case():
    prof = brute_force_profile(3, 25, 26)
    assert prof.counts[1] == 0


def test_engine_validation():
    eng = HookDistribution(2, 50)
    with pytest.raises(ValueError):
        eng.count(0, 0, 10)
    with pytest.raises(ValueError):
        eng.count(0, 3, 51)
    with pytest.raises(ValueError):
        HookDistribution(1, 10)


def test_format_proportion_half_even():
    assert format_proportion(1, 3) == "0.3333"
    assert format_proportion(2, 3) == "0.6667"
    assert format_proportion(42, 42) == "1.0000"
    assert format_proportion(0, 7) == "0.0000"
    # exact halves round to the even neighbour
    assert format_proportion(1, 20000) == "0.0000"
    assert format_proportion(3, 20000) == "0.0002"
    with pytest.raises(ValueError):
        format_proportion(1, 0)


def test_verify_2hook_examples():
    assert verify_2hook_vanishing(5, 1, 1, 500).status == VERIFIED
    assert verify_2hook_vanishing(3, 2, 0, 500).status == VERIFIED
    # symbol is +1: nothing to check
    v = verify_2hook_vanishing(5, 0, 0, 500)
    assert v.status == HYPOTHESIS_NOT_MET and v.checked == 0
    with pytest.raises(ValueError):
        verify_2hook_vanishing(2, 0, 0, 100)
    with pytest.raises(ValueError):
        verify_2hook_vanishing(9, 0, 0, 100)


def test_verify_3hook_examples():
    assert verify_3hook_vanishing(5, 1, 1, 500).status == VERIFIED
    assert verify_3hook_vanishing(2, 0, 3, 500).status == VERIFIED  # ord_2(10) = 1
    assert verify_3hook_vanishing(2, 1, 1, 500).status == HYPOTHESIS_NOT_MET
    with pytest.raises(ValueError):
        verify_3hook_vanishing(7, 0, 0, 100)  # 7 = 1 mod 3


class _LyingEngine:
    # stands in for HookDistribution to exercise the counterexample branch
    def count(self, a, b, n):
        return 1


def test_counterexample_branch_fires_on_nonzero_count():
    v = verify_2hook_vanishing(5, 1, 1, 100, engine=_LyingEngine())
    assert v.status == COUNTEREXAMPLE and v.counterexample == 1
    v = verify_3hook_vanishing(5, 1, 1, 100, engine=_LyingEngine())
    assert v.status == COUNTEREXAMPLE and v.counterexample == 1


def test_sweeps_are_deterministic_and_verified():
    rep1 = sweep_2hook_vanishing(3, 300)
    rep2 = sweep_2hook_vanishing(3, 300, threads=3)
    assert rep1.cells == rep2.cells
    assert rep1.ok and rep1.hypothesis_cells == 3

    rep = sweep_3hook_vanishing(2, 300, threads=2)
    assert rep.ok and rep.hypothesis_cells == 4
    assert rep.counterexamples == ()
    with pytest.raises(ValueError):
        sweep_3hook_vanishing(3, 100)


def test_partition_count_function():
    assert distribution.partition_count(10) == 42
    assert distribution.partition_count(0) == 1

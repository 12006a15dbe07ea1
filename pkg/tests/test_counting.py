"""Closed-form counts: prime-power laws, composite product, 40-row tables."""

import pytest

from grcyclic.gring import DomainError
from grcyclic.cyclic import enumerate_ideals, make_params
from grcyclic.duality import enumerate_self_dual
from grcyclic.counting import (count_all, count_by_d, count_E_composite,
                               count_E_prime_power, count_H_prime_power,
                               emit_table, is_unique_self_dual)
from grcyclic.cosets import partition

# Reference rows for n = 1..40 as originally tabulated.  At a length whose
# free part m has inverse-paired cosets (J2' nonempty) and p-power part 1
# (a = 0), the tabulated value 1 disagrees with the product formula, which
# gives 3^|J2'|: each paired slot admits ({0}, R), (pR, pR), (R, {0}) freely.
# The n = 7 entry over Z4 was settled by an exhaustive scan: exactly 3
# self-dual codes of length 7 exist, so the formula is right and those rows
# are corrected below.

PUBLISHED_2_1 = (1, 1, 1, 3, 1, 3, 1, 11, 1, 5, 1, 21, 1, 13, 1, 59, 1, 27,
                 1, 63, 1, 33, 1, 341, 1, 65, 1, 339, 1, 315, 1, 1019, 1, 289,
                 1, 1533, 1, 513, 1, 3751)
PUBLISHED_3_1 = (1, 1, 2, 1, 1, 4, 1, 1, 8, 1, 1, 16, 1, 1, 20, 1, 1, 64, 1,
                 1, 56, 1, 1, 544, 1, 1, 242, 1, 1, 400, 1, 1, 1472, 1, 1,
                 2560, 1, 1, 15488, 1)
PUBLISHED_2_2 = (1, 1, 1, 5, 1, 9, 1, 37, 1, 25, 1, 225, 1, 69, 1, 677, 1,
                 621, 1, 2205, 1, 1029, 1, 29193, 1, 4225, 1, 22125, 1, 99225,
                 1, 174757, 1, 83521, 1, 995625, 1, 262149, 1, 4302397)

CORRECTIONS_2_1 = {7: 3, 15: 3, 21: 9, 23: 3, 31: 27, 35: 9, 39: 3}
CORRECTIONS_3_1 = {8: 3, 11: 3, 13: 9, 16: 9, 20: 3, 22: 9, 23: 3, 26: 81,
                   32: 27, 35: 3, 40: 81}
CORRECTIONS_2_2 = {3: 3, 7: 3, 9: 9, 11: 3, 15: 27, 19: 3, 21: 81, 23: 3,
                   27: 27, 31: 27, 33: 81, 35: 27, 39: 27}


def test_count_all_known_values():
    assert count_all(make_params(2, 1, 0)) == 3
    assert count_all(make_params(2, 1, 1)) == 7
    assert count_all(make_params(2, 1, 2)) == 23
    assert count_all(make_params(3, 1, 1)) == 16
    assert count_all(make_params(2, 2, 1)) == 9


def test_count_by_d_symmetry():
    # d and n - d index dual pairs, so c(d) sums twice below the middle
    for key in ((2, 1, 2), (3, 1, 1), (2, 2, 1)):
        params = make_params(*key)
        n = params.n
        total = 2 * sum(count_by_d(params, d) for d in range(n)) \
            + count_by_d(params, n)
        assert total == count_all(params)


def test_counts_match_enumeration():
    for key in ((2, 1, 0), (2, 1, 1), (2, 1, 2), (3, 1, 1), (2, 2, 1)):
        params = make_params(*key)
        assert sum(1 for _ in enumerate_ideals(params)) == count_all(params)
        assert sum(1 for _ in enumerate_self_dual(params, "euclidean")) \
            == count_E_prime_power(params)
        if params.s % 2 == 0:
            assert sum(1 for _ in enumerate_self_dual(params, "hermitian")) \
                == count_H_prime_power(params)


def test_prime_power_self_dual_laws():
    assert [count_E_prime_power(make_params(2, 1, a)) for a in range(4)] \
        == [1, 1, 3, 11]
    assert [count_E_prime_power(make_params(3, 1, a)) for a in range(3)] \
        == [1, 2, 8]
    assert [count_E_prime_power(make_params(2, 2, a)) for a in range(3)] \
        == [1, 1, 5]
    assert [count_H_prime_power(make_params(2, 2, a)) for a in range(3)] \
        == [1, 3, 7]
    assert count_H_prime_power(make_params(2, 4, 1)) == 5
    assert count_H_prime_power(make_params(3, 2, 2)) == 40
    with pytest.raises(DomainError):
        count_H_prime_power(make_params(3, 1, 1))


def test_composite_hand_factorizations():
    # n = 24 over Z4: slots at m = 3 give N_E(a=3) * N_H(GR(4,2), 8)
    assert count_E_composite(2, 1, 24) == 11 * 31 == 341
    # n = 40 over GR(4,2): q = 4 splits m = 5 into {0},{1},{4}... one pair
    assert count_E_composite(2, 2, 40) == 37 * 341 ** 2 == 4302397
    # n = 39 over Z9: m = 13, one self-inverse pair structure with N = 88
    assert count_E_composite(3, 1, 39) == 2 * 88 ** 2 == 15488
    assert count_E_composite(2, 1, 2) == 1
    assert count_E_composite(2, 1, 6) == 3
    assert count_E_composite(2, 1, 10) == 5


def test_composite_reduces_to_prime_power():
    for (p, s) in ((2, 1), (3, 1), (2, 2)):
        for a in range(4):
            assert count_E_composite(p, s, p ** a) \
                == count_E_prime_power(make_params(p, s, a))


def _check_table(p, s, published, corrections):
    rows = emit_table(p, s, 40)
    assert [n for n, _ in rows] == list(range(1, 41))
    for n, got in rows:
        want = corrections.get(n, published[n - 1])
        assert got == want, (p, s, n, got, want)
    # every corrected row is an a = 0 length with paired slots, value 3^|J2'|
    for n, want in corrections.items():
        m = n
        while m % p == 0:
            m //= p
        assert m == n  # a = 0
        part = partition(m, p, s)
        assert part.J2p and want == 3 ** len(part.J2p)


def test_table_rows_z4():
    _check_table(2, 1, PUBLISHED_2_1, CORRECTIONS_2_1)


def test_table_rows_z9():
    _check_table(3, 1, PUBLISHED_3_1, CORRECTIONS_3_1)


def test_table_rows_gr42():
    _check_table(2, 2, PUBLISHED_2_2, CORRECTIONS_2_2)


def test_non_corrected_rows_have_no_pairs():
    # completeness of the correction sets: rows kept at their tabulated value
    # either have a > 0 or a pair-free partition
    for (p, s, corrections) in ((2, 1, CORRECTIONS_2_1),
                                (3, 1, CORRECTIONS_3_1),
                                (2, 2, CORRECTIONS_2_2)):
        for n in range(1, 41):
            if n in corrections or n % p == 0:
                continue
            assert not partition(n, p, s).J2p


def test_uniqueness_predicate():
    for p in (2, 3, 5):
        for s in (1, 2):
            for m in range(1, 21):
                if m % p == 0:
                    continue
                unique = is_unique_self_dual(p, s, m)
                assert unique == (count_E_composite(p, s, m * p) == 1)
    with pytest.raises(DomainError):
        is_unique_self_dual(2, 1, 4)
    with pytest.raises(DomainError):
        is_unique_self_dual(2, 1, 0)


def test_emit_table_validation():
    with pytest.raises(DomainError):
        emit_table(2, 1, 0)
    with pytest.raises(DomainError):
        count_E_composite(4, 1, 3)
    with pytest.raises(DomainError):
        count_E_composite(2, 1, 0)

from itertools import combinations

import pytest

from app.core.errors import InvalidParameters
from app.core.pair_subsets import (
    find_st_subset,
    min_alpha_index,
    p_of,
    pair_family,
    pair_runs,
    slice_max,
    slice_min,
)


def _check_family(k: int):
    fam = pair_family(k)
    p = fam.p
    values = fam.alpha + fam.beta
    assert len(set(values)) == 2 * p, k
    assert all(1 <= v <= k for v in values), k
    assert all(fam.alpha[i] + fam.beta[i] == k + i + 1 for i in range(p)), k
    assert min(values) == (p + 1) // 2, k
    assert sorted(fam.beta) == list(range(k - p + 1, k + 1)), k


@pytest.mark.parametrize("k, p", [(2, 1), (7, 3), (11, 4), (17, 7), (27, 11), (84, 33)])
def test_p_of(k, p):
    assert p_of(k) == p


def test_p_of_needs_two_labels():
    with pytest.raises(InvalidParameters):
        p_of(1)


def test_pair_count_covers_every_c_up_to_2m_plus_1():
    for m in range(3, 501):
        for c in range(1, 2 * m + 2):
            assert p_of(m + 2 * c) >= c, (m, c)


def test_pair_count_is_c_minus_1_above_2m_plus_1():
    for m in range(3, 501):
        for c in range(2 * m + 2, 2 * m + 7):
            assert p_of(m + 2 * c) == c - 1, (m, c)


@pytest.mark.parametrize(
    "k, alpha, beta",
    [
        (7, (2, 4, 3), (6, 5, 7)),
        (11, (3, 2, 6, 5), (9, 11, 8, 10)),
        (17, (6, 5, 4, 10, 9, 8, 7), (12, 14, 16, 11, 13, 15, 17)),
    ],
)
def test_pair_family_values(k, alpha, beta):
    fam = pair_family(k)
    assert fam.alpha == alpha
    assert fam.beta == beta


def test_pair_family_invariants():
    for k in range(2, 1501):
        _check_family(k)


def _check_runs(k: int):
    p = p_of(k)
    head, tail = pair_runs(k)
    low, high = k - p + 1, k
    assert head.first == 1 and tail.first == len(head.alpha) + 1, k
    assert len(head.alpha) + len(tail.alpha) == p, k
    runs = [run for run in (head, tail) if run.alpha]
    for run in runs:
        assert len(run.alpha) == len(run.beta), k
        assert run.alpha.step + run.beta.step == 1, k
        assert run.alpha[0] + run.beta[0] == k + run.first, k
        # each run of beta is the whole parity class of its start inside [k-p+1, k]
        assert run.beta == range(low + (run.beta[0] - low) % 2, high + 1, 2), k
        assert run.alpha.step == -1 and run.alpha[-1] >= 1, k
    if len(runs) == 2:
        assert head.beta[0] % 2 != tail.beta[0] % 2, k
        assert head.alpha[0] < tail.alpha[-1], k
    assert max(run.alpha[0] for run in runs) < low, k
    assert min(run.alpha[-1] for run in runs) == (p + 1) // 2, k


def test_pair_runs_match_the_family():
    for k in range(2, 300):
        head, tail = pair_runs(k)
        fam = pair_family(k)
        assert fam.alpha == tuple(head.alpha) + tuple(tail.alpha)
        assert fam.beta == tuple(head.beta) + tuple(tail.beta)


def test_pair_family_invariants_up_to_100000():
    for k in range(2, 100001):
        _check_runs(k)


@pytest.mark.parametrize("k, c, index", [(17, 7, 3), (17, 2, 2), (17, 1, 1), (11, 4, 2)])
def test_min_alpha_index(k, c, index):
    assert min_alpha_index(pair_family(k), c) == index


@pytest.mark.parametrize("c", [0, 8])
def test_min_alpha_index_rejects_c_outside_the_family(c):
    with pytest.raises(InvalidParameters):
        min_alpha_index(pair_family(17), c)


@pytest.mark.parametrize(
    "lo, hi, s, t, expected",
    [
        (1, 5, 2, 3, (1, 2)),
        (3, 10, 3, 6, None),
        (3, 10, 3, 18, (3, 5, 10)),
        (3, 10, 3, 28, None),
        (3, 16, 2, 17, (3, 14)),
        (4, 9, 0, 0, ()),
        (1, 3, 4, 6, None),
    ],
)
def test_find_st_subset(lo, hi, s, t, expected):
    assert find_st_subset(lo, hi, s, t) == expected


def test_find_st_subset_matches_brute_force():
    for lo in range(1, 4):
        for hi in range(lo, lo + 12):
            pool = range(lo, hi + 1)
            for s in range(1, hi - lo + 2):
                reachable = {sum(combo) for combo in combinations(pool, s)}
                for t in range(0, sum(range(hi - s + 1, hi + 1)) + 3):
                    found = find_st_subset(lo, hi, s, t)
                    if t not in reachable:
                        assert found is None, (lo, hi, s, t)
                        continue
                    assert found is not None, (lo, hi, s, t)
                    assert len(set(found)) == s
                    assert all(lo <= x <= hi for x in found)
                    assert sum(found) == t


def test_slices():
    assert slice_min({4, 7, 9, 12}, 2) == (4, 7)
    assert slice_max({4, 7, 9, 12}, 1) == (12,)
    assert slice_min([9, 4], 0) == ()
    assert slice_max([9, 4], 2) == (4, 9)


def test_slices_reject_oversized_requests():
    with pytest.raises(InvalidParameters):
        slice_min([1, 2], 3)
    with pytest.raises(InvalidParameters):
        slice_max([1, 2], -1)

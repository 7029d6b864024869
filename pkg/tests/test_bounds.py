import itertools

import pytest

from orientseq import _accel, bounds
from orientseq.bounds import BoundBreakdown, ResourceGuardError, os2_max_period, sos_bound, sos_bound_oracle


def test_closed_form_examples():
    assert sos_bound(5, 2) == 8
    assert sos_bound(11, 2) == 50
    assert sos_bound(2, 3) == 2
    assert sos_bound(3, 3) == 8
    assert sos_bound(4, 2) == 5


def test_oracle_breakdowns():
    assert sos_bound_oracle(5, 2) == BoundBreakdown(5, 2, 1, 0, 4, 4, 16, 8)
    assert sos_bound_oracle(2, 2) == BoundBreakdown(2, 2, 2, 2, 0, 0, 0, 1)
    assert sos_bound_oracle(2, 3) == BoundBreakdown(2, 3, 4, 4, 0, 0, 0, 2)
    assert sos_bound_oracle(4, 2) == BoundBreakdown(4, 2, 2, 2, 2, 2, 8, 5)


def _classify_slow(q, n):
    counts = [0] * 5
    for s in itertools.product(range(q), repeat=n):
        r = s[::-1]
        ng = tuple((-x) % q for x in s)
        nr = ng[::-1]
        if s == r == ng:
            counts[0] += 1
        elif s == ng:
            counts[1] += 1
        elif s == r:
            counts[2] += 1
        elif s == nr:
            counts[3] += 1
        else:
            counts[4] += 1
    return counts


@pytest.mark.parametrize("q,n", [(q, n) for q in range(2, 6) for n in range(2, 5)])
def test_kernel_counts_match_naive(q, n):
    b = sos_bound_oracle(q, n)
    got = [b.count_fixed_both, b.count_negself, b.count_palindromic, b.count_antipalindromic, b.count_free]
    assert got == _classify_slow(q, n)
    assert sum(got) == q**n


@pytest.mark.parametrize("q", range(2, 9))
@pytest.mark.parametrize("n", range(2, 7))
def test_closed_form_matches_enumeration(q, n):
    assert sos_bound(q, n) == sos_bound_oracle(q, n).bound


@pytest.mark.parametrize("q", range(2, 9))
@pytest.mark.parametrize("n", range(2, 7))
def test_case_counts(q, n):
    b = sos_bound_oracle(q, n)
    h = (n + 1) // 2
    pal = q**h
    if q % 2:
        # only the zero tuple is its own negative
        assert b.count_fixed_both == 1 and b.count_negself == 0
        anti = q ** (n // 2)
    else:
        assert b.count_fixed_both == 2**h
        assert b.count_negself == 2**n - 2**h
        # an odd middle term must be 0 or q/2
        anti = q ** (n // 2) * (2 if n % 2 else 1)
    assert b.count_antipalindromic + b.count_fixed_both == anti
    assert b.count_palindromic + b.count_fixed_both == pal


@pytest.mark.skipif(not _accel.HAVE_NUMBA, reason="numba unavailable or disabled")
def test_backends_agree():
    for q, n in [(3, 5), (6, 4), (7, 3)]:
        assert sos_bound_oracle(q, n, backend="numba") == sos_bound_oracle(q, n, backend="numpy")


def test_resource_guard(monkeypatch):
    with pytest.raises(ResourceGuardError):
        sos_bound_oracle(40, 5)
    monkeypatch.setenv("ORIENTSEQ_MAX_TUPLES", "100")
    assert bounds.max_tuples() == 100
    with pytest.raises(ResourceGuardError):
        sos_bound_oracle(5, 3)
    assert sos_bound_oracle(10, 2).bound == sos_bound(10, 2)


def test_invalid_arguments():
    for q, n in [(1, 2), (5, 1), (0, 3)]:
        with pytest.raises(ValueError):
            sos_bound(q, n)
        with pytest.raises(ValueError):
            sos_bound_oracle(q, n)


def test_os2_max_period():
    assert [os2_max_period(q) for q in (3, 5, 6)] == [3, 10, 12]
    assert os2_max_period(4) == 4
    with pytest.raises(ValueError):
        os2_max_period(2)

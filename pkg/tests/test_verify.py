import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orientseq import verify
from orientseq.registry import EXAMPLES
from orientseq.seq import RingSequence, negate, window
from orientseq.verify import (
    check_disjoint,
    check_good,
    check_negative_orientable,
    check_orientable,
    check_special,
    check_window,
    pairwise_flags,
    report,
)

S5 = RingSequence([0, 1, 2, 3, 4, 0, 2, 4, 1, 3], 5)


def ex(rid):
    return EXAMPLES[rid].expected_output


def test_window_examples():
    assert check_window(S5, 2).ok
    assert check_window(RingSequence([0, 0, 1], 2), 2).ok
    res = check_window(RingSequence([0, 0, 0, 1], 2), 2)
    assert not res.ok
    v = res.violations[0]
    assert (v.kind, v.i, v.j, v.window) == ("repeat", 0, 1, (0, 0))
    assert check_window(ex("sos_11_2"), 2).ok


def test_orientable_examples():
    assert check_orientable(S5, 2).ok
    res = check_orientable(RingSequence([0, 1, 0, 2], 3), 2)
    assert not res.ok and res.violations[0].window == (0, 1)
    res = check_orientable(RingSequence([0, 1, 1, 2], 5), 2)
    v = res.violations[0]
    assert (v.kind, v.i, v.j, v.window) == ("reverse", 1, 1, (1, 1))


def test_palindrome_window_is_self_violation():
    res = check_orientable(RingSequence([2, 1, 1, 3], 5), 2)
    assert [(v.i, v.j, v.window) for v in res.violations] == [(1, 1, (1, 1))]


def test_negative_orientable_examples():
    assert check_negative_orientable(ex("s2_9"), 2).ok
    assert check_negative_orientable(ex("t_10"), 2).ok
    # (1, 8) over Z_9 equals its own reversed negative
    res = check_negative_orientable(RingSequence([0, 1, 8, 3], 9), 2)
    assert not res.ok
    assert res.violations[0].window == (1, 8) and res.violations[0].i == res.violations[0].j == 1


def test_special_and_good_examples():
    up = ex("uprime_12")
    assert check_special(up, 2).ok and check_good(up, 2)
    u = ex("sos_11_2")
    assert check_special(u, 2).ok and not check_good(u, 2)
    assert not check_good(RingSequence([0, 0, 0], 3), 3)
    assert check_good(RingSequence([0, 1, 0, 0, 2], 3), 4)
    assert not check_good(RingSequence([0, 1, 0, 0, 2], 3), 3)
    # runs wrap around the ring end
    assert not check_good(RingSequence([0, 1, 2, 0], 3), 3)


def test_disjoint_examples():
    s9 = RingSequence(S5.tolist(), 9)
    assert check_disjoint(s9, negate(s9), 2) == (True, True, True)
    assert check_disjoint(S5, S5, 2)[0] is False
    s2 = ex("s2_11")
    t2 = ex("t2_11")
    assert check_disjoint(s2, t2, 2) == (True, True, True)
    with pytest.raises(ValueError):
        check_disjoint(S5, s9, 2)


def test_report_examples():
    r = report(ex("ustarstar_12"), 2)
    assert (r.period, r.weight_mod, r.is_special, r.is_good) == (37, 1, True, True)
    r = report(ex("ustar_11"), 2)
    assert (r.period, r.weight_mod, r.is_special) == (37, 2, True)
    r = report(RingSequence([0, 1], 3), 2)
    assert r.is_window and not r.is_orientable


def test_report_invariants_and_witnesses():
    rng = np.random.default_rng(7)
    for _ in range(200):
        q = int(rng.integers(2, 6))
        n = int(rng.integers(2, 4))
        s = RingSequence(rng.integers(0, q, int(rng.integers(1, 30))), q)
        r = report(s, n)
        assert r.is_special == (r.is_orientable and r.is_negative_orientable)
        assert not r.is_orientable or r.is_window
        for v in r.violations:
            wi, wj = window(s, v.i, n), window(s, v.j, n)
            assert v.window == wi
            if v.kind == "repeat":
                assert v.i < v.j and wi == wj
            elif v.kind == "reverse":
                assert wi == wj[::-1]
            else:
                assert wi == tuple((-x) % q for x in wj[::-1])


def test_order_below_two_rejected():
    for fn in (check_window, check_orientable, check_negative_orientable, check_special, report):
        with pytest.raises(ValueError):
            fn(S5, 1)


@st.composite
def rings(draw, max_q=6, max_len=40):
    q = draw(st.integers(2, max_q))
    terms = draw(st.lists(st.integers(0, q - 1), min_size=1, max_size=max_len))
    return RingSequence(terms, q)


@given(rings(), st.integers(2, 4))
def test_orientability_is_reversal_invariant(s, n):
    rev = RingSequence(s.terms[::-1], s.q)
    assert check_orientable(s, n).ok == check_orientable(rev, n).ok


@given(rings(), st.integers(2, 4))
def test_special_is_negation_invariant(s, n):
    assert check_special(s, n).ok == check_special(negate(s), n).ok


@given(rings(max_q=2), st.integers(2, 5))
def test_binary_orientable_iff_negative_orientable(s, n):
    assert check_orientable(s, n).ok == check_negative_orientable(s, n).ok


@given(rings(max_q=8, max_len=60), st.integers(2, 5))
@settings(max_examples=300)
def test_hashed_checks_match_pairwise(s, n):
    _compare_with_pairwise(s, n)


def _compare_with_pairwise(s, n):
    brute = pairwise_flags(s, n)
    r = report(s, n)
    for key in ("is_window", "is_orientable", "is_negative_orientable", "is_special"):
        assert getattr(r, key) == brute[key], key
    found = {v.kind: (v.i, v.j) for v in r.violations}
    for kind in ("repeat", "reverse", "negative_reverse"):
        assert found.get(kind) == brute[kind], kind


def test_large_alphabet_uses_interned_path():
    # 70000**4 overflows int64 window codes
    s = RingSequence([0, 1, 2, 69999, 5, 0, 1, 2], 70000)
    r = report(s, 4)
    assert r.is_window
    r = report(RingSequence([0, 1, 2, 69999, 0, 1, 2, 69999], 70000), 4)
    assert not r.is_window and r.violations[0].i == 0 and r.violations[0].j == 4
    assert check_disjoint(s, negate(s), 4)[0]


def test_certify_raises():
    with pytest.raises(verify.CertificationError):
        verify.certify(RingSequence([0, 1, 0, 2], 3), 2)
    with pytest.raises(verify.CertificationError):
        verify.certify(ex("sos_11_2"), 2, good=True)

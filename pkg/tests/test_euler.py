from collections import Counter

import pytest

from orientseq.bounds import os2_max_period
from orientseq.euler import (
    EulerGraph,
    MatchingInfeasible,
    NoCircuit,
    build_graph,
    eulerian_with_prefix,
    os2_maximal,
    os2_starter,
)
from orientseq.verify import check_orientable


def _pairs(s):
    t = s.tolist()
    return [frozenset((t[i], t[(i + 1) % len(t)])) for i in range(len(t))]


def test_build_graph_examples():
    g = build_graph(5)
    assert len(g.edges) == 10 and g.removed_factor is None
    g = build_graph(6, {(0, 1), (1, 2), (2, 0)})
    assert len(g.edges) == 12
    assert g.removed_factor == frozenset({(0, 3), (1, 4), (2, 5)})
    g = build_graph(4)
    assert len(g.edges) == 4
    assert all(g.degree(v) == 2 for v in range(4))


@pytest.mark.parametrize("q", range(3, 13))
def test_graph_degrees_even(q):
    g = build_graph(q)
    want = q - 1 if q % 2 else q - 2
    assert all(g.degree(v) == want for v in range(q))
    if g.removed_factor is not None:
        covered = sorted(v for e in g.removed_factor for v in e)
        assert covered == list(range(q))
        assert not (g.removed_factor & g.edges)


def test_matching_infeasible_names_blocker():
    # every edge at vertex 0 forbidden
    forbidden = {(0, v) for v in range(1, 6)}
    with pytest.raises(MatchingInfeasible, match="dropping"):
        build_graph(6, forbidden)
    with pytest.raises(ValueError):
        build_graph(2)


def test_eulerian_with_prefix_examples():
    k5 = build_graph(5)
    s = eulerian_with_prefix(k5, [2, 3, 4, 2])
    assert s.period == 10 and s.tolist()[:4] == [2, 3, 4, 2] and check_orientable(s, 2).ok
    s = eulerian_with_prefix(k5, [0, 2, 3, 4, 2])
    assert s.tolist() == [0, 2, 3, 4, 2, 1, 0, 3, 1, 4]
    assert eulerian_with_prefix(build_graph(3)).tolist() == [0, 1, 2]


def test_eulerian_prefix_errors():
    k5 = build_graph(5)
    with pytest.raises(ValueError):
        eulerian_with_prefix(k5, [1, 1, 2])
    with pytest.raises(ValueError):
        eulerian_with_prefix(k5, [1, 2, 1])
    g4 = build_graph(4)
    missing = next(iter(g4.removed_factor))
    with pytest.raises(ValueError):
        eulerian_with_prefix(g4, list(missing))


def test_disconnected_remainder_raises_no_circuit():
    # two disjoint triangles
    g = EulerGraph(6, frozenset({(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)}))
    with pytest.raises(NoCircuit):
        eulerian_with_prefix(g, [0])


def test_os2_maximal_examples():
    s = os2_maximal(5, 2, 3, 4)
    assert s.period == 10 and s.tolist()[:4] == [2, 3, 4, 2]
    s = os2_maximal(5, 2, 3, 4, lead_zero=True)
    assert s.tolist()[:5] == [0, 2, 3, 4, 2]
    s = os2_maximal(6, 0, 1, 2)
    assert s.period == 12 and s.tolist()[:4] == [0, 1, 2, 0]


def test_os2_maximal_rejects():
    with pytest.raises(ValueError):
        os2_maximal(4, 0, 1, 2)
    with pytest.raises(ValueError):
        os2_maximal(7, 1, 1, 2)
    with pytest.raises(ValueError):
        os2_maximal(7, 0, 1, 2, lead_zero=True)


def _anchor_cases():
    for q in range(5, 16):
        for xyz in [(0, 1, 2), (2, q - 2, q - 1), (1, 3, q - 1)]:
            if len(set(xyz)) == 3:
                yield q, xyz, False
                if 0 not in xyz:
                    yield q, xyz, True


@pytest.mark.parametrize("q,xyz,lead_zero", list(_anchor_cases()))
def test_os2_maximal_properties(q, xyz, lead_zero):
    s = os2_maximal(q, *xyz, lead_zero=lead_zero)
    assert s.period == os2_max_period(q)
    assert check_orientable(s, 2).ok
    counts = Counter(s.tolist())
    assert set(counts.values()) == {(q - 1) // 2 if q % 2 else (q - 2) // 2}
    pairs = _pairs(s)
    assert len(set(pairs)) == len(pairs)
    assert os2_maximal(q, *xyz, lead_zero=lead_zero) == s


@pytest.mark.parametrize("q", range(3, 21))
def test_default_starter(q):
    s = os2_starter(q)
    assert s.period == os2_max_period(q) and s.tolist()[0] == 0
    assert check_orientable(s, 2).ok
